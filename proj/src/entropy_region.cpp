#include "zeb/entropy_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace zeb {
namespace {

constexpr double kProbTol = 1e-12;
constexpr double kConstraintTol = 1e-9;

double plog2p(double m) { return m > 0.0 ? -m * std::log2(m) : 0.0; }

void validate_users(const std::vector<CliquePartition>& parts, const std::vector<int>& users) {
    if (parts.empty()) throw Error("no clique partitions given");
    if (users.empty()) throw Error("user subset must be nonempty");
    const int k = parts.front().letters();
    for (const auto& cp : parts)
        if (cp.letters() != k) throw AlphabetMismatch("partitions on different alphabets");
    for (int u : users)
        if (u < 0 || u >= static_cast<int>(parts.size()))
            throw DimensionMismatch("user index " + std::to_string(u) + " out of range");
}

// Subset entropies evaluated many times for one family of partitions: the
// letter -> cell maps for every nonempty user subset are built once.
class EntropyTable {
public:
    EntropyTable(const std::vector<CliquePartition>& parts) // NOLINT: deliberate converting ctor
        : k_(parts.front().letters()), r_(static_cast<int>(parts.size())) {
        const int masks = 1 << r_;
        cell_of_.resize(masks);
        cell_count_.resize(masks, 0);
        for (int mask = 1; mask < masks; ++mask) {
            std::vector<int> users;
            for (int i = 0; i < r_; ++i)
                if (mask >> i & 1) users.push_back(i);
            auto jp = joint_partition(parts, users);
            cell_of_[mask] = jp.cell_of;
            cell_count_[mask] = jp.cell_count();
        }
        scratch_.resize(k_);
    }

    int letters() const { return k_; }
    int users() const { return r_; }

    double entropy(int mask, const std::vector<double>& p) const {
        std::fill(scratch_.begin(), scratch_.begin() + cell_count_[mask], 0.0);
        const auto& cell = cell_of_[mask];
        for (int a = 0; a < k_; ++a) scratch_[cell[a]] += p[a];
        double h = 0.0;
        for (int c = 0; c < cell_count_[mask]; ++c) h += plog2p(scratch_[c]);
        return h;
    }

    // Smallest constraint slack over all nonempty subsets; worst_mask gets
    // the arg min.
    double min_slack(const std::vector<double>& p, const RateVector& rates,
                     int* worst_mask = nullptr) const {
        double best = std::numeric_limits<double>::infinity();
        for (int mask = 1; mask < (1 << r_); ++mask) {
            double total = 0.0;
            for (int i = 0; i < r_; ++i)
                if (mask >> i & 1) total += rates[i];
            double s = entropy(mask, p) - total;
            if (s < best) {
                best = s;
                if (worst_mask) *worst_mask = mask;
            }
        }
        return best;
    }

private:
    int k_;
    int r_;
    std::vector<std::vector<int>> cell_of_;
    std::vector<int> cell_count_;
    mutable std::vector<double> scratch_;
};

// Grid of distributions with subset entropies precomputed, so slack can be
// rescored for many rate vectors without touching the entropies again.
struct SeedGrid {
    std::vector<std::vector<double>> points;
    std::vector<std::vector<double>> entropies; // per point, per mask-1
};

SeedGrid build_grid(const EntropyTable& table, const RegionSearchOptions& options) {
    const int k = table.letters();
    int steps = std::max(2, static_cast<int>(std::lround(1.0 / options.grid_step)));
    auto count_points = [&](int g) {
        // C(g + k - 1, k - 1), saturating
        double c = 1.0;
        for (int i = 1; i < k; ++i) c = c * (g + i) / i;
        return c;
    };
    while (steps > 4 && count_points(steps) > static_cast<double>(options.max_grid_points))
        steps /= 2;

    SeedGrid grid;
    std::vector<int> comp(k, 0);
    std::vector<double> p(k);
    const int masks = 1 << table.users();
    // Enumerate compositions of `steps` into k parts.
    auto emit = [&]() {
        for (int a = 0; a < k; ++a) p[a] = static_cast<double>(comp[a]) / steps;
        grid.points.push_back(p);
        std::vector<double> hs(masks - 1);
        for (int mask = 1; mask < masks; ++mask) hs[mask - 1] = table.entropy(mask, p);
        grid.entropies.push_back(std::move(hs));
    };
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == k - 1) {
            comp[pos] = left;
            emit();
            return;
        }
        for (int c = left; c >= 0; --c) {
            comp[pos] = c;
            self(self, pos + 1, left - c);
        }
    };
    rec(rec, 0, steps);
    return grid;
}

std::vector<double> softmax(const std::vector<double>& y) {
    // y has k-1 free coordinates; the last letter is pinned at 0.
    const int k = static_cast<int>(y.size()) + 1;
    std::vector<double> p(k);
    double m = 0.0;
    for (double v : y) m = std::max(m, v);
    double z = std::exp(-m);
    p[k - 1] = z;
    for (int i = 0; i < k - 1; ++i) {
        p[i] = std::exp(y[i] - m);
        z += p[i];
    }
    for (int i = 0; i < k; ++i) p[i] /= z;
    return p;
}

// Nelder-Mead ascent over softmax coordinates.  The target min-slack is
// concave in p, so one polish from a decent seed lands on the global
// maximum; restarts only guard against numerically flat starts.
template <typename F>
void nelder_mead_max(F&& f, std::vector<double> y0, int max_iter) {
    const int dim = static_cast<int>(y0.size());
    if (dim == 0) {
        f(y0);
        return;
    }
    std::vector<std::vector<double>> simplex(dim + 1, y0);
    std::vector<double> value(dim + 1);
    for (int i = 0; i < dim; ++i) simplex[i + 1][i] += 0.35;
    for (int i = 0; i <= dim; ++i) value[i] = f(simplex[i]);

    auto worst_spread = [&]() {
        auto [lo, hi] = std::minmax_element(value.begin(), value.end());
        return *hi - *lo;
    };
    for (int iter = 0; iter < max_iter && worst_spread() > 1e-13; ++iter) {
        // Order so that value[order[0]] is best.
        std::vector<int> order(dim + 1);
        for (int i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return value[a] > value[b]; });
        int worst = order[dim], second = order[dim - 1], best = order[0];

        std::vector<double> centroid(dim, 0.0);
        for (int i = 0; i <= dim; ++i)
            if (i != worst)
                for (int d = 0; d < dim; ++d) centroid[d] += simplex[i][d] / dim;

        auto combine = [&](double t) {
            std::vector<double> y(dim);
            for (int d = 0; d < dim; ++d)
                y[d] = centroid[d] + t * (centroid[d] - simplex[worst][d]);
            return y;
        };
        auto reflected = combine(1.0);
        double fr = f(reflected);
        if (fr > value[best]) {
            auto expanded = combine(2.0);
            double fe = f(expanded);
            if (fe > fr) {
                simplex[worst] = std::move(expanded);
                value[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                value[worst] = fr;
            }
        } else if (fr > value[second]) {
            simplex[worst] = std::move(reflected);
            value[worst] = fr;
        } else {
            auto contracted = combine(fr > value[worst] ? 0.5 : -0.5);
            double fc = f(contracted);
            if (fc > std::max(fr, value[worst])) {
                simplex[worst] = std::move(contracted);
                value[worst] = fc;
            } else {
                for (int i = 0; i <= dim; ++i) {
                    if (i == best) continue;
                    for (int d = 0; d < dim; ++d)
                        simplex[i][d] = 0.5 * (simplex[i][d] + simplex[best][d]);
                    value[i] = f(simplex[i]);
                }
            }
        }
    }
}

// One membership problem family: table + seed grid built once, reusable for
// many rate vectors (bisection in the boundary trace relies on this).
class SimplexSearch {
public:
    SimplexSearch(const std::vector<CliquePartition>& parts, const RegionSearchOptions& options)
        : table_(parts), options_(options), grid_(build_grid(table_, options)) {}

    // Returns best (p, min-slack, worst mask).
    struct Outcome {
        std::vector<double> p;
        double slack;
        int worst_mask;
    };

    Outcome solve(const RateVector& rates) const {
        const int r = table_.users();
        std::vector<double> rate_total(1 << r, 0.0);
        for (int mask = 1; mask < (1 << r); ++mask)
            for (int i = 0; i < r; ++i)
                if (mask >> i & 1) rate_total[mask] += rates[i];

        // Score the whole grid from the precomputed entropies.
        std::vector<std::pair<double, int>> scored(grid_.points.size());
        for (std::size_t i = 0; i < grid_.points.size(); ++i) {
            double s = std::numeric_limits<double>::infinity();
            for (int mask = 1; mask < (1 << r); ++mask)
                s = std::min(s, grid_.entropies[i][mask - 1] - rate_total[mask]);
            scored[i] = {s, static_cast<int>(i)};
        }
        std::sort(scored.begin(), scored.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });

        Outcome best{LetterDistribution::uniform(table_.letters()).p, 0.0, 0};
        best.slack = table_.min_slack(best.p, rates, &best.worst_mask);

        auto consider = [&](const std::vector<double>& p) {
            int worst = 0;
            double s = table_.min_slack(p, rates, &worst);
            if (s > best.slack) best = {p, s, worst};
            return s;
        };

        int restarts = std::min(std::max(options_.restarts, 1), 200);
        for (int i = 0; i < restarts && i < static_cast<int>(scored.size()); ++i)
            consider(grid_.points[scored[i].second]);

        auto objective = [&](const std::vector<double>& y) { return consider(softmax(y)); };
        int polish = std::min(restarts, 8);
        std::vector<std::vector<double>> seeds;
        seeds.push_back(best.p);
        for (int i = 0; i < polish - 1 && i < static_cast<int>(scored.size()); ++i)
            seeds.push_back(grid_.points[scored[i].second]);
        for (const auto& seed : seeds) {
            std::vector<double> y(table_.letters() - 1);
            double last = std::log(std::max(seed.back(), 1e-9));
            for (std::size_t d = 0; d + 1 < seed.size(); ++d)
                y[d] = std::log(std::max(seed[d], 1e-9)) - last;
            nelder_mead_max(objective, std::move(y), 160 * table_.letters());
        }
        return best;
    }

    const EntropyTable& table() const { return table_; }

private:
    EntropyTable table_;
    RegionSearchOptions options_;
    SeedGrid grid_;
};

std::vector<int> mask_users(int mask) {
    std::vector<int> users;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1) users.push_back(i);
    return users;
}

void validate_region_args(const std::vector<CliquePartition>& parts, const RateVector& rates,
                          const RegionSearchOptions& options) {
    if (parts.empty()) throw Error("no clique partitions given");
    if (rates.size() != parts.size())
        throw DimensionMismatch("expected " + std::to_string(parts.size()) + " rates, got " +
                                std::to_string(rates.size()));
    const int k = parts.front().letters();
    for (const auto& cp : parts)
        if (cp.letters() != k) throw AlphabetMismatch("partitions on different alphabets");
    if (static_cast<int>(parts.size()) > options.max_users)
        throw LimitExceeded("region search supports at most " +
                            std::to_string(options.max_users) + " users");
    if (k > options.max_letters)
        throw LimitExceeded("region search supports at most " +
                            std::to_string(options.max_letters) + " letters");
    for (double r : rates)
        if (!(r >= 0.0)) throw Error("rates must be nonnegative");
}

} // namespace

LetterDistribution::LetterDistribution(std::vector<double> probs) : p(std::move(probs)) {
    if (p.empty()) throw Error("empty distribution");
    double total = 0.0;
    for (double v : p) {
        if (v < -kProbTol) throw Error("negative probability");
        total += v;
    }
    if (std::abs(total - 1.0) > kProbTol)
        throw Error("probabilities sum to " + std::to_string(total));
}

LetterDistribution LetterDistribution::uniform(int letters) {
    return LetterDistribution(std::vector<double>(letters, 1.0 / letters));
}

JointPartition joint_partition(const std::vector<CliquePartition>& parts,
                               const std::vector<int>& users) {
    validate_users(parts, users);
    std::vector<int> sorted = users;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const int k = parts.front().letters();
    JointPartition jp;
    jp.users = sorted;
    jp.cell_of.assign(k, -1);
    std::map<std::vector<int>, int> seen;
    for (int a = 0; a < k; ++a) {
        std::vector<int> key;
        key.reserve(sorted.size());
        for (int u : sorted) key.push_back(parts[u].class_of[a]);
        auto [it, fresh] = seen.try_emplace(key, static_cast<int>(jp.cells.size()));
        if (fresh) jp.cells.emplace_back();
        jp.cell_of[a] = it->second;
        jp.cells[it->second].push_back(a);
    }
    return jp;
}

double subset_entropy(const LetterDistribution& p, const JointPartition& jp) {
    if (p.letters() != static_cast<int>(jp.cell_of.size()))
        throw DimensionMismatch("distribution and partition letter counts differ");
    std::vector<double> mass(jp.cell_count(), 0.0);
    for (int a = 0; a < p.letters(); ++a) mass[jp.cell_of[a]] += p[a];
    double h = 0.0;
    for (double m : mass) h += plog2p(m);
    return h;
}

bool feasible_at(const LetterDistribution& p, const std::vector<CliquePartition>& parts,
                 const RateVector& rates) {
    if (rates.size() != parts.size())
        throw DimensionMismatch("rate vector length does not match user count");
    if (parts.empty()) throw Error("no clique partitions given");
    if (parts.size() > 20) throw LimitExceeded("feasible_at supports at most 20 users");
    if (p.letters() != parts.front().letters())
        throw DimensionMismatch("distribution letter count does not match partitions");
    EntropyTable table(parts);
    return table.min_slack(p.p, rates) >= -kConstraintTol;
}

RegionCertificate region_membership(const std::vector<CliquePartition>& parts,
                                    const RateVector& rates,
                                    const RegionSearchOptions& options) {
    validate_region_args(parts, rates, options);
    SimplexSearch search(parts, options);
    auto out = search.solve(rates);

    RegionCertificate cert;
    cert.slack = out.slack;
    if (out.slack >= -options.accept_slack) {
        cert.feasible = true;
        cert.witness_p = out.p;
    } else {
        cert.feasible = false;
        cert.violated_subset = mask_users(out.worst_mask);
    }
    return cert;
}

std::vector<std::pair<double, double>> boundary_trace_2user(
    const std::vector<CliquePartition>& parts, const std::vector<double>& r1_grid,
    const RegionSearchOptions& options) {
    if (parts.size() != 2) throw DimensionMismatch("boundary trace is for exactly two users");
    validate_region_args(parts, {0.0, 0.0}, options);
    SimplexSearch search(parts, options);

    auto feasible = [&](double r1, double r2) {
        return search.solve({r1, r2}).slack >= -options.accept_slack;
    };
    const double top = std::log2(static_cast<double>(parts.front().letters())) + 1e-3;

    std::vector<std::pair<double, double>> out;
    out.reserve(r1_grid.size());
    for (double r1 : r1_grid) {
        if (r1 < 0.0 || !feasible(r1, 0.0)) {
            out.emplace_back(r1, std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        double lo = 0.0, hi = top;
        if (feasible(r1, hi)) { // cannot happen: total rate tops out at log2 k
            out.emplace_back(r1, hi);
            continue;
        }
        while (hi - lo > 1e-5) {
            double mid = 0.5 * (lo + hi);
            (feasible(r1, mid) ? lo : hi) = mid;
        }
        out.emplace_back(r1, lo);
    }
    return out;
}

double max_total_rate(const std::vector<CliquePartition>& parts) {
    if (parts.empty()) throw Error("no clique partitions given");
    std::vector<int> all(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) all[i] = static_cast<int>(i);
    return std::log2(static_cast<double>(joint_partition(parts, all).cell_count()));
}

} // namespace zeb
