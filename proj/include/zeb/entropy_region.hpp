#pragma once

#include <utility>
#include <vector>

#include "zeb/graph.hpp"

namespace zeb {

// Per-user rates in bits; entry i belongs to user i.
using RateVector = std::vector<double>;

// Probability distribution over the letter alphabet.
struct LetterDistribution {
    std::vector<double> p;

    explicit LetterDistribution(std::vector<double> probs);
    static LetterDistribution uniform(int letters);

    int letters() const { return static_cast<int>(p.size()); }
    double operator[](int i) const { return p[i]; }
};

// Common refinement of the clique partitions of a user subset: two letters
// share a cell iff every listed user confuses them.  Cells are numbered by
// smallest member, matching the canonical clique class order.
struct JointPartition {
    std::vector<int> users;              // 0-based user indices, sorted
    std::vector<std::vector<int>> cells; // cell id -> member letters
    std::vector<int> cell_of;            // letter -> cell id

    int cell_count() const { return static_cast<int>(cells.size()); }
};

JointPartition joint_partition(const std::vector<CliquePartition>& parts,
                               const std::vector<int>& users);

// Entropy (bits) of the joint observation of the subset's users when the
// source letter is drawn from p.  Zero-probability cells contribute nothing.
double subset_entropy(const LetterDistribution& p, const JointPartition& jp);

// Checks every nonempty-subset constraint
//   sum_{i in I} rates[i] <= H_p(joint observation of I)
// at the given distribution, with 1e-9 slack.
bool feasible_at(const LetterDistribution& p, const std::vector<CliquePartition>& parts,
                 const RateVector& rates);

struct RegionCertificate {
    bool feasible = false;
    std::vector<double> witness_p;    // maximizing distribution when feasible
    std::vector<int> violated_subset; // 0-based users of the worst constraint otherwise
    double slack = 0.0;               // min constraint slack at the best distribution found
};

struct RegionSearchOptions {
    int max_users = 6;
    int max_letters = 8;
    double grid_step = 1.0 / 32;     // seeding grid; coarsened if too many points
    long long max_grid_points = 200000;
    int restarts = 16;               // local searches from the best seeds (hard cap 200)
    double accept_slack = 1e-7;      // feasible iff best min-slack >= -accept_slack
};

// Searches distributions for one satisfying all subset constraints.  The
// objective max_p min_I (H_p(I) - sum rates) is concave, so a coarse grid
// plus direct local search settles membership to the reported tolerance.
// Infeasibility is at the search's resolution: the certificate carries the
// least-violated constraint at the best distribution found.
RegionCertificate region_membership(const std::vector<CliquePartition>& parts,
                                    const RateVector& rates,
                                    const RegionSearchOptions& options = {});

// Upper boundary of a two-user region: for each r1 in the grid, the largest
// r2 such that (r1, r2) is accepted, found by bisection over the same
// search.  Entries where r1 itself is infeasible come back as NaN.
std::vector<std::pair<double, double>> boundary_trace_2user(
    const std::vector<CliquePartition>& parts, const std::vector<double>& r1_grid,
    const RegionSearchOptions& options = {});

// Largest achievable rate total: log2 of the number of joint cells over all
// users, met by a uniform distribution on a transversal of those cells.
double max_total_rate(const std::vector<CliquePartition>& parts);

} // namespace zeb
