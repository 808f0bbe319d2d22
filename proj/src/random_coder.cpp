#include "zeb/random_coder.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "zeb/scheme_oracle.hpp"

namespace zeb {
namespace {

struct Instance {
    int k = 0;
    int r = 0;
    int n = 0;
    std::vector<std::vector<Word>> images;       // per user, sorted distinct observations
    std::vector<std::map<Word, int>> obs_index;  // per user, observation -> image index
    std::vector<Word> words;                     // the type class, lex order
    std::vector<std::vector<int>> word_obs;      // per word, per user image index
};

Instance analyze(const std::vector<CliquePartition>& parts, const std::vector<int>& composition,
                 unsigned long long size_guard) {
    if (parts.empty()) throw Error("no clique partitions given");
    Instance inst;
    inst.k = parts.front().letters();
    inst.r = static_cast<int>(parts.size());
    for (const auto& cp : parts)
        if (cp.letters() != inst.k) throw AlphabetMismatch("partitions on different alphabets");
    if (composition.size() != static_cast<std::size_t>(inst.k))
        throw DimensionMismatch("composition length does not match alphabet");
    for (int c : composition) inst.n += c;
    if (inst.n < 1) throw Error("composition must sum to a positive block length");
    TypeClass guard(composition, size_guard); // throws if the class is too big

    for_each_type_class_word(composition, [&](const Word& w) { inst.words.push_back(w); });

    inst.images.resize(inst.r);
    inst.obs_index.resize(inst.r);
    inst.word_obs.assign(inst.words.size(), std::vector<int>(inst.r));
    for (std::size_t wi = 0; wi < inst.words.size(); ++wi) {
        for (int u = 0; u < inst.r; ++u) {
            Word obs(inst.n);
            for (int pos = 0; pos < inst.n; ++pos)
                obs[pos] = parts[u].class_of[inst.words[wi][pos]];
            auto [it, fresh] =
                inst.obs_index[u].try_emplace(std::move(obs), static_cast<int>(inst.images[u].size()));
            if (fresh) inst.images[u].push_back(it->first);
            inst.word_obs[wi][u] = it->second;
        }
    }
    return inst;
}

long long product_guarded(const std::vector<int>& counts, long long cap) {
    long long total = 1;
    for (int m : counts) {
        if (m < 1) throw Error("message counts must be at least 1");
        if (total > cap / m)
            throw SizeLimitExceeded("message tuple count exceeds guard " + std::to_string(cap));
        total *= m;
    }
    return total;
}

} // namespace

RandomCodeResult build_scheme(const std::vector<CliquePartition>& parts,
                              const std::vector<int>& composition,
                              const std::vector<int>& counts, std::uint64_t seed, int max_retries,
                              unsigned long long size_guard, long long max_tuples) {
    Instance inst = analyze(parts, composition, size_guard);
    if (counts.size() != static_cast<std::size_t>(inst.r))
        throw DimensionMismatch("message count vector length does not match user count");
    const long long tuples = product_guarded(counts, max_tuples);
    if (max_retries < 1) throw Error("need at least one attempt");

    std::mt19937_64 rng(seed);
    RandomCodeResult result;
    result.tuple_failures.assign(tuples, 0);

    std::vector<std::vector<int>> family_of(inst.r); // per user, image index -> message
    std::vector<char> covered(tuples);
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        result.attempts = attempt;
        for (int u = 0; u < inst.r; ++u) {
            family_of[u].resize(inst.images[u].size());
            std::uniform_int_distribution<int> pick(0, counts[u] - 1);
            for (auto& f : family_of[u]) f = pick(rng);
        }
        std::fill(covered.begin(), covered.end(), 0);
        for (const auto& obs : inst.word_obs) {
            long long idx = 0;
            for (int u = 0; u < inst.r; ++u) idx = idx * counts[u] + family_of[u][obs[u]];
            covered[idx] = 1;
        }
        bool all = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
        if (all) {
            std::vector<FamilyPartition> families(inst.r);
            for (int u = 0; u < inst.r; ++u) {
                families[u].user = u;
                families[u].families.resize(counts[u]);
                for (std::size_t oi = 0; oi < inst.images[u].size(); ++oi)
                    families[u].families[family_of[u][oi]].push_back(inst.images[u][oi]);
                for (auto& fam : families[u].families) std::sort(fam.begin(), fam.end());
            }
            result.families = std::move(families);
            return result;
        }
        for (long long t = 0; t < tuples; ++t)
            if (!covered[t]) ++result.tuple_failures[t];
    }
    return result; // every retry failed; the counts tell which tuples starved
}

ValidationResult validate_scheme(const std::vector<CliquePartition>& parts,
                                 const std::vector<int>& composition,
                                 const std::vector<FamilyPartition>& families,
                                 unsigned long long size_guard) {
    Instance inst = analyze(parts, composition, size_guard);
    if (families.size() != static_cast<std::size_t>(inst.r))
        throw DimensionMismatch("family partition count does not match user count");

    std::vector<int> counts(inst.r);
    // image index -> message, from the supplied families
    std::vector<std::vector<int>> family_of(inst.r);
    for (int u = 0; u < inst.r; ++u) {
        counts[u] = static_cast<int>(families[u].families.size());
        if (counts[u] < 1) throw Error("user needs at least one family");
        family_of[u].assign(inst.images[u].size(), -1);
        for (std::size_t f = 0; f < families[u].families.size(); ++f)
            for (const auto& obs : families[u].families[f]) {
                auto it = inst.obs_index[u].find(obs);
                if (it == inst.obs_index[u].end())
                    throw UnknownObservation("family lists an observation outside the image");
                if (family_of[u][it->second] != -1)
                    throw Error("observation assigned to two families");
                family_of[u][it->second] = static_cast<int>(f);
            }
    }

    const long long tuples = product_guarded(counts, 10'000'000);
    std::vector<char> covered(tuples, 0);
    for (const auto& obs : inst.word_obs) {
        long long idx = 0;
        bool assigned = true;
        for (int u = 0; u < inst.r && assigned; ++u) {
            int f = family_of[u][obs[u]];
            if (f < 0)
                assigned = false; // observation left out of every family serves nothing
            else
                idx = idx * counts[u] + f;
        }
        if (assigned) covered[idx] = 1;
    }
    for (long long t = 0; t < tuples; ++t)
        if (!covered[t]) {
            MessageVector mv{std::vector<long long>(counts.begin(), counts.end()), inst.n};
            return {false, tuple_digits(mv, t)};
        }
    return {true, {}};
}

int decode(const FamilyPartition& fp, const Word& observation) {
    for (std::size_t f = 0; f < fp.families.size(); ++f)
        for (const auto& obs : fp.families[f])
            if (obs == observation) return static_cast<int>(f);
    throw UnknownObservation("observation not present in any family");
}

Word encode(const std::vector<CliquePartition>& parts, const std::vector<int>& composition,
            const std::vector<FamilyPartition>& families, const std::vector<int>& tuple,
            unsigned long long size_guard) {
    Instance inst = analyze(parts, composition, size_guard);
    if (tuple.size() != families.size() || families.size() != static_cast<std::size_t>(inst.r))
        throw DimensionMismatch("tuple/family/user counts do not line up");

    for (std::size_t wi = 0; wi < inst.words.size(); ++wi) {
        bool serves = true;
        for (int u = 0; u < inst.r && serves; ++u) {
            const auto& fam = families[u].families;
            if (tuple[u] < 0 || tuple[u] >= static_cast<int>(fam.size()))
                throw Error("tuple digit out of range");
            const auto& obs = inst.images[u][inst.word_obs[wi][u]];
            serves = std::find(fam[tuple[u]].begin(), fam[tuple[u]].end(), obs) !=
                     fam[tuple[u]].end();
        }
        if (serves) return inst.words[wi];
    }
    throw Error("tuple is not servable by any type-class word");
}

} // namespace zeb
