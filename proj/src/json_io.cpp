#include "zeb/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace zeb {
namespace {

using nlohmann::json;

struct RawEdge {
    long long a, b;
};

GraphDocument assemble(long long k, const std::vector<RawEdge>& raw, int base, bool base_fixed) {
    if (k < 1 || k > 1'000'000) throw Error("letter count out of range");
    if (!base_fixed) {
        base = 1;
        for (const auto& e : raw)
            if (e.a == 0 || e.b == 0) base = 0; // a bare 0 endpoint means 0-based names
    }
    ConfusionGraph g(static_cast<int>(k));
    for (const auto& e : raw) {
        long long a = e.a - base, b = e.b - base;
        if (a < 0 || a >= k || b < 0 || b >= k)
            throw Error("edge endpoint outside alphabet (check the base convention)");
        if (a == b) throw Error("self loop in edge list");
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
    return GraphDocument{std::move(g), base};
}

GraphDocument parse_graph_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("k")) throw Error("graph JSON needs a \"k\" field");
    long long k = j.at("k").get<long long>();
    int base = 1;
    bool base_fixed = false;
    if (j.contains("base")) {
        base = j.at("base").get<int>();
        if (base != 0 && base != 1) throw Error("base must be 0 or 1");
        base_fixed = true;
    }
    std::vector<RawEdge> raw;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error("edges must be [a, b] pairs");
            raw.push_back({e[0].get<long long>(), e[1].get<long long>()});
        }
    return assemble(k, raw, base, base_fixed);
}

json word_to_json(const Word& w, int base) {
    json out = json::array();
    for (int a : w) out.push_back(a + base);
    return out;
}

} // namespace

GraphDocument parse_graph(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

GraphDocument parse_graph(const std::string& text) {
    // Skip whitespace to sniff the format.
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw Error("empty graph description");
    if (text[i] == '{') return parse_graph_json(text);

    std::istringstream in(text);
    std::string line;
    long long k = -1;
    int base = 1;
    bool base_fixed = false;
    std::vector<RawEdge> raw;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (first == "base") {
            int b;
            if (!(ls >> b) || (b != 0 && b != 1)) throw Error("base directive must be 0 or 1");
            base = b;
            base_fixed = true;
            continue;
        }
        long long x;
        try {
            x = std::stoll(first);
        } catch (const std::exception&) {
            throw Error("unexpected token '" + first + "' in graph file");
        }
        if (k < 0) {
            k = x;
            long long extra;
            if (ls >> extra) throw Error("first line must hold the letter count alone");
            continue;
        }
        long long y;
        if (!(ls >> y)) throw Error("edge line needs two endpoints");
        raw.push_back({x, y});
    }
    if (k < 0) throw Error("missing letter count");
    return assemble(k, raw, base, base_fixed);
}

GraphDocument load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file " + path);
    return parse_graph(in);
}

json graph_to_json(const ConfusionGraph& g, int base) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a + base, b + base});
    return json{{"k", g.letters()}, {"base", base}, {"edges", edges}};
}

json capacity_to_json(const CapacityBound& bound) {
    json out{{"k", bound.graph.letters()},
             {"power", bound.power},
             {"alpha_n", bound.alpha_n},
             {"lower_bound", bound.lower_bound},
             {"log2_lower_bound", std::log2(bound.lower_bound)},
             {"exact", bound.exact}};
    if (bound.exact) out["capacity"] = bound.capacity;
    return out;
}

json certificate_to_json(const RegionCertificate& cert) {
    json out{{"feasible", cert.feasible}, {"slack", cert.slack}};
    if (cert.feasible) {
        out["witness_p"] = cert.witness_p;
    } else {
        json users = json::array();
        for (int u : cert.violated_subset) users.push_back(u + 1); // users are 1-based outside
        out["violated_subset"] = users;
    }
    return out;
}

json scheme_to_json(const EncodingScheme& scheme, int base) {
    json counts = json::array();
    for (long long m : scheme.shape.counts) counts.push_back(m);
    json table = json::object();
    for (long long t = 0; t < tuple_count(scheme.shape); ++t) {
        auto digits = tuple_digits(scheme.shape, t);
        std::string key;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i) key += ',';
            key += std::to_string(digits[i] + 1); // message ids are 1-based outside
        }
        table[key] = word_to_json(scheme.codewords[t], base);
    }
    return json{{"counts", counts}, {"n", scheme.shape.n}, {"codewords", table}};
}

EncodingScheme scheme_from_json(const json& j, int base) {
    EncodingScheme scheme;
    scheme.shape.n = j.at("n").get<int>();
    for (const auto& m : j.at("counts")) scheme.shape.counts.push_back(m.get<long long>());
    scheme.codewords.assign(tuple_count(scheme.shape), Word{});
    for (const auto& [key, value] : j.at("codewords").items()) {
        std::vector<int> digits;
        std::istringstream ks(key);
        std::string part;
        while (std::getline(ks, part, ',')) digits.push_back(std::stoi(part) - 1);
        Word w;
        for (const auto& letter : value) w.push_back(letter.get<int>() - base);
        scheme.codewords[tuple_index(scheme.shape, digits)] = std::move(w);
    }
    return scheme;
}

json families_to_json(const std::vector<FamilyPartition>& families) {
    json out = json::array();
    for (const auto& fp : families) {
        json assignment = json::object();
        for (std::size_t f = 0; f < fp.families.size(); ++f)
            for (const auto& obs : fp.families[f]) {
                std::string key;
                for (std::size_t i = 0; i < obs.size(); ++i) {
                    if (i) key += '-';
                    key += std::to_string(obs[i] + 1); // clique class ids are 1-based outside
                }
                assignment[key] = f + 1;
            }
        out.push_back(json{{"user", fp.user + 1},
                           {"family_count", fp.families.size()},
                           {"family_of", assignment}});
    }
    return out;
}

json frontier_to_json(const std::vector<MessageVector>& points) {
    json out = json::array();
    for (const auto& mv : points) {
        json counts = json::array();
        for (long long m : mv.counts) counts.push_back(m);
        out.push_back(counts);
    }
    return out;
}

json counterexample_to_json(const CollapseCounterexample& ce) {
    return json{{"k", ce.k},
                {"d", ce.d},
                {"closed_size", ce.closed_size},
                {"prime_size", ce.prime_size},
                {"doubleprime_size", ce.doubleprime_size},
                {"lemma11_holds", ce.lemma11_holds},
                {"lemma12_holds", ce.lemma12_holds}};
}

} // namespace zeb
