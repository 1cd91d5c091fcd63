#pragma once

// Exact maximum independent sets by branch and bound: branch on a
// maximum-degree vertex of the candidate subgraph, bound by a greedy
// clique cover.

#include <functional>
#include <vector>

#include "equimatch/graph.hpp"

namespace equimatch {

namespace detail {

inline int clique_cover_bound(const Graph& g, VertexSet candidates) {
    int cliques = 0;
    VertexSet rest = candidates;
    while (!rest.empty()) {
        int v = rest.first();
        VertexSet clique = VertexSet::of({v});
        VertexSet common = g.neighbors(v) & rest;
        rest.remove(v);
        while (!common.empty()) {
            int u = common.first();
            clique.add(u);
            rest.remove(u);
            common = common & g.neighbors(u) & rest;
        }
        ++cliques;
    }
    return cliques;
}

}  // namespace detail

struct IndependenceResult {
    int alpha = 0;
    VertexSet witness;
};

inline IndependenceResult independence_number(const Graph& g) {
    int best_alpha = -1;
    VertexSet best_set;
    VertexSet current;
    auto expand = [&](auto&& self, VertexSet candidates) -> void {
        if (candidates.empty()) {
            if (current.size() > best_alpha) {
                best_alpha = current.size();
                best_set = current;
            }
            return;
        }
        if (current.size() + detail::clique_cover_bound(g, candidates) <= best_alpha) return;
        int v = candidates.first();
        int max_deg = -1;
        for (int u : candidates) {
            int d = (g.neighbors(u) & candidates).size();
            if (d > max_deg) {
                max_deg = d;
                v = u;
            }
        }
        current.add(v);
        self(self, candidates - g.neighbors(v).with(v));
        current.remove(v);
        self(self, candidates.without(v));
    };
    expand(expand, g.vertices());
    return {best_alpha < 0 ? 0 : best_alpha, best_set};
}

struct IndependentSetEnumeration {
    long long count = 0;
    bool truncated = false;
};

// Emits every independent set of maximum size exactly once (ascending
// lexicographic vertex order), up to cap (< 0: no cap).
inline IndependentSetEnumeration maximum_independent_sets(
    const Graph& g, long long cap, const std::function<bool(VertexSet)>& visit) {
    IndependentSetEnumeration out;
    int alpha = independence_number(g).alpha;
    VertexSet current;
    auto recurse = [&](auto&& self, VertexSet candidates) -> bool {
        if (current.size() == alpha) {
            if (cap >= 0 && out.count == cap) {
                out.truncated = true;
                return false;
            }
            ++out.count;
            if (visit && !visit(current)) {
                out.truncated = true;
                return false;
            }
            return true;
        }
        if (current.size() + detail::clique_cover_bound(g, candidates) < alpha) return true;
        if (candidates.empty()) return true;
        int v = candidates.first();
        current.add(v);
        if (!self(self, candidates - g.neighbors(v).with(v))) return false;
        current.remove(v);
        return self(self, candidates.without(v));
    };
    recurse(recurse, g.vertices());
    return out;
}

inline std::vector<VertexSet> maximum_independent_sets_list(const Graph& g, long long cap = -1) {
    std::vector<VertexSet> out;
    maximum_independent_sets(g, cap, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace equimatch
