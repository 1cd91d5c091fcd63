#pragma once

// Named graph families: complete, complete bipartite, cycles and their
// complements, the apex family F_r, and the cubic negative controls
// (Petersen, triangular prism).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "equimatch/canonical.hpp"
#include "equimatch/graph.hpp"

namespace equimatch {

enum class FamilyKind {
    complete,
    complete_bipartite,
    cycle,
    complement_cycle,
    f_graph,
    petersen,
    prism,
};

struct FamilySpec {
    FamilyKind kind;
    int a = 0;  // n for complete/cycle/complement_cycle, first side for bipartite, r for f_graph
    int b = 0;  // second side for bipartite

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string family_label(const FamilySpec& s) {
    switch (s.kind) {
        case FamilyKind::complete: return "Complete(" + std::to_string(s.a) + ")";
        case FamilyKind::complete_bipartite:
            return "CompleteBipartite(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
        case FamilyKind::cycle: return "Cycle(" + std::to_string(s.a) + ")";
        case FamilyKind::complement_cycle: return "ComplementCycle(" + std::to_string(s.a) + ")";
        case FamilyKind::f_graph: return "F(" + std::to_string(s.a) + ")";
        case FamilyKind::petersen: return "Petersen";
        case FamilyKind::prism: return "Prism";
    }
    return "?";
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative side");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

// F_r for even r >= 2: take K_{r,r} with sides x_1..x_r, y_1..y_r, delete
// the matching {x_i y_i : i <= r/2}, add an apex adjacent to all 2*(r/2)
// endpoints of the deleted matching. Canonical labels: x_i -> i-1,
// y_i -> r+i-1, apex -> 2r.
inline Graph f_graph(int r) {
    if (r < 2 || r % 2 != 0) throw std::invalid_argument("F_r requires even r >= 2");
    int apex = 2 * r;
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j && i < r / 2) continue;  // deleted matching
            edges.emplace_back(i, r + j);
        }
    for (int i = 0; i < r / 2; ++i) {
        edges.emplace_back(i, apex);
        edges.emplace_back(r + i, apex);
    }
    Graph g = Graph::from_edges(2 * r + 1, edges);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != r) throw std::logic_error("F_r construction not r-regular");
    return g;
}

inline Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));      // outer cycle
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
        edges.emplace_back(i, 5 + i);                    // spokes
    }
    return Graph::from_edges(10, edges);
}

inline Graph prism_graph() {
    // Two triangles joined by a perfect matching.
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::complete: return complete_graph(spec.a);
        case FamilyKind::complete_bipartite: return complete_bipartite(spec.a, spec.b);
        case FamilyKind::cycle: return cycle_graph(spec.a);
        case FamilyKind::complement_cycle: return complement(cycle_graph(spec.a));
        case FamilyKind::f_graph: return f_graph(spec.a);
        case FamilyKind::petersen: return petersen_graph();
        case FamilyKind::prism: return prism_graph();
    }
    throw std::invalid_argument("unknown family");
}

inline bool is_complete(const Graph& g) {
    int n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

// K_{a,b} with a <= b, requiring a,b >= 1.
inline std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g) {
    auto bip = find_bipartition(g);
    if (!bip) return std::nullopt;
    int a = bip->first.size(), b = bip->second.size();
    if (a == 0 || b == 0) return std::nullopt;
    if (g.edge_count() != a * b) return std::nullopt;
    if (a > b) std::swap(a, b);
    return std::make_pair(a, b);
}

// Recognition among the certified families: Complete(n), CompleteBipartite(a,b),
// F(r) and ComplementCycle(7). Complete graphs win over K_{1,1}; F-recognition
// requires order 2r+1 and r-regularity, then canonical-form equality with the
// constructed candidate.
inline std::optional<FamilySpec> recognize_family(const Graph& g) {
    int n = g.order();
    if (n >= 1 && is_complete(g)) return FamilySpec{FamilyKind::complete, n};
    if (auto sides = complete_bipartite_sides(g); sides && n >= 2)
        return FamilySpec{FamilyKind::complete_bipartite, sides->first, sides->second};
    StructureProfile p = profile(g);
    if (p.regularity && n == 2 * *p.regularity + 1 && *p.regularity % 2 == 0 && *p.regularity >= 2) {
        int r = *p.regularity;
        if (isomorphic(g, f_graph(r))) return FamilySpec{FamilyKind::f_graph, r};
    }
    if (n == 7 && p.regularity == 4 && isomorphic(g, complement(cycle_graph(7))))
        return FamilySpec{FamilyKind::complement_cycle, 7};
    return std::nullopt;
}

}  // namespace equimatch
