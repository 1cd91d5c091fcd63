#pragma once

// Immutable simple undirected graphs on at most 64 vertices, with
// machine-word vertex sets. Vertex ids are dense: 0..n-1.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace equimatch {

inline constexpr int max_order = 64;

class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet range(int n) {
        if (n < 0 || n > max_order) throw std::invalid_argument("VertexSet::range: bad size");
        return VertexSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    int first() const {
        if (bits_ == 0) throw std::logic_error("VertexSet::first: empty set");
        return std::countr_zero(bits_);
    }

    VertexSet& add(int v) {
        check_index(v);
        bits_ |= std::uint64_t{1} << v;
        return *this;
    }
    VertexSet& remove(int v) {
        check_index(v);
        bits_ &= ~(std::uint64_t{1} << v);
        return *this;
    }
    VertexSet with(int v) const { return VertexSet(*this).add(v); }
    VertexSet without(int v) const { return VertexSet(*this).remove(v); }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    class iterator {
    public:
        using value_type = int;
        explicit constexpr iterator(std::uint64_t bits) : bits_(bits) {}
        int operator*() const { return std::countr_zero(bits_); }
        iterator& operator++() {
            bits_ &= bits_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

    private:
        std::uint64_t bits_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    static void check_index(int v) {
        if (v < 0 || v >= max_order) throw std::invalid_argument("vertex id out of 0..63");
    }
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;  // normalized: first < second

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return u < v ? Edge{u, v} : Edge{v, u};
}

class Graph {
public:
    Graph() = default;  // null graph

    static Graph empty(int n) {
        check_order(n);
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), 0);
        return g;
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g = empty(n);
        for (auto [u, v] : edges) g.link(u, v);
        return g;
    }

    // Rows must form a symmetric irreflexive relation over 0..rows.size()-1.
    static Graph from_adjacency(std::vector<std::uint64_t> rows) {
        int n = static_cast<int>(rows.size());
        check_order(n);
        std::uint64_t universe = VertexSet::range(n).bits();
        for (int v = 0; v < n; ++v) {
            if (rows[static_cast<std::size_t>(v)] & ~universe)
                throw std::invalid_argument("adjacency row mentions vertex >= n");
            if ((rows[static_cast<std::size_t>(v)] >> v) & 1u)
                throw std::invalid_argument("loop in adjacency row");
        }
        for (int v = 0; v < n; ++v)
            for (int u : VertexSet(rows[static_cast<std::size_t>(v)]))
                if (!((rows[static_cast<std::size_t>(u)] >> v) & 1u))
                    throw std::invalid_argument("adjacency not symmetric");
        Graph g;
        g.n_ = n;
        g.adj_ = std::move(rows);
        return g;
    }

    int order() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (std::uint64_t row : adj_) twice += std::popcount(row);
        return twice / 2;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet(adj_[static_cast<std::size_t>(v)]);
    }

    int degree(int v) const { return neighbors(v).size(); }

    VertexSet vertices() const { return VertexSet::range(n_); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : VertexSet(adj_[static_cast<std::size_t>(u)] >> u << u))
                if (v > u) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) = default;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
    void check_subset(VertexSet s) const {
        if (!s.subset_of(vertices())) throw std::invalid_argument("vertex set not within graph");
    }

private:
    static void check_order(int n) {
        if (n < 0 || n > max_order) throw std::invalid_argument("graph order must be in 0..64");
    }
    void link(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

inline Graph complement(const Graph& g) {
    int n = g.order();
    std::uint64_t universe = VertexSet::range(n).bits();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        rows[static_cast<std::size_t>(v)] = universe & ~g.neighbors(v).bits() & ~(std::uint64_t{1} << v);
    return Graph::from_adjacency(std::move(rows));
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // vertex_map[new id] = old id, ascending
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    g.check_subset(s);
    std::vector<int> map = s.to_vector();
    int k = static_cast<int>(map.size());
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)])) {
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
    return {Graph::from_adjacency(std::move(rows)), std::move(map)};
}

inline Graph delete_vertices(const Graph& g, VertexSet s) { return induced_subgraph(g, g.vertices() - s).graph; }

// Reachable set from `start` walking only inside `allowed`.
inline VertexSet reachable_within(const Graph& g, int start, VertexSet allowed) {
    if (!allowed.contains(start)) return VertexSet{};
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= g.neighbors(v).bits();
        next &= allowed.bits() & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet(seen);
}

inline bool is_connected_within(const Graph& g, VertexSet allowed) {
    if (allowed.size() <= 1) return true;
    return reachable_within(g, allowed.first(), allowed) == allowed;
}

inline bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

struct StructureProfile {
    bool connected = false;
    bool biconnected = false;  // false by convention for n <= 2
    std::optional<std::pair<VertexSet, VertexSet>> bipartition;
    std::optional<int> regularity;
    std::vector<int> degree_sequence;  // ascending
};

inline std::optional<std::pair<VertexSet, VertexSet>> find_bipartition(const Graph& g) {
    int n = g.order();
    VertexSet side_a, side_b, colored;
    for (int root = 0; root < n; ++root) {
        if (colored.contains(root)) continue;
        side_a.add(root);
        colored.add(root);
        VertexSet frontier = VertexSet::of({root});
        bool frontier_in_a = true;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next = next | g.neighbors(v);
            next = next - colored;
            for (int v : next) (frontier_in_a ? side_b : side_a).add(v);
            colored = colored | next;
            frontier = next;
            frontier_in_a = !frontier_in_a;
        }
    }
    for (int v : side_a)
        if (g.neighbors(v).intersects(side_a)) return std::nullopt;
    for (int v : side_b)
        if (g.neighbors(v).intersects(side_b)) return std::nullopt;
    return std::make_pair(side_a, side_b);
}

inline StructureProfile profile(const Graph& g) {
    StructureProfile p;
    int n = g.order();
    p.connected = is_connected(g);
    if (n <= 2) {
        p.biconnected = false;
    } else {
        p.biconnected = p.connected;
        for (int v = 0; v < n && p.biconnected; ++v)
            if (!is_connected_within(g, g.vertices().without(v))) p.biconnected = false;
    }
    p.bipartition = find_bipartition(g);
    p.degree_sequence.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p.degree_sequence.push_back(g.degree(v));
    std::sort(p.degree_sequence.begin(), p.degree_sequence.end());
    if (n > 0 && p.degree_sequence.front() == p.degree_sequence.back()) p.regularity = p.degree_sequence.front();
    return p;
}

struct BoundaryCounts {
    int boundary = 0;           // |boundary(x)|: edges with exactly one end in x
    std::optional<int> cross;   // |E(x,y)|: edges in boundary(x) and boundary(y)
};

inline BoundaryCounts boundary_counts(const Graph& g, VertexSet x, std::optional<VertexSet> y = std::nullopt) {
    g.check_subset(x);
    if (y) g.check_subset(*y);
    BoundaryCounts out;
    for (int v : x) out.boundary += (g.neighbors(v) - x).size();
    if (y) {
        int c = 0;
        for (auto [u, v] : g.edges()) {
            bool in_bx = x.contains(u) != x.contains(v);
            bool in_by = y->contains(u) != y->contains(v);
            if (in_bx && in_by) ++c;
        }
        out.cross = c;
    }
    return out;
}

}  // namespace equimatch
