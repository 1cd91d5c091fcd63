#pragma once

// Exact matching computations: blossom maximum matching, maximal-matching
// search and enumeration, isolating matchings, alternating/augmenting paths.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "equimatch/graph.hpp"

namespace equimatch {

struct Matching {
    std::vector<Edge> edges;  // normalized u < v, sorted ascending

    static Matching from_edges(std::vector<Edge> raw) {
        Matching m;
        m.edges.reserve(raw.size());
        for (auto [u, v] : raw) m.edges.push_back(make_edge(u, v));
        std::sort(m.edges.begin(), m.edges.end());
        VertexSet seen;
        for (auto [u, v] : m.edges) {
            if (seen.contains(u) || seen.contains(v))
                throw std::invalid_argument("matching edges share vertex " + std::to_string(seen.contains(u) ? u : v));
            seen.add(u).add(v);
        }
        return m;
    }

    VertexSet covered() const {
        VertexSet s;
        for (auto [u, v] : edges) s.add(u).add(v);
        return s;
    }

    int size() const { return static_cast<int>(edges.size()); }
    bool contains_vertex(int v) const { return covered().contains(v); }

    friend bool operator==(const Matching&, const Matching&) = default;
    friend bool operator<(const Matching& a, const Matching& b) { return a.edges < b.edges; }
};

inline void require_matching_of(const Graph& g, const Matching& m) {
    VertexSet seen;
    for (auto [u, v] : m.edges) {
        if (!g.adjacent(u, v)) throw std::invalid_argument("matching contains a non-edge");
        if (seen.contains(u) || seen.contains(v)) throw std::invalid_argument("matching edges share a vertex");
        seen.add(u).add(v);
    }
}

struct AlternatingPath {
    std::vector<int> vertices;
    std::vector<bool> in_matching;  // in_matching[i]: edge vertices[i]-vertices[i+1] belongs to m
};

namespace detail {

// Classic Edmonds blossom search with base[] contraction. `mate` is shared
// state; find_path grows an alternating tree from `root` and reports the
// first exposed vertex of `targets` seen from an outer vertex, leaving
// parent pointers for augmentation.
class blossom_solver {
public:
    explicit blossom_solver(const Graph& g) : g_(g), n_(g.order()), mate_(static_cast<std::size_t>(n_), -1) {}

    std::vector<int>& mate() { return mate_; }

    void seed_greedy() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[static_cast<std::size_t>(v)] != -1) continue;
            for (int u : g_.neighbors(v))
                if (mate_[static_cast<std::size_t>(u)] == -1) {
                    mate_[static_cast<std::size_t>(v)] = u;
                    mate_[static_cast<std::size_t>(u)] = v;
                    break;
                }
        }
    }

    // Returns endpoint of an augmenting path root..endpoint with endpoint in
    // `targets`, or -1. Does not modify the matching.
    int find_path(int root, VertexSet targets) {
        p_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), false);
        base_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
        used_[static_cast<std::size_t>(root)] = true;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : g_.neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    mate_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (mate_[static_cast<std::size_t>(to)] != -1 && p_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(to)])] != -1)) {
                    int curbase = lca(v, to);
                    std::vector<bool> blossom(static_cast<std::size_t>(n_), false);
                    mark_path(v, curbase, to, blossom);
                    mark_path(to, curbase, v, blossom);
                    for (int i = 0; i < n_; ++i)
                        if (blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = curbase;
                            if (!used_[static_cast<std::size_t>(i)]) {
                                used_[static_cast<std::size_t>(i)] = true;
                                queue.push_back(i);
                            }
                        }
                } else if (p_[static_cast<std::size_t>(to)] == -1) {
                    p_[static_cast<std::size_t>(to)] = v;
                    if (mate_[static_cast<std::size_t>(to)] == -1) {
                        if (targets.contains(to)) return to;
                        // exposed non-target: unusable for tree growth, skip
                    } else {
                        int w = mate_[static_cast<std::size_t>(to)];
                        used_[static_cast<std::size_t>(w)] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        return -1;
    }

    void augment(int endpoint) {
        int v = endpoint;
        while (v != -1) {
            int pv = p_[static_cast<std::size_t>(v)];
            int ppv = mate_[static_cast<std::size_t>(pv)];
            mate_[static_cast<std::size_t>(v)] = pv;
            mate_[static_cast<std::size_t>(pv)] = v;
            v = ppv;
        }
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = true;
            if (mate_[static_cast<std::size_t>(a)] == -1) break;
            a = p_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = p_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child, std::vector<bool>& blossom) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
            blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(v)])])] = true;
            p_[static_cast<std::size_t>(v)] = child;
            child = mate_[static_cast<std::size_t>(v)];
            v = p_[static_cast<std::size_t>(child)];
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, p_, base_;
    std::vector<bool> used_;
};

inline Matching matching_from_mate(const std::vector<int>& mate) {
    std::vector<Edge> edges;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[static_cast<std::size_t>(v)] > v) edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
    return Matching::from_edges(std::move(edges));
}

}  // namespace detail

inline Matching maximum_matching(const Graph& g) {
    detail::blossom_solver solver(g);
    solver.seed_greedy();
    VertexSet all = g.vertices();
    for (int v = 0; v < g.order(); ++v)
        if (solver.mate()[static_cast<std::size_t>(v)] == -1) {
            int endpoint = solver.find_path(v, all);
            if (endpoint != -1) solver.augment(endpoint);
        }
    return detail::matching_from_mate(solver.mate());
}

inline int matching_number(const Graph& g) { return maximum_matching(g).size(); }

inline bool has_perfect_matching(const Graph& g) {
    return g.order() % 2 == 0 && matching_number(g) * 2 == g.order();
}

inline bool is_factor_critical(const Graph& g) {
    int n = g.order();
    if (n == 0 || n % 2 == 0 || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (!has_perfect_matching(delete_vertices(g, VertexSet::of({v})))) return false;
    return true;
}

inline bool is_maximal(const Graph& g, const Matching& m) {
    require_matching_of(g, m);
    VertexSet covered = m.covered();
    VertexSet open = g.vertices() - covered;
    for (int v : open)
        if (g.neighbors(v).intersects(open)) return false;
    return true;
}

namespace detail {

// Shared DFS over maximal matchings. Branch vertex: lowest-indexed vertex
// that is uncovered, uncommitted and still has an uncovered neighbour.
// Branches: match it to each uncovered uncommitted neighbour (ascending),
// then commit it to stay unmatched. A leaf is a maximal matching iff every
// committed vertex ends with all neighbours covered; each maximal matching
// is produced by exactly one decision sequence.
//
// `bound` < 0 disables pruning; otherwise branches are cut once the
// matching size reaches `bound`. Visitor returns false to stop the search.
template <class Visitor>
class maximal_matching_dfs {
public:
    maximal_matching_dfs(const Graph& g, int bound, Visitor visit)
        : g_(g), n_(g.order()), bound_(bound), visit_(visit) {}

    bool run() { return recurse(); }  // false if visitor stopped the walk

private:
    bool recurse() {
        int v = -1;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t bit = std::uint64_t{1} << i;
            if ((covered_.bits() & bit) || (committed_.bits() & bit)) continue;
            if (g_.neighbors(i).bits() & ~covered_.bits()) {
                v = i;
                break;
            }
        }
        if (v < 0) {
            for (int c : committed_)
                if (g_.neighbors(c).bits() & ~covered_.bits()) return true;  // dead leaf
            if (bound_ >= 0 && static_cast<int>(edges_.size()) >= bound_) return true;
            return visit_(edges_);
        }
        VertexSet options = VertexSet(g_.neighbors(v).bits()) - covered_ - committed_;
        for (int u : options) {
            if (bound_ >= 0 && static_cast<int>(edges_.size()) + 1 >= bound_) break;  // adding would reach bound
            edges_.push_back(make_edge(v, u));
            covered_.add(v).add(u);
            bool keep_going = recurse();
            covered_.remove(v).remove(u);
            edges_.pop_back();
            if (!keep_going) return false;
        }
        if (!g_.neighbors(v).intersects(committed_)) {  // else v could never satisfy that neighbour
            committed_.add(v);
            bool keep_going = recurse();
            committed_.remove(v);
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    int bound_;
    Visitor visit_;
    VertexSet covered_, committed_;
    std::vector<Edge> edges_;
};

}  // namespace detail

// A maximal matching of size < bound if one exists (deterministic: first
// leaf of the fixed-order search), otherwise nullopt. Pre: bound <= nu(g)+1.
inline std::optional<Matching> find_small_maximal_matching(const Graph& g, int bound) {
    std::optional<Matching> found;
    auto visit = [&](const std::vector<Edge>& edges) {
        found = Matching::from_edges(edges);
        return false;
    };
    detail::maximal_matching_dfs(g, bound, visit).run();
    return found;
}

struct MaximalMatchingSummary {
    long long count = 0;
    std::vector<int> sizes;  // multiset, ascending
    bool truncated = false;
};

// Visits each maximal matching exactly once, up to `cap` (cap < 0: no cap).
// The visitor may return false to stop early (reported as truncation).
inline MaximalMatchingSummary enumerate_maximal_matchings(
    const Graph& g, long long cap, const std::function<bool(const Matching&)>& visit = nullptr) {
    MaximalMatchingSummary summary;
    auto leaf = [&](const std::vector<Edge>& edges) {
        if (cap >= 0 && summary.count == cap) {
            summary.truncated = true;
            return false;
        }
        Matching m = Matching::from_edges(edges);
        ++summary.count;
        summary.sizes.push_back(m.size());
        if (visit && !visit(m)) {
            summary.truncated = true;
            return false;
        }
        return true;
    };
    detail::maximal_matching_dfs(g, -1, leaf).run();
    std::sort(summary.sizes.begin(), summary.sizes.end());
    return summary;
}

inline bool is_isolating(const Graph& g, const Matching& m, int v) {
    g.check_vertex(v);
    require_matching_of(g, m);
    VertexSet covered = m.covered();
    return !covered.contains(v) && g.neighbors(v).subset_of(covered);
}

// Subset of m that still isolates v and loses isolation if any single edge
// is dropped. Edges are examined in ascending order; with vertex-disjoint
// edges one pass reaches the fixpoint.
inline Matching minimize_isolating(const Graph& g, const Matching& m, int v) {
    if (!is_isolating(g, m, v)) throw std::invalid_argument("minimize_isolating: matching does not isolate v");
    std::vector<Edge> kept = m.edges;
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<Edge> trial = kept;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_isolating(g, Matching::from_edges(trial), v))
            kept = std::move(trial);
        else
            ++i;
    }
    return Matching::from_edges(kept);
}

struct IsolatingEnumeration {
    long long count = 0;
    bool truncated = false;
};

// Emits every minimal matching isolating v exactly once, up to `cap`
// (cap < 0: no cap). Minimality is structural: a matching isolating v is
// minimal iff each of its (disjoint) edges covers a neighbour of v.
inline IsolatingEnumeration enumerate_minimal_isolating(
    const Graph& g, int v, long long cap, const std::function<bool(const Matching&)>& visit) {
    g.check_vertex(v);
    IsolatingEnumeration out;
    VertexSet nbrs = g.neighbors(v);
    VertexSet covered;
    std::vector<Edge> edges;
    auto recurse = [&](auto&& self) -> bool {
        VertexSet open = nbrs - covered;
        if (open.empty()) {
            if (cap >= 0 && out.count == cap) {
                out.truncated = true;
                return false;
            }
            ++out.count;
            if (visit && !visit(Matching::from_edges(edges))) {
                out.truncated = true;
                return false;
            }
            return true;
        }
        int w = open.first();
        VertexSet partners = (g.neighbors(w) - covered).without(v);
        for (int u : partners) {
            edges.push_back(make_edge(w, u));
            covered.add(w).add(u);
            bool keep_going = self(self);
            covered.remove(w).remove(u);
            edges.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    recurse(recurse);
    return out;
}

inline std::vector<Matching> minimal_isolating_matchings(const Graph& g, int v, long long cap = -1) {
    std::vector<Matching> out;
    enumerate_minimal_isolating(g, v, cap, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// Exact m-augmenting path from a source to a target (blossom-aware), or
// nullopt. Pre: all sources and targets are m-exposed.
inline std::optional<AlternatingPath> find_augmenting_path(const Graph& g, const Matching& m,
                                                           VertexSet sources, VertexSet targets) {
    require_matching_of(g, m);
    g.check_subset(sources);
    g.check_subset(targets);
    VertexSet covered = m.covered();
    if (sources.intersects(covered) || targets.intersects(covered))
        throw std::invalid_argument("find_augmenting_path: covered vertex supplied as source or target");

    std::vector<int> mate(static_cast<std::size_t>(g.order()), -1);
    for (auto [u, v] : m.edges) {
        mate[static_cast<std::size_t>(u)] = v;
        mate[static_cast<std::size_t>(v)] = u;
    }
    for (int root : sources) {
        detail::blossom_solver solver(g);
        solver.mate() = mate;
        int endpoint = solver.find_path(root, targets.without(root));
        if (endpoint == -1) continue;
        solver.augment(endpoint);
        // The augmented matching differs from m exactly along the path.
        AlternatingPath path;
        int cur = root;
        path.vertices.push_back(cur);
        for (;;) {
            int nxt = solver.mate()[static_cast<std::size_t>(cur)];
            path.vertices.push_back(nxt);
            path.in_matching.push_back(false);
            if (nxt == endpoint) break;
            int after = mate[static_cast<std::size_t>(nxt)];
            path.vertices.push_back(after);
            path.in_matching.push_back(true);
            cur = after;
        }
        return path;
    }
    return std::nullopt;
}

struct PerfectMatchingEnumeration {
    long long count = 0;
    bool truncated = false;
};

// Enumerates perfect matchings restricted to `allowed` (every allowed vertex
// covered), lexicographically by decision sequence, up to cap (< 0: no cap).
inline PerfectMatchingEnumeration enumerate_perfect_matchings_within(
    const Graph& g, VertexSet allowed, long long cap, const std::function<bool(const Matching&)>& visit) {
    g.check_subset(allowed);
    PerfectMatchingEnumeration out;
    if (allowed.size() % 2 != 0) return out;
    VertexSet covered;
    std::vector<Edge> edges;
    auto recurse = [&](auto&& self) -> bool {
        VertexSet open = allowed - covered;
        if (open.empty()) {
            if (cap >= 0 && out.count == cap) {
                out.truncated = true;
                return false;
            }
            ++out.count;
            if (visit && !visit(Matching::from_edges(edges))) {
                out.truncated = true;
                return false;
            }
            return true;
        }
        int v = open.first();
        for (int u : g.neighbors(v) & open) {
            edges.push_back(make_edge(v, u));
            covered.add(v).add(u);
            bool keep_going = self(self);
            covered.remove(v).remove(u);
            edges.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    recurse(recurse);
    return out;
}

inline std::vector<Matching> perfect_matchings_within(const Graph& g, VertexSet allowed, long long cap = -1) {
    std::vector<Matching> out;
    enumerate_perfect_matchings_within(g, allowed, cap, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// Lexicographically-first perfect matching of g restricted to `allowed`.
inline std::optional<Matching> lex_first_perfect_matching(const Graph& g, VertexSet allowed) {
    std::optional<Matching> first;
    enumerate_perfect_matchings_within(g, allowed, -1, [&](const Matching& m) {
        first = m;
        return false;
    });
    return first;
}

}  // namespace equimatch
