#pragma once

// Exact canonical forms for graphs on <= 64 vertices.
//
// Search: iterated equitable refinement (split cells by neighbour counts
// against every cell), then backtracking individualization over the first
// non-singleton cell. Leaves yield candidate labelings; the certificate is
// the lexicographically smallest packed adjacency bitstring. Automorphisms
// discovered from tied leaves prune sibling candidates that lie in the same
// orbit under the prefix-fixing subgroup found so far.

#include <cstdint>
#include <numeric>
#include <vector>

#include "equimatch/graph.hpp"

namespace equimatch {

struct CanonicalForm {
    int order = 0;
    std::vector<std::uint64_t> bits;  // row-major upper triangle under canonical labels

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.bits < b.bits;
    }
};

namespace detail {

class canon_search {
public:
    explicit canon_search(const Graph& g) : g_(g), n_(g.order()) {}

    void run() {
        if (n_ == 0) return;
        std::vector<std::uint64_t> cells{VertexSet::range(n_).bits()};
        descend(cells);
    }

    // lab[position] = original vertex
    const std::vector<int>& best_labeling() const { return best_lab_; }
    const std::vector<std::uint64_t>& best_bits() const { return best_bits_; }

private:
    void refine(std::vector<std::uint64_t>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::uint64_t> next;
            next.reserve(cells.size());
            for (std::uint64_t cell : cells) {
                if (std::popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                // Signature of v: counts of neighbours in each current cell.
                std::vector<std::pair<std::vector<int>, int>> sigs;
                for (int v : VertexSet(cell)) {
                    std::vector<int> sig;
                    sig.reserve(cells.size());
                    for (std::uint64_t c : cells) sig.push_back(std::popcount(g_.neighbors(v).bits() & c));
                    sigs.emplace_back(std::move(sig), v);
                }
                std::sort(sigs.begin(), sigs.end());
                std::uint64_t group = 0;
                for (std::size_t i = 0; i < sigs.size(); ++i) {
                    if (i > 0 && sigs[i].first != sigs[i - 1].first) {
                        next.push_back(group);
                        group = 0;
                        changed = true;
                    }
                    group |= std::uint64_t{1} << sigs[i].second;
                }
                next.push_back(group);
            }
            cells.swap(next);
        }
    }

    void descend(std::vector<std::uint64_t> cells) {
        refine(cells);
        int branch_cell = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (std::popcount(cells[i]) > 1) {
                branch_cell = static_cast<int>(i);
                break;
            }
        if (branch_cell < 0) {
            record_leaf(cells);
            return;
        }

        std::vector<int> candidates = VertexSet(cells[static_cast<std::size_t>(branch_cell)]).to_vector();
        std::vector<int> tried;
        std::vector<int> orbit;  // lazily built union-find over prefix-fixing automorphisms
        for (int v : candidates) {
            if (!tried.empty()) {
                if (orbit.empty()) orbit = prefix_orbits();
                bool pruned = false;
                for (int t : tried)
                    if (orbit[static_cast<std::size_t>(t)] == orbit[static_cast<std::size_t>(v)]) {
                        pruned = true;
                        break;
                    }
                if (pruned) continue;
            }
            std::size_t autos_before = autos_.size();
            std::vector<std::uint64_t> child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == branch_cell) {
                    child.push_back(std::uint64_t{1} << v);
                    child.push_back(cells[i] & ~(std::uint64_t{1} << v));
                } else {
                    child.push_back(cells[i]);
                }
            }
            prefix_.push_back(v);
            descend(std::move(child));
            prefix_.pop_back();
            tried.push_back(v);
            if (autos_.size() != autos_before) orbit.clear();  // new generators may merge orbits
        }
    }

    void record_leaf(const std::vector<std::uint64_t>& cells) {
        std::vector<int> lab;
        lab.reserve(static_cast<std::size_t>(n_));
        for (std::uint64_t cell : cells) lab.push_back(std::countr_zero(cell));
        std::vector<std::uint64_t> bits = pack_bits(lab);
        if (best_lab_.empty() || bits < best_bits_) {
            best_bits_ = std::move(bits);
            best_lab_ = std::move(lab);
        } else {
            maybe_store_automorphism(lab, bits);
        }
    }

    void maybe_store_automorphism(const std::vector<int>& lab, const std::vector<std::uint64_t>& bits) {
        if (bits != best_bits_ || autos_.size() >= 2048) return;
        std::vector<int> phi(static_cast<std::size_t>(n_));
        for (int pos = 0; pos < n_; ++pos)
            phi[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(pos)])] = lab[static_cast<std::size_t>(pos)];
        autos_.push_back(std::move(phi));
    }

    std::vector<int> prefix_orbits() const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const auto& phi : autos_) {
            bool fixes_prefix = true;
            for (int p : prefix_)
                if (phi[static_cast<std::size_t>(p)] != p) {
                    fixes_prefix = false;
                    break;
                }
            if (!fixes_prefix) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(phi[static_cast<std::size_t>(v)]);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        }
        std::vector<int> orbit(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) orbit[static_cast<std::size_t>(v)] = find(v);
        return orbit;
    }

    std::vector<std::uint64_t> pack_bits(const std::vector<int>& lab) const {
        long long total = static_cast<long long>(n_) * (n_ - 1) / 2;
        std::vector<std::uint64_t> bits(static_cast<std::size_t>((total + 63) / 64), 0);
        long long k = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++k)
                if (g_.adjacent(lab[static_cast<std::size_t>(i)], lab[static_cast<std::size_t>(j)]))
                    bits[static_cast<std::size_t>(k >> 6)] |= std::uint64_t{1} << (63 - (k & 63));
        return bits;
    }

    const Graph& g_;
    int n_;
    std::vector<int> prefix_;
    std::vector<int> best_lab_;
    std::vector<std::uint64_t> best_bits_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace detail

// lab[position] = original vertex carried to canonical position
inline std::vector<int> canonical_labeling(const Graph& g) {
    detail::canon_search s(g);
    s.run();
    return s.best_labeling();
}

inline CanonicalForm canonicalize(const Graph& g) {
    detail::canon_search s(g);
    s.run();
    return CanonicalForm{g.order(), s.best_bits()};
}

inline Graph canonical_graph(const Graph& g) {
    std::vector<int> lab = canonical_labeling(g);
    int n = g.order();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(lab[static_cast<std::size_t>(i)], lab[static_cast<std::size_t>(j)])) {
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
    return Graph::from_adjacency(std::move(rows));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (profile(a).degree_sequence != profile(b).degree_sequence) return false;
    return canonicalize(a) == canonicalize(b);
}

}  // namespace equimatch
