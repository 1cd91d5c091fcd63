#pragma once

// graph6 interchange codec, single-byte order form only (n <= 62).
//
// Layout: one byte n+63, then the upper triangle of the adjacency matrix
// in column-major order ((0,1), (0,2), (1,2), (0,3), ...) packed 6 bits
// per byte MSB-first, zero-padded, each byte offset by 63.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "equimatch/graph.hpp"

namespace equimatch {

class graph6_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int graph6_max_order = 62;

inline std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > graph6_max_order) throw graph6_error("graph6: order > 62 not supported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw graph6_error("graph6: empty input");
    for (char c : text) {
        int b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) throw graph6_error("graph6: byte out of range 63..126");
    }
    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n == 63) throw graph6_error("graph6: multi-byte order form (n > 62) not supported");
    long long total_bits = static_cast<long long>(n) * (n - 1) / 2;
    long long payload = static_cast<long long>(text.size()) - 1;
    long long need = (total_bits + 5) / 6;
    if (payload < need) throw graph6_error("graph6: truncated bit payload");
    if (payload > need) throw graph6_error("graph6: trailing data after bit payload");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + bit / 6)]) - 63;
            if ((byte >> (5 - bit % 6)) & 1) {
                rows[static_cast<std::size_t>(row)] |= std::uint64_t{1} << col;
                rows[static_cast<std::size_t>(col)] |= std::uint64_t{1} << row;
            }
        }
    }
    // Padding bits must be zero.
    for (long long pad = total_bits; pad < need * 6; ++pad) {
        int byte = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + pad / 6)]) - 63;
        if ((byte >> (5 - pad % 6)) & 1) throw graph6_error("graph6: nonzero padding bits");
    }
    return Graph::from_adjacency(std::move(rows));
}

}  // namespace equimatch
