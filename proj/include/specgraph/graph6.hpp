#pragma once

#include <string>
#include <string_view>
#include <stdexcept>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// graph6 codec, header-free variant. Order prefix N(n), then the upper
// triangle in column-major order (pairs (0,1),(0,2),(1,2),(0,3),...) packed
// into 6-bit groups, MSB first, each group offset by 63.

namespace detail {

inline void append_size(std::string& s, long long n) {
    if (n < 0) throw std::invalid_argument("graph6: negative order");
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        s.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= 68719476735LL) {
        s.push_back(126);
        s.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order too large");
    }
}

inline long long parse_size(std::string_view s, std::size_t& pos) {
    auto take = [&]() -> long long {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated size");
        char c = s[pos++];
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    long long first = take();
    if (first != 63) return first;
    long long second = take();
    if (second != 63) {
        long long n = second;
        for (int i = 0; i < 2; ++i) n = (n << 6) | take();
        return n;
    }
    long long n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | take();
    return n;
}

}  // namespace detail

inline std::string graph6_encode(const Graph& g) {
    std::string s;
    const int n = g.order();
    detail::append_size(s, n);
    int bits = 0, group = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                s.push_back(static_cast<char>(group + 63));
                bits = 0;
                group = 0;
            }
        }
    }
    if (bits > 0) s.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return s;
}

inline Graph graph6_decode(std::string_view s) {
    std::size_t pos = 0;
    long long n = detail::parse_size(s, pos);
    if (n > 100000) throw std::invalid_argument("graph6: order beyond supported scale");
    long long pairs = n * (n - 1) / 2;
    std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
    if (s.size() != expected)
        throw std::invalid_argument("graph6: length mismatch for order " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    long long idx = 0;
    int i = 0, j = 1;
    for (std::size_t p = pos; p < s.size(); ++p) {
        char c = s[p];
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        int group = c - 63;
        for (int b = 5; b >= 0; --b) {
            if (idx < pairs) {
                if ((group >> b) & 1) edges.emplace_back(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
                ++idx;
            } else if ((group >> b) & 1) {
                throw std::invalid_argument("graph6: nonzero padding");
            }
        }
    }
    return Graph::build(static_cast<int>(n), edges);
}

}  // namespace specgraph
