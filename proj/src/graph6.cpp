#include "egt/graph6.hpp"

#include <stdexcept>

namespace egt {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxGraph6Order = 62;

size_t data_bytes(int n) {
    size_t bits = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > kMaxGraph6Order)
        throw std::invalid_argument("to_graph6 supports orders up to 62, got " +
                                    std::to_string(n));
    std::string out;
    out.reserve(1 + data_bytes(n));
    out.push_back(static_cast<char>(n + kOffset));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("graph6: empty input");
    unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == '~')
        throw std::invalid_argument("graph6: multi-byte order headers are not supported");
    if (header < kOffset || header > kOffset + kMaxGraph6Order)
        throw std::invalid_argument("graph6: malformed header byte");
    int n = header - kOffset;
    if (n == 0)
        throw std::invalid_argument("graph6: order 0 is not supported");
    size_t need = data_bytes(n);
    if (text.size() < 1 + need)
        throw std::invalid_argument("graph6: truncated input");
    if (text.size() > 1 + need)
        throw std::invalid_argument("graph6: trailing garbage after encoded graph");

    EdgeList edges;
    size_t byte_idx = 1;
    int acc = 0, remaining = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (remaining == 0) {
                unsigned char c = static_cast<unsigned char>(text[byte_idx++]);
                if (c < kOffset || c > 126)
                    throw std::invalid_argument("graph6: data byte out of range");
                acc = c - kOffset;
                remaining = 6;
            }
            --remaining;
            if ((acc >> remaining) & 1)
                edges.push_back({i, j});
        }
    }
    if (remaining > 0 && (acc & ((1 << remaining) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    return Graph(n, edges);
}

} // namespace egt
