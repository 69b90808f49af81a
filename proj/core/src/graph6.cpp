#include "edgemap/graph6.hpp"

#include <vector>

namespace edgemap {

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (size_t j = 0; j < 6; ++j) {
            val <<= 1;
            if (i + j < bits.size() && bits[i + j])
                val |= 1;
        }
        out.push_back(static_cast<char>(63 + val));
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw std::invalid_argument("graph too large for graph6");
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * static_cast<size_t>(n) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            bits.push_back(g.has_edge(u, v));
    append_bits(out, bits);
    return out;
}

Graph from_graph6(const std::string& input) {
    std::string s = input;
    if (s.rfind(">>graph6<<", 0) == 0)
        s = s.substr(10);
    if (s.empty())
        throw std::invalid_argument("empty graph6 string");
    size_t pos = 0;
    long n;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw std::invalid_argument("graph6 order beyond supported range");
        if (s.size() < 4)
            throw std::invalid_argument("truncated graph6 header");
        long a = s[1] - 63, b = s[2] - 63, c = s[3] - 63;
        if (a < 0 || a > 63 || b < 0 || b > 63 || c < 0 || c > 63)
            throw std::invalid_argument("invalid graph6 header byte");
        n = (a << 12) | (b << 6) | c;
        pos = 4;
    } else {
        n = s[0] - 63;
        if (n < 0 || n > 62)
            throw std::invalid_argument("invalid graph6 order byte");
        pos = 1;
    }
    const long nbits = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (s.size() - pos != need)
        throw std::invalid_argument("graph6 body length mismatch");
    std::vector<bool> bits;
    bits.reserve(need * 6);
    for (size_t i = pos; i < s.size(); ++i) {
        int val = s[i] - 63;
        if (val < 0 || val > 63)
            throw std::invalid_argument("invalid graph6 body byte");
        for (int j = 5; j >= 0; --j)
            bits.push_back((val >> j) & 1);
    }
    for (size_t i = static_cast<size_t>(nbits); i < bits.size(); ++i)
        if (bits[i])
            throw std::invalid_argument("nonzero graph6 padding");
    std::vector<std::pair<int, int>> es;
    size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (bits[k])
                es.emplace_back(u, v);
    return Graph::from_edges(static_cast<int>(n), es);
}

} // namespace edgemap
