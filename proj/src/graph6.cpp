#include "domk/graph6.hpp"

#include <cstdint>

namespace domk {

namespace {

constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw GraphError("graph6: empty input");

    std::size_t pos = 0;
    auto take = [&](const char* what) -> int {
        if (pos >= text.size()) throw GraphError(std::string("graph6: truncated ") + what);
        char c = text[pos++];
        if (!printable(c)) throw GraphError(std::string("graph6: byte out of range in ") + what);
        return c - kBias;
    };

    std::int64_t n = 0;
    if (text[0] == '~') {
        pos = 1;
        int chunks = 3;
        if (text.size() > 1 && text[1] == '~') {
            pos = 2;
            chunks = 6;
        }
        for (int i = 0; i < chunks; ++i) n = (n << 6) | take("header");
    } else {
        n = take("header");
    }
    if (n > 100000) throw GraphError("graph6: vertex count too large");

    const std::int64_t bits = n * (n - 1) / 2;
    const std::int64_t bytes = (bits + 5) / 6;
    if (static_cast<std::int64_t>(text.size() - pos) < bytes) throw GraphError("graph6: truncated bit payload");
    if (static_cast<std::int64_t>(text.size() - pos) > bytes) throw GraphError("graph6: trailing bytes after payload");

    std::vector<Edge> edges;
    std::int64_t k = 0;
    int chunk = 0;
    // Upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0) chunk = take("payload");
            if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0 && (chunk & ((1 << (6 - bits % 6)) - 1)) != 0)
        throw GraphError("graph6: non-zero padding bits");
    return Graph::from_edges(static_cast<Vertex>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
    }
    int chunk = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

}  // namespace domk
