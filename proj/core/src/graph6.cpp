#include "vgr/graph6.hpp"

namespace vgr {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3F)));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
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

Graph from_graph6(std::string_view line, std::size_t lineno) {
    line = trim(line);
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (line.empty()) throw MalformedLine(lineno, "empty graph6 record");
    for (char c : line)
        if (c < 63 || c > 126) throw MalformedLine(lineno, "character outside the graph6 range");

    auto value = [&](std::size_t i) { return static_cast<long long>(line[i] - 63); };
    long long n = 0;
    std::size_t pos = 0;
    if (line[0] != '~') {
        n = value(0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] == '~') {
        if (line.size() < 8) throw MalformedLine(lineno, "truncated size header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
        pos = 8;
    } else {
        if (line.size() < 4) throw MalformedLine(lineno, "truncated size header");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | value(i);
        pos = 4;
    }
    if (n > kMaxOrder) throw OrderTooLarge(lineno, n);

    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != body) throw MalformedLine(lineno, "graph6 body has the wrong length");

    Graph g(static_cast<int>(n));
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const long long c = value(pos + static_cast<std::size_t>(k / 6));
            if ((c >> (5 - k % 6)) & 1) g.add_edge_unchecked(i, j);
        }
    }
    if (bits % 6 != 0) {
        const long long last = value(line.size() - 1);
        if ((last & ((1LL << (6 - bits % 6)) - 1)) != 0) throw MalformedLine(lineno, "nonzero padding bits");
    }
    return g;
}

std::optional<Graph> Graph6Reader::next() {
    std::string raw;
    while (std::getline(in_, raw)) {
        ++line_;
        std::string_view s = trim(raw);
        if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
        if (s.empty()) continue;
        return from_graph6(s, line_);
    }
    return std::nullopt;
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    Graph6Reader reader(in);
    while (auto g = reader.next()) out.push_back(std::move(*g));
    return out;
}

} // namespace vgr
