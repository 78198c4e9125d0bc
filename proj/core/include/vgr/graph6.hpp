#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgr/error.hpp"
#include "vgr/graph.hpp"

namespace vgr {

/// Decoding failure, tagged with the 1-based input line (0 when decoding a bare string).
class MalformedLine : public Error {
public:
    MalformedLine(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class OrderTooLarge : public MalformedLine {
public:
    OrderTooLarge(std::size_t line, long long order)
        : MalformedLine(line, "order " + std::to_string(order) + " exceeds the supported maximum") {}
};

std::string to_graph6(const Graph& g);

/// Decodes one graph6 record (no trailing newline, optional ">>graph6<<" prefix).
Graph from_graph6(std::string_view line, std::size_t lineno = 0);

/// Streams graphs from graph6 text, one per line. Blank lines and ">>graph6<<" headers
/// are skipped.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}
    std::optional<Graph> next();
    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::vector<Graph> read_graph6(std::istream& in);

} // namespace vgr
