#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "linespec/graph.hpp"

namespace linespec {

/// Raised for malformed graph files; the message names the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text format:
///   X <m>
///   Y <n>
///   <x> <y>      one edge per line, 0-based
/// Blank lines and lines starting with '#' are ignored.
BipartiteGraph read_bipartite_text(std::istream& in);
void write_bipartite_text(std::ostream& out, const BipartiteGraph& g);

/// {"x_size": m, "y_size": n, "edges": [[x, y], ...]}
BipartiteGraph bipartite_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BipartiteGraph& g);

/// {"order": e, "edges": [[u, v], ...], "labels": [[x, y], ...]}
nlohmann::json to_json(const LineGraph& lg);

/// Dispatches on the extension: ".json" is JSON, anything else is text.
/// Throws ParseError for bad content and std::runtime_error if unreadable.
BipartiteGraph load_bipartite(const std::filesystem::path& path);

} // namespace linespec
