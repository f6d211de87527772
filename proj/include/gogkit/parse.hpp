#pragma once

#include "gogkit/words.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace gogkit {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {}
    int line;
};

// A .gog document holds either a finite graph of groups or a [ray] preset.
struct Document {
    std::optional<GraphOfGroups> graph;
    std::optional<RaySpec> ray;
};

// Sections:
//   [vertices]  name = group spec
//   [edges]     name: range, source[, alpha_e, alpha_ebar[, edge group]]
//   [base]      vertex name (same line or next)
//   [ray]       indices = k1, k2, ... ; p1, p2, ...
// Matrices are row-major, e.g. [[1,0],[0,2]]; a bare integer n means [[n]].
Document parse_document(std::string_view text);
Document load_document(const std::string& path);

IntMatrix parse_matrix(std::string_view text);

// Word literal: "(2) e (0,1) f (1)"; "@x (3)" for a length-0 word at x.
// Bare integers stand for elements of one-coordinate groups.
Word parse_word(const GraphOfGroups& g, std::string_view text);
// Same grammar without a trailing element; the result must be reduced.
Path parse_path(const GraphOfGroups& g, std::string_view text);

}  // namespace gogkit
