// Sectioned, line-oriented text format for cover descriptions, e.g.
//
//     # an irreducible hyperelliptic curve, genus-2 normalization, one node
//     [group]
//     invariants = 2
//
//     [quotient]
//     genus = 0
//
//     [components]
//     count = 1
//     stabilizer_generators = (1)
//
//     [branch Q1]
//     generator = (1)
//     theta = 1
//
//     [node N1]
//     quotient = smooth
//     branch_stabilizer =
//     swap = (1)
//
// '#' starts a comment. Elements are parenthesized coordinate tuples; lists
// are comma-separated. `quotient` is either `smooth` or the label of a
// branch point. `[intersection LABEL]` sections take the same keys as
// `[node LABEL]`. A missing [components] section means one component with
// the full group as stabilizer.
//
// Parsing never throws: malformed input comes back as positioned
// diagnostics. serialize_spec() round-trips through parse_spec() exactly.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equidiff/coverspec.hpp"

namespace equidiff {

struct Diagnostic {
    int line = 0;  // 1-based; 0 for document-level problems
    int column = 0;
    std::string message;
};

struct ParseResult {
    std::optional<CoverSpec> spec;  // set iff no diagnostics
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return spec.has_value(); }
};

ParseResult parse_spec(const std::string& text);

std::string serialize_spec(const CoverSpec& spec);

}  // namespace equidiff
