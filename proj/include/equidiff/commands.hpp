// Subcommand implementations behind the CLI, written against streams so the
// test suite can drive them in-process. Exit codes: 0 success, 1 validation
// failure, 2 parse/usage failure. Output is byte-deterministic.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace equidiff {

int cmd_validate(const std::string& text, std::ostream& out, std::ostream& err);

// One row per character, `c1,...,ck<TAB>dim`, in lexicographic character
// order under a versioned header. chi_filter restricts to one character.
int cmd_dims(const std::string& text, const std::optional<std::string>& chi_filter,
             std::ostream& out, std::ostream& err);

int cmd_genus(const std::string& text, std::ostream& out, std::ostream& err);

// Re-proves the shipped identities on the given cover: the two m routes
// agree for every character, the trivial character computes the quotient
// genus, the dimensions sum to the arithmetic genus, and none is negative.
int cmd_selfcheck(const std::string& text, std::ostream& out, std::ostream& err);

int cmd_oracle(long long e, const std::string& exponents_csv, std::ostream& out,
               std::ostream& err);

}  // namespace equidiff
