#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gkinfo/kratzer.hpp"

namespace gkinfo::cli {

enum ExitCode { kOk = 0, kBoundViolation = 1, kInputError = 2 };

/// Expands "n,l,m" where each field is an integer or an inclusive range
/// "a..b". Combinations with |m| > l are dropped when m was given as a
/// range; an explicit invalid triple is an error.
std::vector<QuantumState> parse_state_spec(const std::string& text);

/// Accepts decimals and simple fractions such as "2/3".
double parse_b_value(const std::string& text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gkinfo::cli
