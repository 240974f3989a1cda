#pragma once

#include <ostream>

namespace hermann {

/// Exit codes: 0 success, 1 usage, 2 datum parse/validation, 3 internal inconsistency.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hermann
