#pragma once

#include <iosfwd>

namespace qweyl::cli {

// Full command dispatcher. Exit codes: 0 success or passing check, 1
// mathematical failure (relation fails, not equivalent, census anomalies,
// red selftest criteria), 2 usage or format errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qweyl::cli
