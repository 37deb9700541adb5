#pragma once

// The mahler command line: one structured record per invocation on `out`, diagnostics on `err`.
//
// Exit codes: 0 success, 1 other failure, 2 parse error, 3 unsupported degree or caps exceeded,
// 4 only bounds could be certified.

#include <ostream>

namespace mahler::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mahler::cli
