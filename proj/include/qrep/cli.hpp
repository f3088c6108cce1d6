#pragma once

#include <ostream>

namespace qrep {

/// Entry point of the qrep command. Returns the process exit code:
/// 0 when the requested check passes (or a command succeeds), 1 when a
/// check finds violations, 2 for usage, configuration or precision errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qrep
