#pragma once

#include <iosfwd>

namespace holo {

// exit status: 0 ok, 1 computation failure (or a failed verification), 2 usage or parse error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holo
