#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace tanglekit {

// exit codes: 0 ok, 2 parse, 3 dimension/focus, 4 io, 5 identity failure
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tanglekit
