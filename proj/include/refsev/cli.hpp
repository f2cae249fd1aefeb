#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace refsev::cli {

/// Run the command-line tool on the given arguments (program name excluded).
/// Returns the process exit code: 0 on success, 1 on invalid input or an
/// exceeded resource guard, 2 when a cross-check or series check found a
/// mismatch.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace refsev::cli
