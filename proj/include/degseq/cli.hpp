#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degseq::cli {

/// Runs the command-line tool. `args` excludes the program name. Exit
/// codes: 0 success, 2 usage or parse error, 3 table verification
/// mismatch. Identical argument vectors produce byte-identical stdout,
/// including under different --jobs values.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degseq::cli
