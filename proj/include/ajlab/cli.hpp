#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ajlab::cli {

/// Exit codes: 0 success, 1 domain error or failed verification, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Write through a temporary file and rename.
void write_atomic(const std::string& path, const std::string& content);

/// "3", "1..8", "1,2,5" or "1..3,7".
std::vector<long> parse_range(const std::string& text);

}  // namespace ajlab::cli
