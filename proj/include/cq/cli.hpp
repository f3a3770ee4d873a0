#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cq {

/// Runs `cq` with args (without the program name). Returns 0 on success,
/// 1 when a verification suite fails or a computation errors out, 2 on
/// usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cq
