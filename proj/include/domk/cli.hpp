#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace domk::cli {

enum ExitCode { ok = 0, violations = 1, usage = 2, io_failure = 3 };

/// Environment variable consulted for the default --workers value.
inline constexpr const char* kWorkersEnv = "DOMK_WORKERS";

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Apply `work` to every item on `workers` threads and hand results to
/// `emit` in input order. Runs inline when workers <= 1.
void ordered_map(std::size_t count, int workers, const std::function<std::string(std::size_t)>& work,
                 const std::function<void(std::size_t, const std::string&)>& emit);

}  // namespace domk::cli
