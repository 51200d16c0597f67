#pragma once

#include "racktwist/hilbert.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace racktwist::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCheckFailed = 2, kResource = 3 };

inline constexpr int kSchemaVersion = 1;

class UsageError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

struct RunConfig {
    std::string subcommand;
    int n = 4;
    int n_max = 6;
    int max_degree = 3;
    RankMode mode = RankMode::modular;
    std::uint64_t seed = 1;
    std::string out;
    std::optional<std::size_t> dim_cap;
    unsigned workers = 1;
    std::string rack_spec = "X4";
    std::string cocycle_spec = "minus-one";
    std::string file;
    bool compare_twist = false;
    bool inject_fault = false;
};

struct CommandResult {
    int exit_code = kOk;
    nlohmann::json report;
    std::string summary;
};

CommandResult cmd_rack(const RunConfig& cfg);
CommandResult cmd_cocycle(const RunConfig& cfg);
CommandResult cmd_cover(const RunConfig& cfg);
CommandResult cmd_verify_twist(const RunConfig& cfg);
CommandResult cmd_cohomology(const RunConfig& cfg);
CommandResult cmd_hilbert(const RunConfig& cfg);
CommandResult cmd_selfcheck(const RunConfig& cfg);

/// Dispatches on cfg.subcommand; maps exceptions to exit codes.
CommandResult dispatch(const RunConfig& cfg);

/// Parses argv, runs, prints the summary and writes the JSON report to
/// --out ("-" for stdout). Returns the process exit code.
int run(int argc, char** argv);

} // namespace racktwist::cli
