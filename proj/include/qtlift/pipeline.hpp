#ifndef QTLIFT_PIPELINE_HPP
#define QTLIFT_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

namespace qtlift {

enum ExitCode : int {
    kExitOk = 0,
    kExitAxiomFailure = 1,
    kExitInputError = 2,
    kExitInternal = 3,
};

struct JobConfig {
    std::string input_text;
    int degree = 4;
    std::set<std::string> emit{"lift", "report"};
    bool skip_validation = false;
    std::optional<std::uint64_t> seed_check;
};

struct JobResult {
    int exit_code = kExitOk;
    nlohmann::json output;
};

/// validate -> construct_lift -> check_lift_axioms -> braiding -> check_braiding_axioms -> WX.
/// Never throws for bad input; failures are reported through exit_code and output["error"].
JobResult run_job(const JobConfig& config);

/// Parses "lift,braiding,report,audit" style lists. Throws InputError on unknown names.
std::set<std::string> parse_emit_list(const std::string& text);

} // namespace qtlift

#endif
