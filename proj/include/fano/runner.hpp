#ifndef FANO_RUNNER_HPP
#define FANO_RUNNER_HPP

#include <optional>
#include <string>

#include "fano/report.hpp"
#include "fano/scenario.hpp"

namespace fano {

struct RunOptions {
    int threads = 1;                       // worker count for independent tasks
    std::optional<OrderKind> force_order;  // --order: override every ideal task
    std::optional<int> force_trunc;        // --trunc: override local truncation
    std::optional<int> force_bound;        // --power-bound
    std::optional<std::string> only;       // run only the task with this label
};

// executes every task (no short-circuiting), aggregates the report; tasks run
// concurrently when threads > 1 with results assembled by task index
VerificationReport run_scenario(const Scenario& sc, const RunOptions& opts = {});

}  // namespace fano

#endif
