#ifndef FANO_REPORT_HPP
#define FANO_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

namespace fano {

enum class TaskStatus { pass, fail, unknown };

const char* task_status_name(TaskStatus s);

struct CertificateSummary {
    std::string order;  // order the certificate ran under, empty if n/a
    size_t basis_size = 0;
    size_t spolys_reduced = 0;
    size_t pairs_pruned = 0;
    std::optional<int> steps;  // coordinate-change steps for verdicts
    std::vector<std::string> extra;  // free-form certificate lines
};

struct TaskReport {
    int index = 0;
    std::string label;
    std::string kind;
    std::string target;
    TaskStatus status = TaskStatus::fail;
    std::string expected;
    std::string got;
    std::vector<std::string> notes;        // run conditions (overrides etc.)
    std::vector<std::string> paper_notes;  // recorded misprints, copied to the report level
    std::optional<CertificateSummary> certificate;
    double wall_ms = 0.0;
};

struct VerificationReport {
    std::string scenario;
    std::vector<std::string> paper_notes;
    std::vector<TaskReport> tasks;
    bool overall_pass = false;
    double wall_ms = 0.0;

    // deterministic for a fixed scenario and thread count; wall-time fields
    // are the only run-dependent content
    std::string to_json(bool include_wall_times = true) const;
};

}  // namespace fano

#endif
