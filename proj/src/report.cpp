#include "fano/report.hpp"

#include <json.hpp>

namespace fano {

const char* task_status_name(TaskStatus s) {
    switch (s) {
        case TaskStatus::pass: return "pass";
        case TaskStatus::fail: return "fail";
        case TaskStatus::unknown: return "unknown";
    }
    return "?";
}

std::string VerificationReport::to_json(bool include_wall_times) const {
    nlohmann::ordered_json doc;
    doc["scenario"] = scenario;
    doc["overall"] = overall_pass ? "pass" : "fail";
    doc["paper_notes"] = paper_notes;
    auto& tasks_json = doc["tasks"] = nlohmann::ordered_json::array();
    for (const auto& t : tasks) {
        nlohmann::ordered_json tj;
        tj["index"] = t.index;
        tj["label"] = t.label;
        tj["kind"] = t.kind;
        tj["target"] = t.target;
        tj["status"] = task_status_name(t.status);
        if (!t.expected.empty()) tj["expected"] = t.expected;
        if (!t.got.empty()) tj["got"] = t.got;
        if (!t.notes.empty()) tj["notes"] = t.notes;
        if (!t.paper_notes.empty()) tj["paper_notes"] = t.paper_notes;
        if (t.certificate) {
            nlohmann::ordered_json cj;
            if (!t.certificate->order.empty()) cj["order"] = t.certificate->order;
            cj["basis_size"] = t.certificate->basis_size;
            cj["spolys_reduced"] = t.certificate->spolys_reduced;
            cj["pairs_pruned"] = t.certificate->pairs_pruned;
            if (t.certificate->steps) cj["steps"] = *t.certificate->steps;
            if (!t.certificate->extra.empty()) cj["detail"] = t.certificate->extra;
            tj["certificate"] = std::move(cj);
        }
        if (include_wall_times) tj["wall_ms"] = t.wall_ms;
        tasks_json.push_back(std::move(tj));
    }
    if (include_wall_times) doc["wall_ms"] = wall_ms;
    return doc.dump(2) + "\n";
}

}  // namespace fano
