#ifndef FANO_SCENARIO_HPP
#define FANO_SCENARIO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/dualcomplex.hpp"
#include "fano/geometry.hpp"
#include "fano/groebner.hpp"
#include "fano/series.hpp"
#include "fano/singularity.hpp"

namespace fano {

class scenario_parse_error : public std::runtime_error {
  public:
    scenario_parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

enum class TaskKind {
    trivial,
    origin_only,
    gb_equals,
    same_ideal,
    member,
    verdict,
    dim,
    circle,
    coreg,
    check_partials,
    check_system,
};

const char* task_kind_name(TaskKind k);

struct ExpectedVerdict {
    VerdictKind kind = VerdictKind::unrecognized;
    int p = 0, q = 0, r = 0;  // tpqr
    int n = 0;                // an
};

struct Task {
    int index = 0;
    int line = 0;
    TaskKind kind{};
    std::string label;
    std::string target;
    std::vector<Polynomial> polys;          // expected lists
    std::optional<OrderKind> order;         // task-level order override
    std::optional<int> bound;               // origin-only power bound
    std::optional<std::vector<int>> vars;   // origin-only variable subset
    ExpectedVerdict expected_verdict;       // verdict tasks
    int expected_int = 0;                   // dim / coreg value
    bool expected_bool = false;             // circle
    int dim_x = 0;                          // coreg
    int expected_notes = 0;                 // check tasks
};

struct LocalEquation {
    RingPtr ring;
    Polynomial poly;
    int trunc = 0;  // 0 = derive the default at run time
};

struct ProblemDecl {
    RingPtr ring;
    std::vector<Polynomial> defining;
};

struct AuxDecl {
    Ideal system;
    std::vector<int> base_vars;            // surviving coordinate indices
    std::optional<OrderKind> order;        // declared order (A.8: degrevlex)
};

struct Scenario {
    std::string name;
    std::map<std::string, RingPtr> rings;
    std::map<std::string, Polynomial> polys;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, AuxDecl> aux;
    std::map<std::string, ProblemDecl> problems;
    std::map<std::string, LocalEquation> locals;
    std::map<std::string, DualComplex> complexes;
    std::map<std::string, NodalPairDeclaration> pairs;
    std::vector<std::string> notes;
    std::vector<Task> tasks;

    bool has_ideal(const std::string& name) const {
        return ideals.count(name) || aux.count(name);
    }
    const Ideal& ideal(const std::string& name) const;
    std::optional<OrderKind> declared_order(const std::string& ideal_name) const;
};

Scenario parse_scenario(const std::string& text, const std::string& name);

}  // namespace fano

#endif
