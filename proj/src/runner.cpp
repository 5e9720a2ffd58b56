#include "fano/runner.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

namespace fano {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// default per the groebner design: lex in the ring's declared variable order
OrderKind default_order_kind = OrderKind::lex;

struct GbKey {
    std::string ideal;
    OrderKind order;
    bool operator<(const GbKey& o) const {
        if (ideal != o.ideal) return ideal < o.ideal;
        return static_cast<int>(order) < static_cast<int>(o.order);
    }
};

class GbCache {
  public:
    const GroebnerBasis& get(const Scenario& sc, const std::string& name, OrderKind kind) {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cache_.find({name, kind});
            if (it != cache_.end()) return it->second;
        }
        const Ideal& ideal = sc.ideal(name);
        GroebnerBasis gb =
            buchberger(ideal, MonomialOrder::make(kind, ideal.ring->arity()));
        std::lock_guard<std::mutex> lk(mu_);
        return cache_.emplace(GbKey{name, kind}, std::move(gb)).first->second;
    }

  private:
    std::mutex mu_;
    std::map<GbKey, GroebnerBasis> cache_;
};

CertificateSummary summarize(const GroebnerBasis& gb) {
    CertificateSummary c;
    c.order = order_kind_name(gb.order.kind());
    c.basis_size = gb.elements.size();
    c.spolys_reduced = gb.stats.spolys_reduced;
    c.pairs_pruned = gb.stats.pairs_pruned;
    return c;
}

std::string verdict_text(const ExpectedVerdict& v) {
    std::ostringstream os;
    switch (v.kind) {
        case VerdictKind::tpqr: os << "Tpqr(" << v.p << "," << v.q << "," << v.r << ")"; break;
        case VerdictKind::an: os << "An(" << v.n << ")"; break;
        case VerdictKind::unrecognized: os << "unrecognized"; break;
    }
    return os.str();
}

struct TaskContext {
    const Scenario& sc;
    const RunOptions& opts;
    GbCache& cache;
};

OrderKind task_order(const TaskContext& ctx, const Task& t, std::vector<std::string>& notes) {
    OrderKind declared = t.order.value_or(default_order_kind);
    if (ctx.opts.force_order && *ctx.opts.force_order != declared) {
        notes.push_back(std::string("order overridden: declared ") +
                        order_kind_name(declared) + ", ran " +
                        order_kind_name(*ctx.opts.force_order));
        return *ctx.opts.force_order;
    }
    return declared;
}

void run_trivial(const TaskContext& ctx, const Task& t, TaskReport& out) {
    // triviality is order-independent; certified with grlex (degree orders
    // keep the inhomogeneous chart systems small)
    std::vector<std::string> notes;
    OrderKind kind = OrderKind::grlex;
    if (ctx.opts.force_order) kind = task_order(ctx, t, notes);
    const GroebnerBasis& gb = ctx.cache.get(ctx.sc, t.target, kind);
    bool ok = is_trivial(gb);
    out.status = ok ? TaskStatus::pass : TaskStatus::fail;
    out.expected = "(1)";
    out.got = ok ? "(1)" : "basis of size " + std::to_string(gb.elements.size());
    out.certificate = summarize(gb);
    out.notes = std::move(notes);
}

void run_origin_only(const TaskContext& ctx, const Task& t, TaskReport& out) {
    OrderKind kind = task_order(ctx, t, out.notes);
    const GroebnerBasis& gb = ctx.cache.get(ctx.sc, t.target, kind);
    int bound = ctx.opts.force_bound.value_or(t.bound.value_or(32));
    if (ctx.opts.force_bound && t.bound && *ctx.opts.force_bound != *t.bound)
        out.notes.push_back("power bound overridden: declared " + std::to_string(*t.bound) +
                            ", ran " + std::to_string(bound));
    OriginCheck check = vanishes_only_at_origin(gb, bound, t.vars);
    out.status = check.certified ? TaskStatus::pass : TaskStatus::unknown;
    out.expected = "pure power of every checked variable within bound " +
                   std::to_string(bound);
    std::ostringstream os;
    const auto& names = gb.ideal.ring->names;
    for (size_t i = 0; i < check.vars.size(); i++) {
        if (i) os << ", ";
        os << names[check.vars[i]] << "^"
           << (check.powers[i] ? std::to_string(*check.powers[i]) : "?");
    }
    out.got = check.certified ? "certified: " + os.str() : "unknown at bound: " + os.str();
    out.certificate = summarize(gb);
}

void run_gb_equals(const TaskContext& ctx, const Task& t, TaskReport& out) {
    OrderKind kind = task_order(ctx, t, out.notes);
    const GroebnerBasis& gb = ctx.cache.get(ctx.sc, t.target, kind);
    bool ok = gb.elements.size() == t.polys.size();
    for (size_t i = 0; ok && i < t.polys.size(); i++)
        ok = gb.elements[i] == t.polys[i].with_order(gb.order);
    out.status = ok ? TaskStatus::pass : TaskStatus::fail;
    out.expected = "reduced basis equals the listed " + std::to_string(t.polys.size()) +
                   " polynomials";
    out.got = ok ? "exact match"
                 : "reduced basis has " + std::to_string(gb.elements.size()) + " elements";
    if (!ok && gb.elements.size() == t.polys.size()) {
        for (size_t i = 0; i < t.polys.size(); i++) {
            if (!(gb.elements[i] == t.polys[i].with_order(gb.order))) {
                out.got = "first mismatch at position " + std::to_string(i) + ": " +
                          to_string(gb.elements[i]);
                break;
            }
        }
    }
    out.certificate = summarize(gb);
}

void run_same_ideal(const TaskContext& ctx, const Task& t, TaskReport& out) {
    OrderKind kind = task_order(ctx, t, out.notes);
    const GroebnerBasis& ours = ctx.cache.get(ctx.sc, t.target, kind);
    GroebnerBasis theirs = buchberger(Ideal::make(ours.ideal.ring, t.polys, "printed"),
                                      ours.order);
    bool ok = ours.elements.size() == theirs.elements.size();
    for (size_t i = 0; ok && i < ours.elements.size(); i++)
        ok = ours.elements[i] == theirs.elements[i];
    out.status = ok ? TaskStatus::pass : TaskStatus::fail;
    out.expected = "identical reduced bases";
    out.got = ok ? "identical (" + std::to_string(ours.elements.size()) + " elements)"
                 : "reduced bases differ (" + std::to_string(ours.elements.size()) + " vs " +
                       std::to_string(theirs.elements.size()) + " elements)";
    CertificateSummary cert = summarize(ours);
    cert.extra.push_back("printed-list basis size " + std::to_string(theirs.elements.size()));
    out.certificate = std::move(cert);
}

void run_member(const TaskContext& ctx, const Task& t, TaskReport& out) {
    OrderKind kind = task_order(ctx, t, out.notes);
    const GroebnerBasis& gb = ctx.cache.get(ctx.sc, t.target, kind);
    size_t ok = 0;
    std::string first_fail;
    for (const auto& p : t.polys) {
        if (member(p, gb)) {
            ok++;
        } else if (first_fail.empty()) {
            first_fail = to_string(p);
        }
    }
    out.status = ok == t.polys.size() ? TaskStatus::pass : TaskStatus::fail;
    out.expected = "all " + std::to_string(t.polys.size()) + " polynomials in the ideal";
    out.got = out.status == TaskStatus::pass
                  ? "all members"
                  : std::to_string(ok) + "/" + std::to_string(t.polys.size()) +
                        " members; first failure: " + first_fail;
    out.certificate = summarize(gb);
}

void run_verdict(const TaskContext& ctx, const Task& t, TaskReport& out) {
    const LocalEquation& eq = ctx.sc.locals.at(t.target);
    int trunc = eq.trunc;
    if (ctx.opts.force_trunc) {
        if (trunc && trunc != *ctx.opts.force_trunc)
            out.notes.push_back("truncation overridden: declared " + std::to_string(trunc) +
                                ", ran " + std::to_string(*ctx.opts.force_trunc));
        trunc = *ctx.opts.force_trunc;
    }
    if (trunc == 0) {
        // default: p+q+r when the three pure powers are visible up front
        std::array<int, 3> pure{};
        for (const auto& term : eq.poly.terms()) {
            if (term.mono.support_size() != 1) continue;
            for (int v = 0; v < 3; v++) {
                int e = term.mono.exponent(v);
                if (e > 1 && (pure[v] == 0 || e < pure[v])) pure[v] = e;
            }
        }
        trunc = (pure[0] && pure[1] && pure[2]) ? pure[0] + pure[1] + pure[2] : 16;
    }
    SingularityVerdict got = classify(TruncatedSeries::make(eq.poly, trunc));
    SingularityVerdict want =
        t.expected_verdict.kind == VerdictKind::tpqr
            ? SingularityVerdict::tpqr(t.expected_verdict.p, t.expected_verdict.q,
                                       t.expected_verdict.r, 1)
            : (t.expected_verdict.kind == VerdictKind::an
                   ? SingularityVerdict::an(t.expected_verdict.n)
                   : SingularityVerdict::unrecognized(TruncatedSeries::make(eq.poly, trunc),
                                                      ""));
    out.status = got.matches(want) ? TaskStatus::pass : TaskStatus::fail;
    out.expected = verdict_text(t.expected_verdict);
    out.got = got.describe();
    CertificateSummary cert;
    cert.steps = static_cast<int>(got.change_log.size());
    cert.extra.push_back("truncation order " + std::to_string(trunc));
    out.certificate = std::move(cert);
}

void run_dim(const TaskContext& ctx, const Task& t, TaskReport& out) {
    int got;
    if (auto it = ctx.sc.complexes.find(t.target); it != ctx.sc.complexes.end()) {
        got = it->second.dimension();
    } else {
        got = lemma_dim2_rule(ctx.sc.pairs.at(t.target));
        out.notes.push_back("dimension from the declared nodal-pair rule, not from cells");
    }
    out.status = got == t.expected_int ? TaskStatus::pass : TaskStatus::fail;
    out.expected = std::to_string(t.expected_int);
    out.got = std::to_string(got);
}

void run_circle(const TaskContext& ctx, const Task& t, TaskReport& out) {
    bool got = ctx.sc.complexes.at(t.target).is_circle();
    out.status = got == t.expected_bool ? TaskStatus::pass : TaskStatus::fail;
    out.expected = t.expected_bool ? "true" : "false";
    out.got = got ? "true" : "false";
}

void run_coreg(const TaskContext& ctx, const Task& t, TaskReport& out) {
    CoregularityRecord rec;
    if (auto it = ctx.sc.complexes.find(t.target); it != ctx.sc.complexes.end()) {
        rec = coregularity(t.dim_x, it->second);
    } else {
        rec = coregularity_of_dimension(t.dim_x, lemma_dim2_rule(ctx.sc.pairs.at(t.target)));
        out.notes.push_back("regularity from the declared nodal-pair rule");
    }
    out.status = rec.coreg == t.expected_int ? TaskStatus::pass : TaskStatus::fail;
    out.expected = "coreg " + std::to_string(t.expected_int);
    out.got = "reg " + std::to_string(rec.reg) + ", coreg " + std::to_string(rec.coreg);
}

void run_check_partials(const TaskContext& ctx, const Task& t, TaskReport& out) {
    const Polynomial* f = nullptr;
    if (auto it = ctx.sc.polys.find(t.target); it != ctx.sc.polys.end()) f = &it->second;
    if (!f) f = &ctx.sc.problems.at(t.target).defining[0];
    int mismatches = 0;
    const auto& names = f->ring()->names;
    for (size_t i = 0; i < t.polys.size(); i++) {
        Polynomial derived = partial_derivative(*f, static_cast<int>(i));
        if (!(derived == t.polys[i])) {
            mismatches++;
            out.paper_notes.push_back("paper prints d/d" + names[i] + " as \"" +
                                      to_string(t.polys[i]) +
                                      "\" but the derivative of the stated polynomial is \"" +
                                      to_string(derived) +
                                      "\"; computations use the derived form");
        }
    }
    out.status = mismatches == t.expected_notes ? TaskStatus::pass : TaskStatus::fail;
    out.expected = std::to_string(t.expected_notes) + " discrepancies";
    out.got = std::to_string(mismatches) + " discrepancies";
}

void run_check_system(const TaskContext& ctx, const Task& t, TaskReport& out) {
    const Ideal& sys = ctx.sc.aux.at(t.target).system;
    int mismatches = 0;
    size_t n = std::max(sys.generators.size(), t.polys.size());
    for (size_t i = 0; i < n; i++) {
        if (i >= sys.generators.size() || i >= t.polys.size() ||
            !(sys.generators[i] == t.polys[i].with_order(sys.generators[i].order()))) {
            mismatches++;
            std::string derived =
                i < sys.generators.size() ? to_string(sys.generators[i]) : "(none)";
            std::string printed = i < t.polys.size() ? to_string(t.polys[i]) : "(none)";
            out.paper_notes.push_back("system generator " + std::to_string(i) +
                                      ": derived \"" + derived + "\" vs printed \"" +
                                      printed + "\"");
        }
    }
    out.status = mismatches == t.expected_notes ? TaskStatus::pass : TaskStatus::fail;
    out.expected = std::to_string(t.expected_notes) + " discrepancies";
    out.got = std::to_string(mismatches) + " discrepancies";
}

TaskReport run_task(const TaskContext& ctx, const Task& t) {
    TaskReport out;
    out.index = t.index;
    out.label = t.label;
    out.kind = task_kind_name(t.kind);
    out.target = t.target;
    auto t0 = Clock::now();
    try {
        switch (t.kind) {
            case TaskKind::trivial: run_trivial(ctx, t, out); break;
            case TaskKind::origin_only: run_origin_only(ctx, t, out); break;
            case TaskKind::gb_equals: run_gb_equals(ctx, t, out); break;
            case TaskKind::same_ideal: run_same_ideal(ctx, t, out); break;
            case TaskKind::member: run_member(ctx, t, out); break;
            case TaskKind::verdict: run_verdict(ctx, t, out); break;
            case TaskKind::dim: run_dim(ctx, t, out); break;
            case TaskKind::circle: run_circle(ctx, t, out); break;
            case TaskKind::coreg: run_coreg(ctx, t, out); break;
            case TaskKind::check_partials: run_check_partials(ctx, t, out); break;
            case TaskKind::check_system: run_check_system(ctx, t, out); break;
        }
    } catch (const std::exception& e) {
        out.status = TaskStatus::fail;
        out.got = std::string("error: ") + e.what();
    }
    out.wall_ms = elapsed_ms(t0);
    return out;
}

}  // namespace

VerificationReport run_scenario(const Scenario& sc, const RunOptions& opts) {
    auto t0 = Clock::now();
    VerificationReport report;
    report.scenario = sc.name;
    report.paper_notes = sc.notes;

    std::vector<const Task*> selected;
    for (const auto& t : sc.tasks)
        if (!opts.only || t.label == *opts.only) selected.push_back(&t);

    GbCache cache;
    TaskContext ctx{sc, opts, cache};
    std::vector<TaskReport> results(selected.size());
    if (opts.threads > 1 && selected.size() > 1) {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1))
                results[i] = run_task(ctx, *selected[i]);
        };
        std::vector<std::thread> pool;
        int n = std::min<int>(opts.threads, static_cast<int>(selected.size()));
        for (int i = 0; i < n; i++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    } else {
        for (size_t i = 0; i < selected.size(); i++) results[i] = run_task(ctx, *selected[i]);
    }

    report.overall_pass = true;
    for (auto& r : results) {
        if (r.status != TaskStatus::pass) report.overall_pass = false;
        for (const auto& n : r.paper_notes)
            report.paper_notes.push_back(r.label + ": " + n);
        report.tasks.push_back(std::move(r));
    }
    report.wall_ms = elapsed_ms(t0);
    return report;
}

}  // namespace fano
