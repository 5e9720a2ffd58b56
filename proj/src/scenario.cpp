#include "fano/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fano {

const char* task_kind_name(TaskKind k) {
    switch (k) {
        case TaskKind::trivial: return "trivial";
        case TaskKind::origin_only: return "origin-only";
        case TaskKind::gb_equals: return "gb-equals";
        case TaskKind::same_ideal: return "same-ideal";
        case TaskKind::member: return "member";
        case TaskKind::verdict: return "verdict";
        case TaskKind::dim: return "dim";
        case TaskKind::circle: return "circle";
        case TaskKind::coreg: return "coreg";
        case TaskKind::check_partials: return "check-partials";
        case TaskKind::check_system: return "check-system";
    }
    return "?";
}

const Ideal& Scenario::ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it != ideals.end()) return it->second;
    auto ax = aux.find(name);
    if (ax != aux.end()) return ax->second.system;
    throw std::out_of_range("unknown ideal: " + name);
}

std::optional<OrderKind> Scenario::declared_order(const std::string& name) const {
    auto ax = aux.find(name);
    if (ax != aux.end()) return ax->second.order;
    return std::nullopt;
}

namespace {

// one logical statement: physical lines joined while ending in '\'
struct Statement {
    int line = 0;
    std::string text;
};

std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Statement> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Statement cur;
    bool open = false;
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        bool continued = false;
        if (auto last = line.find_last_not_of(" \t\r"); last != std::string::npos) {
            if (line[last] == '\\') {
                continued = true;
                line.erase(last);
            }
        }
        if (!open) {
            cur = {lineno, line};
            open = true;
        } else {
            cur.text += " " + line;
        }
        if (!continued) {
            if (cur.text.find_first_not_of(" \t\r") != std::string::npos) out.push_back(cur);
            open = false;
        }
    }
    if (open && cur.text.find_first_not_of(" \t\r") != std::string::npos) out.push_back(cur);
    return out;
}

class StatementParser {
  public:
    explicit StatementParser(const Statement& st) : line_(st.line), s_(st.text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw scenario_parse_error(line_, msg);
    }

    int line() const { return line_; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) pos_++;
    }

    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat_char(char c) {
        if (peek_char(c)) {
            pos_++;
            return true;
        }
        return false;
    }

    void expect_char(char c) {
        if (!eat_char(c)) fail(std::string("expected '") + c + "'");
    }

    char take_char() { return s_[pos_++]; }

    std::string peek_word() {
        skip_ws();
        size_t end = pos_;
        while (end < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_' ||
                s_[end] == '-' || s_[end] == '.'))
            end++;
        return s_.substr(pos_, end - pos_);
    }

    std::string word(const std::string& what = "name") {
        skip_ws();
        std::string w = peek_word();
        if (w.empty()) fail("expected " + what);
        pos_ += w.size();
        return w;
    }

    bool eat_keyword(const std::string& kw) {
        skip_ws();
        if (peek_word() == kw) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

    int integer(const std::string& what = "integer") {
        std::string w = word(what);
        try {
            size_t used = 0;
            int v = std::stoi(w, &used);
            if (used != w.size()) fail("expected " + what + ", got '" + w + "'");
            return v;
        } catch (const scenario_parse_error&) {
            throw;
        } catch (const std::exception&) {
            fail("expected " + what + ", got '" + w + "'");
        }
    }

    std::vector<std::string> name_list() {
        std::vector<std::string> names;
        names.push_back(word());
        while (eat_char(',')) names.push_back(word());
        return names;
    }

    std::vector<int> int_list() {
        std::vector<int> out;
        out.push_back(integer());
        while (eat_char(',')) out.push_back(integer());
        return out;
    }

    // the rest of the statement, trimmed
    std::string rest() {
        skip_ws();
        std::string r = s_.substr(pos_);
        pos_ = s_.size();
        if (auto last = r.find_last_not_of(" \t\r"); last != std::string::npos)
            r.erase(last + 1);
        return r;
    }

    // ';'-separated texts until end of statement
    std::vector<std::string> list_texts() {
        std::vector<std::string> out;
        std::string current;
        skip_ws();
        for (; pos_ < s_.size(); pos_++) {
            if (s_[pos_] == ';') {
                out.push_back(current);
                current.clear();
            } else {
                current += s_[pos_];
            }
        }
        out.push_back(current);
        for (auto& t : out)
            if (t.find_first_not_of(" \t\r") == std::string::npos)
                fail("empty polynomial in list");
        return out;
    }

  private:
    int line_;
    std::string s_;
    size_t pos_ = 0;
};

struct Builder {
    Scenario sc;

    const RingPtr& ring(StatementParser& p, const std::string& name) {
        auto it = sc.rings.find(name);
        if (it == sc.rings.end()) p.fail("unknown ring: " + name);
        return it->second;
    }

    Polynomial parse_poly_checked(StatementParser& p, const std::string& text,
                                  const RingPtr& r) {
        try {
            return parse_polynomial(text, r, MonomialOrder::lex(r->arity()));
        } catch (const std::invalid_argument& e) {
            p.fail(e.what());
        }
    }

    std::vector<Polynomial> parse_list_checked(StatementParser& p, const RingPtr& r) {
        std::vector<Polynomial> out;
        for (const auto& t : p.list_texts()) out.push_back(parse_poly_checked(p, t, r));
        return out;
    }

    void require_new(StatementParser& p, const std::string& name) {
        if (sc.rings.count(name) || sc.polys.count(name) || sc.has_ideal(name) ||
            sc.problems.count(name) || sc.locals.count(name) || sc.complexes.count(name) ||
            sc.pairs.count(name))
            p.fail("name already declared: " + name);
    }

    void stmt_ring(StatementParser& p) {
        std::string name = p.word();
        require_new(p, name);
        if (!p.eat_keyword("vars")) p.fail("expected 'vars'");
        auto names = p.name_list();
        std::vector<int> weights;
        if (p.eat_keyword("weights")) weights = p.int_list();
        try {
            sc.rings[name] = RingDescriptor::make(names, weights);
        } catch (const std::invalid_argument& e) {
            p.fail(e.what());
        }
    }

    void stmt_poly(StatementParser& p) {
        std::string name = p.word();
        require_new(p, name);
        if (!p.eat_keyword("in")) p.fail("expected 'in'");
        const RingPtr& r = ring(p, p.word());
        p.expect_char(':');
        sc.polys.emplace(name, parse_poly_checked(p, p.rest(), r));
    }

    const Polynomial* single_poly(const std::string& name) const {
        if (auto it = sc.polys.find(name); it != sc.polys.end()) return &it->second;
        if (auto pr = sc.problems.find(name);
            pr != sc.problems.end() && pr->second.defining.size() == 1)
            return &pr->second.defining[0];
        return nullptr;
    }

    void stmt_ideal(StatementParser& p) {
        std::string name = p.word();
        require_new(p, name);
        if (p.eat_keyword("from")) {
            if (!p.eat_keyword("partials")) p.fail("expected 'partials'");
            std::string pname = p.word();
            const Polynomial* f = single_poly(pname);
            if (!f) p.fail("unknown polynomial or single-equation problem: " + pname);
            const RingPtr& r = f->ring();
            std::vector<Polynomial> gens;
            for (int i = 0; i < r->arity(); i++) {
                Polynomial d = partial_derivative(*f, i);
                if (!d.is_zero()) gens.push_back(d);
            }
            sc.ideals.emplace(name, Ideal::make(r, std::move(gens), name));
        } else if (p.eat_keyword("in")) {
            const RingPtr& r = ring(p, p.word());
            p.expect_char(':');
            try {
                sc.ideals.emplace(name, Ideal::make(r, parse_list_checked(p, r), name));
            } catch (const std::invalid_argument& e) {
                p.fail(e.what());
            }
        } else if (p.eat_char('=')) {
            std::string base = p.word();
            if (!sc.has_ideal(base)) p.fail("unknown ideal: " + base);
            if (!p.eat_char('+')) p.fail("expected '+'");
            p.expect_char('(');
            std::string inner;
            int depth = 1;
            while (!p.done() && depth > 0) {
                char c = p.take_char();
                if (c == '(') depth++;
                if (c == ')' && --depth == 0) break;
                inner += c;
            }
            if (depth != 0) p.fail("expected ')'");
            const Ideal& b = sc.ideal(base);
            std::vector<Polynomial> extra;
            std::string cur;
            for (char c : inner + ";") {
                if (c == ';') {
                    if (cur.find_first_not_of(" \t") != std::string::npos)
                        extra.push_back(parse_poly_checked(p, cur, b.ring));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            Ideal summed = ideal_sum(b, extra);
            summed.label = name;
            sc.ideals.emplace(name, std::move(summed));
        } else {
            p.fail("expected 'in', 'from' or '='");
        }
    }

    void stmt_problem(StatementParser& p) {
        std::string name = p.word();
        require_new(p, name);
        if (!p.eat_keyword("in")) p.fail("expected 'in'");
        const RingPtr& r = ring(p, p.word());
        p.expect_char(':');
        ProblemDecl decl;
        decl.ring = r;
        decl.defining = parse_list_checked(p, r);
        sc.problems.emplace(name, std::move(decl));
    }

    void stmt_aux(StatementParser& p) {
        std::string name = p.word();
        require_new(p, name);
        if (!p.eat_keyword("of")) p.fail("expected 'of'");
        std::string pname = p.word();
        auto pr = sc.problems.find(pname);
        if (pr == sc.problems.end()) p.fail("unknown problem: " + pname);
        const ProblemDecl& prob = pr->second;
        if (!p.eat_keyword("multipliers")) p.fail("expected 'multipliers'");
        auto mults = p.name_list();
        if (!p.eat_keyword("relation")) p.fail("expected 'relation'");
        std::string target = p.word();
        std::optional<int> chart;
        AuxDecl decl;
        while (!p.done()) {
            if (p.eat_keyword("chart")) {
                std::string v = p.word();
                int idx = prob.ring->index_of(v);
                if (idx < 0) p.fail("unknown chart variable: " + v);
                chart = idx;
            } else if (p.eat_keyword("order")) {
                try {
                    decl.order = order_kind_from_name(p.word());
                } catch (const std::invalid_argument& e) {
                    p.fail(e.what());
                }
            } else {
                p.fail("unexpected token '" + p.peek_word() + "'");
            }
        }
        try {
            int var_idx = prob.ring->index_of(target);
            if (var_idx >= 0) {
                decl.system = build_coordinate_multiplier_system(prob.ring, prob.defining,
                                                                 mults, var_idx, chart, name);
            } else {
                int poly_idx = std::stoi(target) - 1;
                decl.system = build_multiplier_system(prob.ring, prob.defining, mults,
                                                      poly_idx, chart, name);
            }
        } catch (const scenario_parse_error&) {
            throw;
        } catch (const std::exception& e) {
            p.fail(e.what());
        }
        int base_count = decl.system.ring->arity() - static_cast<int>(mults.size());
        for (int i = 0; i < base_count; i++) decl.base_vars.push_back(i);
        sc.aux.emplace(name, std::move(decl));
    }

    void stmt_local(StatementParser& p) {
        std::string name = p.word();
        require_new(p, name);
        if (!p.eat_keyword("vars")) p.fail("expected 'vars'");
        auto names = p.name_list();
        if (names.size() != 3) p.fail("local equations use exactly three variables");
        LocalEquation eq;
        if (p.eat_keyword("trunc")) eq.trunc = p.integer();
        p.expect_char(':');
        try {
            eq.ring = RingDescriptor::make(names);
        } catch (const std::invalid_argument& e) {
            p.fail(e.what());
        }
        eq.poly = parse_poly_checked(p, p.rest(), eq.ring);
        sc.locals.emplace(name, std::move(eq));
    }

    void stmt_complex(StatementParser& p) {
        std::string name = p.word();
        require_new(p, name);
        p.expect_char(':');
        DualComplexDeclaration decl;
        if (!p.eat_keyword("empty")) {
            if (!p.eat_keyword("vertices")) p.fail("expected 'vertices' or 'empty'");
            decl.vertices = p.name_list();
            while (p.eat_char(';')) {
                if (!p.eat_keyword("cells")) p.fail("expected 'cells'");
                if (!p.eat_keyword("dim")) p.fail("expected 'dim'");
                int dim = p.integer();
                bool any = false;
                while (p.peek_char('{')) {
                    p.expect_char('{');
                    CellDeclaration cell;
                    cell.dim = dim;
                    cell.vertices = p.name_list();
                    p.expect_char('}');
                    p.expect_char(':');
                    cell.multiplicity = p.integer();
                    decl.cells.push_back(std::move(cell));
                    any = true;
                }
                if (!any) p.fail("expected at least one cell {a,b}:m");
            }
        }
        try {
            sc.complexes.emplace(name, DualComplex::build(decl));
        } catch (const std::invalid_argument& e) {
            p.fail(e.what());
        }
    }

    void stmt_pair(StatementParser& p) {
        std::string name = p.word();
        require_new(p, name);
        if (!p.eat_keyword("components")) p.fail("expected 'components'");
        NodalPairDeclaration decl;
        decl.components = p.name_list();
        if (p.eat_keyword("flags")) {
            for (const auto& f : p.name_list()) {
                if (f == "duval")
                    decl.du_val = true;
                else if (f == "nodal-genus1")
                    decl.nodal_genus_one_intersection = true;
                else if (f == "smooth-locus")
                    decl.smooth_locus = true;
                else
                    p.fail("unknown flag: " + f);
            }
        }
        sc.pairs.emplace(name, std::move(decl));
    }

    Task new_task(StatementParser& p, TaskKind kind, std::string target) {
        Task t;
        t.index = static_cast<int>(sc.tasks.size());
        t.line = p.line();
        t.kind = kind;
        t.target = std::move(target);
        t.label = task_kind_name(kind) + std::string(":") + t.target;
        return t;
    }

    // trailing clauses shared by task statements; stops at ':'
    void task_clauses(StatementParser& p, Task& t, const RingPtr& ring_for_vars = nullptr) {
        while (!p.done()) {
            if (p.eat_keyword("label")) {
                t.label = p.word("label");
            } else if (p.eat_keyword("order")) {
                try {
                    t.order = order_kind_from_name(p.word());
                } catch (const std::invalid_argument& e) {
                    p.fail(e.what());
                }
            } else if (p.eat_keyword("bound")) {
                t.bound = p.integer();
            } else if (p.eat_keyword("in-vars")) {
                if (!ring_for_vars) p.fail("'in-vars' is only valid for origin-only");
                std::vector<int> vars;
                for (const auto& n : p.name_list()) {
                    int idx = ring_for_vars->index_of(n);
                    if (idx < 0) p.fail("unknown variable: " + n);
                    vars.push_back(idx);
                }
                t.vars = vars;
            } else if (p.peek_char(':')) {
                break;
            } else {
                p.fail("unexpected token '" + p.peek_word() + "'");
            }
        }
    }

    void require_ideal(StatementParser& p, const std::string& name) {
        if (!sc.has_ideal(name)) p.fail("unknown ideal: " + name);
    }

    void push_poly_list_task(StatementParser& p, Task t) {
        p.expect_char(':');
        const Ideal& ideal = sc.ideal(t.target);
        for (const auto& text : p.list_texts())
            t.polys.push_back(parse_poly_checked(p, text, ideal.ring));
        sc.tasks.push_back(std::move(t));
    }

    void stmt_expect(StatementParser& p) {
        std::string kind = p.word();
        if (kind == "trivial") {
            std::string target = p.word();
            require_ideal(p, target);
            Task t = new_task(p, TaskKind::trivial, target);
            task_clauses(p, t);
            sc.tasks.push_back(std::move(t));
        } else if (kind == "origin-only") {
            std::string target = p.word();
            require_ideal(p, target);
            Task t = new_task(p, TaskKind::origin_only, target);
            if (auto ax = sc.aux.find(target); ax != sc.aux.end())
                t.vars = ax->second.base_vars;
            if (auto declared = sc.declared_order(target)) t.order = declared;
            task_clauses(p, t, sc.ideal(target).ring);
            sc.tasks.push_back(std::move(t));
        } else if (kind == "gb" || kind == "gb-equals" || kind == "same-ideal") {
            std::string target = p.word();
            require_ideal(p, target);
            Task t = new_task(
                p, kind == "same-ideal" ? TaskKind::same_ideal : TaskKind::gb_equals, target);
            if (auto declared = sc.declared_order(target)) t.order = declared;
            task_clauses(p, t);
            push_poly_list_task(p, std::move(t));
        } else if (kind == "member") {
            std::string target = p.word();
            require_ideal(p, target);
            Task t = new_task(p, TaskKind::member, target);
            if (auto declared = sc.declared_order(target)) t.order = declared;
            task_clauses(p, t);
            push_poly_list_task(p, std::move(t));
        } else if (kind == "verdict") {
            std::string target = p.word();
            if (!sc.locals.count(target)) p.fail("unknown local equation: " + target);
            Task t = new_task(p, TaskKind::verdict, target);
            std::string v = p.word();
            if (v == "Tpqr") {
                p.expect_char('(');
                t.expected_verdict.kind = VerdictKind::tpqr;
                t.expected_verdict.p = p.integer();
                p.expect_char(',');
                t.expected_verdict.q = p.integer();
                p.expect_char(',');
                t.expected_verdict.r = p.integer();
                p.expect_char(')');
            } else if (v == "An") {
                p.expect_char('(');
                t.expected_verdict.kind = VerdictKind::an;
                t.expected_verdict.n = p.integer();
                p.expect_char(')');
            } else if (v == "unrecognized") {
                t.expected_verdict.kind = VerdictKind::unrecognized;
            } else {
                p.fail("expected Tpqr(p,q,r), An(n) or unrecognized");
            }
            task_clauses(p, t);
            sc.tasks.push_back(std::move(t));
        } else if (kind == "dim") {
            std::string target = p.word();
            if (!sc.complexes.count(target) && !sc.pairs.count(target))
                p.fail("unknown complex or pair: " + target);
            Task t = new_task(p, TaskKind::dim, target);
            t.expected_int = p.integer();
            task_clauses(p, t);
            sc.tasks.push_back(std::move(t));
        } else if (kind == "circle") {
            std::string target = p.word();
            if (!sc.complexes.count(target)) p.fail("unknown complex: " + target);
            Task t = new_task(p, TaskKind::circle, target);
            std::string b = p.word();
            if (b != "true" && b != "false") p.fail("expected true or false");
            t.expected_bool = b == "true";
            task_clauses(p, t);
            sc.tasks.push_back(std::move(t));
        } else if (kind == "coreg") {
            std::string target = p.word();
            if (!sc.complexes.count(target) && !sc.pairs.count(target))
                p.fail("unknown complex or pair: " + target);
            Task t = new_task(p, TaskKind::coreg, target);
            if (!p.eat_keyword("dimx")) p.fail("expected 'dimx'");
            t.dim_x = p.integer();
            t.expected_int = p.integer();
            task_clauses(p, t);
            sc.tasks.push_back(std::move(t));
        } else {
            p.fail("unknown expectation: " + kind);
        }
    }

    void stmt_check(StatementParser& p) {
        std::string what = p.word();
        if (what == "partials") {
            std::string pname = p.word();
            const Polynomial* f = single_poly(pname);
            if (!f) p.fail("unknown polynomial or single-equation problem: " + pname);
            Task t = new_task(p, TaskKind::check_partials, pname);
            if (p.eat_keyword("notes")) t.expected_notes = p.integer();
            task_clauses(p, t);
            p.expect_char(':');
            for (const auto& text : p.list_texts())
                t.polys.push_back(parse_poly_checked(p, text, f->ring()));
            sc.tasks.push_back(std::move(t));
        } else if (what == "system") {
            std::string aname = p.word();
            auto ax = sc.aux.find(aname);
            if (ax == sc.aux.end()) p.fail("unknown aux system: " + aname);
            Task t = new_task(p, TaskKind::check_system, aname);
            if (p.eat_keyword("notes")) t.expected_notes = p.integer();
            task_clauses(p, t);
            p.expect_char(':');
            for (const auto& text : p.list_texts())
                t.polys.push_back(parse_poly_checked(p, text, ax->second.system.ring));
            sc.tasks.push_back(std::move(t));
        } else {
            p.fail("unknown check: " + what);
        }
    }

    void stmt_chart(StatementParser& p) {
        std::string pname = p.word();
        auto pr = sc.problems.find(pname);
        if (pr == sc.problems.end()) p.fail("unknown problem: " + pname);
        if (pr->second.defining.size() != 1)
            p.fail("chart certificates apply to single-equation problems");
        std::string v = p.word();
        int var = pr->second.ring->index_of(v);
        if (var < 0) p.fail("unknown variable: " + v);
        p.expect_char('=');
        int value = p.integer();
        if (value != 0 && value != 1) p.fail("chart value must be 0 or 1");
        if (!p.eat_keyword("expect")) p.fail("expected 'expect'");
        std::string e = p.word();

        // realize the chart as an ideal task over the partials ideal
        const Polynomial& f = pr->second.defining[0];
        const RingPtr& r = pr->second.ring;
        MonomialOrder ord = MonomialOrder::lex(r->arity());
        std::vector<Polynomial> partials;
        for (int i = 0; i < r->arity(); i++) {
            Polynomial d = partial_derivative(f, i);
            if (!d.is_zero()) partials.push_back(d);
        }
        Polynomial pin = Polynomial::variable(r, ord, var);
        if (value == 1) pin = sub(pin, Polynomial::constant(r, ord, 1));
        std::string iname = pname + ".chart." + v + "=" + std::to_string(value);
        if (!sc.ideals.count(iname))
            sc.ideals.emplace(iname,
                              ideal_sum(Ideal::make(r, std::move(partials), iname), {pin}));

        Task t;
        if (e == "trivial") {
            t = new_task(p, TaskKind::trivial, iname);
        } else if (e == "origin-only") {
            t = new_task(p, TaskKind::origin_only, iname);
        } else {
            p.fail("chart expectation must be trivial or origin-only");
        }
        t.label = "chart:" + pname + ":" + v + "=" + std::to_string(value);
        task_clauses(p, t, r);
        sc.tasks.push_back(std::move(t));
    }

    void statement(const Statement& st) {
        StatementParser p(st);
        std::string kw = p.word("statement keyword");
        if (kw == "ring")
            stmt_ring(p);
        else if (kw == "poly")
            stmt_poly(p);
        else if (kw == "ideal")
            stmt_ideal(p);
        else if (kw == "problem")
            stmt_problem(p);
        else if (kw == "aux")
            stmt_aux(p);
        else if (kw == "local")
            stmt_local(p);
        else if (kw == "complex")
            stmt_complex(p);
        else if (kw == "pair")
            stmt_pair(p);
        else if (kw == "note")
            sc.notes.push_back(p.rest());
        else if (kw == "expect")
            stmt_expect(p);
        else if (kw == "check")
            stmt_check(p);
        else if (kw == "chart")
            stmt_chart(p);
        else
            p.fail("unknown statement: " + kw);
        if (!p.done()) p.fail("unexpected trailing input");
    }
};

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
    Builder b;
    b.sc.name = name;
    for (const auto& st : split_statements(text)) b.statement(st);
    return b.sc;
}

}  // namespace fano
