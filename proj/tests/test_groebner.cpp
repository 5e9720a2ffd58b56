#include <algorithm>
#include <random>

#include "doctest.h"
#include "fano/groebner.hpp"

using namespace fano;

namespace {

// Independent completion oracle: plain Buchberger with a FIFO pair queue, no
// criteria, no strategies, followed by minimalization and tail reduction.
std::vector<Polynomial> naive_reduced_basis(std::vector<Polynomial> gens,
                                            const MonomialOrder& ord) {
    std::vector<Polynomial> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(p.with_order(ord));
    std::vector<std::pair<size_t, size_t>> queue;
    for (size_t i = 0; i < g.size(); i++)
        for (size_t j = i + 1; j < g.size(); j++) queue.push_back({i, j});
    size_t qi = 0;
    while (qi < queue.size()) {
        auto [i, j] = queue[qi++];
        Polynomial s = s_polynomial(g[i], g[j], ord);
        Polynomial h = normal_form(s, g, ord);
        if (!h.is_zero()) {
            g.push_back(h);
            for (size_t k = 0; k + 1 < g.size(); k++) queue.push_back({k, g.size() - 1});
        }
    }
    // minimalize
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < g.size(); i++) {
        bool redundant = false;
        for (size_t j = 0; j < g.size() && !redundant; j++) {
            if (i == j) continue;
            const Monomial& mi = g[i].leading_term().mono;
            const Monomial& mj = g[j].leading_term().mono;
            if (mj.divides(mi)) redundant = !(mi == mj) || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); i++) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); j++)
            if (i != j) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(monic(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term().mono, b.leading_term().mono);
    });
    return reduced;
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, const MonomialOrder& ord) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; i++) {
        std::vector<int> e(ring->arity());
        for (auto& x : e) x = exp(rng);
        ts.push_back({Rational(coeff(rng)), Monomial::from_exponents(e)});
    }
    return Polynomial::from_terms(ring, ord, std::move(ts));
}

void check_is_groebner(const GroebnerBasis& gb) {
    // every pairwise S-polynomial reduces to zero; full check, no criteria
    for (size_t i = 0; i < gb.elements.size(); i++)
        for (size_t j = i + 1; j < gb.elements.size(); j++) {
            Polynomial s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
            CHECK(normal_form(s, gb.elements, gb.order).is_zero());
        }
    // reduced: monic, no element's leading monomial divides another's, no
    // tail term divisible by any leading monomial
    for (size_t i = 0; i < gb.elements.size(); i++) {
        CHECK(gb.elements[i].leading_term().coeff == 1);
        for (size_t j = 0; j < gb.elements.size(); j++) {
            if (i == j) continue;
            const Monomial& lj = gb.elements[j].leading_term().mono;
            CHECK_FALSE(lj.divides(gb.elements[i].leading_term().mono));
            for (size_t t = 1; t < gb.elements[i].term_count(); t++)
                CHECK_FALSE(lj.divides(gb.elements[i].terms()[t].mono));
        }
    }
}

}  // namespace

TEST_CASE("buchberger on a single generator") {
    auto r = RingDescriptor::make({"x", "y"});
    auto ord = MonomialOrder::lex(2);
    Polynomial p = parse_polynomial("x - y", r, ord);
    auto gb = buchberger(Ideal::make(r, {p}), ord);
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == p);
}

TEST_CASE("buchberger matches the naive completion oracle") {
    auto r = RingPtr(RingDescriptor::make({"x", "y"}));
    auto ord = MonomialOrder::lex(2);
    auto gens = parse_polynomial_list("x^2 + y ; x*y + 1", r, ord);
    auto gb = buchberger(Ideal::make(r, gens), ord);
    auto oracle = naive_reduced_basis(gens, ord);
    REQUIRE(gb.elements.size() == oracle.size());
    for (size_t i = 0; i < oracle.size(); i++) CHECK(gb.elements[i] == oracle[i]);
    check_is_groebner(gb);

    std::mt19937 rng(2718281);
    auto r3 = RingDescriptor::make({"x", "y", "z"});
    for (OrderKind kind : {OrderKind::lex, OrderKind::grlex, OrderKind::degrevlex}) {
        MonomialOrder o3 = MonomialOrder::make(kind, 3);
        for (int it = 0; it < 25; it++) {
            std::vector<Polynomial> g;
            for (int k = 0; k < 3; k++) {
                Polynomial p = random_poly(rng, r3, o3);
                if (!p.is_zero()) g.push_back(p);
            }
            if (g.empty()) continue;
            auto mine = buchberger(Ideal::make(r3, g), o3);
            auto want = naive_reduced_basis(g, o3);
            REQUIRE(mine.elements.size() == want.size());
            for (size_t i = 0; i < want.size(); i++) CHECK(mine.elements[i] == want[i]);
        }
    }
}

TEST_CASE("the case-1 multiplier system of the quadric-cubic reduces to the coordinate ideal") {
    auto r = RingDescriptor::make({"x0", "x1", "x2", "lambda"});
    auto ord = MonomialOrder::lex(4);
    auto gens = parse_polynomial_list(
        "x0^2 + x1*x2 ;"
        "x0^3 + x0*x1^2 + x1*x2^2 + x0*x2^2 ;"
        "2*x0 - lambda*(3*x0^2 + x1^2 + x2^2) ;"
        "x2 - lambda*(2*x0*x1 + x2^2) ;"
        "x1 - 2*lambda*x2*(x0 + x1)",
        r, ord);
    auto gb = buchberger(Ideal::make(r, gens), ord);
    REQUIRE(gb.elements.size() == 3);
    CHECK(gb.elements[0] == parse_polynomial("x2", r, ord));
    CHECK(gb.elements[1] == parse_polynomial("x1", r, ord));
    CHECK(gb.elements[2] == parse_polynomial("x0", r, ord));
    check_is_groebner(gb);
}

TEST_CASE("triviality detection") {
    auto r = RingDescriptor::make({"x", "y"});
    auto ord = MonomialOrder::lex(2);
    CHECK_FALSE(is_trivial(buchberger(
        Ideal::make(r, parse_polynomial_list("x", r, ord)), ord)));
    CHECK(is_trivial(Ideal::make(r, parse_polynomial_list("x ; x - 1", r, ord))));
    CHECK(is_trivial(Ideal::make(r, parse_polynomial_list("x^2 + 1 ; y ; x + y + 1", r, ord))));
}

TEST_CASE("ideal sum") {
    auto r = RingDescriptor::make({"x", "y"});
    auto ord = MonomialOrder::lex(2);
    Ideal ix = Ideal::make(r, parse_polynomial_list("x", r, ord));
    Ideal sum = ideal_sum(ix, parse_polynomial_list("y", r, ord));
    auto gb = buchberger(sum, ord);
    REQUIRE(gb.elements.size() == 2);
    CHECK(gb.elements[0] == parse_polynomial("y", r, ord));
    CHECK(gb.elements[1] == parse_polynomial("x", r, ord));
    CHECK(ideal_sum(ix, {}).generators.size() == 1);
}

TEST_CASE("membership in the sextic chart ideal") {
    auto r = RingDescriptor::make({"x0", "x1", "x2", "x3"});
    auto ord = MonomialOrder::lex(4);
    Polynomial f6 = parse_polynomial(
        "x0^2*x1^2*x2^2 + x0^2*x1^4 + x2^6 + x3*x0^5 + x3*x1^5 + x3^6", r, ord);
    std::vector<Polynomial> partials;
    for (int i = 0; i < 4; i++) partials.push_back(partial_derivative(f6, i));
    Ideal a = ideal_sum(Ideal::make(r, partials), {parse_polynomial("x3", r, ord)});
    auto gb = buchberger(a, ord);

    // displayed inclusion subset
    for (const char* s : {"x3", "x2^6", "2*x1^8 + x1^6*x2^2", "x0^5 + x1^5"})
        CHECK(member(parse_polynomial(s, r, ord), gb));
    // generators always belong
    for (const auto& g : a.generators) CHECK(member(g, gb));
    CHECK(member(Polynomial::zero(r, ord), gb));
    CHECK_FALSE(member(parse_polynomial("1", r, ord), gb));
    CHECK_FALSE(member(parse_polynomial("x0", r, ord), gb));

    // origin-only certificate with textbook bound
    auto check = vanishes_only_at_origin(gb, 10);
    CHECK(check.certified);
    REQUIRE(check.powers.size() == 4);
    CHECK(*check.powers[0] == 7);
    CHECK(*check.powers[1] == 9);
    CHECK(*check.powers[2] == 6);
    CHECK(*check.powers[3] == 1);
}

TEST_CASE("same ideal is presentation independent") {
    auto r = RingDescriptor::make({"x", "y"});
    auto ord = MonomialOrder::lex(2);
    CHECK(same_ideal(parse_polynomial_list("x ; y", r, ord),
                     parse_polynomial_list("x + y ; x - y", r, ord), ord));
    CHECK_FALSE(same_ideal(parse_polynomial_list("x", r, ord),
                           parse_polynomial_list("x^2", r, ord), ord));
}

TEST_CASE("origin certificates") {
    auto r = RingDescriptor::make({"x", "y"});
    auto ord = MonomialOrder::lex(2);
    auto certified = vanishes_only_at_origin(
        Ideal::make(r, parse_polynomial_list("x^2 ; x*y ; y^3", r, ord)), 10);
    CHECK(certified.certified);
    CHECK(*certified.powers[0] == 2);
    CHECK(*certified.powers[1] == 3);

    auto unknown = vanishes_only_at_origin(
        Ideal::make(r, parse_polynomial_list("x*y", r, ord)), 16);
    CHECK_FALSE(unknown.certified);
    CHECK_FALSE(unknown.powers[0].has_value());

    // variable subset: multiplier-style ideal certifies the x variables only
    auto rl = RingDescriptor::make({"x", "y", "lambda"});
    auto ordl = MonomialOrder::lex(3);
    auto sub = vanishes_only_at_origin(
        Ideal::make(rl, parse_polynomial_list("x ; y^2", rl, ordl)), 8,
        std::vector<int>{0, 1});
    CHECK(sub.certified);
    CHECK_THROWS_AS(vanishes_only_at_origin(
                        Ideal::make(r, parse_polynomial_list("x", r, ord)), 0),
                    std::invalid_argument);
}

TEST_CASE("quotient dimension") {
    auto r = RingDescriptor::make({"x", "y"});
    auto ord = MonomialOrder::lex(2);
    auto q1 = quotient_dimension(Ideal::make(r, parse_polynomial_list("x^2 ; y^2", r, ord)), ord);
    CHECK(q1.finite);
    CHECK(q1.count == 4);
    auto q2 = quotient_dimension(Ideal::make(r, parse_polynomial_list("x ; x - 1", r, ord)), ord);
    CHECK(q2.finite);
    CHECK(q2.count == 0);
    auto q3 = quotient_dimension(Ideal::make(r, parse_polynomial_list("x*y", r, ord)), ord);
    CHECK_FALSE(q3.finite);
}

TEST_CASE("quotient dimension of the quartic hyperplane chart matches exhaustive enumeration") {
    // chart x1 = 1 of the hyperplane-section singular system of section 4
    auto r = RingDescriptor::make({"x0", "x2", "x3"});
    auto ord = MonomialOrder::lex(3);
    auto gens = parse_polynomial_list(
        "1 + x2^3 + x2*x3 ;"
        "3*x0 + x0*x2*x3 ;"
        "3*x0*x2^2 + x0*x3 ;"
        "4*x3^3 + x0*x2",
        r, ord);
    auto gb = buchberger(Ideal::make(r, gens), ord);
    auto q = quotient_dimension(gb);
    REQUIRE(q.finite);

    // stairs-enumeration oracle, independent of the leading-term walk
    std::vector<Monomial> lead;
    for (const auto& g : gb.elements) lead.push_back(g.leading_term().mono);
    unsigned long long count = 0;
    const int cap = 32;
    for (int a = 0; a < cap; a++)
        for (int b = 0; b < cap; b++)
            for (int c = 0; c < cap; c++) {
                Monomial m = Monomial::from_exponents({a, b, c});
                bool divisible = false;
                for (const auto& l : lead)
                    if (l.divides(m)) divisible = true;
                if (!divisible) count++;
            }
    CHECK(q.count == count);
    CHECK(q.count >= 3);  // at least the three singular points q_k
}

TEST_CASE("reduced basis is stable under generator shuffling") {
    auto r = RingDescriptor::make({"x", "y", "z"});
    auto ord = MonomialOrder::grlex(3);
    auto gens = parse_polynomial_list("x^2 + y*z - 1 ; x*z - y ; y^2 + x - z", r, ord);
    auto reference = buchberger(Ideal::make(r, gens), ord);
    std::mt19937 rng(424242);
    for (int it = 0; it < 10; it++) {
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto gb = buchberger(Ideal::make(r, shuffled), ord);
        REQUIRE(gb.elements.size() == reference.elements.size());
        for (size_t i = 0; i < gb.elements.size(); i++)
            CHECK(gb.elements[i] == reference.elements[i]);
    }
}

TEST_CASE("parallel and serial buchberger agree") {
    auto r = RingDescriptor::make({"x1", "x2", "x3", "x4", "x5", "lambda", "mu"});
    auto ord = MonomialOrder::lex(7);
    auto gens = parse_polynomial_list(
        "x1*x2 - x3^2 - x4^2 - x5^2 ;"
        "x1*x2^2 + x3*x4*x5 ;"
        "mu*(x1^2 + x2^2) - 1 ;"
        "lambda*x2 + mu*x2^2 ;"
        "lambda*x1 + 2*mu*x2*x1 ;"
        "-2*lambda*x3 + mu*x4*x5 ;"
        "-2*lambda*x4 + mu*x3*x5 ;"
        "-2*lambda*x5 + mu*x3*x4",
        r, ord);
    Ideal ideal = Ideal::make(r, gens);
    auto serial = buchberger(ideal, ord, {.threads = 1});
    auto parallel = buchberger(ideal, ord, {.threads = 4});
    REQUIRE(serial.elements.size() == parallel.elements.size());
    for (size_t i = 0; i < serial.elements.size(); i++)
        CHECK(serial.elements[i] == parallel.elements[i]);
    CHECK(serial.elements.size() == 36);
    check_is_groebner(serial);
}
