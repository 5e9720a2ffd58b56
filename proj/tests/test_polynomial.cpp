#include <random>

#include "doctest.h"
#include "fano/polynomial.hpp"

using namespace fano;

namespace {

struct Fixture {
    RingPtr r2 = RingDescriptor::make({"x", "y"});
    MonomialOrder lex2 = MonomialOrder::lex(2);
    RingPtr r4 = RingDescriptor::make({"x0", "x1", "x2", "x3"});
    MonomialOrder lex4 = MonomialOrder::lex(4);

    Polynomial p2(const std::string& s) const { return parse_polynomial(s, r2, lex2); }
    Polynomial p4(const std::string& s) const { return parse_polynomial(s, r4, lex4); }
};

Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, const MonomialOrder& ord,
                       int max_terms = 5, int max_exp = 3, int max_coeff = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; i++) {
        std::vector<int> e(ring->arity());
        for (auto& x : e) x = exp(rng);
        ts.push_back({Rational(coeff(rng)), Monomial::from_exponents(e)});
    }
    return Polynomial::from_terms(ring, ord, std::move(ts));
}

void check_canonical(const Polynomial& p) {
    for (size_t i = 0; i < p.term_count(); i++) {
        CHECK(p.terms()[i].coeff != 0);
        if (i + 1 < p.term_count())
            CHECK(p.order().compare(p.terms()[i].mono, p.terms()[i + 1].mono) > 0);
    }
}

}  // namespace

TEST_CASE("add: cancellation and identities") {
    Fixture f;
    CHECK(add(f.p2("x + y"), f.p2("x - y")) == f.p2("2*x"));
    Polynomial p = f.p2("3*x^2*y - y + 1");
    CHECK(add(p, Polynomial::zero(f.r2, f.lex2)) == p);
    CHECK(add(f.p2("x^2 + 1"), f.p2("-x^2")) == f.p2("1"));
}

TEST_CASE("mul: products and identities") {
    Fixture f;
    CHECK(mul(f.p2("x + y"), f.p2("x - y")) == f.p2("x^2 - y^2"));
    Polynomial p = f.p2("x^3 - 2*x*y + 7");
    CHECK(mul(p, f.p2("1")) == p);
    CHECK(mul(f.p2("x + y"), f.p2("x + y")) == f.p2("x^2 + 2*x*y + y^2"));
}

TEST_CASE("ring mismatch is an error") {
    Fixture f;
    CHECK_THROWS_AS(add(f.p2("x"), f.p4("x0")), std::invalid_argument);
    CHECK_THROWS_AS(mul(f.p2("x"), f.p4("x0")), std::invalid_argument);
}

TEST_CASE("partial derivatives of the sextic") {
    Fixture f;
    Polynomial f6 =
        f.p4("x0^2*x1^2*x2^2 + x0^2*x1^4 + x2^6 + x3*x0^5 + x3*x1^5 + x3^6");
    CHECK(partial_derivative(f6, 2) == f.p4("2*x2*x0^2*x1^2 + 6*x2^5"));
    CHECK(partial_derivative(f6, 3) == f.p4("6*x3^5 + x0^5 + x1^5"));
    CHECK(partial_derivative(f.p4("42"), 0).is_zero());
}

TEST_CASE("substitute: shift, identity, composition") {
    Fixture f;
    std::vector<Polynomial> shift{f.p2("x + 1"), f.p2("y")};
    CHECK(substitute(f.p2("x^2*y"), shift) == f.p2("x^2*y + 2*x*y + y"));

    Polynomial p = f.p2("x^3*y - 4*y^2 + 3");
    std::vector<Polynomial> id{f.p2("x"), f.p2("y")};
    CHECK(substitute(p, id) == p);

    std::mt19937 rng(7);
    for (int it = 0; it < 50; it++) {
        Polynomial q = random_poly(rng, f.r2, f.lex2);
        std::vector<Polynomial> m1{random_poly(rng, f.r2, f.lex2, 2, 1),
                                   random_poly(rng, f.r2, f.lex2, 2, 1)};
        std::vector<Polynomial> m2{random_poly(rng, f.r2, f.lex2, 2, 1),
                                   random_poly(rng, f.r2, f.lex2, 2, 1)};
        std::vector<Polynomial> composed{substitute(m1[0], m2), substitute(m1[1], m2)};
        CHECK(substitute(substitute(q, m1), m2) == substitute(q, composed));
    }
}

TEST_CASE("the imaginary-unit rescaling of the sextic branch curve, realified") {
    // local equation u^2 - (x1^2 x2^2 + x1^4 + x2^6) and the printed form
    // u^2 - x1^2 x2^2 + x1^4 + x2^6 differ exactly by the signed rational
    // rescaling u -> i u, x1 -> i x1 followed by a global sign flip; with
    // exact rational coefficients that means coefficientwise multiplication
    // by -(-1)^((deg_u + deg_x1)/2)
    auto ring = RingDescriptor::make({"u", "x1", "x2"});
    auto ord = MonomialOrder::lex(3);
    Polynomial before = parse_polynomial("u^2 - x1^2*x2^2 - x1^4 - x2^6", ring, ord);
    Polynomial after = parse_polynomial("u^2 - x1^2*x2^2 + x1^4 + x2^6", ring, ord);
    REQUIRE(before.term_count() == after.term_count());
    for (const auto& t : before.terms()) {
        int k = t.mono.exponent(0) + t.mono.exponent(1);
        REQUIRE(k % 2 == 0);
        Rational expected = -t.coeff * ((k / 2) % 2 == 0 ? 1 : -1);
        const Rational* got = after.coeff_of(t.mono);
        REQUIRE(got != nullptr);
        CHECK(*got == expected);
    }
}

TEST_CASE("weighted degree check") {
    auto ring = RingDescriptor::make({"x0", "x1", "x2", "x3", "u"}, {1, 1, 1, 1, 3});
    auto ord = MonomialOrder::lex(5);
    Polynomial g = parse_polynomial(
        "u^2 - x0^2*x1^2*x2^2 - x0^2*x1^4 - x2^6 - x3*x0^5 - x3*x1^5 - x3^6", ring, ord);
    CHECK(weighted_degree_check(g, 6));
    CHECK_FALSE(weighted_degree_check(parse_polynomial("x0 + 1", ring, ord), 1));
    CHECK(weighted_degree_check(Polynomial::zero(ring, ord), 17));
}

TEST_CASE("normal form: textbook division and edge cases") {
    Fixture f;
    // frozen from the hand division oracle (divide leading terms first,
    // divisors in list order)
    Polynomial p = f.p2("x^2*y + x*y^2 + y^2");
    std::vector<Polynomial> divs{f.p2("x*y - 1"), f.p2("y^2 - 1")};
    CHECK(normal_form(p, divs, f.lex2) == f.p2("x + y + 1"));

    std::vector<Polynomial> self{p};
    CHECK(normal_form(p, self, f.lex2).is_zero());

    std::vector<Polynomial> xdiv{f.p2("x")};
    CHECK(normal_form(f.p2("1"), xdiv, f.lex2) == f.p2("1"));

    CHECK_THROWS_AS(normal_form(p, std::vector<Polynomial>{Polynomial::zero(f.r2, f.lex2)},
                                f.lex2),
                    std::invalid_argument);
}

TEST_CASE("normal form is idempotent and no remainder term is reducible") {
    Fixture f;
    std::mt19937 rng(99);
    for (int it = 0; it < 200; it++) {
        Polynomial p = random_poly(rng, f.r2, f.lex2, 6, 4);
        std::vector<Polynomial> divs;
        for (int d = 0; d < 2; d++) {
            Polynomial q = random_poly(rng, f.r2, f.lex2, 3, 3);
            if (!q.is_zero()) divs.push_back(q);
        }
        if (divs.empty()) continue;
        Polynomial r = normal_form(p, divs, f.lex2);
        CHECK(normal_form(r, divs, f.lex2) == r);
        for (const auto& t : r.terms())
            for (const auto& d : divs) CHECK_FALSE(d.leading_term().mono.divides(t.mono));
    }
}

TEST_CASE("s-polynomial") {
    Fixture f;
    // S(x^3 - 2xy, x^2 y - 2y^2 + x) in grlex is -x^2 (direct expansion)
    MonomialOrder grlex = MonomialOrder::grlex(2);
    Polynomial a = parse_polynomial("x^3 - 2*x*y", f.r2, grlex);
    Polynomial b = parse_polynomial("x^2*y - 2*y^2 + x", f.r2, grlex);
    CHECK(s_polynomial(a, b, grlex) == parse_polynomial("-x^2", f.r2, grlex));

    CHECK(s_polynomial(a, a, grlex).is_zero());
    CHECK(s_polynomial(f.p2("x"), f.p2("y"), f.lex2).is_zero());
    CHECK_THROWS_AS(s_polynomial(a, Polynomial::zero(f.r2, grlex), grlex),
                    std::invalid_argument);
}

TEST_CASE("ring laws and canonical form on random polynomials") {
    Fixture f;
    std::mt19937 rng(12345);
    for (int it = 0; it < 200; it++) {
        Polynomial a = random_poly(rng, f.r2, f.lex2);
        Polynomial b = random_poly(rng, f.r2, f.lex2);
        Polynomial c = random_poly(rng, f.r2, f.lex2);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        check_canonical(add(a, b));
        check_canonical(mul(a, b));
        CHECK(add(a, negate(a)).is_zero());
    }
}

TEST_CASE("parser accepts the appendix notation") {
    Fixture f;
    // explicit '*' style of Comp. A.1-A.4
    CHECK(f.p4("2*x0*x1^2*x2^2 + 2*x0*x1^4+5*x3*x0^4") ==
          add(add(f.p4("2*x0*x1^2*x2^2"), f.p4("2*x0*x1^4")), f.p4("5*x3*x0^4")));
    // juxtaposition and parentheses style of Comp. A.5-A.9
    auto rl = RingDescriptor::make({"x0", "x1", "x2", "lambda"});
    auto ordl = MonomialOrder::lex(4);
    CHECK(parse_polynomial("2x0 - lambda(3x0^2 + x1^2 + x2^2)", rl, ordl) ==
          parse_polynomial("2*x0 - 3*lambda*x0^2 - lambda*x1^2 - lambda*x2^2", rl, ordl));
    // rational coefficients in local equations
    auto r3 = RingDescriptor::make({"x", "y", "z"});
    auto ord3 = MonomialOrder::lex(3);
    CHECK(parse_polynomial("x*y - x*y^2/6 + ((z-y)/2)^4", r3, ord3) ==
          parse_polynomial("x*y - 1/6*x*y^2 + 1/16*y^4 - 1/4*y^3*z + 3/8*y^2*z^2 - 1/4*y*z^3 + "
                           "1/16*z^4",
                           r3, ord3));
    CHECK_THROWS_AS(f.p2("x + w"), std::invalid_argument);
    CHECK_THROWS_AS(f.p2("x +"), std::invalid_argument);
    CHECK_THROWS_AS(f.p2("(x"), std::invalid_argument);
}

TEST_CASE("serialization round-trips through the grammar") {
    Fixture f;
    std::mt19937 rng(31337);
    for (int it = 0; it < 300; it++) {
        Polynomial p = random_poly(rng, f.r4, f.lex4, 8, 5, 999);
        CHECK(parse_polynomial(to_string(p), f.r4, f.lex4) == p);
    }
    CHECK(to_string(Polynomial::zero(f.r2, f.lex2)) == "0");
    CHECK(parse_polynomial("0", f.r2, f.lex2).is_zero());
}
