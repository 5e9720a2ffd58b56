#include "doctest.h"
#include "fano/series.hpp"

using namespace fano;

namespace {

struct Fixture {
    RingPtr r = RingDescriptor::make({"x", "y", "z"});
    MonomialOrder ord = MonomialOrder::grlex(3);
    Polynomial p(const std::string& s) const { return parse_polynomial(s, r, ord); }
    TruncatedSeries s(const std::string& text, int n) const {
        return TruncatedSeries::make(p(text), n);
    }
};

// inverse of x_t = x_t' - c * m(x', y, z) to the truncation order, by
// fixed-point iteration x_t' = x_t + c * m(x_t', ...)
Polynomial invert_change(const Fixture& f, const CoordinateChange& ch, int trunc) {
    Polynomial cur = Polynomial::variable(f.r, f.ord, ch.target_var);
    for (int it = 0; it <= trunc; it++) {
        std::vector<Polynomial> images;
        for (int v = 0; v < 3; v++)
            images.push_back(v == ch.target_var ? cur : Polynomial::variable(f.r, f.ord, v));
        Polynomial m = substitute(Polynomial::monomial(f.r, f.ord, ch.coeff, ch.mono), images);
        Polynomial next = truncate(add(Polynomial::variable(f.r, f.ord, ch.target_var), m),
                                   trunc);
        if (next == cur) break;
        cur = next;
    }
    return cur;
}

}  // namespace

TEST_CASE("series construction and truncation") {
    Fixture f;
    auto s = f.s("x*y*z + x^4 + y^9", 8);
    CHECK(s.poly() == f.p("x*y*z + x^4"));
    CHECK(s.truncation_order() == 8);
    CHECK_THROWS_AS(f.s("x", 3), std::invalid_argument);
    auto r2 = RingDescriptor::make({"x", "y"});
    CHECK_THROWS_AS(
        TruncatedSeries::make(parse_polynomial("x", r2, MonomialOrder::lex(2)), 8),
        std::invalid_argument);
}

TEST_CASE("truncated multiplication discards high degrees") {
    Fixture f;
    auto a = f.s("x^3 + y", 4);
    auto b = f.s("x + z^2", 4);
    CHECK(mul(a, b).poly() == f.p("x^4 + x*y + y*z^2"));
}

TEST_CASE("eliminate x^2 y^2 via z, frozen hand expansion") {
    Fixture f;
    auto s = f.s("x*y*z + x^4 + y^4 + z^4 + x^2*y^2", 8);
    auto [out, change] = eliminate_monomial(s, Monomial::from_exponents({2, 2, 0}));
    CHECK(change.target_var == 2);
    CHECK(change.coeff == 1);
    CHECK(change.mono == Monomial::from_exponents({1, 1, 0}));
    // z = z' - x y into the series, truncated at 8:
    CHECK(out.poly() == f.p("x*y*z + x^4 + y^4 + z^4"
                            " - 4*x*y*z^3 + 6*x^2*y^2*z^2 - 4*x^3*y^3*z + x^4*y^4"));
}

TEST_CASE("eliminate a term with the target variable inside its own substitution") {
    Fixture f;
    auto s = f.s("x*y*z + x^4 + y^4 + z^4 + 2*x^3*y*z", 8);
    auto [out, change] = eliminate_monomial(s, Monomial::from_exponents({3, 1, 1}));
    CHECK(change.target_var == 0);
    CHECK(change.coeff == 2);
    CHECK(change.mono == Monomial::from_exponents({3, 0, 0}));
    // oracle: direct polynomial substitution x -> x - 2 x^3 without series
    // machinery, then truncate
    std::vector<Polynomial> images{f.p("x - 2*x^3"), f.p("y"), f.p("z")};
    Polynomial expect = truncate(substitute(s.poly(), images), 8);
    CHECK(out.poly() == expect);
    CHECK(out.poly().coeff_of(Monomial::from_exponents({3, 1, 1})) == nullptr);
}

TEST_CASE("elimination errors") {
    Fixture f;
    auto s = f.s("x*y*z + x^4 + y^4 + z^4", 8);
    CHECK_THROWS_AS(eliminate_monomial(s, Monomial::from_exponents({2, 2, 0})),
                    std::invalid_argument);  // not present
    auto s2 = f.s("x*y*z + x^4 + y^4 + z^4 + x^3*y", 8);
    auto [out, ch] = eliminate_monomial(s2, Monomial::from_exponents({3, 1, 0}));
    CHECK(out.poly().coeff_of(Monomial::from_exponents({3, 1, 0})) == nullptr);
    auto s3 = f.s("x^4 + y^4 + z^4 + x^2*y^2", 8);
    CHECK_THROWS_AS(eliminate_monomial(s3, Monomial::from_exponents({2, 2, 0})),
                    std::invalid_argument);  // missing cross term
    auto s4 = f.s("x*y*z + x^5 + x^4*y", 8);
    CHECK_THROWS_AS(eliminate_monomial(s4, Monomial::from_exponents({5, 0, 0})),
                    std::invalid_argument);  // only one positive exponent
}

TEST_CASE("elimination degree bookkeeping and round-trip, substituted variable absent") {
    Fixture f;
    const int N = 9;
    auto s = f.s("x*y*z + x^4 + y^5 + z^6 + 3*x^2*y^2 - 2*x*y^2*z^2", N);
    auto [out, change] = eliminate_monomial(s, Monomial::from_exponents({2, 2, 0}));
    CHECK(change.target_var == 2);
    CHECK(out.poly().coeff_of(Monomial::from_exponents({2, 2, 0})) == nullptr);

    // conditions (1)-(2): every new term has degree > 4 and at most one zero
    // exponent
    Polynomial diff = sub(out.poly(), s.poly());
    for (const auto& t : diff.terms()) {
        if (t.mono == Monomial::from_exponents({2, 2, 0})) continue;
        CHECK(t.mono.total_degree() > 4);
        CHECK(t.mono.support_size() >= 2);
    }

    Polynomial inv = invert_change(f, change, N);
    std::vector<Polynomial> images;
    for (int v = 0; v < 3; v++)
        images.push_back(v == change.target_var ? inv : Polynomial::variable(f.r, f.ord, v));
    CHECK(truncate(substitute(out.poly(), images), N) == s.poly());
}

TEST_CASE("round-trip when the substituted monomial contains the target variable") {
    Fixture f;
    const int N = 9;
    auto s = f.s("x*y*z + x^4 + y^5 + z^6 + x^2*y*z", N);
    auto [out, change] = eliminate_monomial(s, Monomial::from_exponents({2, 1, 1}));
    CHECK(change.target_var == 0);
    CHECK(change.mono == Monomial::from_exponents({2, 0, 0}));
    CHECK(out.poly().coeff_of(Monomial::from_exponents({2, 1, 1})) == nullptr);
    Polynomial inv = invert_change(f, change, N);
    std::vector<Polynomial> images;
    for (int v = 0; v < 3; v++)
        images.push_back(v == change.target_var ? inv : Polynomial::variable(f.r, f.ord, v));
    CHECK(truncate(substitute(out.poly(), images), N) == s.poly());
}
