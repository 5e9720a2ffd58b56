#include <random>

#include "doctest.h"
#include "fano/ring.hpp"

using namespace fano;

TEST_CASE("ring descriptor validation") {
    auto r = RingDescriptor::make({"x", "y", "z"});
    CHECK(r->arity() == 3);
    CHECK(r->weights == std::vector<int>{1, 1, 1});
    CHECK(r->index_of("y") == 1);
    CHECK(r->index_of("w") == -1);
    CHECK_FALSE(r->weighted());

    auto w = RingDescriptor::make({"x0", "x1", "x2", "x3", "u"}, {1, 1, 1, 1, 3});
    CHECK(w->weighted());

    CHECK_THROWS_AS(RingDescriptor::make({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(RingDescriptor::make({"x"}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(RingDescriptor::make({"x"}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(RingDescriptor::make({}), std::invalid_argument);
}

TEST_CASE("monomial degrees and arithmetic") {
    auto r = RingDescriptor::make({"x", "y", "z"}, {1, 2, 3});
    Monomial m = Monomial::from_exponents({2, 1, 1});
    CHECK(m.total_degree() == 4);
    CHECK(m.weighted_degree(*r) == 2 + 2 + 3);
    CHECK(m.support_size() == 3);

    Monomial a = Monomial::from_exponents({3, 2, 0});
    Monomial b = Monomial::from_exponents({1, 4, 2});
    Monomial l = a.lcm_with(b);
    CHECK(l == Monomial::from_exponents({3, 4, 2}));
    CHECK(a.divides(l));
    CHECK(b.divides(l));
    CHECK(l.divide(a) == Monomial::from_exponents({0, 2, 2}));
    CHECK(a.times(b) == Monomial::from_exponents({4, 6, 2}));
    CHECK_FALSE(a.divides(b));
}

namespace {

Monomial random_monomial(std::mt19937& rng, int arity, int max_exp) {
    std::uniform_int_distribution<int> d(0, max_exp);
    std::vector<int> e(arity);
    for (auto& x : e) x = d(rng);
    return Monomial::from_exponents(e);
}

}  // namespace

TEST_CASE("monomial order axioms on random triples") {
    std::mt19937 rng(20240811);
    for (OrderKind kind : {OrderKind::lex, OrderKind::grlex, OrderKind::degrevlex}) {
        MonomialOrder ord = MonomialOrder::make(kind, 4);
        Monomial one = Monomial::one(4);
        for (int it = 0; it < 500; it++) {
            Monomial a = random_monomial(rng, 4, 5);
            Monomial b = random_monomial(rng, 4, 5);
            Monomial c = random_monomial(rng, 4, 5);
            // totality and antisymmetry
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            CHECK((ab == 0) == (a == b));
            // multiplicativity: a < b implies ac < bc
            if (ab < 0) CHECK(ord.compare(a.times(c), b.times(c)) < 0);
            // transitivity
            if (ab <= 0 && ord.compare(b, c) <= 0) CHECK(ord.compare(a, c) <= 0);
            // 1 is minimal
            if (!(a == one)) CHECK(ord.compare(one, a) < 0);
        }
    }
}

TEST_CASE("degrevlex disagrees with grlex where it should") {
    // classic separating example: x*z^2 vs y^3 (same degree)
    MonomialOrder grlex = MonomialOrder::grlex(3);
    MonomialOrder drl = MonomialOrder::degrevlex(3);
    Monomial xz2 = Monomial::from_exponents({1, 0, 2});
    Monomial y3 = Monomial::from_exponents({0, 3, 0});
    CHECK(grlex.compare(xz2, y3) > 0);
    CHECK(drl.compare(xz2, y3) < 0);
}

TEST_CASE("variable permutation changes significance") {
    // lex with significance order z > y > x
    MonomialOrder ord = MonomialOrder::make(OrderKind::lex, {2, 1, 0});
    Monomial x = Monomial::from_exponents({1, 0, 0});
    Monomial z = Monomial::from_exponents({0, 0, 1});
    CHECK(ord.compare(z, x) > 0);
    CHECK(MonomialOrder::lex(3).compare(z, x) < 0);
}
