#ifndef FANO_POLYNOMIAL_HPP
#define FANO_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <vector>

#include "fano/rational.hpp"
#include "fano/ring.hpp"

namespace fano {

struct Term {
    Rational coeff;
    Monomial mono;
};

// Multivariate polynomial over Q in canonical form: no zero coefficients,
// monomials strictly decreasing in the active monomial order, no duplicates.
class Polynomial {
  public:
    Polynomial() = default;
    static Polynomial zero(RingPtr ring, MonomialOrder order);
    static Polynomial constant(RingPtr ring, MonomialOrder order, Rational c);
    static Polynomial variable(RingPtr ring, MonomialOrder order, int var, int exp = 1);
    static Polynomial monomial(RingPtr ring, MonomialOrder order, Rational c, Monomial m);
    // sorts, combines duplicates, drops zeros
    static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }
    const Term& leading_term() const;
    long total_degree() const;  // -1 for the zero polynomial
    const Rational* coeff_of(const Monomial& m) const;  // nullptr when absent

    Polynomial with_order(const MonomialOrder& order) const;

    bool operator==(const Polynomial& o) const;

  private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial mul_term(const Polynomial& p, const Rational& c, const Monomial& m);
Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial power(const Polynomial& p, int e);

Polynomial partial_derivative(const Polynomial& p, int var);

// Image of p under the ring map var i -> images[i]; every image lives in the
// (shared) target ring.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);
Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

// true iff every term has weighted degree d (vacuously true for 0)
bool weighted_degree_check(const Polynomial& p, long d);

// divide out integer content: result has coprime integer coefficients and a
// positive leading coefficient
Polynomial primitive_part(const Polynomial& p);
Polynomial monic(const Polynomial& p);

// Deterministic full remainder: repeatedly reduces the leading reducible
// term, trying divisors in list order; no remainder term is divisible by any
// divisor leading monomial.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);
// engine entry point: divisors must already carry the requested order; with
// strip_content the working polynomial is renormalized by its integer content
// during the division (result differs from the true remainder by a positive
// rational factor only)
Polynomial normal_form_ordered(const Polynomial& p, const std::vector<const Polynomial*>& divs,
                               const MonomialOrder& order, bool strip_content = false);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Text grammar used everywhere: terms joined by +/-, each a product of an
// optional rational coefficient and var^exp factors ('*' optional).
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            const MonomialOrder& order);
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const RingPtr& ring,
                                              const MonomialOrder& order, char sep = ';');

// canonical serialization (degrevlex of declaration order); round-trips
// through parse_polynomial
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m, const RingDescriptor& ring);

}  // namespace fano

#endif
