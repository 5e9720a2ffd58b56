#include "fano/series.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace fano {

Polynomial truncate(const Polynomial& p, int max_degree) {
    std::vector<Term> kept;
    for (const auto& t : p.terms())
        if (t.mono.total_degree() <= max_degree) kept.push_back(t);
    return Polynomial::from_terms(p.ring(), p.order(), std::move(kept));
}

TruncatedSeries TruncatedSeries::make(Polynomial p, int truncation_order) {
    if (p.ring()->arity() != 3)
        throw std::invalid_argument("truncated series live in three local variables");
    if (truncation_order < 4) throw std::invalid_argument("truncation order must be >= 4");
    TruncatedSeries s;
    s.trunc_ = truncation_order;
    s.poly_ = truncate(p, truncation_order);
    return s;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation_order() != b.truncation_order())
        throw std::invalid_argument("truncation order mismatch");
    return a.with_poly(add(a.poly(), b.poly()));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation_order() != b.truncation_order())
        throw std::invalid_argument("truncation order mismatch");
    return a.with_poly(truncate(mul(a.poly(), b.poly()), a.truncation_order()));
}

TruncatedSeries substitute_var(const TruncatedSeries& s, int var, const Polynomial& image) {
    if (!same_ring(image.ring(), s.ring())) throw std::invalid_argument("ring mismatch");
    const int N = s.truncation_order();
    std::map<int, Polynomial> powers;
    powers[0] = Polynomial::constant(s.ring(), s.poly().order(), 1);
    powers[1] = truncate(image, N);
    std::function<const Polynomial&(int)> img_power = [&](int e) -> const Polynomial& {
        auto it = powers.find(e);
        if (it != powers.end()) return it->second;
        const Polynomial& prev = img_power(e - 1);
        return powers.emplace(e, truncate(mul(prev, powers[1]), N)).first->second;
    };
    Polynomial acc = Polynomial::zero(s.ring(), s.poly().order());
    for (const auto& t : s.poly().terms()) {
        int e = t.mono.exponent(var);
        if (e == 0) {
            acc = add(acc, Polynomial::monomial(s.ring(), s.poly().order(), t.coeff, t.mono));
            continue;
        }
        Monomial rest = t.mono.divide(Monomial::variable(3, var, e));
        Polynomial piece = mul_term(img_power(e), t.coeff, rest);
        acc = add(acc, truncate(piece, N));
    }
    return s.with_poly(acc);
}

std::pair<TruncatedSeries, CoordinateChange> eliminate_monomial(const TruncatedSeries& s,
                                                                const Monomial& alpha) {
    const Rational* c = s.poly().coeff_of(alpha);
    if (!c) throw std::invalid_argument("monomial not present in series");
    if (alpha.total_degree() < 4)
        throw std::invalid_argument("eliminable monomials have total degree >= 4");
    if (alpha.support_size() < 2)
        throw std::invalid_argument(
            "eliminable monomials need at least two positive exponents (condition 2)");
    Monomial cross = Monomial::from_exponents({1, 1, 1});
    const Rational* a = s.poly().coeff_of(cross);
    if (!a || *a == 0) throw std::invalid_argument("series is missing the cross term xyz");

    // smallest variable index whose other two exponents are positive
    int target = -1;
    for (int v = 0; v < 3 && target < 0; v++) {
        bool ok = true;
        for (int w = 0; w < 3; w++)
            if (w != v && alpha.exponent(w) == 0) ok = false;
        if (ok) target = v;
    }
    if (target < 0)
        throw std::invalid_argument("no admissible substitution variable for this monomial");

    std::vector<int> exps(3);
    for (int w = 0; w < 3; w++)
        exps[w] = w == target ? alpha.exponent(w) : alpha.exponent(w) - 1;
    CoordinateChange change;
    change.target_var = target;
    change.coeff = *c / *a;
    change.mono = Monomial::from_exponents(exps);

    Polynomial image = sub(Polynomial::variable(s.ring(), s.poly().order(), target),
                           Polynomial::monomial(s.ring(), s.poly().order(), change.coeff,
                                                change.mono));
    TruncatedSeries out = substitute_var(s, target, image);
    return {std::move(out), std::move(change)};
}

}  // namespace fano
