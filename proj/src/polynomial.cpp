#include "fano/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fano {

namespace {

void require_ring(const Polynomial& p, const Polynomial& q) {
    if (!same_ring(p.ring(), q.ring())) throw std::invalid_argument("ring mismatch");
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring, MonomialOrder order) {
    return from_terms(std::move(ring), order, {});
}

Polynomial Polynomial::constant(RingPtr ring, MonomialOrder order, Rational c) {
    int n = ring->arity();
    return from_terms(std::move(ring), order, {{std::move(c), Monomial::one(n)}});
}

Polynomial Polynomial::variable(RingPtr ring, MonomialOrder order, int var, int exp) {
    int n = ring->arity();
    return from_terms(std::move(ring), order, {{Rational(1), Monomial::variable(n, var, exp)}});
}

Polynomial Polynomial::monomial(RingPtr ring, MonomialOrder order, Rational c, Monomial m) {
    return from_terms(std::move(ring), order, {{std::move(c), m}});
}

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
    if (!ring) throw std::invalid_argument("null ring");
    if (order.arity() != ring->arity())
        throw std::invalid_argument("order arity does not match ring");
    Polynomial p;
    p.ring_ = std::move(ring);
    p.order_ = order;
    auto desc = [&order](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); };
    if (!std::is_sorted(terms.begin(), terms.end(), desc))
        std::sort(terms.begin(), terms.end(), desc);
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (t.mono.arity() != p.ring_->arity())
            throw std::invalid_argument("monomial arity does not match ring");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.mono.total_degree()));
    return d;
}

const Rational* Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return &t.coeff;
    return nullptr;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    return from_terms(ring_, order, terms_);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (order_ == o.order_) return terms_.size() == o.terms_.size() &&
        std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                   [](const Term& a, const Term& b) { return a.coeff == b.coeff && a.mono == b.mono; });
    return *this == o.with_order(order_);
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    require_ring(p, q);
    const Polynomial& qq = q.order() == p.order() ? q : q.with_order(p.order());
    std::vector<Term> out;
    out.reserve(p.term_count() + qq.term_count());
    auto a = p.terms().begin(), ae = p.terms().end();
    auto b = qq.terms().begin(), be = qq.terms().end();
    const MonomialOrder& ord = p.order();
    while (a != ae && b != be) {
        int c = ord.compare(a->mono, b->mono);
        if (c > 0) {
            out.push_back(*a++);
        } else if (c < 0) {
            out.push_back(*b++);
        } else {
            Rational s = a->coeff + b->coeff;
            if (s != 0) out.push_back({std::move(s), a->mono});
            ++a, ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return Polynomial::from_terms(p.ring(), ord, std::move(out));
}

Polynomial negate(const Polynomial& p) {
    std::vector<Term> out(p.terms().begin(), p.terms().end());
    for (auto& t : out) t.coeff = -t.coeff;
    return Polynomial::from_terms(p.ring(), p.order(), std::move(out));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, negate(q)); }

Polynomial mul_term(const Polynomial& p, const Rational& c, const Monomial& m) {
    if (c == 0) return Polynomial::zero(p.ring(), p.order());
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) out.push_back({t.coeff * c, t.mono.times(m)});
    return Polynomial::from_terms(p.ring(), p.order(), std::move(out));
}

Polynomial scale(const Polynomial& p, const Rational& c) {
    return mul_term(p, c, Monomial::one(p.ring()->arity()));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    require_ring(p, q);
    std::vector<Term> out;
    out.reserve(p.term_count() * q.term_count());
    for (const auto& a : p.terms())
        for (const auto& b : q.terms()) out.push_back({a.coeff * b.coeff, a.mono.times(b.mono)});
    return Polynomial::from_terms(p.ring(), p.order(), std::move(out));
}

Polynomial power(const Polynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r = Polynomial::constant(p.ring(), p.order(), 1);
    Polynomial base = p;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    if (var < 0 || var >= p.ring()->arity()) throw std::out_of_range("variable index");
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        int e = t.mono.exponent(var);
        if (e == 0) continue;
        Monomial m = t.mono.divide(Monomial::variable(t.mono.arity(), var));
        out.push_back({t.coeff * e, m});
    }
    return Polynomial::from_terms(p.ring(), p.order(), std::move(out));
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (static_cast<int>(images.size()) != p.ring()->arity())
        throw std::invalid_argument("substitution map must cover every variable");
    for (const auto& im : images)
        if (!same_ring(im.ring(), images[0].ring()))
            throw std::invalid_argument("substitution images live in different rings");
    const RingPtr& target = images.empty() ? p.ring() : images[0].ring();
    const MonomialOrder& ord = images.empty() ? p.order() : images[0].order();
    Polynomial acc = Polynomial::zero(target, ord);
    // cache per-variable powers across terms
    std::vector<std::map<int, Polynomial>> powers(images.size());
    auto var_power = [&](int i, int e) -> const Polynomial& {
        auto it = powers[i].find(e);
        if (it != powers[i].end()) return it->second;
        return powers[i].emplace(e, power(images[i], e)).first->second;
    };
    for (const auto& t : p.terms()) {
        Polynomial prod = Polynomial::constant(target, ord, t.coeff);
        for (int i = 0; i < p.ring()->arity(); i++) {
            int e = t.mono.exponent(i);
            if (e > 0) prod = mul(prod, var_power(i, e));
        }
        acc = add(acc, prod);
    }
    return acc;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.ring()->arity())
        throw std::invalid_argument("point arity mismatch");
    Rational acc = 0;
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (int i = 0; i < p.ring()->arity(); i++) {
            for (int e = 0; e < t.mono.exponent(i); e++) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

bool weighted_degree_check(const Polynomial& p, long d) {
    for (const auto& t : p.terms())
        if (t.mono.weighted_degree(*p.ring()) != d) return false;
    return true;
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational f(den_lcm, num_gcd);
    f.canonicalize();
    if (p.leading_term().coeff < 0) f = -f;
    return scale(p, f);
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return scale(p, 1 / p.leading_term().coeff);
}

Polynomial normal_form_ordered(const Polynomial& p,
                               const std::vector<const Polynomial*>& divs,
                               const MonomialOrder& order);

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
    for (const auto& d : divisors) {
        if (d.is_zero()) throw std::invalid_argument("zero divisor in normal_form");
        if (!same_ring(d.ring(), p.ring())) throw std::invalid_argument("ring mismatch");
    }
    std::vector<Polynomial> reordered;
    reordered.reserve(divisors.size());
    std::vector<const Polynomial*> divs;
    divs.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.order() == order) {
            divs.push_back(&d);
        } else {
            reordered.push_back(d.with_order(order));
            divs.push_back(&reordered.back());
        }
    }
    return normal_form_ordered(p, divs, order);
}

namespace {

// divide the working terms by their integer content; exact rescaling used by
// the basis engine, where only the ideal class of the result matters
void strip_working_content(std::vector<Term>& remainder, std::vector<Term>& h, size_t off) {
    Integer num_gcd = 0, den_lcm = 1;
    auto feed = [&](const Term& t) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    };
    for (const auto& t : remainder) feed(t);
    for (size_t i = off; i < h.size(); i++) feed(h[i]);
    if (num_gcd == 0) return;
    Rational f(den_lcm, num_gcd);
    f.canonicalize();
    if (f == 1) return;
    for (auto& t : remainder) t.coeff *= f;
    for (size_t i = off; i < h.size(); i++) h[i].coeff *= f;
}

}  // namespace

// divisors already in the requested order; tried in list order
Polynomial normal_form_ordered(const Polynomial& p,
                               const std::vector<const Polynomial*>& divs,
                               const MonomialOrder& order, bool strip_content) {
    Polynomial po = p.with_order(order);
    std::vector<Term> h(po.terms().begin(), po.terms().end());
    size_t off = 0;
    std::vector<Term> remainder;
    long steps = 0;
    while (off < h.size()) {
        const Term& lt = h[off];
        const Polynomial* red = nullptr;
        for (const auto* d : divs) {
            if (d->leading_term().mono.divides(lt.mono)) {
                red = d;
                break;
            }
        }
        if (!red) {
            remainder.push_back(lt);
            off++;
            continue;
        }
        if (strip_content && ++steps % 4 == 0) strip_working_content(remainder, h, off);
        // h -= (lt / LT(red)) * red; the leading terms cancel exactly
        Rational c = lt.coeff / red->leading_term().coeff;
        Monomial m = lt.mono.divide(red->leading_term().mono);
        std::vector<Term> next;
        next.reserve(h.size() - off + red->term_count());
        size_t a = off + 1;
        auto b = red->terms().begin() + 1, be = red->terms().end();
        while (a < h.size() && b != be) {
            Monomial bm = b->mono.times(m);
            int cmp = order.compare(h[a].mono, bm);
            if (cmp > 0) {
                next.push_back(h[a++]);
            } else if (cmp < 0) {
                next.push_back({-(b->coeff * c), bm});
                ++b;
            } else {
                Rational s = h[a].coeff - b->coeff * c;
                if (s != 0) next.push_back({std::move(s), h[a].mono});
                ++a, ++b;
            }
        }
        for (; a < h.size(); ++a) next.push_back(h[a]);
        for (; b != be; ++b) next.push_back({-(b->coeff * c), b->mono.times(m)});
        h = std::move(next);
        off = 0;
    }
    return Polynomial::from_terms(p.ring(), order, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero");
    require_ring(f, g);
    Polynomial fo = f.with_order(order), go = g.with_order(order);
    Monomial l = fo.leading_term().mono.lcm_with(go.leading_term().mono);
    Polynomial a = mul_term(fo, 1 / fo.leading_term().coeff, l.divide(fo.leading_term().mono));
    Polynomial b = mul_term(go, 1 / go.leading_term().coeff, l.divide(go.leading_term().mono));
    return sub(a, b);
}

}  // namespace fano
