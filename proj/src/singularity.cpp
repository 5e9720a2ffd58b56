#include "fano/singularity.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace fano {

namespace {

void require_local(const TruncatedSeries& s) {
    for (const auto& t : s.poly().terms()) {
        if (t.mono.total_degree() == 0)
            throw smooth_point_error("nonzero constant term: no singularity at the origin");
        if (t.mono.total_degree() == 1)
            throw smooth_point_error("nonzero linear part: the origin is a smooth point");
    }
}

using QuadMatrix = std::array<std::array<Rational, 3>, 3>;

QuadMatrix quadratic_matrix(const TruncatedSeries& s) {
    QuadMatrix a{};
    for (const auto& t : s.poly().terms()) {
        if (t.mono.total_degree() != 2) continue;
        int i = -1, j = -1;
        for (int v = 0; v < 3; v++) {
            if (t.mono.exponent(v) == 2) i = j = v;
            if (t.mono.exponent(v) == 1) (i < 0 ? i : j) = v;
        }
        if (i == j) {
            a[i][i] = t.coeff;
        } else {
            a[i][j] = t.coeff / 2;
            a[j][i] = t.coeff / 2;
        }
    }
    return a;
}

int rank3(QuadMatrix m) {
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; col++) {
        int pivot = -1;
        for (int row = rank; row < 3; row++)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int row = rank + 1; row < 3; row++) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[rank][col];
            for (int c = col; c < 3; c++) m[row][c] -= f * m[rank][c];
        }
        rank++;
    }
    return rank;
}

// primitive integer kernel vector of a rank-2 symmetric matrix, first nonzero
// entry positive
std::array<Rational, 3> kernel_vector(const QuadMatrix& a) {
    // try z = e_k with the remaining 2x2 system solved exactly
    for (int k = 0; k < 3; k++) {
        // solve a . v = 0 with v[k] = 1
        int i0 = (k + 1) % 3, i1 = (k + 2) % 3;
        if (i0 > i1) std::swap(i0, i1);
        // rows i0, i1 give a 2x2 system for v[i0], v[i1]
        Rational m00 = a[i0][i0], m01 = a[i0][i1], r0 = -a[i0][k];
        Rational m10 = a[i1][i0], m11 = a[i1][i1], r1 = -a[i1][k];
        Rational det = m00 * m11 - m01 * m10;
        std::array<Rational, 3> v{};
        if (det != 0) {
            v[i0] = (r0 * m11 - m01 * r1) / det;
            v[i1] = (m00 * r1 - r0 * m10) / det;
            v[k] = 1;
        } else {
            continue;
        }
        // verify against the remaining row (rank 2 makes it dependent)
        bool ok = true;
        for (int row = 0; row < 3; row++) {
            Rational acc = a[row][0] * v[0] + a[row][1] * v[1] + a[row][2] * v[2];
            if (acc != 0) ok = false;
        }
        if (!ok) continue;
        Integer den_lcm = 1;
        for (auto& c : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (auto& c : v) c *= Rational(den_lcm);
        Integer g = 0;
        for (auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        for (auto& c : v) c /= Rational(g);
        for (auto& c : v)
            if (c != 0) {
                if (c < 0)
                    for (auto& d : v) d = -d;
                break;
            }
        return v;
    }
    // for a symmetric rank-2 matrix the complementary principal minor at any
    // coordinate where the kernel vector is nonzero is itself nonzero, so the
    // loop above cannot fail
    throw std::logic_error("kernel_vector: matrix does not have rank 2");
}

long max_steps(const TruncatedSeries& s) {
    long n = s.truncation_order();
    return (n + 1) * (n + 2) * (n + 3) / 6 + 8;
}

bool lex_exps_less(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < 3; i++) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
    }
    return false;
}

// minimal pure-power exponent per variable, 0 when absent
std::array<int, 3> pure_powers(const TruncatedSeries& s) {
    std::array<int, 3> p{};
    for (const auto& t : s.poly().terms()) {
        if (t.mono.support_size() != 1) continue;
        for (int v = 0; v < 3; v++) {
            int e = t.mono.exponent(v);
            if (e > 0 && (p[v] == 0 || e < p[v])) p[v] = e;
        }
    }
    return p;
}

}  // namespace

SingularityVerdict SingularityVerdict::tpqr(int p, int q, int r, Rational a,
                                            std::vector<CoordinateChange> log) {
    if (a == 0) throw std::invalid_argument("cusp cross coefficient must be nonzero");
    std::array<int, 3> t{p, q, r};
    std::sort(t.begin(), t.end());
    if (Rational(1, t[0]) + Rational(1, t[1]) + Rational(1, t[2]) >= 1)
        throw std::invalid_argument("cusp triple must satisfy 1/p + 1/q + 1/r < 1");
    SingularityVerdict v;
    v.kind = VerdictKind::tpqr;
    v.p = t[0];
    v.q = t[1];
    v.r = t[2];
    v.cross_coeff = std::move(a);
    v.change_log = std::move(log);
    return v;
}

SingularityVerdict SingularityVerdict::an(int n, std::vector<CoordinateChange> log) {
    if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
    SingularityVerdict v;
    v.kind = VerdictKind::an;
    v.n = n;
    v.change_log = std::move(log);
    return v;
}

SingularityVerdict SingularityVerdict::unrecognized(TruncatedSeries residual, std::string detail,
                                                    std::vector<CoordinateChange> log) {
    SingularityVerdict v;
    v.kind = VerdictKind::unrecognized;
    v.residual = std::move(residual);
    v.detail = std::move(detail);
    v.change_log = std::move(log);
    return v;
}

std::string SingularityVerdict::describe() const {
    std::ostringstream os;
    switch (kind) {
        case VerdictKind::tpqr:
            os << "T_{" << p << "," << q << "," << r << "} (cross coefficient "
               << cross_coeff.get_str() << ")";
            break;
        case VerdictKind::an: os << "A_" << n; break;
        case VerdictKind::unrecognized: os << "unrecognized: " << detail; break;
    }
    return os.str();
}

bool SingularityVerdict::matches(const SingularityVerdict& e) const {
    if (kind != e.kind) return false;
    if (kind == VerdictKind::tpqr) return p == e.p && q == e.q && r == e.r;
    if (kind == VerdictKind::an) return n == e.n;
    return true;
}

int hessian_corank(const TruncatedSeries& s) {
    require_local(s);
    return 3 - rank3(quadratic_matrix(s));
}

SingularityVerdict tpqr_classify(const TruncatedSeries& s) {
    require_local(s);
    const Monomial cross = Monomial::from_exponents({1, 1, 1});
    const Rational* a0 = s.poly().coeff_of(cross);
    if (!a0 || *a0 == 0) throw std::invalid_argument("missing cross term xyz");
    const Rational a = *a0;

    TruncatedSeries cur = s;
    std::vector<CoordinateChange> log;
    long steps = 0, bound = max_steps(s);
    while (true) {
        const Monomial* best = nullptr;
        for (const auto& t : cur.poly().terms()) {
            if (t.mono == cross || t.mono.support_size() <= 1) continue;
            if (!best || t.mono.total_degree() < best->total_degree() ||
                (t.mono.total_degree() == best->total_degree() && lex_exps_less(t.mono, *best)))
                best = &t.mono;
        }
        if (!best) break;
        if (best->total_degree() < 4)
            return SingularityVerdict::unrecognized(
                cur, "off-form term " + to_string(*best, *cur.ring()) +
                         " of degree < 4 is outside the elimination procedure",
                std::move(log));
        if (++steps > bound) throw std::logic_error("elimination step bound exceeded");
        auto [next, change] = eliminate_monomial(cur, *best);
        cur = std::move(next);
        log.push_back(std::move(change));
    }

    std::array<int, 3> p = pure_powers(cur);
    for (int v = 0; v < 3; v++) {
        if (p[v] == 0)
            return SingularityVerdict::unrecognized(
                cur, std::string("no pure power of ") + cur.ring()->names[v] +
                         " up to the truncation order",
                std::move(log));
    }
    if (Rational(1, p[0]) + Rational(1, p[1]) + Rational(1, p[2]) >= 1)
        return SingularityVerdict::unrecognized(cur, "cusp inequality 1/p + 1/q + 1/r < 1 fails",
                                                std::move(log));
    const Rational* a_end = cur.poly().coeff_of(cross);
    if (!a_end || *a_end != a) throw std::logic_error("cross coefficient changed");
    return SingularityVerdict::tpqr(p[0], p[1], p[2], a, std::move(log));
}

SingularityVerdict an_classify(const TruncatedSeries& s) {
    require_local(s);
    int corank = hessian_corank(s);
    if (corank >= 2) throw std::domain_error("corank >= 2 is outside the A_n classifier");
    std::vector<CoordinateChange> log;
    if (corank == 0) return SingularityVerdict::an(1, std::move(log));

    const RingPtr& ring = s.ring();
    const MonomialOrder& ord = s.poly().order();
    auto var = [&](int i) { return Polynomial::variable(ring, ord, i); };

    // align the kernel of the quadratic form with the third coordinate
    QuadMatrix a = quadratic_matrix(s);
    std::array<Rational, 3> v = kernel_vector(a);
    int t = 0;
    while (v[t] == 0) t++;
    int o1 = -1, o2 = -1;
    for (int i = 0; i < 3; i++) {
        if (i == t) continue;
        (o1 < 0 ? o1 : o2) = i;
    }
    std::vector<Polynomial> images(3, Polynomial::zero(ring, ord));
    images[o1] = add(var(0), scale(var(2), v[o1]));
    images[o2] = add(var(1), scale(var(2), v[o2]));
    images[t] = scale(var(2), v[t]);
    TruncatedSeries cur = s.with_poly(substitute(s.poly(), images));

    // bring the rank-2 block to diagonal or pure-cross shape
    auto quad_coeff = [&](int i, int j) -> Rational {
        std::vector<int> e(3, 0);
        e[i]++;
        e[j]++;
        const Rational* c = cur.poly().coeff_of(Monomial::from_exponents(e));
        return c ? *c : Rational(0);
    };
    if (quad_coeff(0, 2) != 0 || quad_coeff(1, 2) != 0 || quad_coeff(2, 2) != 0)
        throw std::logic_error("kernel alignment left z in the quadratic part");
    Rational alpha = quad_coeff(0, 0), beta = quad_coeff(0, 1), gamma = quad_coeff(1, 1);
    if (beta != 0 && (alpha != 0 || gamma != 0)) {
        std::vector<Polynomial> im{var(0), var(1), var(2)};
        if (alpha != 0) {
            im[0] = sub(var(0), scale(var(1), beta / (2 * alpha)));
        } else {
            im[1] = sub(var(1), scale(var(0), beta / (2 * gamma)));
        }
        cur = cur.with_poly(substitute(cur.poly(), im));
        alpha = quad_coeff(0, 0);
        beta = quad_coeff(0, 1);
        gamma = quad_coeff(1, 1);
    }
    const bool cross_form = beta != 0;

    // absorb every term containing x or y other than the quadratic part
    long steps = 0, bound = max_steps(s);
    while (true) {
        const Monomial* best = nullptr;
        for (const auto& term : cur.poly().terms()) {
            const Monomial& m = term.mono;
            if (m.total_degree() == 2) continue;  // the quadratic part itself
            if (m.exponent(0) == 0 && m.exponent(1) == 0) continue;
            if (!best || m.total_degree() < best->total_degree() ||
                (m.total_degree() == best->total_degree() && lex_exps_less(m, *best)))
                best = &m;
        }
        if (!best) break;
        if (++steps > bound) throw std::logic_error("absorption step bound exceeded");
        const Rational c = *cur.poly().coeff_of(*best);
        int i = best->exponent(0), j = best->exponent(1), k = best->exponent(2);
        CoordinateChange change;
        if (cross_form) {
            if (i >= 1) {
                change = {1, c / beta, Monomial::from_exponents({i - 1, j, k})};
            } else {
                change = {0, c / beta, Monomial::from_exponents({i, j - 1, k})};
            }
        } else {
            if (i >= 1) {
                change = {0, c / (2 * alpha), Monomial::from_exponents({i - 1, j, k})};
            } else {
                change = {1, c / (2 * gamma), Monomial::from_exponents({i, j - 1, k})};
            }
        }
        Polynomial image = sub(var(change.target_var),
                               Polynomial::monomial(ring, ord, change.coeff, change.mono));
        cur = substitute_var(cur, change.target_var, image);
        log.push_back(std::move(change));
    }

    // residual: quadratic block plus a pure z-series
    int zmin = 0;
    for (const auto& term : cur.poly().terms()) {
        const Monomial& m = term.mono;
        if (m.exponent(0) == 0 && m.exponent(1) == 0 && m.total_degree() > 0) {
            int e = m.exponent(2);
            if (zmin == 0 || e < zmin) zmin = e;
        }
    }
    if (zmin == 0)
        return SingularityVerdict::unrecognized(
            cur, "A_{>=" + std::to_string(s.truncation_order()) + "} or non-isolated",
            std::move(log));
    return SingularityVerdict::an(zmin - 1, std::move(log));
}

SingularityVerdict classify(const TruncatedSeries& s) {
    require_local(s);
    int corank = hessian_corank(s);
    if (corank <= 1) return an_classify(s);
    const Rational* a = s.poly().coeff_of(Monomial::from_exponents({1, 1, 1}));
    if (!a || *a == 0)
        return SingularityVerdict::unrecognized(
            s, "corank >= 2 without the cross term xyz", {});
    return tpqr_classify(s);
}

}  // namespace fano
