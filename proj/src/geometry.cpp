#include "fano/geometry.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fano {

namespace {

// extended ring for a multiplier system: base coordinates (optionally minus
// the chart variable) followed by the multiplier names; returns images of the
// base variables for the transfer map
struct ExtendedRing {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> base_images;
    std::vector<int> base_vars;  // indices of surviving coordinates in the new ring
};

ExtendedRing extend_ring(const RingPtr& base, const std::vector<std::string>& multipliers,
                         std::optional<int> chart_var) {
    std::vector<std::string> names;
    for (int i = 0; i < base->arity(); i++) {
        if (chart_var && *chart_var == i) continue;
        names.push_back(base->names[i]);
    }
    for (const auto& m : multipliers) names.push_back(m);
    ExtendedRing ext;
    ext.ring = RingDescriptor::make(names);
    ext.order = MonomialOrder::lex(ext.ring->arity());
    int pos = 0;
    for (int i = 0; i < base->arity(); i++) {
        if (chart_var && *chart_var == i) {
            ext.base_images.push_back(Polynomial::zero(ext.ring, ext.order));
        } else {
            ext.base_images.push_back(Polynomial::variable(ext.ring, ext.order, pos));
            ext.base_vars.push_back(pos);
            pos++;
        }
    }
    return ext;
}

}  // namespace

PolyMatrix jacobian(const std::vector<Polynomial>& polys) {
    PolyMatrix m;
    m.reserve(polys.size());
    for (const auto& f : polys) {
        if (!same_ring(f.ring(), polys[0].ring())) throw std::invalid_argument("ring mismatch");
        std::vector<Polynomial> row;
        for (int j = 0; j < f.ring()->arity(); j++) row.push_back(partial_derivative(f, j));
        m.push_back(std::move(row));
    }
    return m;
}

namespace {

Polynomial det_expand(const PolyMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols, const RingPtr& ring,
                      const MonomialOrder& order) {
    size_t k = rows.size();
    if (k == 1) return m[rows[0]][cols[0]];
    Polynomial acc = Polynomial::zero(ring, order);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; j++) {
        std::vector<int> sub_cols;
        for (size_t c = 0; c < k; c++)
            if (c != j) sub_cols.push_back(cols[c]);
        Polynomial minor = det_expand(m, sub_rows, sub_cols, ring, order);
        Polynomial piece = mul(m[rows[0]][cols[j]], minor);
        acc = (j % 2 == 0) ? add(acc, piece) : sub(acc, piece);
    }
    return acc;
}

}  // namespace

Ideal minor_ideal(const PolyMatrix& m, int k) {
    if (m.empty() || m[0].empty()) throw std::invalid_argument("empty matrix");
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    if (k < 1 || k > std::min(rows, cols)) throw std::out_of_range("minor size out of range");
    const RingPtr& ring = m[0][0].ring();
    const MonomialOrder& order = m[0][0].order();
    std::vector<Polynomial> gens;
    std::vector<int> rsel(k), csel(k);
    std::function<void(int, int)> pick_cols = [&](int start, int depth) {
        if (depth == k) {
            Polynomial d = det_expand(m, rsel, csel, ring, order);
            if (!d.is_zero()) gens.push_back(d);
            return;
        }
        for (int c = start; c < cols; c++) {
            csel[depth] = c;
            pick_cols(c + 1, depth + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r < rows; r++) {
            rsel[depth] = r;
            pick_rows(r + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    return Ideal::make(ring, std::move(gens), "minors");
}

SmoothnessCertificate hypersurface_smoothness(const Polynomial& f, const MonomialOrder& order,
                                              int chart_var, int power_bound,
                                              const BuchbergerOptions& opts) {
    const RingPtr& ring = f.ring();
    int n = ring->arity();
    if (chart_var < 0) chart_var = n - 1;
    std::vector<Polynomial> partials;
    for (int i = 0; i < n; i++) {
        Polynomial d = partial_derivative(f, i);
        if (!d.is_zero()) partials.push_back(d);
    }
    Ideal a = Ideal::make(ring, partials, "partials");

    SmoothnessCertificate cert;
    ChartReport unit_chart;
    unit_chart.var = chart_var;
    unit_chart.value = 1;
    Polynomial xc = Polynomial::variable(ring, order, chart_var);
    Polynomial one = Polynomial::constant(ring, order, 1);
    unit_chart.certificate = buchberger(ideal_sum(a, {sub(xc, one)}), order, opts);
    unit_chart.verdict =
        is_trivial(unit_chart.certificate) ? ChartVerdict::trivial : ChartVerdict::failed;

    ChartReport zero_chart;
    zero_chart.var = chart_var;
    zero_chart.value = 0;
    zero_chart.certificate = buchberger(ideal_sum(a, {xc}), order, opts);
    zero_chart.origin = vanishes_only_at_origin(zero_chart.certificate, power_bound);
    zero_chart.verdict =
        zero_chart.origin.certified ? ChartVerdict::origin_only : ChartVerdict::failed;

    cert.smooth = unit_chart.verdict == ChartVerdict::trivial &&
                  zero_chart.verdict == ChartVerdict::origin_only;
    cert.charts.push_back(std::move(unit_chart));
    cert.charts.push_back(std::move(zero_chart));
    return cert;
}

std::vector<AuxVerdict> multiplier_system_check(const SmoothnessProblem& problem,
                                                const MonomialOrder& order,
                                                const BuchbergerOptions& opts) {
    std::vector<AuxVerdict> out;
    for (const auto& aux : problem.auxiliary) {
        AuxVerdict v;
        v.label = aux.label;
        MonomialOrder ord = order.arity() == aux.system.ring->arity()
                                ? order
                                : MonomialOrder::make(order.kind(), aux.system.ring->arity());
        v.certificate = buchberger(aux.system, ord, opts);
        if (aux.declared == AuxExpectation::trivial) {
            v.certified = is_trivial(v.certificate);
            v.outcome = v.certified ? "trivial" : "inconclusive";
        } else {
            v.origin = vanishes_only_at_origin(v.certificate, aux.power_bound, aux.base_vars);
            v.certified = v.origin->certified;
            v.outcome = v.certified ? "origin-only" : "inconclusive";
        }
        out.push_back(std::move(v));
    }
    return out;
}

Ideal build_multiplier_system(const RingPtr& ring, const std::vector<Polynomial>& defining,
                              const std::vector<std::string>& multipliers, int target_poly,
                              std::optional<int> chart_var, const std::string& label) {
    if (target_poly < 0 || target_poly >= static_cast<int>(defining.size()))
        throw std::out_of_range("target polynomial index");
    if (multipliers.size() != defining.size() - 1)
        throw std::invalid_argument("need one multiplier per non-target defining polynomial");
    ExtendedRing ext = extend_ring(ring, multipliers, chart_var);
    PolyMatrix jac = jacobian(defining);
    int first_mult = ext.ring->arity() - static_cast<int>(multipliers.size());

    std::vector<Polynomial> gens;
    for (const auto& f : defining) {
        Polynomial g = substitute(f, ext.base_images);
        if (!g.is_zero()) gens.push_back(g);
    }
    for (int j = 0; j < ring->arity(); j++) {
        Polynomial col = substitute(jac[target_poly][j], ext.base_images);
        int mi = 0;
        for (size_t r = 0; r < defining.size(); r++) {
            if (static_cast<int>(r) == target_poly) continue;
            Polynomial lam = Polynomial::variable(ext.ring, ext.order, first_mult + mi);
            col = sub(col, mul(lam, substitute(jac[r][j], ext.base_images)));
            mi++;
        }
        if (!col.is_zero()) gens.push_back(col);
    }
    return Ideal::make(ext.ring, std::move(gens), label);
}

Ideal build_coordinate_multiplier_system(const RingPtr& ring,
                                         const std::vector<Polynomial>& defining,
                                         const std::vector<std::string>& multipliers,
                                         int target_var, std::optional<int> chart_var,
                                         const std::string& label) {
    if (target_var < 0 || target_var >= ring->arity())
        throw std::out_of_range("target variable index");
    if (multipliers.size() != defining.size())
        throw std::invalid_argument("need one multiplier per defining polynomial");
    ExtendedRing ext = extend_ring(ring, multipliers, chart_var);
    PolyMatrix jac = jacobian(defining);
    int first_mult = ext.ring->arity() - static_cast<int>(multipliers.size());

    std::vector<Polynomial> gens;
    for (const auto& f : defining) {
        Polynomial g = substitute(f, ext.base_images);
        if (!g.is_zero()) gens.push_back(g);
    }
    for (int j = 0; j < ring->arity(); j++) {
        Polynomial col = Polynomial::zero(ext.ring, ext.order);
        for (size_t r = 0; r < defining.size(); r++) {
            Polynomial lam = Polynomial::variable(ext.ring, ext.order, first_mult + static_cast<int>(r));
            col = add(col, mul(lam, substitute(jac[r][j], ext.base_images)));
        }
        if (j == target_var) col = sub(col, Polynomial::constant(ext.ring, ext.order, 1));
        if (!col.is_zero()) gens.push_back(col);
    }
    return Ideal::make(ext.ring, std::move(gens), label);
}

Ideal eliminate_linear(const Ideal& ideal, int var, const Polynomial& expr) {
    if (var < 0 || var >= ideal.ring->arity()) throw std::out_of_range("variable index");
    const MonomialOrder ord = expr.order();
    Polynomial pin = sub(Polynomial::variable(ideal.ring, ord, var), expr);
    int pin_index = -1;
    for (size_t i = 0; i < ideal.generators.size() && pin_index < 0; i++) {
        const Polynomial g = ideal.generators[i].with_order(ord);
        if (g.is_zero() || pin.is_zero()) continue;
        Rational c = g.leading_term().coeff / pin.leading_term().coeff;
        if (g == scale(pin, c)) pin_index = static_cast<int>(i);
    }
    if (pin_index < 0)
        throw std::invalid_argument(
            "no generator equals the variable minus the substituted expression");
    std::vector<Polynomial> images;
    for (int i = 0; i < ideal.ring->arity(); i++) {
        if (i == var)
            images.push_back(expr);
        else
            images.push_back(Polynomial::variable(ideal.ring, ord, i));
    }
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < ideal.generators.size(); i++) {
        if (static_cast<int>(i) == pin_index) continue;
        Polynomial g = substitute(ideal.generators[i], images);
        if (!g.is_zero()) gens.push_back(g);
    }
    return Ideal::make(ideal.ring, std::move(gens), ideal.label);
}

bool point_is_singular(const std::vector<Polynomial>& polys, const std::vector<Rational>& point) {
    for (const auto& p : polys)
        if (evaluate(p, point) != 0) return false;
    return true;
}

bool point_is_singular(const std::vector<Polynomial>& polys,
                       const std::vector<Polynomial>& point, const Polynomial& min_poly) {
    if (polys.empty()) return true;
    std::vector<Polynomial> divisors{min_poly};
    for (const auto& p : polys) {
        if (static_cast<int>(point.size()) != p.ring()->arity())
            throw std::invalid_argument("point arity mismatch");
        Polynomial value = substitute(p, point);
        if (!normal_form(value, divisors, min_poly.order()).is_zero()) return false;
    }
    return true;
}

}  // namespace fano
