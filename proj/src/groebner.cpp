#include "fano/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace fano {

namespace {

struct Pair {
    int i, j;
    Monomial lcm;
    bool coprime;
};

// normal selection strategy: minimal lcm degree, ties by order on the lcm,
// then by index for full determinism
struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm.total_degree() != b.lcm.total_degree())
            return a.lcm.total_degree() < b.lcm.total_degree();
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& body) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; i++) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(n);
    for (int t = 0; t < n; t++) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

// minimalize + tail-reduce + monic + sort ascending by leading monomial
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& order) {
    // drop elements whose leading monomial is divisible by another's; among
    // equal leading monomials keep the earliest
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); i++) {
        const Monomial& mi = basis[i].leading_term().mono;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; j++) {
            if (i == j) continue;
            const Monomial& mj = basis[j].leading_term().mono;
            if (mj.divides(mi)) redundant = !(mi == mj) || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term().mono, b.leading_term().mono);
    });
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); i++) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); j++)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(monic(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term().mono, b.leading_term().mono);
    });
    return reduced;
}

}  // namespace

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> generators, std::string label) {
    Ideal ideal;
    ideal.ring = std::move(ring);
    for (auto& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        if (!same_ring(g.ring(), ideal.ring)) throw std::invalid_argument("ring mismatch");
    }
    ideal.generators = std::move(generators);
    ideal.label = std::move(label);
    return ideal;
}

Ideal ideal_sum(const Ideal& ideal, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = ideal.generators;
    for (const auto& p : extra) {
        if (!same_ring(p.ring(), ideal.ring)) throw std::invalid_argument("ring mismatch");
        gens.push_back(p);
    }
    return Ideal::make(ideal.ring, std::move(gens), ideal.label);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& opts) {
    GroebnerBasis gb;
    gb.ideal = ideal;
    gb.order = order;

    std::vector<Polynomial> basis;
    // reduction view: pointers sorted ascending by leading monomial, so cheap
    // low reducers are tried first (output is order-insensitive: the reduced
    // basis of an ideal is unique)
    std::vector<const Polynomial*> reducers;
    auto add_poly = [&](const Polynomial& h) {
        basis.push_back(primitive_part(h).with_order(order));
    };
    auto rebuild_reducers = [&]() {
        reducers.clear();
        reducers.reserve(basis.size());
        for (const auto& b : basis) reducers.push_back(&b);
    };

    // seed with interreduced generators
    bool trivial = false;
    for (const auto& g : ideal.generators) {
        rebuild_reducers();
        Polynomial h = normal_form_ordered(g, reducers, order, true);
        if (h.is_zero()) continue;
        if (h.is_constant()) {
            trivial = true;
            break;
        }
        add_poly(h);
    }
    rebuild_reducers();

    std::vector<Pair> pending;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; i++) {
            Pair p;
            p.i = i;
            p.j = j;
            const Monomial& a = basis[i].leading_term().mono;
            const Monomial& b = basis[j].leading_term().mono;
            p.lcm = a.lcm_with(b);
            p.coprime = p.lcm.total_degree() == a.total_degree() + b.total_degree();
            pending.push_back(std::move(p));
        }
    };
    if (!trivial)
        for (int j = 1; j < static_cast<int>(basis.size()); j++) push_pairs(j);

    PairLess less{&order};
    std::vector<char> done_pairs;  // triangular map i<j -> processed flag
    auto pair_index = [](int i, int j) { return static_cast<size_t>(j) * (j - 1) / 2 + i; };
    auto mark_done = [&](int i, int j) {
        size_t idx = pair_index(i, j);
        if (done_pairs.size() <= idx) done_pairs.resize(idx + 1, 0);
        done_pairs[idx] = 1;
    };
    auto is_done = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        size_t idx = pair_index(i, j);
        return idx < done_pairs.size() && done_pairs[idx];
    };

    while (!trivial && !pending.empty()) {
        std::sort(pending.begin(), pending.end(), less);
        // batch: all pairs sharing the minimal lcm degree, reduced against a
        // snapshot of the basis; results folded in sequentially so the output
        // is identical for any thread count
        int deg = pending.front().lcm.total_degree();
        size_t batch_end = 0;
        while (batch_end < pending.size() && pending[batch_end].lcm.total_degree() == deg)
            batch_end++;
        std::vector<Pair> batch(pending.begin(), pending.begin() + batch_end);
        pending.erase(pending.begin(), pending.begin() + batch_end);

        std::vector<Polynomial> reduced(batch.size());
        std::vector<char> skipped(batch.size(), 0);
        const std::vector<Polynomial> snapshot = basis;
        std::vector<const Polynomial*> snap_reducers;
        snap_reducers.reserve(snapshot.size());
        for (const auto& b : snapshot) snap_reducers.push_back(&b);
        parallel_for(batch.size(), opts.threads, [&](size_t k) {
            const Pair& p = batch[k];
            if (p.coprime) {
                skipped[k] = 1;  // Buchberger's coprime criterion
                return;
            }
            // chain criterion: some basis element cuts the lcm and both
            // subpairs were already handled
            for (size_t t = 0; t < snapshot.size(); t++) {
                int ti = static_cast<int>(t);
                if (ti == p.i || ti == p.j) continue;
                if (snapshot[t].leading_term().mono.divides(p.lcm) && is_done(p.i, ti) &&
                    is_done(p.j, ti)) {
                    skipped[k] = 2;
                    return;
                }
            }
            Polynomial s = s_polynomial(snapshot[p.i], snapshot[p.j], order);
            reduced[k] = normal_form_ordered(s, snap_reducers, order, true);
        });

        for (size_t k = 0; k < batch.size(); k++) {
            mark_done(batch[k].i, batch[k].j);
            if (skipped[k]) {
                gb.stats.pairs_pruned++;
                continue;
            }
            gb.stats.spolys_reduced++;
            Polynomial h = reduced[k];
            if (!h.is_zero() && snapshot.size() != basis.size())
                h = normal_form_ordered(h, reducers, order, true);
            if (h.is_zero()) continue;
            if (h.is_constant()) {
                trivial = true;
                break;
            }
            add_poly(h);
            rebuild_reducers();
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    if (trivial) {
        gb.elements = {Polynomial::constant(ideal.ring, order, 1)};
    } else {
        gb.elements = reduce_basis(std::move(basis), order);
    }
    gb.stats.basis_size = gb.elements.size();
    return gb;
}

bool is_trivial(const GroebnerBasis& gb) {
    return gb.elements.size() == 1 && gb.elements[0].is_constant() && !gb.elements[0].is_zero();
}

bool is_trivial(const Ideal& ideal, const BuchbergerOptions& opts) {
    if (ideal.generators.empty()) return false;
    // triviality is order-independent; grlex keeps intermediate degrees and
    // coefficients small on the inhomogeneous chart systems
    return is_trivial(buchberger(ideal, MonomialOrder::grlex(ideal.ring->arity()), opts));
}

bool member(const Polynomial& p, const GroebnerBasis& gb) {
    if (!same_ring(p.ring(), gb.ideal.ring)) throw std::invalid_argument("ring mismatch");
    if (p.is_zero()) return true;
    if (gb.elements.empty()) return false;
    return normal_form(p, gb.elements, gb.order).is_zero();
}

bool member(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order,
            const BuchbergerOptions& opts) {
    return member(p, buchberger(ideal, order, opts));
}

bool same_ideal(const std::vector<Polynomial>& g1, const std::vector<Polynomial>& g2,
                const MonomialOrder& order, const BuchbergerOptions& opts) {
    if (g1.empty() && g2.empty()) return true;
    const RingPtr ring = !g1.empty() ? g1[0].ring() : g2[0].ring();
    GroebnerBasis b1 = buchberger(Ideal::make(ring, g1), order, opts);
    GroebnerBasis b2 = buchberger(Ideal::make(ring, g2), order, opts);
    if (b1.elements.size() != b2.elements.size()) return false;
    for (size_t i = 0; i < b1.elements.size(); i++)
        if (!(b1.elements[i] == b2.elements[i])) return false;
    return true;
}

OriginCheck vanishes_only_at_origin(const GroebnerBasis& gb, int power_bound,
                                    std::optional<std::vector<int>> vars) {
    if (power_bound < 1) throw std::invalid_argument("power_bound must be >= 1");
    OriginCheck check;
    check.bound = power_bound;
    if (vars) {
        check.vars = *vars;
    } else {
        for (int i = 0; i < gb.ideal.ring->arity(); i++) check.vars.push_back(i);
    }
    check.certified = true;
    for (int v : check.vars) {
        std::optional<int> found;
        Polynomial x = Polynomial::variable(gb.ideal.ring, gb.order, v);
        Polynomial h = x;
        for (int k = 1; k <= power_bound; k++) {
            h = normal_form(h, gb.elements, gb.order);
            if (h.is_zero()) {
                found = k;
                break;
            }
            h = mul(h, x);
        }
        check.powers.push_back(found);
        if (!found) check.certified = false;
    }
    return check;
}

OriginCheck vanishes_only_at_origin(const Ideal& ideal, int power_bound,
                                    std::optional<std::vector<int>> vars,
                                    const BuchbergerOptions& opts) {
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::degrevlex(ideal.ring->arity()), opts);
    return vanishes_only_at_origin(gb, power_bound, std::move(vars));
}

QuotientDimension quotient_dimension(const GroebnerBasis& gb) {
    QuotientDimension out;
    if (is_trivial(gb)) {
        out.finite = true;
        out.count = 0;
        return out;
    }
    int n = gb.ideal.ring->arity();
    std::vector<Monomial> lead;
    lead.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lead.push_back(g.leading_term().mono);
    // finite iff some pure power of every variable leads
    std::vector<int> cap(n, -1);
    for (const auto& m : lead) {
        if (m.support_size() == 1) {
            for (int i = 0; i < n; i++) {
                if (m.exponent(i) > 0 && (cap[i] < 0 || m.exponent(i) < cap[i]))
                    cap[i] = m.exponent(i);
            }
        }
    }
    for (int i = 0; i < n; i++)
        if (cap[i] < 0) return out;  // infinite
    out.finite = true;
    // enumerate monomials below the caps that avoid every leading monomial
    std::vector<int> exps(n, 0);
    unsigned long long count = 0;
    auto divisible = [&](const std::vector<int>& e) {
        for (const auto& m : lead) {
            bool div = true;
            for (int i = 0; i < n && div; i++) div = m.exponent(i) <= e[i];
            if (div) return true;
        }
        return false;
    };
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (!divisible(exps)) count++;
            return;
        }
        for (int e = 0; e < cap[i]; e++) {
            exps[i] = e;
            rec(i + 1);
        }
        exps[i] = 0;
    };
    rec(0);
    out.count = count;
    return out;
}

QuotientDimension quotient_dimension(const Ideal& ideal, const MonomialOrder& order,
                                     const BuchbergerOptions& opts) {
    return quotient_dimension(buchberger(ideal, order, opts));
}

}  // namespace fano
