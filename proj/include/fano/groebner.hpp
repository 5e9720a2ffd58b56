#ifndef FANO_GROEBNER_HPP
#define FANO_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "fano/polynomial.hpp"

namespace fano {

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;  // nonzero, same ring
    std::string label;

    static Ideal make(RingPtr ring, std::vector<Polynomial> generators, std::string label = "");
};

struct BuchbergerStats {
    size_t spolys_reduced = 0;
    size_t pairs_pruned = 0;
    size_t basis_size = 0;
};

// Canonical reduced Groebner basis: elements monic, tails reduced, sorted
// ascending by leading monomial. Unique for (ideal, order).
struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order;
    std::vector<Polynomial> elements;
    BuchbergerStats stats;
};

struct BuchbergerOptions {
    int threads = 1;
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& opts = {});

Ideal ideal_sum(const Ideal& ideal, const std::vector<Polynomial>& extra);

bool is_trivial(const GroebnerBasis& gb);
bool is_trivial(const Ideal& ideal, const BuchbergerOptions& opts = {});

bool member(const Polynomial& p, const GroebnerBasis& gb);
bool member(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order,
            const BuchbergerOptions& opts = {});

// true iff both generator sets have the identical reduced basis (equivalently
// each set reduces to zero modulo the other's basis)
bool same_ideal(const std::vector<Polynomial>& g1, const std::vector<Polynomial>& g2,
                const MonomialOrder& order, const BuchbergerOptions& opts = {});

// Pure-power membership certificate for V(I) being contained in the origin of
// the chosen variables. `certified == false` means unknown at the bound, not
// a refutation.
struct OriginCheck {
    bool certified = false;
    int bound = 0;
    std::vector<int> vars;                   // variables checked
    std::vector<std::optional<int>> powers;  // min k with x^k in I, per checked var
};

OriginCheck vanishes_only_at_origin(const GroebnerBasis& gb, int power_bound,
                                    std::optional<std::vector<int>> vars = std::nullopt);
OriginCheck vanishes_only_at_origin(const Ideal& ideal, int power_bound = 32,
                                    std::optional<std::vector<int>> vars = std::nullopt,
                                    const BuchbergerOptions& opts = {});

struct QuotientDimension {
    bool finite = false;
    unsigned long long count = 0;  // number of standard monomials when finite
};

QuotientDimension quotient_dimension(const GroebnerBasis& gb);
QuotientDimension quotient_dimension(const Ideal& ideal, const MonomialOrder& order,
                                     const BuchbergerOptions& opts = {});

}  // namespace fano

#endif
