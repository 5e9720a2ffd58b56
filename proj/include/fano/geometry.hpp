#ifndef FANO_GEOMETRY_HPP
#define FANO_GEOMETRY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fano/groebner.hpp"

namespace fano {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// entry (i, j) = d f_i / d x_j
PolyMatrix jacobian(const std::vector<Polynomial>& polys);

// ideal of all k x k minors, exact cofactor expansion
Ideal minor_ideal(const PolyMatrix& m, int k);

enum class ChartVerdict { trivial, origin_only, failed };

struct ChartReport {
    int var = -1;
    int value = 0;  // chart x_var = value (0 or 1)
    ChartVerdict verdict = ChartVerdict::failed;
    GroebnerBasis certificate;
    OriginCheck origin;  // filled for the x_var = 0 chart
};

// chart-split smoothness certificate for a (quasi-)homogeneous hypersurface:
// trivial on {x_chart = 1} and only-origin on {x_chart = 0}
struct SmoothnessCertificate {
    bool smooth = false;
    std::vector<ChartReport> charts;
};

SmoothnessCertificate hypersurface_smoothness(const Polynomial& f, const MonomialOrder& order,
                                              int chart_var = -1, int power_bound = 32,
                                              const BuchbergerOptions& opts = {});

enum class AuxExpectation { trivial, origin_only };

struct AuxSystem {
    std::string label;
    Ideal system;                // in the extended ring
    AuxExpectation declared;     // the certificate the paper's case calls for
    std::vector<int> base_vars;  // variables checked by the origin certificate
    int power_bound = 32;
};

struct SmoothnessProblem {
    RingPtr ring;
    std::vector<Polynomial> defining;
    std::vector<AuxSystem> auxiliary;
};

struct AuxVerdict {
    std::string label;
    bool certified = false;
    std::string outcome;  // "trivial", "origin-only", "inconclusive"
    GroebnerBasis certificate;
    std::optional<OriginCheck> origin;
};

std::vector<AuxVerdict> multiplier_system_check(const SmoothnessProblem& problem,
                                                const MonomialOrder& order,
                                                const BuchbergerOptions& opts = {});

// Jacobian-degeneracy multiplier systems. The first form encodes
// Df_target = sum_k multiplier_k Df_k over the other defining rows; the
// second encodes sum_k multiplier_k Df_k = D x_target. The optional chart
// substitutes that variable to zero and removes it from the ring; multiplier
// variables are appended after the surviving coordinates.
Ideal build_multiplier_system(const RingPtr& ring, const std::vector<Polynomial>& defining,
                              const std::vector<std::string>& multipliers, int target_poly,
                              std::optional<int> chart_var, const std::string& label);
Ideal build_coordinate_multiplier_system(const RingPtr& ring,
                                         const std::vector<Polynomial>& defining,
                                         const std::vector<std::string>& multipliers,
                                         int target_var, std::optional<int> chart_var,
                                         const std::string& label);

// substitute var := expr everywhere and drop the generator pinning it;
// requires a generator equal to var - expr up to a nonzero scalar
Ideal eliminate_linear(const Ideal& ideal, int var, const Polynomial& expr);

// all polynomials vanish at a rational point
bool point_is_singular(const std::vector<Polynomial>& polys, const std::vector<Rational>& point);
// coordinates polynomial in one algebraic element e with minimal polynomial
// min_poly; vanishing is reduction to zero mod (min_poly)
bool point_is_singular(const std::vector<Polynomial>& polys,
                       const std::vector<Polynomial>& point, const Polynomial& min_poly);

}  // namespace fano

#endif
