#ifndef FANO_SINGULARITY_HPP
#define FANO_SINGULARITY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano/series.hpp"

namespace fano {

// raised when classification is asked for a point that is not singular
class smooth_point_error : public std::domain_error {
  public:
    explicit smooth_point_error(const std::string& what) : std::domain_error(what) {}
};

enum class VerdictKind { tpqr, an, unrecognized };

struct SingularityVerdict {
    VerdictKind kind = VerdictKind::unrecognized;
    // tpqr: sorted triple with 1/p + 1/q + 1/r < 1 and cross coefficient a != 0
    int p = 0, q = 0, r = 0;
    Rational cross_coeff;
    // an: n >= 1 (A_1 is the ordinary double point)
    int n = 0;
    std::optional<TruncatedSeries> residual;  // unrecognized leftovers
    std::string detail;
    std::vector<CoordinateChange> change_log;

    static SingularityVerdict tpqr(int p, int q, int r, Rational a,
                                   std::vector<CoordinateChange> log = {});
    static SingularityVerdict an(int n, std::vector<CoordinateChange> log = {});
    static SingularityVerdict unrecognized(TruncatedSeries residual, std::string detail,
                                           std::vector<CoordinateChange> log = {});
    std::string describe() const;
    bool matches(const SingularityVerdict& expected) const;  // kind + invariants, not logs
};

// 3 - rank of the quadratic part's symmetric matrix (exact rational rank)
int hessian_corank(const TruncatedSeries& s);

// Cusp recognizer: iterated elimination to a*xyz + x^p + y^q + z^r
SingularityVerdict tpqr_classify(const TruncatedSeries& s);

// Splitting-lemma classifier for corank <= 1: linear change to a rank-2
// quadratic in two variables, absorption of mixed terms, residual xy + c z^k
SingularityVerdict an_classify(const TruncatedSeries& s);

// dispatch on corank, with cusp preconditions checked for corank >= 2
SingularityVerdict classify(const TruncatedSeries& s);

}  // namespace fano

#endif
