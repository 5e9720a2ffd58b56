#ifndef FANO_SERIES_HPP
#define FANO_SERIES_HPP

#include <utility>

#include "fano/polynomial.hpp"

namespace fano {

// Polynomial in three local variables truncated at total degree N: arithmetic
// discards every term of higher degree.
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    static TruncatedSeries make(Polynomial p, int truncation_order);

    const Polynomial& poly() const { return poly_; }
    int truncation_order() const { return trunc_; }
    const RingPtr& ring() const { return poly_.ring(); }

    TruncatedSeries with_poly(const Polynomial& p) const { return make(p, trunc_); }

    bool operator==(const TruncatedSeries& o) const {
        return trunc_ == o.trunc_ && poly_ == o.poly_;
    }

  private:
    Polynomial poly_;
    int trunc_ = 0;
};

Polynomial truncate(const Polynomial& p, int max_degree);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// substitute var -> image (a polynomial in the same three variables),
// truncating at every step
TruncatedSeries substitute_var(const TruncatedSeries& s, int var, const Polynomial& image);

// One elimination step of the cusp normal-form procedure:
// x_t = x_t' - (c_alpha / a) * x_t'^{a_t} * (other vars lowered by one),
// where a is the coefficient of the cross term xyz. Records the step.
struct CoordinateChange {
    int target_var = -1;
    Rational coeff;  // subtracted coefficient
    Monomial mono;   // subtracted monomial, in the new coordinates
};

std::pair<TruncatedSeries, CoordinateChange> eliminate_monomial(const TruncatedSeries& s,
                                                                const Monomial& alpha);

}  // namespace fano

#endif
