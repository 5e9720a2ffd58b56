#ifndef FANO_RING_HPP
#define FANO_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fano {

// Exponent vectors are fixed small arrays: the largest ring in play has
// 9 variables (plus room for adjoined algebraic elements).
inline constexpr int kMaxVars = 12;

struct RingDescriptor {
    std::vector<std::string> names;
    std::vector<int> weights;  // one per variable, >= 1

    static std::shared_ptr<const RingDescriptor> make(std::vector<std::string> names,
                                                      std::vector<int> weights = {});

    int arity() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;  // -1 when absent
    bool weighted() const;

    bool operator==(const RingDescriptor& o) const {
        return names == o.names && weights == o.weights;
    }
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

class Monomial {
  public:
    Monomial() = default;
    static Monomial one(int arity);
    static Monomial variable(int arity, int var, int exp = 1);
    static Monomial from_exponents(const std::vector<int>& exps);

    int arity() const { return arity_; }
    int exponent(int i) const { return exps_[i]; }
    int total_degree() const { return total_; }
    long weighted_degree(const RingDescriptor& ring) const;

    bool is_one() const { return total_ == 0; }
    // number of variables with positive exponent
    int support_size() const;

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // this / o, requires o.divides(*this)
    Monomial lcm_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const {
        return arity_ == o.arity_ && total_ == o.total_ && exps_ == o.exps_;
    }

  private:
    std::array<uint16_t, kMaxVars> exps_{};
    int16_t arity_ = 0;
    int32_t total_ = 0;
};

enum class OrderKind { lex, grlex, degrevlex };

const char* order_kind_name(OrderKind k);
OrderKind order_kind_from_name(const std::string& name);

// Total, multiplicative well-order on monomials of a fixed arity. The
// permutation gives the variable significance order: perm[0] is the most
// significant variable index.
class MonomialOrder {
  public:
    MonomialOrder() = default;
    static MonomialOrder lex(int arity);
    static MonomialOrder grlex(int arity);
    static MonomialOrder degrevlex(int arity);
    static MonomialOrder make(OrderKind kind, int arity);
    static MonomialOrder make(OrderKind kind, std::vector<int> permutation);

    OrderKind kind() const { return kind_; }
    int arity() const { return arity_; }

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && arity_ == o.arity_ && perm_ == o.perm_;
    }

  private:
    OrderKind kind_ = OrderKind::lex;
    int16_t arity_ = 0;
    std::array<uint8_t, kMaxVars> perm_{};
};

}  // namespace fano

#endif
