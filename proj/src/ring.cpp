#include "fano/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fano/rational.hpp"

namespace fano {

std::string to_string(const Rational& r) { return r.get_str(); }

RingPtr RingDescriptor::make(std::vector<std::string> names, std::vector<int> weights) {
    auto ring = std::make_shared<RingDescriptor>();
    if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
    if (static_cast<int>(names.size()) > kMaxVars)
        throw std::invalid_argument("ring arity exceeds " + std::to_string(kMaxVars));
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
    }
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size())
        throw std::invalid_argument("weights length must equal variable count");
    for (int w : weights)
        if (w < 1) throw std::invalid_argument("weights must be >= 1");
    ring->names = std::move(names);
    ring->weights = std::move(weights);
    return ring;
}

int RingDescriptor::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); i++)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

bool RingDescriptor::weighted() const {
    return std::any_of(weights.begin(), weights.end(), [](int w) { return w != 1; });
}

Monomial Monomial::one(int arity) {
    Monomial m;
    m.arity_ = static_cast<int16_t>(arity);
    return m;
}

Monomial Monomial::variable(int arity, int var, int exp) {
    if (var < 0 || var >= arity) throw std::out_of_range("variable index out of range");
    Monomial m = one(arity);
    m.exps_[var] = static_cast<uint16_t>(exp);
    m.total_ = exp;
    return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) > kMaxVars)
        throw std::invalid_argument("too many exponents");
    Monomial m = one(static_cast<int>(exps.size()));
    for (size_t i = 0; i < exps.size(); i++) {
        if (exps[i] < 0) throw std::invalid_argument("negative exponent");
        m.exps_[i] = static_cast<uint16_t>(exps[i]);
        m.total_ += exps[i];
    }
    return m;
}

long Monomial::weighted_degree(const RingDescriptor& ring) const {
    long d = 0;
    for (int i = 0; i < arity_; i++) d += static_cast<long>(ring.weights[i]) * exps_[i];
    return d;
}

int Monomial::support_size() const {
    int s = 0;
    for (int i = 0; i < arity_; i++) s += exps_[i] > 0;
    return s;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial m = *this;
    for (int i = 0; i < arity_; i++) m.exps_[i] = static_cast<uint16_t>(exps_[i] + o.exps_[i]);
    m.total_ = total_ + o.total_;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < arity_; i++)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial m = *this;
    for (int i = 0; i < arity_; i++) m.exps_[i] = static_cast<uint16_t>(exps_[i] - o.exps_[i]);
    m.total_ = total_ - o.total_;
    return m;
}

Monomial Monomial::lcm_with(const Monomial& o) const {
    Monomial m = *this;
    m.total_ = 0;
    for (int i = 0; i < arity_; i++) {
        m.exps_[i] = std::max(exps_[i], o.exps_[i]);
        m.total_ += m.exps_[i];
    }
    return m;
}

const char* order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::degrevlex: return "degrevlex";
    }
    return "?";
}

OrderKind order_kind_from_name(const std::string& name) {
    if (name == "lex") return OrderKind::lex;
    if (name == "grlex") return OrderKind::grlex;
    if (name == "degrevlex") return OrderKind::degrevlex;
    throw std::invalid_argument("unknown monomial order: " + name);
}

MonomialOrder MonomialOrder::lex(int arity) { return make(OrderKind::lex, arity); }
MonomialOrder MonomialOrder::grlex(int arity) { return make(OrderKind::grlex, arity); }
MonomialOrder MonomialOrder::degrevlex(int arity) { return make(OrderKind::degrevlex, arity); }

MonomialOrder MonomialOrder::make(OrderKind kind, int arity) {
    std::vector<int> perm(arity);
    for (int i = 0; i < arity; i++) perm[i] = i;
    return make(kind, std::move(perm));
}

MonomialOrder MonomialOrder::make(OrderKind kind, std::vector<int> permutation) {
    MonomialOrder o;
    o.kind_ = kind;
    o.arity_ = static_cast<int16_t>(permutation.size());
    std::vector<bool> seen(permutation.size(), false);
    for (size_t i = 0; i < permutation.size(); i++) {
        int p = permutation[i];
        if (p < 0 || p >= o.arity_ || seen[p])
            throw std::invalid_argument("invalid variable permutation");
        seen[p] = true;
        o.perm_[i] = static_cast<uint8_t>(p);
    }
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ != OrderKind::lex) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree() ? -1 : 1;
    }
    if (kind_ == OrderKind::degrevlex) {
        for (int i = arity_ - 1; i >= 0; i--) {
            int d = a.exponent(perm_[i]) - b.exponent(perm_[i]);
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    for (int i = 0; i < arity_; i++) {
        int d = a.exponent(perm_[i]) - b.exponent(perm_[i]);
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace fano
