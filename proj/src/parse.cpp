#include <cctype>
#include <sstream>
#include <stdexcept>

#include "fano/polynomial.hpp"

namespace fano {

namespace {

// Recursive-descent parser for the polynomial grammar. Multiplication may be
// written with '*' or by juxtaposition (appendix style: 2x0, x2(x0+x1));
// '/' by a nonzero constant is accepted so printed local equations with
// fractional coefficients parse as written.
class PolyParser {
  public:
    PolyParser(const std::string& text, RingPtr ring, MonomialOrder order)
        : s_(text), ring_(std::move(ring)), order_(order) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& s_;
    RingPtr ring_;
    MonomialOrder order_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "polynomial parse error at offset " << pos_ << ": " << msg << " in \"" << s_ << "\"";
        throw std::invalid_argument(os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) pos_++;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (peek_is(c)) {
            pos_++;
            return true;
        }
        return false;
    }

    bool at_factor_start() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Integer integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) pos_++;
        if (start == pos_) fail("expected integer");
        return Integer(s_.substr(start, pos_ - start));
    }

    int small_int() {
        Integer v = integer();
        if (!v.fits_sint_p()) fail("exponent too large");
        return static_cast<int>(v.get_si());
    }

    int variable() {
        // longest declared name starting here
        skip_ws();
        int best = -1;
        size_t best_len = 0;
        for (int i = 0; i < ring_->arity(); i++) {
            const std::string& n = ring_->names[i];
            if (n.size() > best_len && s_.compare(pos_, n.size(), n) == 0) {
                best = i;
                best_len = n.size();
            }
        }
        if (best < 0) {
            size_t end = pos_;
            while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) ||
                                       s_[end] == '_'))
                end++;
            fail("unknown variable '" + s_.substr(pos_, end - pos_) + "'");
        }
        pos_ += best_len;
        return best;
    }

    Polynomial expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = term();
        if (neg) acc = negate(acc);
        while (true) {
            if (eat('+')) {
                acc = add(acc, term());
            } else if (eat('-')) {
                acc = sub(acc, term());
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (eat('*')) {
                acc = mul(acc, factor());
            } else if (eat('/')) {
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc = scale(acc, 1 / d.leading_term().coeff);
            } else if (at_factor_start()) {
                acc = mul(acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected factor");
        Polynomial base;
        char c = s_[pos_];
        if (c == '(') {
            pos_++;
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = Polynomial::constant(ring_, order_, Rational(integer()));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            base = Polynomial::variable(ring_, order_, variable());
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        if (eat('^')) base = power(base, small_int());
        return base;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            const MonomialOrder& order) {
    return PolyParser(text, ring, order).parse();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, const RingPtr& ring,
                                              const MonomialOrder& order, char sep) {
    std::vector<Polynomial> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(sep, start);
        std::string piece = text.substr(start, end == std::string::npos ? end : end - start);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) out.push_back(parse_polynomial(piece, ring, order));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

std::string to_string(const Monomial& m, const RingDescriptor& ring) {
    std::string out;
    for (int i = 0; i < m.arity(); i++) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.names[i];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const Polynomial q = p.with_order(MonomialOrder::degrevlex(p.ring()->arity()));
    std::string out;
    for (const auto& t : q.terms()) {
        Rational c = t.coeff;
        if (out.empty()) {
            if (c < 0) out += "-", c = -c;
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string ms = to_string(t.mono, *q.ring());
        if (ms == "1") {
            out += c.get_str();
        } else if (c == 1) {
            out += ms;
        } else {
            out += c.get_str() + "*" + ms;
        }
    }
    return out;
}

}  // namespace fano
