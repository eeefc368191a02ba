#include "mzv/scalar.hpp"

#include <sstream>

namespace mzv {

Scalar Scalar::monomial(const Rat& coeff, int power) {
    Scalar s;
    if (coeff == 0) return s;
    s.co_.assign(static_cast<std::size_t>(power) + 1, Rat(0));
    s.co_.back() = coeff;
    return s;
}

Rat Scalar::eval(const Rat& v) const {
    Rat acc(0);
    for (std::size_t j = co_.size(); j-- > 0;) {
        acc *= v;
        acc += co_[j];
    }
    return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (co_.size() < o.co_.size()) co_.resize(o.co_.size(), Rat(0));
    for (std::size_t j = 0; j < o.co_.size(); ++j) co_[j] += o.co_[j];
    strip();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (co_.size() < o.co_.size()) co_.resize(o.co_.size(), Rat(0));
    for (std::size_t j = 0; j < o.co_.size(); ++j) co_[j] -= o.co_[j];
    strip();
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    if (a.co_.empty() || b.co_.empty()) return out;
    out.co_.assign(a.co_.size() + b.co_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.co_.size(); ++i) {
        if (a.co_[i] == 0) continue;
        for (std::size_t j = 0; j < b.co_.size(); ++j)
            out.co_[i + j] += a.co_[i] * b.co_[j];
    }
    out.strip();
    return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar& Scalar::operator*=(const Rat& r) {
    if (r == 0) {
        co_.clear();
        return *this;
    }
    for (auto& x : co_) x *= r;
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    for (auto& x : s.co_) x = -x;
    return s;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string Scalar::str() const {
    if (co_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t j = 0; j < co_.size(); ++j) {
        const Rat& q = co_[j];
        if (q == 0) continue;
        bool neg = q < 0;
        Rat mag = neg ? Rat(-q) : q;
        std::string piece;
        if (j == 0) {
            piece = rat_str(mag);
        } else {
            if (mag != 1) piece = rat_str(mag);
            piece += 'c';
            if (j > 1) piece += '^' + std::to_string(j);
        }
        if (first) {
            out = (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? "-" : "+") + piece;
        }
    }
    return out;
}

} // namespace mzv
