#ifndef MZV_SCALAR_HPP
#define MZV_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mzv {

using Rat = mpq_class;

// A polynomial in the formal parameter c with exact rational coefficients.
// coeff(j) is the coefficient of c^j; trailing zeros are stripped, so the
// zero scalar has an empty coefficient vector.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) { if (n != 0) co_.emplace_back(n); }
    Scalar(const Rat& r) { if (r != 0) co_.push_back(r); }
    Scalar(Rat&& r) { if (r != 0) co_.push_back(std::move(r)); }

    static Scalar c(int power = 1) { return monomial(Rat(1), power); }
    static Scalar monomial(const Rat& coeff, int power);

    bool is_zero() const { return co_.empty(); }
    bool is_rational() const { return co_.size() <= 1; }
    bool is_one() const { return co_.size() == 1 && co_[0] == 1; }

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(co_.size()) - 1; }

    const Rat& coeff(int j) const {
        static const Rat zero(0);
        if (j < 0 || j >= static_cast<int>(co_.size())) return zero;
        return co_[static_cast<std::size_t>(j)];
    }
    // rational value of a degree <= 0 scalar
    const Rat& rat() const { return coeff(0); }

    Rat eval(const Rat& v) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator*=(const Rat& r);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator*(Scalar a, const Rat& r) { a *= r; return a; }
    friend Scalar operator*(const Rat& r, Scalar a) { a *= r; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.co_ == b.co_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // compact polynomial text, powers ascending: "1-3/2c+c^2"
    std::string str() const;

private:
    void strip() {
        while (!co_.empty() && co_.back() == 0) co_.pop_back();
    }
    std::vector<Rat> co_;
};

std::string rat_str(const Rat& r);

} // namespace mzv

#endif
