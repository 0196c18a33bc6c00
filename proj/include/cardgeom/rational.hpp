#pragma once

// Exact rational arithmetic on top of arbitrary-precision integers.
// Values are kept fully reduced with a positive denominator at all times,
// so equality is plain field-by-field comparison.

#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cardgeom/errors.hpp"

namespace cardgeom {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) fail(errc::division_by_zero, "rational with zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) fail(errc::division_by_zero, "rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    /// "0", "7", or "num/den" for non-integers.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Fixed-point decimal rendering, rounded half away from zero.
    std::string decimal(int digits) const {
        BigInt p10 = 1;
        for (int i = 0; i < digits; ++i) p10 *= 10;
        BigInt n = num_ < 0 ? BigInt(-num_) : num_;
        BigInt scaled = n * p10;
        BigInt q = scaled / den_;
        if (2 * (scaled % den_) >= den_) ++q;
        std::string ds = q.str();
        if (static_cast<int>(ds.size()) <= digits)
            ds.insert(0, digits + 1 - ds.size(), '0');
        ds.insert(ds.size() - digits, ".");
        if (num_ < 0) ds.insert(0, "-");
        return ds;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

enum class rational_op { add, sub, mul, div };

inline Rational rational_ops(const Rational& a, const Rational& b, rational_op op) {
    switch (op) {
    case rational_op::add: return a + b;
    case rational_op::sub: return a - b;
    case rational_op::mul: return a * b;
    case rational_op::div: return a / b;
    }
    fail(errc::out_of_range, "bad rational op");
}

} // namespace cardgeom
