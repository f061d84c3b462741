#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nilspectra {

/// Exact rational arithmetic on int64 numerator/denominator.
/// All algebra-level data (structure constants, weights, counting exponents)
/// is carried in this type so that validity checks are tolerance-free.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(-num_, den_, unchecked{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_),
                        checked(__int128(a.den_) * b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked(__int128(a.num_) * b.num_), checked(__int128(a.den_) * b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(checked(__int128(a.num_) * b.den_), checked(__int128(a.den_) * b.num_));
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct unchecked {};
    Rational(std::int64_t n, std::int64_t d, unchecked) : num_(n), den_(d) {}

    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
        return static_cast<std::int64_t>(v);
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace nilspectra
