#include "scindex/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace scindex {

namespace {

__int128 abs_wide(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd_wide(__int128 a, __int128 b) {
    a = abs_wide(a);
    b = abs_wide(b);
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 numerator, __int128 denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    if (numerator == 0) {
        return Rational{};
    }
    const __int128 g = gcd_wide(numerator, denominator);
    numerator /= g;
    denominator /= g;

    constexpr auto lo = std::numeric_limits<std::int64_t>::min() + 1;
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    if (numerator < lo || numerator > hi || denominator > hi) {
        throw std::overflow_error("rational result exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    return r;
}

Exact Rational::to_exact() const { return Exact(num_) / Exact(den_); }

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    // Denominators are positive, so cross-multiplication preserves order.
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace scindex
