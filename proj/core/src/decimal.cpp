#include "scindex/decimal.hpp"

#include <algorithm>

namespace scindex {

namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(int places) {
    cpp_int p = 1;
    for (int i = 0; i < places; ++i) {
        p *= 10;
    }
    return p;
}

// value * 10^places rounded half-even to an integer.
cpp_int scaled_round(const Exact& value, int places) {
    const Exact scaled = value * Exact(pow10(places));
    const cpp_int num = boost::multiprecision::numerator(scaled);
    const cpp_int den = boost::multiprecision::denominator(scaled);

    const bool negative = num < 0;
    const cpp_int mag = negative ? cpp_int(-num) : num;
    cpp_int q = mag / den;
    const cpp_int twice_rem = (mag % den) * 2;
    if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) {
        ++q;
    }
    return negative ? cpp_int(-q) : q;
}

}  // namespace

Exact round_half_even(const Exact& value, int places) {
    places = std::max(places, 0);
    return Exact(scaled_round(value, places)) / Exact(pow10(places));
}

std::string format_fixed(const Exact& value, int places) {
    places = std::max(places, 0);
    const cpp_int q = scaled_round(value, places);
    const bool negative = q < 0;
    std::string digits = (negative ? cpp_int(-q) : q).str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places)) {
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    if (negative) {
        digits.insert(0, "-");
    }
    return digits;
}

std::string format_fixed(const Rational& value, int places) { return format_fixed(value.to_exact(), places); }

std::string format_trimmed(const Exact& value, int places) {
    std::string s = format_fixed(value, places);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') {
            s.pop_back();
        }
        if (s.back() == '.') {
            s.pop_back();
        }
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

double to_double(const Exact& value) { return value.convert_to<double>(); }

}  // namespace scindex
