#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfalg {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, so equality is plain value equality.
using Scalar = boost::multiprecision::cpp_rational;

using Vec = std::vector<Scalar>;

inline std::string scalar_to_string(const Scalar& s) { return s.str(); }

// Accepts "p", "-p", "p/q" with q > 0 after sign normalization.
inline Scalar scalar_from_string(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](Int& out) {
        std::size_t start = pos;
        Int value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) throw std::invalid_argument("bad rational literal: '" + text + "'");
        out = value;
    };
    Int num, den = 1;
    read_digits(num);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        read_digits(den);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (negative) num = -num;
    return Scalar(num, den);
}

inline bool looks_like_rational(const std::string& text) {
    if (text.empty()) return false;
    std::size_t pos = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (pos >= text.size()) return false;
    bool seen_slash = false;
    bool digit_since_break = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            digit_since_break = true;
        } else if (c == '/' && !seen_slash && digit_since_break) {
            seen_slash = true;
            digit_since_break = false;
        } else {
            return false;
        }
    }
    return digit_since_break;
}

}  // namespace nfalg
