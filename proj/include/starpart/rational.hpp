#pragma once

// Exact rational scalar type used by every predicate and construction in the
// library. No floating point is allowed anywhere in geometric decisions;
// doubles appear only at the rendering/reporting edge.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace starpart {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline BigInt rat_num(const Rational& q) { return BigInt(numerator(q)); }
inline BigInt rat_den(const Rational& q) { return BigInt(denominator(q)); }

inline int sign(const Rational& q) { return q.sign(); }

inline Rational rational(long long num, long long den = 1) {
    return Rational(num, den);
}

// Accepts "p", "-p/q" and decimal notation like "-12.5".
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); i++)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            std::string n = text.substr(0, slash), d = text.substr(slash + 1);
            if (!valid_int(n) || !valid_int(d)) return std::nullopt;
            BigInt den(d);
            if (den == 0) return std::nullopt;
            return Rational(BigInt(n), den);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
            if (whole.empty() || whole == "-" || whole == "+") whole += "0";
            if (!valid_int(whole)) return std::nullopt;
            if (frac.empty()) return Rational(BigInt(whole));
            for (char c : frac)
                if (c < '0' || c > '9') return std::nullopt;
            BigInt scale = 1;
            for (std::size_t i = 0; i < frac.size(); i++) scale *= 10;
            BigInt w(whole);
            BigInt f(frac);
            bool neg = !whole.empty() && whole[0] == '-';
            BigInt num = w * scale + (neg ? -f : f);
            return Rational(num, scale);
        }
        if (!valid_int(text)) return std::nullopt;
        return Rational(BigInt(text));
    } catch (...) {
        return std::nullopt;
    }
}

inline std::string to_string(const Rational& q) {
    BigInt d = rat_den(q);
    if (d == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + d.str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::size_t hash_rational(const Rational& q) {
    return std::hash<Rational>{}(q);
}

inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

}  // namespace starpart
