#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gspec {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q)
{
    Rational r = q;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Accepts "3", "-2/7", "0.25", "1e-2"-free decimals. Decimals are read exactly.
inline Rational parse_rational(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational q(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(Integer(text, 10));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    for (std::size_t i = (digits[0] == '-' ? 1 : 0); i < digits.size(); ++i)
        if (digits[i] < '0' || digits[i] > '9')
            throw std::invalid_argument("malformed rational literal '" + text + "'");
    Integer den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    Rational q(Integer(digits, 10), den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

} // namespace gspec
