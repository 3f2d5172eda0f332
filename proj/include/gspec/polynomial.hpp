#pragma once

#include "gspec/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

// Dense univariate polynomial over Q, coefficients ascending by degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(const Rational& constant) : c_{constant} { trim(); }

    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    static Polynomial monomial(int degree, const Rational& coeff = 1)
    {
        std::vector<Rational> c(degree + 1, Rational(0));
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }
    // x - root
    static Polynomial linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval(double x) const
    {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }

    Polynomial monic() const
    {
        if (is_zero()) return *this;
        Polynomial r = *this;
        Rational lc = leading();
        for (auto& v : r.c_) v /= lc;
        return r;
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Euclidean division: returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const
    {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        if (degree() < d.degree()) return {Polynomial(), *this};
        std::vector<Rational> rem = c_;
        std::vector<Rational> quo(c_.size() - d.c_.size() + 1, Rational(0));
        const Rational& lc = d.c_.back();
        for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
            Rational f = rem[i + d.degree()] / lc;
            quo[i] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= f * d.c_[j];
        }
        rem.resize(d.c_.size() - 1);
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    Polynomial exact_div(const Polynomial& d) const
    {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
        return q;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Descending-degree text such as "x^3 - 4x^2 + 3x".
    std::string to_string(const std::string& var = "x") const
    {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            Rational v = c_[i];
            if (v == 0) continue;
            bool neg = v < 0;
            if (neg) v = -v;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            bool unit = (v == 1);
            if (!unit || i == 0) out += gspec::to_string(v);
            if (i >= 1) out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Monic gcd; gcd(0,0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

inline Polynomial pow(const Polynomial& p, int e)
{
    Polynomial r(Rational(1));
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

// Reduced fraction num/den with monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(Rational(0)), den_(Rational(1)) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction inverse() const
    {
        if (num_.is_zero()) throw std::domain_error("inverse of the zero rational function");
        return RationalFunction(den_, num_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

private:
    void normalize()
    {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        Rational lc = den_.leading();
        if (lc != 1) {
            num_ = num_ * Polynomial(1 / lc);
            den_ = den_.monic();
        }
    }

    Polynomial num_;
    Polynomial den_;
};

} // namespace gspec
