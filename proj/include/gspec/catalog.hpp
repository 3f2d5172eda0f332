#pragma once

#include "gspec/algebraic.hpp"
#include "gspec/errors.hpp"
#include "gspec/families.hpp"
#include "gspec/graph.hpp"
#include "gspec/matrix.hpp"
#include "gspec/spectrum.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace gspec {

struct CatalogEntry {
    std::string family;
    MatrixKind kind;
    std::string params;
    std::string formula;
};

inline const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = {
        {"complete", MatrixKind::L, "n", "n^[n-1], 0"},
        {"complete", MatrixKind::NL, "n", "0, (n/(n-1))^[n-1]"},
        {"complete", MatrixKind::DistQ, "n", "2n-2, (n-2)^[n-1]"},
        {"star", MatrixKind::L, "n", "n, 1^[n-2], 0"},
        {"star", MatrixKind::Dalpha, "n", "(a(2n-1)-2)^[n-2], (an+2n-4 +- sqrt(k))/2, k=(n^2-2n+2)(a-2)^2+2(n-1)(a^2-2)"},
        {"complete-bipartite", MatrixKind::L, "a b", "a+b, a^[b-1], b^[a-1], 0"},
        {"complete-bipartite", MatrixKind::NL, "a b", "0, 1^[a+b-2], 2"},
        {"complete-bipartite", MatrixKind::DistQ, "a b",
         "(2a+b-4)^[a-1], (2b+a-4)^[b-1], (5(a+b)-8 +- sqrt(9(a-b)^2+4ab))/2"},
        {"complete-bipartite", MatrixKind::Dalpha, "a b",
         "n=a+b: (a(a+n)-2)^[a-1], (a(2n-a)-2)^[n-a-1], (an+2n-4 +- sqrt(D))/2, "
         "D=(2a^2+n^2-2na)(alpha-2)^2+2(na-a^2)(alpha^2-2)"},
        {"complete-multipartite", MatrixKind::NL, "t t ... t (p parts)", "0, 1^[pt-p], (p/(p-1))^[p-1]"},
        {"complete-split", MatrixKind::NL, "omega n", "0, (n/(n-1))^[omega-1], 1^[n-omega-1], (2n-omega-1)/(n-1)"},
        {"complete-split", MatrixKind::DistQ, "omega n",
         "(n-2)^[omega-1], (2n-omega-4)^[n-omega-1], (5n-2omega-6 +- sqrt(D))/2, "
         "D=(3(2omega-n)-2(omega-1))^2+4omega(n-omega)"},
        {"cone", MatrixKind::NL, "a b", "1-2cos(2 pi k/a)/(2+b) for k=1..a-1, 1^[b-1], 0, (2b+2)/(b+2)"},
        {"wheel", MatrixKind::NL, "n", "1-(2/3)cos(2 pi k/(n-1)) for k=1..n-2, 0, 4/3"},
        {"friendship", MatrixKind::NL, "n", "0, (1/2)^[n-1], (3/2)^[n+1]"},
        {"firefly", MatrixKind::NL, "n p",
         "0, (1/2)^[n-p-1], 1^[p-1], (3/2)^[n-p], (5 sqrt(2n-p) +- sqrt(2n+7p))/(4 sqrt(2n-p))"},
        {"generalized-wheel", MatrixKind::NL, "a b", "0, 4/3, (1/3)^[a-1], (1-(2/3)cos(2 pi k/b))^[a] for k=1..b-1"},
        {"power-prime-power", MatrixKind::NL, "p z", "N=p^z: 0, (N/(N-1))^[N-1]"},
        {"zero-divisor-pq", MatrixKind::DistQ, "p q",
         "N=p+q-2: (2N-q-3)^[p-2], (2N-p-3)^[q-2], (5N-8 +- sqrt(9(p-q)^2+4(p-1)(q-1)))/2"},
        {"zero-divisor-p2", MatrixKind::DistQ, "p", "2p-4, (p-3)^[p-2]"},
        {"zero-divisor-p3", MatrixKind::DistQ, "p",
         "N=p^2-1: (2N-p-3)^[p^2-p-1], (2N-p^2-1)^[p-2], "
         "(5N-2(p-1)-6 +- sqrt((3(2p-2-N)-2(p-2))^2+4(p-1)(N-p+1)))/2"},
        {"zero-divisor-p4", MatrixKind::DistQ, "p",
         "N=p^3-1: (N-2)^[p-2], (2N-p-3)^[p^2(p-1)-1], (2N-p^2-1)^[p(p-1)-1], eigenvalues of the 3x3 quotient"},
        {"zero-divisor-p2q", MatrixKind::DistQ, "p q",
         "(2pq+3p^2-4p-5)^[pq-p-q], (pq+2p^2-2p-3)^[p-2], (2pq+p^2-2p-5)^[q-2], (3pq+2p^2-3p-2q-4)^[p^2-p-1], "
         "eigenvalues of the 4x4 quotient"},
    };
    return entries;
}

inline bool is_prime(std::size_t n)
{
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

inline void need_params(const std::vector<std::size_t>& p, std::size_t k, const std::string& family)
{
    if (p.size() != k)
        throw ParameterError(family + " takes " + std::to_string(k) + " parameter(s), got " + std::to_string(p.size()));
}

inline void need_prime(std::size_t p, const std::string& what)
{
    if (!is_prime(p)) throw ParameterError(what + " = " + std::to_string(p) + " is not prime");
}

// Eigenvalues of a real matrix that is similar to a symmetric one.
inline std::vector<double> real_eigenvalues(const Eigen::MatrixXd& m)
{
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    std::vector<double> v;
    for (Eigen::Index i = 0; i < m.rows(); ++i) v.push_back(solver.eigenvalues()(i).real());
    return v;
}

inline void push(std::vector<double>& v, double x, std::size_t mult) { v.insert(v.end(), mult, x); }

} // namespace detail

// 2n/(3n-2): below it the n-2 repeated generalized distance eigenvalue of the star lies below the mean.
inline double star_energy_threshold(std::size_t n)
{
    return 2.0 * static_cast<double>(n) / (3.0 * static_cast<double>(n) - 2.0);
}

inline double star_dalpha_k(std::size_t n, double a)
{
    const double nn = static_cast<double>(n);
    return (nn * nn - 2 * nn + 2) * (a - 2) * (a - 2) + 2 * (nn - 1) * (a * a - 2);
}

inline std::vector<double> star_dalpha_values(std::size_t n, double a)
{
    if (n < 3) throw ParameterError("star generalized distance formula needs n >= 3");
    const double nn = static_cast<double>(n);
    const double k = star_dalpha_k(n, a);
    std::vector<double> v;
    detail::push(v, a * (2 * nn - 1) - 2, n - 2);
    v.push_back((a * nn + 2 * nn - 4 + std::sqrt(k)) / 2);
    v.push_back((a * nn + 2 * nn - 4 - std::sqrt(k)) / 2);
    return v;
}

// Generalized distance energy of S_n.
inline double star_dalpha_energy(std::size_t n, double a)
{
    const double nn = static_cast<double>(n);
    const double rk = std::sqrt(star_dalpha_k(n, a));
    if (a < star_energy_threshold(n)) return rk + 2 * nn + a * (8 - 3 * nn) - 4 - 4 * a / nn;
    return rk - 2 * nn + 4 + a * (3 * nn - 8 + 4 / nn);
}

// The upper-branch expression as it is commonly printed; kept for comparison only.
inline double star_dalpha_energy_printed_upper(std::size_t n, double a)
{
    const double nn = static_cast<double>(n);
    return std::sqrt(star_dalpha_k(n, a)) - nn * a * (4 * nn - 19) - 22 * a - 2 * nn + 4 + 8 * a / nn;
}

// Generalized distance eigenvalues of K_{a, n-a}.
inline std::vector<double> bipartite_dalpha_values(std::size_t a, std::size_t n, double al)
{
    if (a < 1 || a >= n) throw ParameterError("K_{a,n-a} needs 1 <= a < n");
    const double aa = static_cast<double>(a);
    const double nn = static_cast<double>(n);
    const double disc = (2 * aa * aa + nn * nn - 2 * nn * aa) * (al - 2) * (al - 2) + 2 * (nn * aa - aa * aa) * (al * al - 2);
    std::vector<double> v;
    detail::push(v, al * (aa + nn) - 2, a - 1);
    detail::push(v, al * (2 * nn - aa) - 2, n - a - 1);
    v.push_back((al * nn + 2 * nn - 4 + std::sqrt(disc)) / 2);
    v.push_back((al * nn + 2 * nn - 4 - std::sqrt(disc)) / 2);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// The graph a catalog entry describes, built explicitly.
inline Graph catalog_graph(const std::string& family, const std::vector<std::size_t>& p)
{
    if (family == "zero-divisor-pq") {
        detail::need_params(p, 2, family);
        detail::need_prime(p[0], "p");
        detail::need_prime(p[1], "q");
        if (p[0] == p[1]) throw ParameterError("p and q must differ");
        return zero_divisor_graph(p[0] * p[1]).graph;
    }
    if (family == "zero-divisor-p2" || family == "zero-divisor-p3" || family == "zero-divisor-p4") {
        detail::need_params(p, 1, family);
        detail::need_prime(p[0], "p");
        std::size_t e = static_cast<std::size_t>(family.back() - '0');
        std::size_t n = 1;
        for (std::size_t i = 0; i < e; ++i) n *= p[0];
        return zero_divisor_graph(n).graph;
    }
    if (family == "zero-divisor-p2q") {
        detail::need_params(p, 2, family);
        detail::need_prime(p[0], "p");
        detail::need_prime(p[1], "q");
        if (p[0] == p[1]) throw ParameterError("p and q must differ");
        return zero_divisor_graph(p[0] * p[0] * p[1]).graph;
    }
    if (family == "power-prime-power") {
        detail::need_params(p, 2, family);
        detail::need_prime(p[0], "p");
        std::size_t n = 1;
        for (std::size_t i = 0; i < p[1]; ++i) n *= p[0];
        return power_graph(n).graph;
    }
    return build_named({parse_family(family), p});
}

// Closed-form spectrum of a catalog entry; alpha is used only for D_alpha entries.
inline Spectrum closed_form_spectrum(const std::string& family, MatrixKind kind, const std::vector<std::size_t>& p,
                                     double alpha = 0)
{
    using std::sqrt;
    constexpr double pi = std::numbers::pi;
    std::vector<double> v;
    auto d = [](std::size_t x) { return static_cast<double>(x); };
    auto done = [&]() { return group_values(v, kind_name(kind)); };

    if (family == "complete") {
        detail::need_params(p, 1, family);
        const std::size_t n = p[0];
        if (n < 2) throw ParameterError("complete-graph formulas need n >= 2");
        if (kind == MatrixKind::L) {
            detail::push(v, d(n), n - 1);
            v.push_back(0);
            return done();
        }
        if (kind == MatrixKind::NL) {
            v.push_back(0);
            detail::push(v, d(n) / d(n - 1), n - 1);
            return done();
        }
        if (kind == MatrixKind::DistQ) {
            v.push_back(2 * d(n) - 2);
            detail::push(v, d(n) - 2, n - 1);
            return done();
        }
    }
    if (family == "star") {
        detail::need_params(p, 1, family);
        const std::size_t n = p[0];
        if (kind == MatrixKind::L) {
            if (n < 2) throw ParameterError("star needs n >= 2");
            v.push_back(d(n));
            detail::push(v, 1, n - 2);
            v.push_back(0);
            return done();
        }
        if (kind == MatrixKind::Dalpha) {
            v = star_dalpha_values(n, alpha);
            return done();
        }
    }
    if (family == "complete-bipartite") {
        detail::need_params(p, 2, family);
        const std::size_t a = p[0], b = p[1];
        if (a < 1 || b < 1) throw ParameterError("complete bipartite needs a, b >= 1");
        if (kind == MatrixKind::L) {
            v.push_back(d(a + b));
            detail::push(v, d(a), b - 1);
            detail::push(v, d(b), a - 1);
            v.push_back(0);
            return done();
        }
        if (kind == MatrixKind::NL) {
            v.push_back(0);
            detail::push(v, 1, a + b - 2);
            v.push_back(2);
            return done();
        }
        if (kind == MatrixKind::DistQ) {
            detail::push(v, 2 * d(a) + d(b) - 4, a - 1);
            detail::push(v, 2 * d(b) + d(a) - 4, b - 1);
            const double r = sqrt(9 * (d(a) - d(b)) * (d(a) - d(b)) + 4 * d(a) * d(b));
            v.push_back((5 * d(a + b) - 8 + r) / 2);
            v.push_back((5 * d(a + b) - 8 - r) / 2);
            return done();
        }
        if (kind == MatrixKind::Dalpha) {
            v = bipartite_dalpha_values(a, a + b, alpha);
            return done();
        }
    }
    if (family == "complete-multipartite" && kind == MatrixKind::NL) {
        if (p.size() < 2) throw ParameterError("complete multipartite formula needs at least two parts");
        for (auto x : p)
            if (x != p[0] || x < 1) throw ParameterError("complete multipartite formula needs equal nonempty parts");
        const std::size_t parts = p.size(), n = p.size() * p[0];
        v.push_back(0);
        detail::push(v, 1, n - parts);
        detail::push(v, d(parts) / d(parts - 1), parts - 1);
        return done();
    }
    if (family == "complete-split") {
        detail::need_params(p, 2, family);
        const std::size_t w = p[0], n = p[1];
        if (w < 1 || w >= n) throw ParameterError("complete split formulas need 1 <= omega < n");
        if (kind == MatrixKind::NL) {
            v.push_back(0);
            detail::push(v, d(n) / d(n - 1), w - 1);
            detail::push(v, 1, n - w - 1);
            v.push_back((2 * d(n) - d(w) - 1) / d(n - 1));
            return done();
        }
        if (kind == MatrixKind::DistQ) {
            detail::push(v, d(n) - 2, w - 1);
            detail::push(v, 2 * d(n) - d(w) - 4, n - w - 1);
            const double t = 3 * (2 * d(w) - d(n)) - 2 * (d(w) - 1);
            const double r = sqrt(t * t + 4 * d(w) * (d(n) - d(w)));
            v.push_back((5 * d(n) - 2 * d(w) - 6 + r) / 2);
            v.push_back((5 * d(n) - 2 * d(w) - 6 - r) / 2);
            return done();
        }
    }
    if (family == "cone" && kind == MatrixKind::NL) {
        detail::need_params(p, 2, family);
        const std::size_t a = p[0], b = p[1];
        if (a < 3 || b < 1) throw ParameterError("cone needs a >= 3, b >= 1");
        for (std::size_t k = 1; k < a; ++k) v.push_back(1 - 2 * std::cos(2 * pi * d(k) / d(a)) / (2 + d(b)));
        detail::push(v, 1, b - 1);
        v.push_back(0);
        v.push_back((2 * d(b) + 2) / (d(b) + 2));
        return done();
    }
    if (family == "wheel" && kind == MatrixKind::NL) {
        detail::need_params(p, 1, family);
        const std::size_t n = p[0];
        if (n < 4) throw ParameterError("wheel needs n >= 4");
        for (std::size_t k = 1; k + 1 < n; ++k) v.push_back(1 - (2.0 / 3.0) * std::cos(2 * pi * d(k) / d(n - 1)));
        v.push_back(0);
        v.push_back(4.0 / 3.0);
        return done();
    }
    if (family == "friendship" && kind == MatrixKind::NL) {
        detail::need_params(p, 1, family);
        const std::size_t n = p[0];
        if (n < 1) throw ParameterError("friendship needs n >= 1");
        v.push_back(0);
        detail::push(v, 0.5, n - 1);
        detail::push(v, 1.5, n + 1);
        return done();
    }
    if (family == "firefly" && kind == MatrixKind::NL) {
        detail::need_params(p, 2, family);
        const std::size_t n = p[0], q = p[1];
        if (q < 1 || q + 1 > n) throw ParameterError("firefly formula needs 1 <= p <= n-1");
        const double r1 = sqrt(2 * d(n) - d(q)), r2 = sqrt(2 * d(n) + 7 * d(q));
        v.push_back(0);
        detail::push(v, 0.5, n - q - 1);
        detail::push(v, 1, q - 1);
        detail::push(v, 1.5, n - q);
        v.push_back((5 * r1 + r2) / (4 * r1));
        v.push_back((5 * r1 - r2) / (4 * r1));
        return done();
    }
    if (family == "generalized-wheel" && kind == MatrixKind::NL) {
        detail::need_params(p, 2, family);
        const std::size_t a = p[0], b = p[1];
        if (a < 1 || b < 3) throw ParameterError("generalized wheel needs a >= 1, b >= 3");
        v.push_back(0);
        v.push_back(4.0 / 3.0);
        detail::push(v, 1.0 / 3.0, a - 1);
        for (std::size_t k = 1; k < b; ++k) detail::push(v, 1 - (2.0 / 3.0) * std::cos(2 * pi * d(k) / d(b)), a);
        return done();
    }
    if (family == "power-prime-power" && kind == MatrixKind::NL) {
        const std::size_t n = catalog_graph(family, p).order();
        v.push_back(0);
        detail::push(v, d(n) / d(n - 1), n - 1);
        return done();
    }
    if (kind == MatrixKind::DistQ && family.rfind("zero-divisor-", 0) == 0) {
        catalog_graph(family, p); // validates primes
        const std::size_t pr = p[0];
        const double pp = d(pr);
        if (family == "zero-divisor-pq") {
            const std::size_t q = p[1];
            const double qq = d(q), nn = pp + qq - 2;
            detail::push(v, 2 * nn - qq - 3, pr - 2);
            detail::push(v, 2 * nn - pp - 3, q - 2);
            const double r = sqrt(9 * (pp - qq) * (pp - qq) + 4 * (pp - 1) * (qq - 1));
            v.push_back((5 * nn - 8 + r) / 2);
            v.push_back((5 * nn - 8 - r) / 2);
            return done();
        }
        if (family == "zero-divisor-p2") {
            if (pr == 2) {
                v.push_back(0);
                return done();
            }
            v.push_back(2 * pp - 4);
            detail::push(v, pp - 3, pr - 2);
            return done();
        }
        if (family == "zero-divisor-p3") {
            const double nn = pp * pp - 1;
            detail::push(v, 2 * nn - pp - 3, pr * pr - pr - 1);
            detail::push(v, 2 * nn - pp * pp - 1, pr - 2);
            const double t = 3 * (2 * pp - 2 - nn) - 2 * (pp - 2);
            const double r = sqrt(t * t + 4 * (pp - 1) * (nn - pp + 1));
            v.push_back((5 * nn - 2 * (pp - 1) - 6 + r) / 2);
            v.push_back((5 * nn - 2 * (pp - 1) - 6 - r) / 2);
            return done();
        }
        if (family == "zero-divisor-p4") {
            const double nn = pp * pp * pp - 1;
            detail::push(v, nn - 2, pr - 2);
            detail::push(v, 2 * nn - pp - 3, pr * pr * (pr - 1) - 1);
            detail::push(v, 2 * nn - pp * pp - 1, pr * (pr - 1) - 1);
            Eigen::MatrixXd m(3, 3);
            m << nn + pp - 3, pp * pp * (pp - 1), pp * (pp - 1), //
                pp - 1, 2 * nn + pp * (2 * pp * pp - 2 * pp - 1) - 3, 2 * pp * (pp - 1), //
                pp - 1, 2 * pp * pp * (pp - 1), 2 * nn - pp - 1;
            for (double x : detail::real_eigenvalues(m)) v.push_back(x);
            return done();
        }
        if (family == "zero-divisor-p2q") {
            const std::size_t q = p[1];
            const double qq = d(q);
            detail::push(v, 2 * pp * qq + 3 * pp * pp - 4 * pp - 5, pr * q - pr - q);
            detail::push(v, pp * qq + 2 * pp * pp - 2 * pp - 3, pr - 2);
            detail::push(v, 2 * pp * qq + pp * pp - 2 * pp - 5, q - 2);
            detail::push(v, 3 * pp * qq + 2 * pp * pp - 3 * pp - 2 * qq - 4, pr * pr - pr - 1);
            // parts in path order q ~ p^2 ~ pq ~ p with orders a, b, c, e
            const double a = pp * (pp - 1), b = qq - 1, c = pp - 1, e = (pp - 1) * (qq - 1);
            Eigen::MatrixXd m(4, 4);
            m << 4 * a + b + 2 * c + 3 * e - 4, b, 2 * c, 3 * e, //
                a, a + 4 * b + c + 2 * e - 4, c, 2 * e,             //
                2 * a, b, 2 * a + b + 4 * c + e - 2 * (pp - 2) - 4, e, //
                3 * a, 2 * b, c, 3 * a + 2 * b + c + 4 * e - 4;
            for (double x : detail::real_eigenvalues(m)) v.push_back(x);
            return done();
        }
    }
    throw ParameterError("no closed form for family '" + family + "' and matrix " + kind_name(kind));
}

struct CatalogCase {
    std::vector<std::size_t> params;
    double alpha = 0;
};

// Parameter grid for an entry: a, b <= 8; orders <= 12; small primes; alpha in {0.1, ..., 0.9}.
inline std::vector<CatalogCase> catalog_sweep(const CatalogEntry& e)
{
    std::vector<std::size_t> primes{2, 3, 5, 7, 11, 13};
    std::vector<std::vector<std::size_t>> ps;
    const std::string& f = e.family;
    if (f == "complete" || f == "wheel")
        for (std::size_t n = f == "wheel" ? 4 : 2; n <= 12; ++n) ps.push_back({n});
    else if (f == "star")
        for (std::size_t n = e.kind == MatrixKind::Dalpha ? 4 : 3; n <= (e.kind == MatrixKind::Dalpha ? 30 : 12); ++n)
            ps.push_back({n});
    else if (f == "complete-bipartite")
        for (std::size_t a = 1; a <= 8; ++a)
            for (std::size_t b = 1; b <= 8; ++b) ps.push_back({a, b});
    else if (f == "complete-multipartite")
        for (std::size_t parts = 2; parts <= 5; ++parts)
            for (std::size_t t = 1; t <= 8 && parts * t <= 24; ++t) ps.push_back(std::vector<std::size_t>(parts, t));
    else if (f == "complete-split")
        for (std::size_t n = 2; n <= 12; ++n)
            for (std::size_t w = 1; w < n; ++w) ps.push_back({w, n});
    else if (f == "cone" || f == "generalized-wheel")
        for (std::size_t a = f == "cone" ? 3 : 1; a <= 8; ++a)
            for (std::size_t b = f == "cone" ? 1 : 3; b <= 8; ++b) ps.push_back({a, b});
    else if (f == "friendship")
        for (std::size_t n = 1; n <= 8; ++n) ps.push_back({n});
    else if (f == "firefly")
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t p = 1; p < n; ++p) ps.push_back({n, p});
    else if (f == "power-prime-power") {
        for (auto p : primes)
            for (std::size_t z = 1, v = p; v <= 200; ++z, v *= p)
                if (v >= 3) ps.push_back({p, z});
    } else if (f == "zero-divisor-pq") {
        for (auto p : primes)
            for (auto q : primes)
                if (p < q) ps.push_back({p, q});
    }
    else if (f == "zero-divisor-p2")
        for (auto p : primes) ps.push_back({p});
    else if (f == "zero-divisor-p3")
        for (std::size_t p : {2, 3, 5}) ps.push_back({p});
    else if (f == "zero-divisor-p4")
        for (std::size_t p : {2, 3}) ps.push_back({p});
    else if (f == "zero-divisor-p2q") {
        for (std::size_t p : {2, 3, 5})
            for (std::size_t q : {2, 3, 5, 7})
                if (p != q) ps.push_back({p, q});
    }

    std::vector<CatalogCase> out;
    for (auto& p : ps) {
        if (e.kind == MatrixKind::Dalpha)
            for (int i = 1; i <= 9; ++i) out.push_back({p, i / 10.0});
        else
            out.push_back({p, 0});
    }
    return out;
}

// Largest deviation between a closed form and the dense eigensolver; infinity on a multiplicity mismatch.
inline double catalog_deviation(const CatalogEntry& e, const CatalogCase& c)
{
    const Graph g = catalog_graph(e.family, c.params);
    const auto closed = closed_form_spectrum(e.family, e.kind, c.params, c.alpha);
    Rational alpha = 0;
    if (e.kind == MatrixKind::Dalpha) alpha = parse_rational(std::to_string(static_cast<int>(std::lround(c.alpha * 10))) + "/10");
    const auto dense = spectrum(g, e.kind, alpha);
    if (closed.total() != dense.total()) return INFINITY;
    return max_deviation(closed.values(), dense.values());
}

} // namespace gspec
