#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"
#include "gspec/polynomial.hpp"
#include "gspec/rational.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

using RationalMatrix = std::vector<std::vector<Rational>>;

enum class MatrixKind { A, L, NL, Q, Dist, DistL, DistQ, Dalpha, TrDiag };

inline std::string kind_name(MatrixKind k)
{
    switch (k) {
    case MatrixKind::A: return "A";
    case MatrixKind::L: return "L";
    case MatrixKind::NL: return "NL";
    case MatrixKind::Q: return "Q";
    case MatrixKind::Dist: return "Dist";
    case MatrixKind::DistL: return "DistL";
    case MatrixKind::DistQ: return "DistQ";
    case MatrixKind::Dalpha: return "Dalpha";
    case MatrixKind::TrDiag: return "TrDiag";
    }
    return "?";
}

// Accepts the CLI spellings: a, l, nl, q, d, dl, dsq, dalpha, tr.
inline MatrixKind parse_kind(const std::string& s)
{
    if (s == "a" || s == "A") return MatrixKind::A;
    if (s == "l" || s == "L") return MatrixKind::L;
    if (s == "nl" || s == "NL") return MatrixKind::NL;
    if (s == "q" || s == "Q") return MatrixKind::Q;
    if (s == "d" || s == "dist" || s == "Dist") return MatrixKind::Dist;
    if (s == "dl" || s == "distl" || s == "DistL") return MatrixKind::DistL;
    if (s == "dq" || s == "dsq" || s == "distq" || s == "DistQ") return MatrixKind::DistQ;
    if (s == "dalpha" || s == "Dalpha") return MatrixKind::Dalpha;
    if (s == "tr" || s == "TrDiag") return MatrixKind::TrDiag;
    throw ParameterError("unknown matrix kind '" + s + "'");
}

inline bool is_distance_kind(MatrixKind k)
{
    return k == MatrixKind::Dist || k == MatrixKind::DistL || k == MatrixKind::DistQ || k == MatrixKind::Dalpha ||
           k == MatrixKind::TrDiag;
}

struct SymmetricMatrix {
    MatrixKind kind = MatrixKind::A;
    Rational alpha = 0;
    bool exact = false;
    RationalMatrix q;    // filled when exact
    Eigen::MatrixXd d;   // always filled

    std::size_t order() const { return static_cast<std::size_t>(d.rows()); }
    double trace() const { return d.trace(); }
};

inline Eigen::MatrixXd to_dense(const RationalMatrix& m)
{
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) d(i, j) = m[i][j].get_d();
    return d;
}

inline SymmetricMatrix from_rational(MatrixKind kind, RationalMatrix q, Rational alpha = 0)
{
    SymmetricMatrix m;
    m.kind = kind;
    m.alpha = alpha;
    m.exact = true;
    m.d = to_dense(q);
    m.q = std::move(q);
    return m;
}

inline SymmetricMatrix build_matrix(const Graph& g, MatrixKind kind, const Rational& alpha = 0)
{
    const std::size_t n = g.order();
    if (n == 0) throw ParameterError("matrix of the empty graph");
    if (kind == MatrixKind::NL) {
        SymmetricMatrix m;
        m.kind = kind;
        m.d = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t v = 0; v < n; ++v)
            if (g.degree(v) == 0)
                throw PreconditionError("normalized Laplacian undefined: vertex " + std::to_string(v) + " is isolated");
        for (std::size_t v = 0; v < n; ++v) {
            m.d(v, v) = 1.0;
            for (auto w : g.neighbors(v))
                m.d(v, w) = -1.0 / std::sqrt(static_cast<double>(g.degree(v)) * static_cast<double>(g.degree(w)));
        }
        return m;
    }
    RationalMatrix q(n, std::vector<Rational>(n, Rational(0)));
    if (!is_distance_kind(kind)) {
        for (std::size_t v = 0; v < n; ++v)
            for (auto w : g.neighbors(v)) q[v][w] = kind == MatrixKind::L ? -1 : 1;
        if (kind == MatrixKind::L || kind == MatrixKind::Q)
            for (std::size_t v = 0; v < n; ++v) q[v][v] = static_cast<unsigned long>(g.degree(v));
        return from_rational(kind, std::move(q));
    }
    if (kind == MatrixKind::Dalpha && (alpha < 0 || alpha > 1))
        throw ParameterError("D_alpha needs alpha in [0,1], got " + to_string(alpha));
    auto dd = distances(g);
    for (std::size_t i = 0; i < n; ++i) {
        Rational tr = static_cast<unsigned long>(dd.transmission[i]);
        for (std::size_t j = 0; j < n; ++j) {
            Rational dij = static_cast<unsigned long>(dd.dist[i][j]);
            switch (kind) {
            case MatrixKind::Dist: q[i][j] = dij; break;
            case MatrixKind::DistL: q[i][j] = -dij; break;
            case MatrixKind::DistQ: q[i][j] = dij; break;
            case MatrixKind::Dalpha: q[i][j] = (1 - alpha) * dij; break;
            default: break;
            }
        }
        switch (kind) {
        case MatrixKind::DistL:
        case MatrixKind::DistQ: q[i][i] = tr; break;
        case MatrixKind::Dalpha: q[i][i] = alpha * tr; break;
        case MatrixKind::TrDiag: q[i][i] = tr; break;
        default: break;
        }
    }
    return from_rational(kind, std::move(q), alpha);
}

// det(xI - M) by similarity reduction to upper Hessenberg form over Q, then the Hessenberg recurrence.
inline Polynomial char_poly_exact(RationalMatrix h)
{
    const std::size_t n = h.size();
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h[piv][j] == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap(h[piv], h[j + 1]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
        }
        for (std::size_t k = j + 2; k < n; ++k) {
            if (h[k][j] == 0) continue;
            Rational u = h[k][j] / h[j + 1][j];
            for (std::size_t c = 0; c < n; ++c) h[k][c] -= u * h[j + 1][c];
            for (std::size_t r = 0; r < n; ++r) h[r][j + 1] += u * h[r][k];
        }
    }
    std::vector<Polynomial> p(n + 1);
    p[0] = Polynomial(Rational(1));
    for (std::size_t m = 1; m <= n; ++m) {
        p[m] = Polynomial::linear(h[m - 1][m - 1]) * p[m - 1];
        Rational prod = 1;
        for (std::size_t i = 1; i < m; ++i) {
            prod *= h[m - i][m - i - 1];
            if (prod == 0) break;
            p[m] -= Polynomial(h[m - i - 1][m - 1] * prod) * p[m - i - 1];
        }
    }
    return p[n];
}

inline Polynomial char_poly_exact(const SymmetricMatrix& m)
{
    if (!m.exact) throw PreconditionError("exact characteristic polynomial needs rational entries");
    return char_poly_exact(m.q);
}

} // namespace gspec
