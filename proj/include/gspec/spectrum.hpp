#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"
#include "gspec/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

inline constexpr double kGroupTol = 1e-8;
inline constexpr double kSigmaGuard = 1e-9;

inline bool close_rel(double a, double b, double tol = kGroupTol)
{
    return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Descending (value, multiplicity) pairs.
struct Spectrum {
    std::string kind;
    std::vector<std::pair<double, std::size_t>> pairs;
    double tol = kGroupTol;

    std::size_t total() const
    {
        std::size_t t = 0;
        for (const auto& p : pairs) t += p.second;
        return t;
    }

    // Expanded values, descending.
    std::vector<double> values() const
    {
        std::vector<double> v;
        for (const auto& [x, m] : pairs) v.insert(v.end(), m, x);
        return v;
    }

    std::size_t multiplicity(double x, double tol = 1e-6) const
    {
        for (const auto& [v, m] : pairs)
            if (close_rel(v, x, tol)) return m;
        return 0;
    }

    double largest() const { return pairs.front().first; }
    double sum() const
    {
        double s = 0;
        for (const auto& [x, m] : pairs) s += x * static_cast<double>(m);
        return s;
    }
};

// Groups values whose neighbours in sorted order differ by at most tol * max(1, |value|).
inline Spectrum group_values(std::vector<double> values, const std::string& kind, double tol = kGroupTol)
{
    std::sort(values.begin(), values.end(), std::greater<>());
    Spectrum s;
    s.kind = kind;
    s.tol = tol;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && std::abs(values[j - 1] - values[j]) <= tol * std::max(1.0, std::abs(values[j])))
            sum += values[j++];
        double mean = sum / static_cast<double>(j - i);
        if (std::abs(mean) <= 1e-10) mean = 0.0;
        s.pairs.emplace_back(mean, j - i);
        i = j;
    }
    return s;
}

inline std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m)
{
    if (m.rows() != m.cols()) throw PreconditionError("eigenvalues of a non-square matrix");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw PreconditionError("eigenvalue solver needs a symmetric matrix");
    if (m.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
    std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

inline Spectrum eigen(const SymmetricMatrix& m)
{
    return group_values(symmetric_eigenvalues(m.d), kind_name(m.kind));
}

inline Spectrum spectrum(const Graph& g, MatrixKind kind, const Rational& alpha = 0)
{
    return eigen(build_matrix(g, kind, alpha));
}

// Descending Laplacian eigenvalues.
inline std::vector<double> laplacian_values(const Graph& g) { return symmetric_eigenvalues(build_matrix(g, MatrixKind::L).d); }

// Multiset equality of two expanded, descending value lists.
inline bool same_values(const std::vector<double>& a, const std::vector<double>& b, double tol = kGroupTol)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!close_rel(a[i], b[i], tol)) return false;
    return true;
}

inline bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol = kGroupTol)
{
    return same_values(a.values(), b.values(), tol);
}

inline double max_deviation(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size()) return INFINITY;
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline nlohmann::json to_json(const Spectrum& s)
{
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [v, m] : s.pairs) pairs.push_back({v, m});
    return {{"kind", s.kind}, {"pairs", pairs}, {"tol", s.tol}};
}

// Sum of the k largest values counting multiplicity.
inline double s_k(const std::vector<double>& descending, std::size_t k)
{
    if (k < 1 || k > descending.size())
        throw ParameterError("k = " + std::to_string(k) + " outside [1, " + std::to_string(descending.size()) + "]");
    double s = 0;
    for (std::size_t i = 0; i < k; ++i) s += descending[i];
    return s;
}

inline double s_k(const Spectrum& s, std::size_t k) { return s_k(s.values(), k); }

struct LaplacianEnergy {
    double value = 0;       // sum |mu_i - avg|
    double sigma_form = 0;  // 2 (sum_{i<=sigma} mu_i - sigma avg)
    double max_form = 0;    // 2 max_k (S_k - k avg)
    std::size_t sigma = 0;  // #{mu_i >= avg - guard}
    double average_degree = 0;
};

inline LaplacianEnergy laplacian_energy(const std::vector<double>& mu, double avg)
{
    LaplacianEnergy e;
    e.average_degree = avg;
    double partial = 0;
    double best = 0;
    double at_sigma = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        e.value += std::abs(mu[i] - avg);
        partial += mu[i] - avg;
        best = std::max(best, partial);
        if (mu[i] >= avg - kSigmaGuard) {
            e.sigma = i + 1;
            at_sigma = partial;
        }
    }
    e.sigma_form = 2 * at_sigma;
    e.max_form = 2 * best;
    return e;
}

inline LaplacianEnergy laplacian_energy(const Graph& g)
{
    if (g.order() == 0) throw ParameterError("Laplacian energy of the empty graph");
    return laplacian_energy(laplacian_values(g),
                            2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order()));
}

struct DistanceEnergy {
    double value = 0;    // sum |d_i - mean|
    double max_form = 0; // 2 max_j (sum_{i<=j} d_i - j mean)
    double mean = 0;     // 2 alpha W / n
    std::vector<double> eigenvalues;
};

inline DistanceEnergy generalized_distance_energy(const Graph& g, const Rational& alpha)
{
    if (alpha < 0 || alpha >= 1) throw ParameterError("generalized distance energy needs alpha in [0,1)");
    auto m = build_matrix(g, MatrixKind::Dalpha, alpha);
    auto w = distances(g).wiener;
    DistanceEnergy e;
    e.eigenvalues = symmetric_eigenvalues(m.d);
    e.mean = 2.0 * alpha.get_d() * static_cast<double>(w) / static_cast<double>(g.order());
    double partial = 0;
    double best = 0;
    for (double x : e.eigenvalues) {
        e.value += std::abs(x - e.mean);
        partial += x - e.mean;
        best = std::max(best, partial);
    }
    e.max_form = 2 * best;
    return e;
}

} // namespace gspec
