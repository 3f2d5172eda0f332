#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"
#include "gspec/polynomial.hpp"
#include "gspec/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

inline constexpr std::size_t kMaxTreeOrder = 20;

// Free trees on n vertices, counted by n for n = 0..20.
inline const std::vector<unsigned long long>& free_tree_counts()
{
    static const std::vector<unsigned long long> counts = {1,     1,     1,      1,      2,      3,     6,
                                                           11,    23,    47,     106,    235,    551,   1301,
                                                           3159,  7741,  19320,  48629,  123867, 317955, 823065};
    return counts;
}

namespace detail {

// Level sequence (root at level 0, preorder) to a tree with vertex i at position i.
inline Graph level_sequence_to_tree(const std::vector<std::size_t>& levels)
{
    std::vector<Edge> e;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
        if (!stack.empty()) e.emplace_back(stack.back(), i);
        stack.push_back(i);
    }
    return Graph(levels.size(), e);
}

inline bool next_rooted(std::vector<std::size_t>& seq, std::size_t p)
{
    if (p == 0) return false;
    std::size_t q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    for (std::size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - p + q];
    return true;
}

inline bool next_rooted(std::vector<std::size_t>& seq)
{
    std::size_t p = seq.size() - 1;
    while (seq[p] == 1) --p;
    return next_rooted(seq, p);
}

// Left subtree of the root (levels shifted down by one) and the rest.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_tree(const std::vector<std::size_t>& seq)
{
    std::size_t m = seq.size();
    bool one_found = false;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    std::vector<std::size_t> left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(seq[i] - 1);
    for (std::size_t i = m; i < seq.size(); ++i) rest.push_back(seq[i]);
    return {left, rest};
}

// Advances to the next canonical (centre-rooted) level sequence, or returns false.
inline bool next_free(std::vector<std::size_t>& seq)
{
    auto [left, rest] = split_tree(seq);
    const std::size_t lh = *std::max_element(left.begin(), left.end());
    const std::size_t rh = *std::max_element(rest.begin(), rest.end());
    bool valid = rh >= lh;
    if (valid && rh == lh) {
        if (left.size() > rest.size()) valid = false;
        else if (left.size() == rest.size() && left > rest) valid = false;
    }
    if (valid) return true;
    const std::size_t p = left.size();
    const std::size_t old = seq[p];
    if (!next_rooted(seq, p)) return false;
    if (old > 2) {
        auto nl = split_tree(seq).first;
        const std::size_t h = *std::max_element(nl.begin(), nl.end());
        for (std::size_t i = 0; i < h + 1; ++i) seq[seq.size() - h - 1 + i] = i + 1;
    }
    return true;
}

} // namespace detail

// Calls visit once per isomorphism class of trees on n vertices; stops early if visit returns false.
inline void for_each_tree(std::size_t n, const std::function<bool(const Graph&)>& visit)
{
    if (n < 1 || n > kMaxTreeOrder)
        throw ParameterError("tree enumeration needs 1 <= n <= " + std::to_string(kMaxTreeOrder) + ", got " +
                             std::to_string(n));
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    if (n == 2) {
        visit(Graph(2, {{0, 1}}));
        return;
    }
    std::vector<std::size_t> seq;
    for (std::size_t i = 0; i <= n / 2; ++i) seq.push_back(i);
    for (std::size_t i = 1; i < (n + 1) / 2; ++i) seq.push_back(i);
    while (true) {
        if (!detail::next_free(seq)) return;
        if (!visit(detail::level_sequence_to_tree(seq))) return;
        if (!detail::next_rooted(seq)) return;
    }
}

inline std::vector<Graph> enumerate_trees(std::size_t n)
{
    std::vector<Graph> out;
    for_each_tree(n, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

inline Graph prufer_decode(const std::vector<std::size_t>& code)
{
    const std::size_t n = code.size() + 2;
    std::vector<std::size_t> deg(n, 1);
    for (auto v : code) {
        if (v >= n) throw ParameterError("Pruefer entry out of range");
        ++deg[v];
    }
    std::vector<Edge> e;
    for (auto v : code) {
        std::size_t leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        e.emplace_back(leaf, v);
        --deg[leaf];
        --deg[v];
    }
    std::size_t u = n, w = n;
    for (std::size_t i = 0; i < n; ++i)
        if (deg[i] == 1) (u == n ? u : w) = i;
    e.emplace_back(u, w);
    return Graph(n, e);
}

// Uniform labelled random tree.
inline Graph random_tree(std::size_t n, std::mt19937_64& rng)
{
    if (n == 0) throw ParameterError("random tree needs n >= 1");
    if (n == 1) return Graph(1);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> code(n - 2);
    for (auto& v : code) v = pick(rng);
    return prufer_decode(code);
}

namespace detail {

inline std::string ahu_code(const Graph& g, std::size_t v, std::size_t parent)
{
    std::vector<std::string> sub;
    for (auto w : g.neighbors(v))
        if (w != parent) sub.push_back(ahu_code(g, w, v));
    std::sort(sub.begin(), sub.end());
    std::string s = "(";
    for (const auto& x : sub) s += x;
    return s + ")";
}

inline std::vector<std::size_t> tree_centres(const Graph& g)
{
    const std::size_t n = g.order();
    if (n <= 2) {
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = i;
        return c;
    }
    std::vector<std::size_t> deg(n);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    std::size_t left = n;
    while (left > 2) {
        left -= layer.size();
        std::vector<std::size_t> next;
        for (auto v : layer)
            for (auto w : g.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

} // namespace detail

// Isomorphism-invariant string of a tree (centre-rooted AHU encoding).
inline std::string tree_canonical_string(const Graph& g)
{
    if (!is_tree(g)) throw PreconditionError("canonical tree string needs a tree");
    std::string best;
    for (auto c : detail::tree_centres(g)) {
        auto s = detail::ahu_code(g, c, g.order());
        if (best.empty() || s < best) best = s;
    }
    return best;
}

struct RootedTree {
    Graph graph;
    std::size_t root = 0;
    std::vector<std::size_t> parent;                // parent[root] = order()
    std::vector<std::vector<std::size_t>> children; // ascending
    std::vector<std::size_t> bottom_up;             // post-order, root last

    std::size_t order() const { return graph.order(); }
};

inline RootedTree root_tree(const Graph& g, std::size_t root = 0)
{
    if (!is_tree(g)) throw PreconditionError("rooted tree needs a tree");
    if (root >= g.order()) throw ParameterError("root outside the tree");
    RootedTree t;
    t.graph = g;
    t.root = root;
    const std::size_t n = g.order();
    t.parent.assign(n, n);
    t.children.assign(n, {});
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    std::vector<bool> seen(n, false);
    seen[root] = true;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        const auto& nb = g.neighbors(v);
        if (i < nb.size()) {
            std::size_t w = nb[i++];
            if (seen[w]) continue;
            seen[w] = true;
            t.parent[w] = v;
            t.children[v].push_back(w);
            stack.emplace_back(w, 0);
        } else {
            t.bottom_up.push_back(v);
            stack.pop_back();
        }
    }
    return t;
}

// "n: p_0 p_1 ... p_{n-1}" with -1 at the root.
inline std::string parent_array_string(const RootedTree& t)
{
    std::ostringstream os;
    os << t.order() << ":";
    for (std::size_t v = 0; v < t.order(); ++v) {
        os << ' ';
        if (t.parent[v] == t.order()) os << -1;
        else os << t.parent[v];
    }
    return os.str();
}

// Characteristic polynomial det(xI - L(T)) by bottom-up elimination over Q(x).
inline Polynomial tree_charpoly(const RootedTree& t)
{
    const std::size_t n = t.order();
    std::vector<RationalFunction> a(n);
    RationalFunction product(Polynomial(Rational(1)));
    for (auto v : t.bottom_up) {
        RationalFunction av(Polynomial({Rational(-static_cast<long>(t.graph.degree(v))), Rational(1)}));
        for (auto c : t.children[v]) {
            if (a[c].is_zero()) throw std::logic_error("tree elimination met a zero rational function");
            av = av - a[c].inverse();
        }
        a[v] = av;
        product = product * av;
    }
    if (product.den().degree() != 0) throw std::logic_error("tree elimination product is not a polynomial");
    return product.num();
}

inline Polynomial tree_charpoly(const Graph& g) { return tree_charpoly(root_tree(g, 0)); }

struct DiagResult {
    std::vector<Rational> values;
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    std::vector<Edge> removed; // (vertex, parent) links cut by the zero-child rule
};

// Congruent diagonalization of L(T) + alpha I; the sign counts give the inertia.
inline DiagResult diagonalize_tree(const RootedTree& t, const Rational& alpha)
{
    const std::size_t n = t.order();
    DiagResult r;
    r.values.resize(n);
    std::vector<bool> cut(n, false);
    for (std::size_t v = 0; v < n; ++v) r.values[v] = Rational(static_cast<long>(t.graph.degree(v))) + alpha;
    for (auto v : t.bottom_up) {
        if (t.children[v].empty()) continue;
        std::optional<std::size_t> zero_child;
        for (auto c : t.children[v])
            if (!cut[c] && r.values[c] == 0) {
                zero_child = c;
                break;
            }
        if (zero_child) {
            r.values[*zero_child] = 2;
            r.values[v] = Rational(-1, 2);
            if (v != t.root) {
                cut[v] = true;
                r.removed.emplace_back(v, t.parent[v]);
            }
        } else {
            for (auto c : t.children[v])
                if (!cut[c]) r.values[v] -= 1 / r.values[c];
        }
    }
    for (const auto& x : r.values) {
        if (x > 0) ++r.positive;
        else if (x < 0) ++r.negative;
        else ++r.zero;
    }
    return r;
}

inline DiagResult diagonalize_tree(const Graph& g, const Rational& alpha)
{
    return diagonalize_tree(root_tree(g, 0), alpha);
}

// Number of Laplacian eigenvalues in (lo, hi].
inline std::size_t count_in_interval(const RootedTree& t, const Rational& lo, const Rational& hi)
{
    auto above = [&](const Rational& x) { return diagonalize_tree(t, -x).positive; };
    return above(lo) - above(hi);
}

// Number of Laplacian eigenvalues >= 2 - 2/n, decided exactly.
inline std::size_t sigma_tree(const RootedTree& t)
{
    const std::size_t n = t.order();
    Rational avg(2 * static_cast<long>(n) - 2, static_cast<long>(n));
    avg.canonicalize();
    return n - diagonalize_tree(t, -avg).negative;
}

inline std::size_t sigma_tree(const Graph& g) { return sigma_tree(root_tree(g, 0)); }

// x (x^2 - 3x + 1)^{a+b-1} (x^2 - (a+b+3) x + 2a + 2b + 1).
inline Polynomial t4_2a2b_charpoly(std::size_t a, std::size_t b)
{
    const long s = static_cast<long>(a + b);
    Polynomial quad({Rational(1), Rational(-3), Rational(1)});
    Polynomial tail({Rational(2 * s + 1), Rational(-(s + 3)), Rational(1)});
    return Polynomial::x() * pow(quad, static_cast<int>(s - 1)) * tail;
}

// Root with r children, the first carrying s1 pendants and the rest one each.
inline Polynomial t_prime_charpoly(std::size_t r, std::size_t s1)
{
    const long R = static_cast<long>(r), S = static_cast<long>(s1);
    Polynomial p({Rational(S + 2 * R), Rational(-(2 * S * R + 5 * R + 2 * S + 4)), Rational(S * R + 4 * R + 3 * S + 8),
                  Rational(-(R + S + 5)), Rational(1)});
    Polynomial quad({Rational(1), Rational(-3), Rational(1)});
    return Polynomial::x() * pow(Polynomial::linear(1), static_cast<int>(S - 1)) * pow(quad, static_cast<int>(R - 2)) * p;
}

// Sextic factor g of the two-heavy-branch tree; sign_a4 selects the sign of the linear term.
inline Polynomial t_double_prime_sextic(std::size_t r, std::size_t s1, std::size_t s2, int sign_a4)
{
    const long R = static_cast<long>(r), A = static_cast<long>(s1), B = static_cast<long>(s2);
    const long a1 = R * A + R * B + A * B + 5 * A + 6 * R + 5 * B + 19;
    const long a2 = R * A * B + 4 * R * A + 3 * A * B + 4 * R * B + 9 * A + 9 * B + 14 * R + 24;
    const long a3 = 2 * R * A * B + 5 * R * A + 3 * A * B + 5 * R * B + 7 * A + 7 * B + 16 * R + 13;
    const long a4 = 2 * R * A + 2 * A * B + 2 * R * B + 3 * A + 3 * B + 9 * R + 1;
    return Polynomial({Rational(A + B + 2 * R - 1), Rational(sign_a4 * a4), Rational(a3), Rational(-a2), Rational(a1),
                       Rational(-(R + A + B + 7)), Rational(1)});
}

inline Polynomial t_double_prime_charpoly(std::size_t r, std::size_t s1, std::size_t s2, int sign_a4 = -1)
{
    Polynomial quad({Rational(1), Rational(-3), Rational(1)});
    return Polynomial::x() * pow(Polynomial::linear(1), static_cast<int>(s1 + s2 - 2)) *
           pow(quad, static_cast<int>(r - 3)) * t_double_prime_sextic(r, s1, s2, sign_a4);
}

} // namespace gspec
