#pragma once

#include "gspec/conjecture.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/errors.hpp"
#include "gspec/families.hpp"
#include "gspec/graph.hpp"
#include "gspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

inline constexpr std::size_t kOpenEnd = SIZE_MAX; // upper end "n" when the order is not fixed

struct KInterval {
    std::size_t lo = 1;
    std::size_t hi = kOpenEnd; // inclusive
};

// Set of k for which a sufficient condition guarantees S_k <= m + k(k+1)/2.
struct KRange {
    std::string source;
    std::vector<KInterval> intervals;
    bool all = false;
    std::optional<std::size_t> n;
    std::string reason;

    bool contains(std::size_t k) const
    {
        if (all) return true;
        return std::any_of(intervals.begin(), intervals.end(), [k](const KInterval& i) { return k >= i.lo && k <= i.hi; });
    }

    std::vector<std::size_t> values(std::size_t order) const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 1; k <= order; ++k)
            if (contains(k)) out.push_back(k);
        return out;
    }

    std::string to_string() const
    {
        if (all) return "all k";
        if (intervals.empty()) return "none";
        std::string s;
        for (const auto& i : intervals) {
            if (!s.empty()) s += " U ";
            s += "[" + std::to_string(i.lo) + "," + (i.hi == kOpenEnd ? std::string("n") : std::to_string(i.hi)) + "]";
        }
        return s;
    }
};

namespace detail {

inline long floor_div2(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

inline long isqrt(long d)
{
    long s = static_cast<long>(std::sqrt(static_cast<double>(d)));
    while (s * s > d) --s;
    while ((s + 1) * (s + 1) <= d) ++s;
    return s;
}

// floor((a - sqrt(d)) / 2), d >= 0.
inline long floor_minus_root(long a, long d)
{
    const long s = isqrt(d);
    return s * s == d ? floor_div2(a - s) : floor_div2(a - s - 1);
}

// ceil((a + sqrt(d)) / 2), d >= 0.
inline long ceil_plus_root(long a, long d)
{
    const long s = isqrt(d);
    return s * s == d ? floor_div2(a + s + 1) : floor_div2(a + s) + 1;
}

inline constexpr long kToN = std::numeric_limits<long>::max();

inline void add_interval(KRange& r, long lo, long hi)
{
    lo = std::max(lo, 1L);
    if (hi < lo) return;
    r.intervals.push_back({static_cast<std::size_t>(lo), hi == kToN ? kOpenEnd : static_cast<std::size_t>(hi)});
}

inline void normalize(KRange& r)
{
    const std::size_t cap = r.n.value_or(kOpenEnd);
    std::vector<KInterval> in;
    for (auto i : r.intervals) {
        i.hi = std::min(i.hi, cap);
        if (i.lo <= i.hi) in.push_back(i);
    }
    std::sort(in.begin(), in.end(), [](const KInterval& a, const KInterval& b) { return a.lo < b.lo; });
    std::vector<KInterval> out;
    for (const auto& i : in) {
        if (!out.empty() && (out.back().hi == kOpenEnd || i.lo <= out.back().hi + 1))
            out.back().hi = std::max(out.back().hi, i.hi);
        else
            out.push_back(i);
    }
    r.intervals = out;
    if (r.all || (out.size() == 1 && out[0].lo == 1 && out[0].hi == cap)) {
        r.all = true;
        r.intervals = {{1, cap}};
    }
}

inline KRange make_range(const std::string& source, std::optional<std::size_t> n)
{
    KRange r;
    r.source = source;
    r.n = n;
    return r;
}

} // namespace detail

// Clique K_omega whose removal leaves r non-trivial components, each c-cyclic.
inline KRange clique_range(long omega, long r, long c, std::optional<std::size_t> n = std::nullopt)
{
    if (omega < 2 || r < 0 || c < 0) throw ParameterError("clique range needs omega >= 2, r >= 0, c >= 0");
    auto out = detail::make_range("clique", n);
    const long excess = 8 * r * (c - 1);
    const long dg = 16 * omega + excess + 9;
    const long low_hi = dg < 0 ? omega - 2 : std::min(omega - 2, detail::floor_minus_root(2 * omega + 3, dg));
    detail::add_interval(out, 1, low_hi);
    const long db = 4 * omega * omega - 4 * omega + excess + 9;
    const long high_lo = db < 0 ? omega - 1 : std::max(omega - 1, detail::ceil_plus_root(3, db));
    detail::add_interval(out, high_lo, detail::kToN);
    detail::normalize(out);
    return out;
}

// K_omega with the same c-cyclic graph of order a + 1 attached at every clique vertex.
inline KRange cyclic_attachment_range(long omega, long a, long c)
{
    if (omega < 2 || a < 1 || c < 0) throw ParameterError("attachment range needs omega >= 2, a >= 1, c >= 0");
    const auto n = static_cast<std::size_t>(omega * (a + 1));
    auto out = detail::make_range("cyclic-attachment", n);
    auto fallback = [&](const std::string& why) {
        auto f = clique_range(omega, omega, c, n);
        f.source = out.source;
        f.reason = why + "; using the clique range";
        return f;
    };
    if (c == 0) {
        out.all = true;
    } else if (c == 1) {
        if (a > omega + 1) return fallback("a > omega + 1");
        detail::add_interval(out, 1, omega);
        detail::add_interval(out, omega + 2, detail::kToN);
    } else if (c == 2) {
        detail::add_interval(out, 1, omega);
        detail::add_interval(out, omega + 3, detail::kToN);
        if (a <= omega + 2) detail::add_interval(out, omega + 1, omega + 1);
        if (2 * a <= 4 * omega + 1) detail::add_interval(out, omega + 2, omega + 2);
    } else {
        // a <= omega - 1/2 + sqrt((2c - 1) omega)
        const long lhs = 2 * a - 2 * omega + 1;
        if (lhs > 0 && lhs * lhs > 4 * (2 * c - 1) * omega) return fallback("a above the cyclomatic threshold");
        out.all = true;
    }
    detail::normalize(out);
    return out;
}

// K_{s,s} whose edge removal leaves r non-trivial components, each c-cyclic.
inline KRange balanced_biclique_range(long s, long r, long c, std::optional<std::size_t> n = std::nullopt)
{
    if (s < 1 || r < 0 || c < 0) throw ParameterError("biclique range needs s >= 1, r >= 0, c >= 0");
    auto out = detail::make_range("balanced-biclique", n);
    const long d = 20 * s - 4 * s * s + 8 * r * (c - 1) + 9;
    if (d <= 0) {
        out.all = true;
    } else {
        detail::add_interval(out, 1, detail::floor_minus_root(2 * s + 3, d));
        detail::add_interval(out, detail::ceil_plus_root(2 * s + 3, d), detail::kToN);
    }
    detail::normalize(out);
    return out;
}

// n vertices, m edges, p vertices of degree r.
inline KRange single_degree_range(long n, long m, long p, long r)
{
    if (n < 2 || m < 0 || p < 1 || p > n || r < 1) throw ParameterError("degree range needs n >= 2, 1 <= p <= n, r >= 1");
    auto out = detail::make_range("single-degree", static_cast<std::size_t>(n));
    if (2 * m >= (2 * n - r - 1) * r) detail::add_interval(out, 1, r);
    const bool dense = 8 * m >= (n - 1) * (3 * n - 1) - 4 * (n - 1 - 2 * r) * p;
    if (dense && 2 * p < n) detail::add_interval(out, r + 1, detail::floor_div2(n - 1));
    if (dense && 2 * p > n) detail::add_interval(out, detail::floor_div2(n), n);
    detail::normalize(out);
    return out;
}

// n vertices, m edges, p vertices of degree r and q vertices of degree s > r.
inline KRange two_degree_range(long n, long m, long p, long q, long r, long s)
{
    if (n < 2 || m < 0 || p < 1 || q < 1 || p + q > n || r < 1 || s <= r || p == q)
        throw ParameterError("two-degree range needs 1 <= r < s, p, q >= 1, p != q, p + q <= n");
    auto out = detail::make_range("two-degree", static_cast<std::size_t>(n));
    if (2 * m >= (2 * n - r - 1) * r) detail::add_interval(out, 1, r);
    // n > p + s + 1/2 and n < p + r + 3/2 in doubled integers
    const bool mid_a = 2 * n > 2 * p + 2 * s + 1 && 2 * m >= s * (2 * n - 2 * p - s - 1) + 2 * p * r;
    const bool mid_b = 2 * n < 2 * p + 2 * r + 3 && 2 * m >= (r + 1) * (2 * n - 2 * p - r - 2) + 2 * p * r;
    if (mid_a || mid_b) detail::add_interval(out, r + 1, s);
    const bool dense = 8 * m >= (n - 1) * (3 * n - 1) - 4 * (n - 2 * r - 1) * p - 4 * (n - 2 * s - 1) * q;
    if (dense && 2 * (p + q) < n) detail::add_interval(out, s + 1, detail::floor_div2(n - 1));
    if (dense && 2 * (p + q) > n) detail::add_interval(out, detail::floor_div2(n), n);
    detail::normalize(out);
    return out;
}

// K_omega with pendant stars and one cycle C_t: k outside (omega - 1/2 - u, omega - 1/2 + u), u = sqrt(2t - 15/4).
inline KRange star_cycle_range(long omega, long t, std::optional<long> a = std::nullopt)
{
    if (omega < 2 || t < 3) throw ParameterError("star-cycle range needs omega >= 2, t >= 3");
    std::optional<std::size_t> n;
    if (a) {
        if (*a < 2) throw ParameterError("star-cycle range needs a >= 2");
        n = static_cast<std::size_t>(omega * (*a + 1) + t - 3);
    }
    auto out = detail::make_range("star-cycle", n);
    const long d = 8 * t - 15;
    detail::add_interval(out, 1, detail::floor_minus_root(2 * omega - 1, d));
    detail::add_interval(out, detail::ceil_plus_root(2 * omega - 1, d), detail::kToN);
    detail::normalize(out);
    return out;
}

// Ranges derived from a concrete graph's degree sequence (one per degree value or pair of values).
inline std::vector<KRange> degree_ranges(const Graph& g)
{
    std::vector<std::pair<long, long>> counts; // (degree, multiplicity)
    for (auto d : degree_profile(g).degrees) {
        if (d == 0) continue;
        if (!counts.empty() && counts.back().first == static_cast<long>(d))
            ++counts.back().second;
        else
            counts.emplace_back(static_cast<long>(d), 1);
    }
    const long n = static_cast<long>(g.order());
    const long m = static_cast<long>(g.size());
    std::vector<KRange> out;
    if (n < 2) return out;
    for (auto [r, p] : counts) out.push_back(single_degree_range(n, m, p, r));
    for (auto [s, q] : counts)
        for (auto [r, p] : counts)
            if (s > r && p != q) out.push_back(two_degree_range(n, m, p, q, r, s));
    return out;
}

// Clique range for a graph using its maximum clique, when every non-trivial remainder has the same cyclomatic number.
inline std::optional<KRange> clique_range_for(const Graph& g)
{
    if (g.order() > kMaxHintOrder || g.size() == 0) return std::nullopt;
    auto clique = maximum_clique(g);
    if (clique.size() < 2) return std::nullopt;
    auto census = census_without(g, clique_edges(clique));
    if (!census.uniform()) return std::nullopt;
    const long c = census.cyclomatic.empty() ? 1 : census.cyclomatic.front();
    return clique_range(static_cast<long>(clique.size()), static_cast<long>(census.cyclomatic.size()), c, g.order());
}

// Connected graphs of order a + 1 with a + c edges, each rooted at a pendant vertex.
inline std::vector<std::pair<Graph, std::size_t>> rooted_cyclic_graphs(std::size_t a, std::size_t c)
{
    std::vector<std::pair<Graph, std::size_t>> out;
    if (a == 1) {
        if (c == 0) out.emplace_back(Graph(2, {{0, 1}}), 0);
        return out;
    }
    for (const auto& h : enumerate_graphs(a + 1, true)) {
        if (h.size() != a + c) continue;
        for (std::size_t v = 0; v < h.order(); ++v)
            if (h.degree(v) == 1) out.emplace_back(h, v);
    }
    return out;
}

struct RangeInstance {
    std::string id;
    Graph graph;
    KRange range;
};

inline std::vector<RangeInstance> cyclic_attachment_instances(std::size_t max_omega, std::size_t max_a, std::size_t max_c)
{
    std::vector<RangeInstance> out;
    for (std::size_t w = 2; w <= max_omega; ++w)
        for (std::size_t a = 1; a <= max_a; ++a)
            for (std::size_t c = 0; c <= max_c; ++c) {
                const auto range = cyclic_attachment_range(static_cast<long>(w), static_cast<long>(a), static_cast<long>(c));
                for (const auto& [h, root] : rooted_cyclic_graphs(a, c)) {
                    Graph g = clique_with_cyclic_copies(w, h, root);
                    out.push_back({"omega=" + std::to_string(w) + ",a=" + std::to_string(a) + ",c=" + std::to_string(c) +
                                       "," + to_graph6(g),
                                   g, range});
                }
            }
    return out;
}

inline std::vector<RangeInstance> star_cycle_instances(std::size_t max_omega, std::size_t max_a,
                                                       const std::vector<std::size_t>& ts)
{
    std::vector<RangeInstance> out;
    for (std::size_t w = 2; w <= max_omega; ++w)
        for (std::size_t a = 2; a <= max_a; ++a)
            for (auto t : ts) {
                Graph g = clique_star_cycle(w, a, t);
                out.push_back({"omega=" + std::to_string(w) + ",a=" + std::to_string(a) + ",t=" + std::to_string(t),
                               g, star_cycle_range(static_cast<long>(w), static_cast<long>(t), static_cast<long>(a))});
            }
    return out;
}

// Brouwer margins restricted to the k values a range guarantees.
inline CheckReport check_in_range(const Graph& g, const KRange& range, const std::string& id)
{
    const auto full = brouwer_check(g, laplacian_values(g), id);
    CheckReport r;
    r.instance = id;
    r.predicate = "brouwer-in-range:" + range.source;
    for (std::size_t k = 1; k <= g.order(); ++k)
        if (range.contains(k)) detail::record(r, k, full.margins[k - 1]);
    if (r.margins.empty()) {
        r.applicable = false;
        r.note = "range is empty";
        return r;
    }
    detail::close_report(r, g.order());
    return r;
}

} // namespace gspec
