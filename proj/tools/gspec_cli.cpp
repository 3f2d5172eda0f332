#include "gspec/algebraic.hpp"
#include "gspec/catalog.hpp"
#include "gspec/conjecture.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/families.hpp"
#include "gspec/graph6.hpp"
#include "gspec/quotient.hpp"
#include "gspec/ranges.hpp"
#include "gspec/spectrum.hpp"
#include "gspec/tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace gspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x)
{
    if (std::abs(x) < 1e-11) x = 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) { return std::strtod(fmt(x).c_str(), nullptr); }

void round_json(nlohmann::json& j)
{
    if (j.is_number_float()) j = round12(j.get<double>());
    else if (j.is_array() || j.is_object())
        for (auto& v : j) round_json(v);
}

unsigned default_jobs()
{
    if (const char* env = std::getenv("GSPEC_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs f(i) for i in [0, count) on up to `jobs` threads; results keep index order.
template <class R>
std::vector<R> parallel_map(std::size_t count, unsigned jobs, const std::function<R(std::size_t)>& f)
{
    std::vector<R> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
                return;
            }
        }
    };
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path)
    {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw ParameterError("cannot open '" + path + "' for writing");
        stream = &file;
    }
    std::ostream& operator*() { return *stream; }
};

// ---- spectrum ----

struct SpectrumArgs {
    std::optional<std::size_t> zero_divisor;
    std::optional<std::size_t> power;
    std::string family;
    std::optional<std::size_t> n;
    std::vector<std::size_t> params;
    std::string graph6_file;
    std::string matrix = "l";
    std::string alpha;
    std::string via = "dense";
    bool check = false;
    bool char_poly = false;
    std::string format = "text";
    std::string output;
};

struct Input {
    std::string id;
    Graph graph;
    std::optional<AlgebraicGraph> algebraic;
};

std::vector<Input> spectrum_inputs(const SpectrumArgs& a)
{
    const int sources = (a.zero_divisor ? 1 : 0) + (a.power ? 1 : 0) + (a.family.empty() ? 0 : 1) +
                        (a.graph6_file.empty() ? 0 : 1);
    if (sources != 1)
        throw ParameterError("give exactly one of --zero-divisor, --power-graph, --family, --graph6-file");
    std::vector<Input> out;
    if (a.zero_divisor) {
        auto z = zero_divisor_graph(*a.zero_divisor);
        out.push_back({"zero-divisor-" + std::to_string(*a.zero_divisor), z.graph, z});
    } else if (a.power) {
        auto p = power_graph(*a.power);
        out.push_back({"power-" + std::to_string(*a.power), p.graph, p});
    } else if (!a.family.empty()) {
        std::vector<std::size_t> params = a.params;
        if (params.empty() && a.n) params = {*a.n};
        if (params.empty()) throw ParameterError("--family needs --n or --params");
        std::string id = a.family;
        for (auto p : params) id += "-" + std::to_string(p);
        out.push_back({id, build_named({parse_family(a.family), params}), std::nullopt});
    } else {
        auto graphs = read_graph6_file(a.graph6_file);
        for (const auto& g : graphs) out.push_back({to_graph6(g), g, std::nullopt});
    }
    return out;
}

nlohmann::json spectrum_json(const Spectrum& s)
{
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [v, m] : s.pairs) pairs.push_back({{"value", v}, {"multiplicity", m}});
    return {{"kind", s.kind}, {"eigenvalues", pairs}};
}

int run_spectrum(const SpectrumArgs& a)
{
    const MatrixKind kind = parse_kind(a.matrix);
    Rational alpha = 0;
    if (kind == MatrixKind::Dalpha) {
        if (a.alpha.empty()) throw ParameterError("--matrix dalpha needs --alpha");
        alpha = parse_rational(a.alpha);
    } else if (!a.alpha.empty()) {
        throw ParameterError("--alpha only applies to --matrix dalpha");
    }
    if (a.via != "dense" && a.via != "quotient") throw ParameterError("--via is dense or quotient");
    if (a.format != "text" && a.format != "json" && a.format != "csv") throw ParameterError("--format is text, json or csv");

    const auto inputs = spectrum_inputs(a);
    Output out(a.output);
    int status = kExitOk;
    nlohmann::json all = nlohmann::json::array();
    if (a.format == "csv") *out << "instance_id,kind,value,multiplicity\n";

    for (const auto& in : inputs) {
        if (is_distance_kind(kind) && !is_connected(in.graph)) {
            auto comps = components(in.graph);
            throw ConnectivityError(comps[0][0], comps.size() > 1 ? comps[1][0] : comps[0][0]);
        }
        nlohmann::json record = {{"instance_id", in.id}, {"order", in.graph.order()}, {"size", in.graph.size()}};
        Spectrum result;
        std::optional<ShortcutSpectrum> shortcut;
        if (a.via == "quotient") {
            if (!in.algebraic) throw ParameterError("--via quotient needs --zero-divisor or --power-graph input");
            const auto& spec = in.algebraic->decomposition.spec;
            if (kind == MatrixKind::NL) shortcut = nl_joined_union_spectrum(spec);
            else if (kind == MatrixKind::DistQ) shortcut = dsq_joined_union_spectrum(spec);
            else throw ParameterError("--via quotient supports --matrix nl and dsq");
            result = shortcut->combined;
            record["shortcut"] = to_json(*shortcut);
        } else {
            result = spectrum(in.graph, kind, alpha);
        }
        record["spectrum"] = spectrum_json(result);
        if (kind == MatrixKind::L) record["laplacian_energy"] = laplacian_energy(in.graph).value;
        if (kind == MatrixKind::Dalpha && alpha < 1) record["energy"] = generalized_distance_energy(in.graph, alpha).value;
        if (a.char_poly) {
            auto m = build_matrix(in.graph, kind, alpha);
            if (!m.exact) throw ParameterError("no exact characteristic polynomial for " + kind_name(kind));
            record["char_poly"] = char_poly_exact(m).to_string();
        }
        std::optional<double> deviation;
        if (a.check) {
            auto dense = spectrum(in.graph, kind, alpha);
            deviation = max_deviation(dense.values(), result.values());
            const bool ok = result.total() == dense.total() && same_values(dense.values(), result.values());
            record["check"] = {{"max_deviation", *deviation}, {"pass", ok}};
            if (!ok) status = kExitFailure;
        }
        round_json(record);

        if (a.format == "json") {
            all.push_back(record);
        } else if (a.format == "csv") {
            for (const auto& [v, m] : result.pairs) *out << in.id << "," << result.kind << "," << fmt(v) << "," << m << "\n";
        } else {
            *out << in.id << " " << result.kind << " n=" << in.graph.order() << " m=" << in.graph.size() << "\n";
            if (shortcut) {
                std::vector<std::pair<std::string, std::size_t>> merged;
                for (const auto& e : shortcut->inherited) {
                    const std::string v = e.exact ? to_string(*e.exact) : fmt(e.value);
                    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& x) { return x.first == v; });
                    if (it == merged.end()) merged.emplace_back(v, e.multiplicity);
                    else it->second += e.multiplicity;
                }
                *out << "  inherited:";
                for (const auto& [v, m] : merged) *out << " " << v << "^" << m;
                *out << "\n  quotient roots:";
                for (double x : shortcut->quotient_eigenvalues) *out << " " << fmt(x);
                *out << "\n";
                if (auto cp = shortcut->quotient_char_poly()) *out << "  quotient char poly: " << cp->to_string() << "\n";
            }
            *out << "  spectrum:";
            for (const auto& [v, m] : result.pairs) *out << " " << fmt(v) << (m > 1 ? "^" + std::to_string(m) : "");
            *out << "\n";
            if (record.contains("laplacian_energy")) *out << "  laplacian energy: " << fmt(record["laplacian_energy"]) << "\n";
            if (record.contains("energy")) *out << "  energy: " << fmt(record["energy"]) << "\n";
            if (record.contains("char_poly")) *out << "  char poly: " << record["char_poly"].get<std::string>() << "\n";
            if (deviation)
                *out << "  check: " << (record["check"]["pass"].get<bool>() ? "pass" : "FAIL")
                     << " max deviation " << fmt(*deviation) << "\n";
        }
    }
    if (a.format == "json") *out << all.dump(2) << "\n";
    return status;
}

// ---- verify ----

struct VerifyArgs {
    std::string predicate;
    std::optional<std::size_t> all_connected;
    std::optional<std::size_t> n_max;
    std::string graph6_file;
    std::string alpha = "1/2";
    std::string csv;
    bool all_rows = false;
};

struct Instance {
    std::string id;
    Graph graph;
};

std::vector<Instance> verify_inputs(const VerifyArgs& a)
{
    const bool trees = a.predicate == "le-trees";
    const int sources = (a.all_connected ? 1 : 0) + (a.n_max ? 1 : 0) + (a.graph6_file.empty() ? 0 : 1);
    if (sources != 1) throw ParameterError("give exactly one of --all-connected, --n-max, --graph6-file");
    std::vector<Instance> out;
    if (!a.graph6_file.empty()) {
        for (const auto& g : read_graph6_file(a.graph6_file)) out.push_back({to_graph6(g), g});
    } else if (a.all_connected) {
        if (trees) throw ParameterError("le-trees takes --n-max or --graph6-file");
        for (std::size_t n = 1; n <= *a.all_connected; ++n)
            for (auto& g : enumerate_graphs(n, true)) out.push_back({to_graph6(g), std::move(g)});
    } else {
        if (!trees) throw ParameterError("--n-max enumerates trees; use it with le-trees");
        for (std::size_t n = 2; n <= *a.n_max; ++n)
            for_each_tree(n, [&](const Graph& t) {
                out.push_back({to_graph6(t), t});
                return true;
            });
    }
    return out;
}

std::vector<CheckReport> verify_one(const std::string& predicate, const Instance& in, const Rational& alpha,
                                    const std::map<std::size_t, TreeEnergyReference>& refs)
{
    const Graph& g = in.graph;
    if (predicate == "brouwer") return {brouwer_check(g, laplacian_values(g), in.id)};
    if (predicate == "gmb") {
        auto r = gmb_check(g, laplacian_values(g), in.id);
        if (is_threshold(g) && !r.equality) {
            r.pass = false;
            r.note = "threshold graph without equality";
        }
        return {r};
    }
    if (predicate == "majorization") return majorization_checks(g, laplacian_values(g), in.id);
    if (predicate == "sk-bounds") return sk_upper_bounds(g, laplacian_values(g), find_hints(g), in.id);
    if (predicate == "le-trees") {
        if (!is_tree(g)) throw PreconditionError(in.id + " is not a tree");
        if (g.order() < 2) return {};
        return le_checks(g, refs.at(g.order()), in.id);
    }
    if (predicate == "dalpha-bounds") {
        if (!is_connected(g)) throw PreconditionError(in.id + " is disconnected; D_alpha needs a connected graph");
        return dalpha_bounds(g, alpha, in.id);
    }
    throw ParameterError("unknown predicate '" + predicate + "'");
}

void write_row(std::ostream& os, const CheckReport& r)
{
    os << r.instance << "," << r.predicate << "," << (r.pass ? "true" : "false") << "," << r.worst_k << ","
       << fmt(r.margin) << "\n";
}

int run_verify(const VerifyArgs& a, unsigned jobs)
{
    static const std::vector<std::string> known{"brouwer", "gmb", "le-trees", "majorization", "dalpha-bounds", "sk-bounds"};
    if (std::find(known.begin(), known.end(), a.predicate) == known.end())
        throw ParameterError("unknown predicate '" + a.predicate + "'");
    const Rational alpha = parse_rational(a.alpha);
    const auto inputs = verify_inputs(a);
    std::map<std::size_t, TreeEnergyReference> refs;
    if (a.predicate == "le-trees")
        for (const auto& in : inputs)
            if (in.graph.order() >= 2 && !refs.count(in.graph.order()))
                refs.emplace(in.graph.order(), tree_energy_reference(in.graph.order()));

    const auto results = parallel_map<std::vector<CheckReport>>(
        inputs.size(), jobs, [&](std::size_t i) { return verify_one(a.predicate, inputs[i], alpha, refs); });

    SweepSummary summary;
    std::optional<Output> csv;
    if (!a.csv.empty()) {
        csv.emplace(a.csv);
        **csv << "instance_id,predicate,pass,worst_k,margin\n";
    }
    bool header = false;
    for (const auto& rows : results)
        for (const auto& r : rows) {
            if (!r.applicable) continue;
            summary.add(r);
            if (csv) write_row(**csv, r);
            if (a.all_rows || !r.pass) {
                if (!header) {
                    std::cout << "instance_id,predicate,pass,worst_k,margin\n";
                    header = true;
                }
                write_row(std::cout, r);
            }
        }

    int status = summary.failed == 0 ? kExitOk : kExitFailure;
    if (a.predicate == "le-trees" && a.n_max) {
        std::map<std::size_t, std::size_t> per_n;
        for (const auto& in : inputs) ++per_n[in.graph.order()];
        const auto& known_counts = free_tree_counts();
        for (const auto& [n, count] : per_n)
            if (count != known_counts[n]) {
                std::cout << "tree count mismatch at n=" << n << ": " << count << " vs " << known_counts[n] << "\n";
                status = kExitFailure;
            }
    }
    std::cout << "checked " << summary.checked << ", failed " << summary.failed << ", min-margin "
              << (summary.checked ? fmt(summary.min_margin) : std::string("n/a"));
    if (summary.checked) std::cout << " (" << summary.worst_instance << ", k=" << summary.worst_k << ")";
    std::cout << "\n";
    return status;
}

// ---- ranges ----

struct RangeArgs {
    std::string which;
    std::optional<long> omega, r, c, s, a, t, n, m, p, q;
    bool cross_check = false;
};

long need(const std::optional<long>& v, const std::string& flag)
{
    if (!v) throw ParameterError("this range needs " + flag);
    return *v;
}

std::vector<RangeInstance> degree_instances(long n, long m, const std::vector<std::pair<long, long>>& want)
{
    if (n > static_cast<long>(kMaxEnumerationOrder)) throw CapacityError("cross-check enumerates graphs up to n = 8");
    std::vector<RangeInstance> out;
    for (auto& g : enumerate_graphs(static_cast<std::size_t>(n), true)) {
        if (static_cast<long>(g.size()) != m) continue;
        bool ok = true;
        for (auto [deg, count] : want) {
            long have = 0;
            for (std::size_t v = 0; v < g.order(); ++v) have += static_cast<long>(g.degree(v)) == deg;
            ok = ok && have == count;
        }
        if (ok) out.push_back({to_graph6(g), g, KRange{}});
    }
    return out;
}

int run_ranges(const RangeArgs& a, unsigned jobs)
{
    KRange range;
    std::string label = a.which;
    std::vector<RangeInstance> instances;
    bool can_cross = true;
    auto tag = [&](const std::string& k, long v) { label += " " + k + "=" + std::to_string(v); };

    if (a.which == "clique") {
        const long w = need(a.omega, "--omega"), r = need(a.r, "--r"), c = need(a.c, "--c");
        tag("omega", w), tag("r", r), tag("c", c);
        std::optional<std::size_t> n;
        if (a.n) n = static_cast<std::size_t>(*a.n);
        range = clique_range(w, r, c, n);
        if (a.cross_check) {
            if (r != w) throw ParameterError("clique cross-check generates r = omega attachments; pass --r equal to --omega");
            for (long aa = 1; aa <= 3; ++aa)
                for (const auto& [h, root] : rooted_cyclic_graphs(static_cast<std::size_t>(aa), static_cast<std::size_t>(c))) {
                    Graph g = clique_with_cyclic_copies(static_cast<std::size_t>(w), h, root);
                    instances.push_back({to_graph6(g), g, clique_range(w, r, c, g.order())});
                }
        }
    } else if (a.which == "cyclic-attachment") {
        const long w = need(a.omega, "--omega"), aa = need(a.a, "--a"), c = need(a.c, "--c");
        tag("omega", w), tag("a", aa), tag("c", c);
        range = cyclic_attachment_range(w, aa, c);
        if (a.cross_check) {
            if (aa + 1 > static_cast<long>(kMaxEnumerationOrder)) throw CapacityError("cross-check needs a <= 7");
            for (const auto& [h, root] : rooted_cyclic_graphs(static_cast<std::size_t>(aa), static_cast<std::size_t>(c))) {
                Graph g = clique_with_cyclic_copies(static_cast<std::size_t>(w), h, root);
                instances.push_back({to_graph6(g), g, range});
            }
        }
    } else if (a.which == "balanced-biclique") {
        const long s = need(a.s, "--s"), r = need(a.r, "--r"), c = need(a.c, "--c");
        tag("s", s), tag("r", r), tag("c", c);
        std::optional<std::size_t> n;
        if (a.n) n = static_cast<std::size_t>(*a.n);
        range = balanced_biclique_range(s, r, c, n);
        can_cross = false;
    } else if (a.which == "single-degree") {
        const long n = need(a.n, "--n"), m = need(a.m, "--m"), p = need(a.p, "--p"), r = need(a.r, "--r");
        tag("n", n), tag("m", m), tag("p", p), tag("r", r);
        range = single_degree_range(n, m, p, r);
        if (a.cross_check) instances = degree_instances(n, m, {{r, p}});
    } else if (a.which == "two-degree") {
        const long n = need(a.n, "--n"), m = need(a.m, "--m"), p = need(a.p, "--p"), q = need(a.q, "--q");
        const long r = need(a.r, "--r"), s = need(a.s, "--s");
        tag("n", n), tag("m", m), tag("p", p), tag("q", q), tag("r", r), tag("s", s);
        range = two_degree_range(n, m, p, q, r, s);
        if (a.cross_check) instances = degree_instances(n, m, {{r, p}, {s, q}});
    } else if (a.which == "star-cycle") {
        const long w = need(a.omega, "--omega"), t = need(a.t, "--t");
        tag("omega", w), tag("t", t);
        if (a.a) tag("a", *a.a);
        range = star_cycle_range(w, t, a.a);
        if (a.cross_check) {
            const long lo = a.a ? *a.a : 2, hi = a.a ? *a.a : 4;
            for (long aa = lo; aa <= hi; ++aa) {
                Graph g = clique_star_cycle(static_cast<std::size_t>(w), static_cast<std::size_t>(aa), static_cast<std::size_t>(t));
                instances.push_back({"a=" + std::to_string(aa) + "," + to_graph6(g), g, star_cycle_range(w, t, aa)});
            }
        }
    } else {
        throw ParameterError("unknown range '" + a.which +
                             "'; expected clique, cyclic-attachment, balanced-biclique, single-degree, two-degree, star-cycle");
    }

    std::cout << label << ": " << (range.all ? "" : "k in ") << range.to_string() << "\n";
    if (!range.reason.empty()) std::cout << "note: " << range.reason << "\n";
    if (!a.cross_check) return kExitOk;
    if (!can_cross) throw ParameterError("no instance generator for " + a.which);
    for (auto& in : instances)
        if (in.range.source.empty()) in.range = range;

    const auto reports = parallel_map<CheckReport>(instances.size(), jobs, [&](std::size_t i) {
        return check_in_range(instances[i].graph, instances[i].range, instances[i].id);
    });
    SweepSummary summary;
    for (const auto& r : reports) {
        summary.add(r);
        if (r.applicable && !r.pass) write_row(std::cout, r);
    }
    std::cout << "instances " << instances.size() << "\n";
    std::cout << "checked " << summary.checked << ", failed " << summary.failed << ", min-margin "
              << (summary.checked ? fmt(summary.min_margin) : std::string("n/a")) << "\n";
    return summary.failed == 0 ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graph spectra, energies and conjecture sweeps"};
    app.require_subcommand(1);
    unsigned jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker threads (default: GSPEC_JOBS or hardware concurrency)")->check(CLI::PositiveNumber);

    SpectrumArgs sa;
    auto* sp = app.add_subcommand("spectrum", "eigenvalues of a graph matrix");
    sp->add_option("--zero-divisor", sa.zero_divisor, "zero-divisor graph of Z_N");
    sp->add_option("--power-graph", sa.power, "power graph of Z_N");
    sp->add_option("--family", sa.family, "named family");
    sp->add_option("--n", sa.n, "single family parameter");
    sp->add_option("--params", sa.params, "family parameters")->delimiter(',');
    sp->add_option("--graph6-file", sa.graph6_file, "graph6 input, one graph per line");
    sp->add_option("--matrix", sa.matrix, "a|l|nl|q|d|dl|dsq|dalpha|tr");
    sp->add_option("--alpha", sa.alpha, "alpha for dalpha, decimal or p/q");
    sp->add_option("--via", sa.via, "dense|quotient");
    sp->add_flag("--check", sa.check, "compare against the dense eigensolver");
    sp->add_flag("--char-poly", sa.char_poly, "exact characteristic polynomial");
    sp->add_option("--format", sa.format, "text|json|csv");
    sp->add_option("--output", sa.output, "output path (default stdout)");

    VerifyArgs va;
    auto* vp = app.add_subcommand("verify", "sweep a predicate over a corpus");
    vp->add_option("predicate", va.predicate, "brouwer|gmb|le-trees|majorization|dalpha-bounds|sk-bounds")->required();
    vp->add_option("--all-connected", va.all_connected, "all connected graphs up to this order (<= 8)");
    vp->add_option("--n-max", va.n_max, "all trees up to this order (<= 20)");
    vp->add_option("--graph6-file", va.graph6_file, "graph6 corpus");
    vp->add_option("--alpha", va.alpha, "alpha for dalpha-bounds");
    vp->add_option("--csv", va.csv, "write every row to this CSV file");
    vp->add_flag("--all-rows", va.all_rows, "print every row, not only failures");

    RangeArgs ra;
    auto* rp = app.add_subcommand("ranges", "k values guaranteed by sufficient conditions");
    rp->add_option("which", ra.which, "clique|cyclic-attachment|balanced-biclique|single-degree|two-degree|star-cycle")
        ->required();
    rp->add_option("--omega", ra.omega, "clique order");
    rp->add_option("--r", ra.r, "component count, or the lower degree for degree ranges");
    rp->add_option("--c", ra.c, "cyclomatic number of each component");
    rp->add_option("--s", ra.s, "biclique side, or the higher degree for two-degree");
    rp->add_option("--a", ra.a, "attachment order minus one, or pendants per clique vertex");
    rp->add_option("--t", ra.t, "cycle length");
    rp->add_option("--n", ra.n, "graph order");
    rp->add_option("--m", ra.m, "edge count");
    rp->add_option("--p", ra.p, "vertices of the lower degree");
    rp->add_option("--q", ra.q, "vertices of the higher degree");
    rp->add_flag("--cross-check", ra.cross_check, "check Brouwer's bound on generated instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sp->parsed()) return run_spectrum(sa);
        if (vp->parsed()) return run_verify(va, jobs);
        if (rp->parsed()) return run_ranges(ra, jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
