#include <charconv>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cpta/algorithms.hpp"
#include "cpta/generators.hpp"
#include "cpta/json_io.hpp"
#include "cpta/metrics.hpp"
#include "cpta/report.hpp"

namespace {

// "0,2,3" -> {0,2,3}; "" -> empty set
cpta::AttributeSet parse_parent_list(const std::string& text, int n) {
    if (text.empty()) return cpta::AttributeSet();
    uint32_t bits = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view tok(text.data() + pos, comma - pos);
        int a = -1;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), a);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw cpta::ValidationError("--parents expects comma-separated integers, got \"" +
                                        std::string(tok) + "\"");
        if (a < 0 || a > n - 2)
            throw cpta::ValidationError("parent index " + std::to_string(a) + " outside 0.." +
                                        std::to_string(n - 2));
        if ((bits >> a) & 1u)
            throw cpta::ValidationError("parent index " + std::to_string(a) + " listed twice");
        bits |= uint32_t(1) << a;
        pos = comma + 1;
    }
    return cpta::AttributeSet(bits);
}

cpta::SolveReport run_algorithm(const std::string& alg, const cpta::Instance& inst,
                                const std::optional<cpta::AttributeSet>& parents,
                                const cpta::Guards& guards) {
    if (alg == "fixed-parent") {
        if (!parents)
            throw cpta::ValidationError("--algorithm fixed-parent requires --parents");
        return cpta::optimal_for_parent_set(inst, *parents, guards);
    }
    if (alg == "exhaustive")
        return cpta::exhaustive_optimum(
            inst, parents.value_or(cpta::AttributeSet::full(inst.n() - 1)), guards);
    if (parents)
        throw cpta::ValidationError("--parents does not apply to --algorithm " + alg);
    if (alg == "trivial") return cpta::trivial_best_input(inst);
    if (alg == "alg1") return cpta::best_input_parent_set(inst, guards);
    return cpta::exact_union_majority(inst, guards);
}

// rows labeled by the instantiation of V_1..V_{n-1}, one column per input
std::string render_matrix(const cpta::VoteMatrix& m) {
    std::ostringstream os;
    std::string label;
    if (m.n == 2)
        label = "o[{V1}]";
    else if (m.n == 3)
        label = "o[{V1,V2}]";
    else
        label = "o[{V1,...,V" + std::to_string(m.n - 1) + "}]";
    const size_t lw = std::max(label.size(), size_t(m.n - 1));
    os << std::setw(int(lw)) << label;
    std::vector<size_t> cw(m.t);
    for (uint32_t v = 0; v < m.t; ++v) {
        const std::string head = "N_" + std::to_string(v + 1);
        cw[v] = head.size();
        os << "  " << head;
    }
    os << "\n";
    for (uint64_t mu = 0; mu < m.row_count(); ++mu) {
        os << std::setw(int(lw)) << cpta::context_string(uint32_t(mu), m.n - 1);
        for (uint32_t v = 0; v < m.t; ++v)
            os << "  " << std::setw(int(cw[v])) << int(m.rows[size_t(mu)].get(v));
        os << "\n";
    }
    return os.str();
}

std::string config_string(const std::vector<uint64_t>& words, uint32_t t) {
    std::string s(t, '0');
    for (uint32_t v = 0; v < t; ++v)
        if ((words[v >> 6] >> (v & 63)) & 1) s[v] = '1';
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"aggregate conditional preference tables over swap preferences"};
    app.require_subcommand(1);

    int max_matrix_n = cpta::kDefaultMatrixN;
    cpta::Guards guards;
    app.add_option("--max-matrix-n", max_matrix_n,
                   "largest n for vote-matrix materialization")
        ->capture_default_str();
    app.add_option("--max-parent-bits", guards.max_parent_bits,
                   "largest parent-set size for the fixed-parent-set solver")
        ->capture_default_str();
    app.add_option("--max-exhaustive-pool", guards.max_exhaustive_pool,
                   "largest parent pool for the exhaustive oracle")
        ->capture_default_str();

    // generate ---------------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "write a family instance as JSON");
    gen->fallthrough();
    std::string g_family, g_out;
    int g_n = 0, g_k = 0, g_t = 0, g_mp = 0;
    uint64_t g_seed = 0;
    gen->add_option("--family", g_family, "tkn | symmetric-disjoint | copy-parent | random")
        ->required();
    gen->add_option("--n", g_n, "attribute count (target included)")->required();
    auto* g_k_opt = gen->add_option("--k", g_k, "parent-set size (tkn)");
    auto* g_t_opt = gen->add_option("--t", g_t, "number of CPTs (symmetric-disjoint, random)");
    auto* g_mp_opt = gen->add_option("--max-parents", g_mp, "largest parent-set size (random)");
    auto* g_seed_opt = gen->add_option("--seed", g_seed, "PRNG seed (symmetric-disjoint, random)");
    gen->add_option("-o,--out", g_out, "output instance file")->required();
    gen->callback([&] {
        cpta::FamilySpec spec;
        spec.family = g_family;
        spec.n = g_n;
        if (g_k_opt->count()) spec.k = g_k;
        if (g_t_opt->count()) spec.t = g_t;
        if (g_mp_opt->count()) spec.max_parents = g_mp;
        if (g_seed_opt->count()) spec.seed = g_seed;
        const cpta::Instance inst = cpta::generate(spec);
        cpta::write_text_file_atomic(g_out, cpta::serialize_instance(inst));
        uint64_t rules = 0;
        for (const cpta::Cpt& c : inst.cpts()) rules += c.rule_count();
        std::cout << "n=" << inst.n() << " t=" << inst.t() << " rules=" << rules << "\n";
    });

    // solve ------------------------------------------------------------------
    auto* sol = app.add_subcommand("solve", "run an aggregation algorithm on an instance");
    sol->fallthrough();
    std::string s_alg, s_in, s_out, s_parents;
    sol->add_option("--algorithm", s_alg, "trivial | alg1 | fixed-parent | exact-union | exhaustive")
        ->required()
        ->check(CLI::IsMember({"trivial", "alg1", "fixed-parent", "exact-union", "exhaustive"}));
    sol->add_option("-i,--in", s_in, "instance file")->required();
    auto* s_par_opt = sol->add_option(
        "--parents", s_parents,
        "comma-separated attribute indices: the parent set for fixed-parent, the pool for "
        "exhaustive (default: all attributes)");
    sol->add_option("-o,--out", s_out, "write the solve report JSON here");
    sol->callback([&] {
        const cpta::Instance inst = cpta::load_instance(s_in);
        std::optional<cpta::AttributeSet> parents;
        if (s_par_opt->count()) parents = parse_parent_list(s_parents, inst.n());
        const cpta::SolveReport rep = run_algorithm(s_alg, inst, parents, guards);
        std::cout << "objective=" << rep.objective << "\n";
        if (!s_out.empty())
            cpta::write_text_file_atomic(s_out, cpta::solve_report_to_json(rep).dump(2) + "\n");
    });

    // eval -------------------------------------------------------------------
    auto* ev = app.add_subcommand("eval", "score a candidate CPT against an instance");
    ev->fallthrough();
    std::string e_in, e_cpt;
    ev->add_option("-i,--in", e_in, "instance file")->required();
    ev->add_option("-c,--cpt", e_cpt, "candidate CPT (bare CPT object or solve report)")
        ->required();
    ev->callback([&] {
        const cpta::Instance inst = cpta::load_instance(e_in);
        const cpta::Cpt cand = cpta::load_candidate_cpt(e_cpt, inst.n());
        const std::vector<uint64_t> per = cpta::per_input_disagreement(inst, cand);
        uint64_t total = 0;
        for (uint64_t v : per) total += v;
        std::cout << "objective=" << total << "\n";
        std::cout << "per_input=";
        for (size_t i = 0; i < per.size(); ++i) std::cout << (i ? "," : "") << per[i];
        std::cout << "\n";
    });

    // matrix -----------------------------------------------------------------
    auto* mtx = app.add_subcommand(
        "matrix", "print the vote matrix, freq totals, and configuration histogram");
    mtx->fallthrough();
    std::string m_in;
    mtx->add_option("-i,--in", m_in, "instance file")->required();
    mtx->callback([&] {
        const cpta::Instance inst = cpta::load_instance(m_in);
        const cpta::VoteMatrix m = cpta::build_matrix(inst, max_matrix_n);
        std::cout << render_matrix(m);
        const cpta::FreqResult f = cpta::freq(m);
        std::cout << "freq: zeros=" << f.zeros << " ones=" << f.ones << "\n";
        const cpta::ConfigHistogram h = cpta::config_histogram(m);
        std::cout << "configurations: " << h.counts.size() << " distinct\n";
        for (const auto& [words, cnt] : h.counts)
            std::cout << "  " << config_string(words, h.t) << " x " << cnt << "\n";
    });

    // report -----------------------------------------------------------------
    auto* rep = app.add_subcommand("report", "sweep a family and write the experiment CSV");
    rep->fallthrough();
    std::string r_family, r_out;
    int r_n = 0, r_nmin = 0, r_nmax = 0, r_kmin = 0, r_kmax = 0;
    int r_t = 0, r_tmin = 0, r_tmax = 0, r_mp = 0, r_count = 1;
    uint64_t r_seed = 0;
    rep->add_option("--family", r_family, "tkn | symmetric-disjoint | copy-parent | random")
        ->required();
    auto* o_n = rep->add_option("--n", r_n, "single n (sets n-min = n-max)");
    auto* o_nmin = rep->add_option("--n-min", r_nmin);
    auto* o_nmax = rep->add_option("--n-max", r_nmax);
    auto* o_kmin = rep->add_option("--k-min", r_kmin, "tkn sweep (default 2)");
    auto* o_kmax = rep->add_option("--k-max", r_kmax, "tkn sweep (default n-1)");
    auto* o_t = rep->add_option("--t", r_t, "single t (sets t-min = t-max)");
    auto* o_tmin = rep->add_option("--t-min", r_tmin);
    auto* o_tmax = rep->add_option("--t-max", r_tmax);
    auto* o_mp = rep->add_option("--max-parents", r_mp, "random family");
    rep->add_option("--seed", r_seed, "polarity seed / base seed")->capture_default_str();
    rep->add_option("--count", r_count, "random family: rows for seeds seed..seed+count-1")
        ->capture_default_str();
    rep->add_option("-o,--out", r_out, "output CSV")->required();
    rep->callback([&] {
        if (o_n->count() && (o_nmin->count() || o_nmax->count()))
            throw cpta::ValidationError("--n conflicts with --n-min/--n-max");
        if (o_t->count() && (o_tmin->count() || o_tmax->count()))
            throw cpta::ValidationError("--t conflicts with --t-min/--t-max");
        cpta::SweepSpec spec;
        spec.family = r_family;
        if (o_n->count()) spec.n_min = spec.n_max = r_n;
        if (o_nmin->count()) spec.n_min = r_nmin;
        if (o_nmax->count()) spec.n_max = r_nmax;
        if (o_kmin->count()) spec.k_min = r_kmin;
        if (o_kmax->count()) spec.k_max = r_kmax;
        if (o_t->count()) spec.t_min = spec.t_max = r_t;
        if (o_tmin->count()) spec.t_min = r_tmin;
        if (o_tmax->count()) spec.t_max = r_tmax;
        if (o_mp->count()) spec.max_parents = r_mp;
        spec.seed = r_seed;
        spec.count = r_count;
        const std::vector<cpta::ExperimentRow> rows = cpta::run_sweep(spec, guards);
        cpta::write_csv_atomic(r_out, rows);
        std::cout << "rows=" << rows.size() << " out=" << r_out << "\n";
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);                                    // prints the usage error
        return 1;
    } catch (const cpta::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cpta::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cpta::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
