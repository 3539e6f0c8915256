#include "cpta/report.hpp"

#include <exception>
#include <sstream>

#include "cpta/generators.hpp"
#include "cpta/json_io.hpp"
#include "cpta/metrics.hpp"

namespace cpta {

namespace {

struct Job {
    FamilySpec gen;
    std::optional<int> k_col;
    std::optional<uint64_t> formula_opt;
    std::optional<uint64_t> formula_input;
};

ExperimentRow solve_job(const Job& job, const Guards& guards) {
    const Instance inst = generate(job.gen);
    ExperimentRow row;
    row.family = job.gen.family;
    row.n = inst.n();
    row.k = job.k_col;
    row.t = int(inst.t());
    row.f_opt = exact_union_majority(inst, guards).objective;
    row.f_trivial = trivial_best_input(inst).objective;
    row.f_alg1 = best_input_parent_set(inst, guards).objective;
    row.ratio_trivial = formulas::make_ratio(row.f_trivial, row.f_opt);
    row.ratio_alg1 = formulas::make_ratio(row.f_alg1, row.f_opt);
    row.formula_opt = job.formula_opt;
    row.formula_input = job.formula_input;
    return row;
}

std::vector<Job> enumerate_jobs(const SweepSpec& spec) {
    std::vector<Job> jobs;
    if (spec.n_max <= 0) throw ValidationError("sweep needs n_max >= 2");
    const bool n_range_ok = spec.n_min > 0 && spec.n_min <= spec.n_max;
    if (spec.family == "tkn") {
        if (!n_range_ok) throw ValidationError("tkn sweep needs 0 < n_min <= n_max");
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            const int klo = std::max(2, spec.k_min.value_or(2));
            const int khi = std::min(n - 1, spec.k_max.value_or(n - 1));
            for (int k = klo; k <= khi; ++k)
                jobs.push_back(Job{FamilySpec{"tkn", n, k, {}, {}, {}},
                                   k,
                                   formulas::tkn_optimal(n, k),
                                   formulas::tkn_best_input(n, k)});
        }
    } else if (spec.family == "symmetric-disjoint") {
        // n_min defaults to the family's smallest legal n for each t, t+1
        if (spec.n_min > spec.n_max)
            throw ValidationError("symmetric-disjoint sweep needs n_min <= n_max");
        const int tlo = spec.t_min.value_or(3);
        const int thi = spec.t_max.value_or(spec.n_max - 1);
        for (int t = tlo; t <= thi; ++t)
            for (int n = std::max(t + 1, spec.n_min); n <= spec.n_max; ++n)
                jobs.push_back(Job{FamilySpec{"symmetric-disjoint", n, {}, t, {}, spec.seed},
                                   {},
                                   formulas::symmetric_disjoint_optimal(n, t),
                                   formulas::symmetric_disjoint_best_input(n, t)});
    } else if (spec.family == "copy-parent") {
        if (!n_range_ok) throw ValidationError("copy-parent sweep needs 0 < n_min <= n_max");
        for (int n = spec.n_min; n <= spec.n_max; ++n)
            jobs.push_back(Job{FamilySpec{"copy-parent", n, {}, {}, {}, {}},
                               {},
                               formulas::symmetric_disjoint_optimal(n, n - 1),
                               formulas::symmetric_disjoint_best_input(n, n - 1)});
    } else if (spec.family == "random") {
        if (spec.n_min != spec.n_max)
            throw ValidationError("random sweep uses a single n (n_min = n_max)");
        if (!spec.t_min || !spec.t_max || *spec.t_min != *spec.t_max)
            throw ValidationError("random sweep uses a single t (t_min = t_max)");
        if (!spec.max_parents) throw ValidationError("random sweep requires max_parents");
        if (spec.count < 1) throw ValidationError("random sweep needs count >= 1");
        for (int i = 0; i < spec.count; ++i)
            jobs.push_back(Job{FamilySpec{"random", spec.n_min, {}, *spec.t_min,
                                          *spec.max_parents, spec.seed + uint64_t(i)},
                               {},
                               {},
                               {}});
    } else {
        throw ValidationError("unknown family \"" + spec.family + "\"");
    }
    if (jobs.empty()) throw ValidationError("sweep parameter ranges produce no rows");
    return jobs;
}

} // namespace

std::vector<ExperimentRow> run_sweep(const SweepSpec& spec, const Guards& guards) {
    const std::vector<Job> jobs = enumerate_jobs(spec);
    std::vector<ExperimentRow> rows(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    // rows land in their parameter-order slots, so output order never
    // depends on scheduling
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < int64_t(jobs.size()); ++i) {
        try {
            rows[size_t(i)] = solve_job(jobs[size_t(i)], guards);
        } catch (...) {
            errors[size_t(i)] = std::current_exception();
        }
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e); // earliest failing row wins
    return rows;
}

std::string csv_render(const std::vector<ExperimentRow>& rows) {
    std::ostringstream os;
    os << "# schema=1\n";
    os << "family,n,k,t,f_opt,f_trivial,f_alg1,ratio_trivial_num,ratio_trivial_den,"
          "ratio_alg1_num,ratio_alg1_den,formula_opt,formula_input\n";
    for (const ExperimentRow& r : rows) {
        os << r.family << ',' << r.n << ',';
        if (r.k) os << *r.k;
        os << ',' << r.t << ',' << r.f_opt << ',' << r.f_trivial << ',' << r.f_alg1 << ','
           << r.ratio_trivial.num << ',' << r.ratio_trivial.den << ',' << r.ratio_alg1.num << ','
           << r.ratio_alg1.den << ',';
        if (r.formula_opt) os << *r.formula_opt;
        os << ',';
        if (r.formula_input) os << *r.formula_input;
        os << '\n';
    }
    return os.str();
}

void write_csv_atomic(const std::string& path, const std::vector<ExperimentRow>& rows) {
    write_text_file_atomic(path, csv_render(rows));
}

} // namespace cpta
