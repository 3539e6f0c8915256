#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"

#include "cpta/formulas.hpp"
#include "cpta/json_io.hpp"
#include "cpta/report.hpp"

using namespace cpta;
using formulas::Rational;

namespace {

SweepSpec tkn_sweep(int n_min, int n_max) {
    SweepSpec s;
    s.family = "tkn";
    s.n_min = n_min;
    s.n_max = n_max;
    return s;
}

} // namespace

TEST_CASE("tkn sweep reproduces the closed forms") {
    const auto rows = run_sweep(tkn_sweep(3, 5));
    REQUIRE(rows.size() == 6); // (3,2) (4,2) (4,3) (5,2) (5,3) (5,4)
    const std::vector<std::pair<int, int>> params{{3, 2}, {4, 2}, {4, 3},
                                                  {5, 2}, {5, 3}, {5, 4}};
    for (size_t i = 0; i < rows.size(); ++i) {
        const ExperimentRow& r = rows[i];
        const auto [n, k] = params[i];
        CHECK(r.family == "tkn");
        CHECK(r.n == n);
        CHECK(r.k == k);
        CHECK(uint64_t(r.t) == formulas::binomial(n - 1, k) * (uint64_t(1) << k));
        CHECK(r.f_opt == formulas::tkn_optimal(n, k));
        CHECK(r.f_trivial == formulas::tkn_best_input(n, k));
        CHECK(r.f_alg1 == r.f_opt);
        CHECK(r.ratio_alg1 == Rational{1, 1});
        CHECK(r.ratio_trivial == formulas::tkn_trivial_ratio(k));
        CHECK(r.formula_opt == r.f_opt);
        CHECK(r.formula_input == r.f_trivial);
    }
}

TEST_CASE("symmetric-disjoint sweep") {
    SweepSpec s;
    s.family = "symmetric-disjoint";
    s.n_max = 6;
    s.t_min = 3;
    s.t_max = 4;
    s.seed = 5;
    const auto rows = run_sweep(s);
    REQUIRE(rows.size() == 5); // t=3: n 4..6; t=4: n 5..6
    const std::vector<std::pair<int, int>> params{{4, 3}, {5, 3}, {6, 3}, {5, 4}, {6, 4}};
    for (size_t i = 0; i < rows.size(); ++i) {
        const ExperimentRow& r = rows[i];
        const auto [n, t] = params[i];
        CHECK(r.n == n);
        CHECK(r.t == t);
        CHECK(!r.k.has_value());
        CHECK(r.f_opt == formulas::symmetric_disjoint_optimal(n, t));
        CHECK(r.f_trivial == formulas::symmetric_disjoint_best_input(n, t));
        // no input parent set beats the best input here
        CHECK(r.f_alg1 == r.f_trivial);
        CHECK(r.formula_opt == r.f_opt);
        CHECK(r.formula_input == r.f_trivial);
        // approximation ratio peaks at t = 3 with exactly 4/3
        if (t == 3) CHECK(r.ratio_trivial == Rational{4, 3});
        CHECK(3 * r.ratio_trivial.num <= 4 * r.ratio_trivial.den);
    }

    // an explicit n_min narrows each t's n-range
    SweepSpec narrow = s;
    narrow.t_max = 3;
    narrow.n_min = 5;
    CHECK(run_sweep(narrow).size() == 2);
}

TEST_CASE("copy-parent sweep") {
    SweepSpec s;
    s.family = "copy-parent";
    s.n_min = 4;
    s.n_max = 6;
    const auto rows = run_sweep(s);
    REQUIRE(rows.size() == 3);
    for (size_t i = 0; i < rows.size(); ++i) {
        const ExperimentRow& r = rows[i];
        const int n = 4 + int(i);
        CHECK(r.n == n);
        CHECK(r.t == n - 1);
        CHECK(r.f_opt == formulas::symmetric_disjoint_optimal(n, n - 1));
        CHECK(r.f_trivial == formulas::symmetric_disjoint_best_input(n, n - 1));
        CHECK(r.f_alg1 == r.f_trivial);
        CHECK(r.formula_opt == r.f_opt);
    }
}

TEST_CASE("random sweep") {
    SweepSpec s;
    s.family = "random";
    s.n_min = s.n_max = 4;
    s.t_min = s.t_max = 3;
    s.max_parents = 3;
    s.seed = 9;
    s.count = 5;
    const auto rows = run_sweep(s);
    REQUIRE(rows.size() == 5);
    for (const ExperimentRow& r : rows) {
        CHECK(r.family == "random");
        CHECK(r.n == 4);
        CHECK(r.t == 3);
        CHECK(!r.k.has_value());
        CHECK(!r.formula_opt.has_value());
        CHECK(!r.formula_input.has_value());
        CHECK(r.f_opt <= r.f_alg1);
        CHECK(r.f_alg1 <= r.f_trivial);
        CHECK(r.f_trivial <= 2 * r.f_opt);
        CHECK(r.ratio_trivial == formulas::make_ratio(r.f_trivial, r.f_opt));
        CHECK(r.ratio_alg1 == formulas::make_ratio(r.f_alg1, r.f_opt));
    }
    // rows land in seed order no matter how the solves are scheduled
    CHECK(csv_render(run_sweep(s)) == csv_render(rows));

    // a single input makes every objective 0 and every ratio 1/1
    SweepSpec lone = s;
    lone.t_min = lone.t_max = 1;
    lone.count = 3;
    for (const ExperimentRow& r : run_sweep(lone)) {
        CHECK(r.f_opt == 0);
        CHECK(r.f_trivial == 0);
        CHECK(r.ratio_trivial == Rational{1, 1});
        CHECK(r.ratio_alg1 == Rational{1, 1});
    }
}

TEST_CASE("sweep validation") {
    CHECK_THROWS_AS(run_sweep(SweepSpec{}), ValidationError); // no family, no range
    SweepSpec bad = tkn_sweep(0, 4);
    CHECK_THROWS_AS(run_sweep(bad), ValidationError);
    SweepSpec unknown = tkn_sweep(3, 4);
    unknown.family = "nope";
    CHECK_THROWS_AS(run_sweep(unknown), ValidationError);
    SweepSpec empty = tkn_sweep(3, 3);
    empty.k_min = 5; // k-range 5..2 selects nothing
    CHECK_THROWS_AS(run_sweep(empty), ValidationError);

    SweepSpec rnd;
    rnd.family = "random";
    rnd.n_min = 3;
    rnd.n_max = 4; // must be a single n
    rnd.t_min = rnd.t_max = 2;
    rnd.max_parents = 2;
    CHECK_THROWS_AS(run_sweep(rnd), ValidationError);
    rnd.n_min = 4;
    CHECK_NOTHROW(run_sweep(rnd));
    rnd.max_parents.reset();
    CHECK_THROWS_AS(run_sweep(rnd), ValidationError);
    rnd.max_parents = 2;
    rnd.t_max = 3; // must be a single t
    CHECK_THROWS_AS(run_sweep(rnd), ValidationError);
    rnd.t_max = 2;
    rnd.count = 0;
    CHECK_THROWS_AS(run_sweep(rnd), ValidationError);
}

TEST_CASE("csv rendering") {
    const auto rows = run_sweep(tkn_sweep(3, 4));
    const char* golden =
        "# schema=1\n"
        "family,n,k,t,f_opt,f_trivial,f_alg1,ratio_trivial_num,ratio_trivial_den,"
        "ratio_alg1_num,ratio_alg1_den,formula_opt,formula_input\n"
        "tkn,3,2,4,4,6,4,3,2,1,1,4,6\n"
        "tkn,4,2,12,24,36,24,3,2,1,1,24,36\n"
        "tkn,4,3,8,8,14,8,7,4,1,1,8,14\n";
    CHECK(csv_render(rows) == golden);

    // inapplicable k and unknown formulas render as empty cells
    ExperimentRow bare;
    bare.family = "random";
    bare.n = 4;
    bare.t = 3;
    bare.f_opt = 5;
    bare.f_trivial = 9;
    bare.f_alg1 = 5;
    bare.ratio_trivial = formulas::make_ratio(9, 5);
    bare.ratio_alg1 = formulas::make_ratio(5, 5);
    const std::string text = csv_render({bare});
    CHECK(text.find("random,4,,3,5,9,5,9,5,1,1,,\n") != std::string::npos);
}

TEST_CASE("csv files are written atomically") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "cpta-report-test.csv").string();
    const auto rows = run_sweep(tkn_sweep(3, 4));
    write_csv_atomic(path, rows);
    CHECK(read_text_file(path) == csv_render(rows));
    CHECK(!std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove(path);
}
