#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "fixtures.hpp"
#include "qalg/lemma.hpp"

using namespace qalg;

namespace {

std::filesystem::path corpus_dir() {
    if (const char* env = std::getenv("QALG_CORPUS")) return env;
    return std::filesystem::path(__FILE__).parent_path().parent_path() / "corpus";
}

}  // namespace

TEST_CASE("dual numbers: S vs S passes with the diagonal pattern") {
    const auto alg = fixtures::build_q(fixtures::dual_numbers);
    const auto s = simple(alg, 0);
    LemmaOptions opt;
    opt.i_max = 4;
    const auto report = verify_decomposition(s, s, opt);
    CHECK(report.verdict == LemmaVerdict::pass);
    CHECK(report.vanishing_ok);
    CHECK(report.sums_ok);
    CHECK(report.positive_cells >= 1);
    for (const auto& [cell, dim] : report.graded) {
        CHECK(dim == ((cell.second == -cell.first) ? 1 : 0));
    }
}

TEST_CASE("projective source passes with only the i = 0 row") {
    const auto alg = fixtures::build_q(fixtures::a2);
    const auto p = projective(alg, 0);
    const auto s = simple(alg, 0);
    LemmaOptions opt;
    opt.i_max = 3;
    const auto report = verify_decomposition(p, s, opt);
    CHECK(report.verdict == LemmaVerdict::pass);
    for (const auto& [cell, dim] : report.graded) {
        if (cell.first >= 1) CHECK(dim == 0);
    }
}

TEST_CASE("hypothesis violations are input errors, not lemma failures") {
    const auto alg = fixtures::build_q(fixtures::dual_numbers);
    const auto s = simple(alg, 0);
    // N concentrated in a positive degree
    CHECK(verify_decomposition(s, twist(s, -1)).verdict == LemmaVerdict::input_error);
    // M generated in a negative degree
    CHECK(verify_decomposition(twist(s, 1), s).verdict == LemmaVerdict::input_error);
    // but N in a negative degree is fine
    CHECK(verify_decomposition(s, twist(s, 1), {4, {}, 64}).verdict == LemmaVerdict::pass);
}

TEST_CASE("cross-engine sums hold on k[x]/(x^3)") {
    const auto alg = fixtures::build_q(fixtures::truncated_cubic);
    const auto s = simple(alg, 0);
    LemmaOptions opt;
    opt.i_max = 4;
    const auto report = verify_decomposition(s, s, opt);
    CHECK(report.verdict == LemmaVerdict::pass);
    // row sums are 1 = dim Ext^i(S, S) in every degree
    for (const long d : report.ungraded_dims) CHECK(d == 1);
}

TEST_CASE("window cap produces an inconclusive verdict, never a pass") {
    const auto alg = fixtures::build_q(fixtures::truncated_cubic);
    const auto s = simple(alg, 0);
    LemmaOptions opt;
    opt.i_max = 6;  // nonzero cells reach j = -9
    opt.window_cap = 6;
    const auto report = verify_decomposition(s, s, opt);
    CHECK(report.verdict == LemmaVerdict::inconclusive);
}

TEST_CASE("explicit start windows stabilize to the same verdict") {
    const auto alg = fixtures::build_q(fixtures::nakayama_cyclic);
    const auto m = simple(alg, 0);
    const auto n = simple(alg, 1);
    LemmaOptions narrow;
    narrow.i_max = 5;
    narrow.window = {{-1, 1}};
    LemmaOptions wide;
    wide.i_max = 5;
    wide.window = {{-40, 2}};
    const auto a = verify_decomposition(m, n, narrow);
    const auto b = verify_decomposition(m, n, wide);
    CHECK(a.verdict == LemmaVerdict::pass);
    CHECK(b.verdict == LemmaVerdict::pass);
    // same nonzero cells regardless of the route taken
    for (const auto& [cell, dim] : b.graded) {
        if (dim != 0) CHECK(a.graded.count(cell));
    }
}

TEST_CASE("sweep over the shipped corpus passes") {
    const auto manifest = parse_manifest_file(corpus_dir() / "lemma_corpus.json");
    const auto sweep = fixture_sweep(manifest, 4);
    CHECK_FALSE(sweep.empty);
    CHECK(sweep.failed == 0);
    CHECK(sweep.inconclusive == 0);
    CHECK(sweep.input_errors == 0);
    CHECK(sweep.passed == static_cast<long>(sweep.cases.size()));
    CHECK(sweep.exit_code() == 0);
    // 1 + 1 + 4 + 9 + 4 + 1 + 1 + 1 simple pairs
    CHECK(sweep.cases.size() == 22);
}

TEST_CASE("empty corpus is a flagged vacuous pass") {
    const Manifest manifest;
    const auto sweep = fixture_sweep(manifest, 6);
    CHECK(sweep.empty);
    CHECK(sweep.exit_code() == 0);
}

TEST_CASE("a hypothesis-violating pair makes the sweep exit nonzero") {
    const auto dir = std::filesystem::temp_directory_path() / "qalg_lemma_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream alg(dir / "dual.json");
        alg << fixtures::dual_numbers;
    }
    {
        std::ofstream man(dir / "manifest.json");
        man << R"({"cases": [{"algebra": "dual.json", "pairs": [["S1@1", "S1"]], "i_max": 3}]})";
    }
    const auto sweep = fixture_sweep(parse_manifest_file(dir / "manifest.json"), 3);
    CHECK(sweep.input_errors == 1);
    CHECK(sweep.exit_code() != 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("sweep exit code precedence: fail > inconclusive > input error") {
    SweepReport r;
    r.failed = 1;
    r.inconclusive = 2;
    r.input_errors = 3;
    CHECK(r.exit_code() == 4);
    r.failed = 0;
    CHECK(r.exit_code() == 5);
    r.inconclusive = 0;
    CHECK(r.exit_code() == 3);
    r.input_errors = 0;
    CHECK(r.exit_code() == 0);
}

TEST_CASE("reports are deterministic") {
    const auto alg = fixtures::build_q(fixtures::local_square_zero);
    const auto s = simple(alg, 0);
    LemmaOptions opt;
    opt.i_max = 3;
    const auto a = verify_decomposition(s, s, opt);
    const auto b = verify_decomposition(s, s, opt);
    CHECK(a.graded == b.graded);
    CHECK(a.window_used == b.window_used);
    CHECK(a.message == b.message);
    CHECK(a.ungraded_dims == b.ungraded_dims);
}
