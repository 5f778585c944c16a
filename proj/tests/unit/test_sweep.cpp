#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ptgauss/sweep.hpp"

using namespace ptgauss;

namespace {

SweepConfig tiny_config() {
    SweepConfig cfg;
    cfg.alphas = {1.0, 0.5};
    cfg.p_grid = {0.0, 1.0};
    cfg.mc_enabled = false;
    cfg.quad_nodes = 32;
    return cfg;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

const CheckResult& find_check(const std::vector<CheckResult>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c;
    REQUIRE_MESSAGE(false, "missing check: " << name);
    static CheckResult dummy{};
    return dummy;
}

} // namespace

TEST_CASE("parse_config_text keeps defaults on empty input") {
    const SweepConfig cfg = parse_config_text("");
    CHECK(cfg.sigma_s2 == 1.0);
    CHECK(cfg.sigma_n2 == 1.0);
    CHECK(cfg.alphas == std::vector<double>{0.25, 0.5, 0.75, 1.0});
    REQUIRE(cfg.p_grid.size() == 41);
    CHECK(cfg.p_grid.front() == 0.0);
    CHECK(cfg.p_grid.back() == 20.0);
    CHECK(cfg.mc_enabled);
    CHECK(cfg.mc_samples == 100000);
    CHECK(cfg.mc_seed == kDefaultMcSeed);
    CHECK(cfg.quad_nodes == 96);
    CHECK(cfg.quad_trunc_sigmas == 10.0);
    CHECK(cfg.output_dir == ".");
}

TEST_CASE("parse_config_text reads keys, comments, lists, and ranges") {
    const SweepConfig cfg = parse_config_text(
        "# run description\n"
        "sigma_s2 = 2.0\n"
        "sigma_n2 = 0.5\n"
        "alphas = 0.25, 0.5, 1\n"
        "p_grid = 0:0.5:2  # range form, endpoint included\n"
        "mc_enabled = no\n"
        "mc_samples = 5000\n"
        "mc_seed = 77\n"
        "quad_nodes = 32\n"
        "quad_trunc_sigmas = 12\n"
        "output_dir = out/run1\n");
    CHECK(cfg.sigma_s2 == 2.0);
    CHECK(cfg.sigma_n2 == 0.5);
    CHECK(cfg.alphas == std::vector<double>{0.25, 0.5, 1.0});
    CHECK(cfg.p_grid == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
    CHECK_FALSE(cfg.mc_enabled);
    CHECK(cfg.mc_samples == 5000);
    CHECK(cfg.mc_seed == 77);
    CHECK(cfg.quad_nodes == 32);
    CHECK(cfg.quad_trunc_sigmas == 12.0);
    CHECK(cfg.output_dir == "out/run1");

    const SweepConfig spaces = parse_config_text("alphas = 0.5 0.75\nmc_enabled = yes\n");
    CHECK(spaces.alphas == std::vector<double>{0.5, 0.75});
    CHECK(spaces.mc_enabled);
}

TEST_CASE("parse_config_text collects every offense into one error") {
    try {
        parse_config_text(
            "sigma_s2 = nope\n"
            "frobnicate = 3\n"
            "mc_samples = many\n");
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        REQUIRE(e.fields.size() == 3);
        CHECK(e.fields[0] == "sigma_s2");
        CHECK(e.fields[1] == "frobnicate (unknown key)");
        CHECK(e.fields[2] == "mc_samples");
        CHECK(std::string(e.what()).find("frobnicate") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_config_text("just some text\n"), validation_error);
    CHECK_THROWS_AS(parse_config_text("alphas =\n"), validation_error);
    CHECK_THROWS_AS(parse_config_text("p_grid = 2:0.5:1\n"), validation_error); // stop < start
    CHECK_THROWS_AS(parse_config_text("p_grid = 0:0:1\n"), validation_error);  // zero step
}

TEST_CASE("validate names each field violating the contract") {
    SweepConfig cfg = tiny_config();
    cfg.sigma_s2 = -1.0;
    cfg.alphas = {0.5, 1.5};
    cfg.p_grid = {1.0, 1.0}; // not strictly increasing
    cfg.mc_samples = 500;
    cfg.quad_nodes = 8;
    cfg.quad_trunc_sigmas = 2.0;
    cfg.output_dir = "";
    try {
        validate(cfg);
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        const std::vector<std::string> expect{"sigma_s2", "alphas", "p_grid",
                                              "mc_samples", "quad_nodes", "quad_trunc_sigmas", "output_dir"};
        CHECK(e.fields == expect);
    }

    SweepConfig negative_p = tiny_config();
    negative_p.p_grid = {-1.0, 0.0};
    CHECK_THROWS_AS(validate(negative_p), validation_error);

    SweepConfig empty_alphas = tiny_config();
    empty_alphas.alphas.clear();
    CHECK_THROWS_AS(validate(empty_alphas), validation_error);

    CHECK_NOTHROW(validate(tiny_config()));
}

TEST_CASE("load_config_file reads real files and reports missing ones") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "ptgauss_test_config.cfg";
    {
        std::ofstream out(path);
        out << "alphas = 0.5\np_grid = 0 1\nmc_enabled = false\n";
    }
    const SweepConfig cfg = load_config_file(path.string());
    CHECK(cfg.alphas == std::vector<double>{0.5});
    fs::remove(path);

    CHECK_THROWS_AS(load_config_file("/nonexistent/ptgauss.cfg"), io_error);
}

TEST_CASE("run_sweep walks the grid in config order") {
    const auto records = run_sweep(tiny_config());
    REQUIRE(records.size() == 4);

    // (alpha=1, P=0): degenerate point, silent encoder, prior variance.
    CHECK(records[0].alpha == 1.0);
    CHECK(records[0].p == 0.0);
    CHECK(records[0].k1_star == 0.0);
    CHECK(records[0].decoder_a == 0.0);
    CHECK(records[0].d_closed == 1.0);
    CHECK_FALSE(records[0].d_mc.has_value());
    CHECK_FALSE(records[0].mc_stderr.has_value());

    CHECK(records[1].p == 1.0);
    CHECK(records[1].k1_star == 1.0);
    CHECK(records[1].decoder_a == 0.5);
    CHECK(records[1].d_closed == 0.5);

    CHECK(records[2].alpha == 0.5);
    CHECK(records[2].d_closed == 2.0);
    CHECK(records[3].d_closed == 1.0);

    // The exponent factors out: alpha * D is the unweighted curve.
    CHECK(records[0].d_closed * 1.0 == records[2].d_closed * 0.5);
    CHECK(records[1].d_closed * 1.0 == records[3].d_closed * 0.5);

    CHECK(max_rel_err_quad(records) < 1e-9);
    for (const auto& r : records) {
        CHECK(r.sigma_s2 == 1.0);
        CHECK(r.sigma_n2 == 1.0);
        CHECK(r.rel_err_quad == std::abs(r.d_quad - r.d_closed) / r.d_closed);
    }
}

TEST_CASE("run_sweep attaches deterministic Monte Carlo columns when enabled") {
    SweepConfig cfg = tiny_config();
    cfg.mc_enabled = true;
    cfg.mc_samples = 2000;
    cfg.mc_seed = 99;

    const auto once = run_sweep(cfg);
    const auto twice = run_sweep(cfg);
    REQUIRE(once.size() == 4);
    for (size_t i = 0; i < once.size(); ++i) {
        REQUIRE(once[i].d_mc.has_value());
        REQUIRE(once[i].mc_stderr.has_value());
        CHECK(*once[i].mc_stderr > 0.0);
        CHECK(*once[i].d_mc == *twice[i].d_mc);
        CHECK(*once[i].mc_stderr == *twice[i].mc_stderr);
    }

    // Distinct rows draw from distinct shard streams even at equal (alpha, P)
    // values of the estimate.
    cfg.mc_seed = 100;
    const auto reseeded = run_sweep(cfg);
    CHECK(*reseeded[0].d_mc != *once[0].d_mc);

    SweepConfig bad = cfg;
    bad.mc_samples = 10;
    CHECK_THROWS_AS(run_sweep(bad), validation_error);
}

TEST_CASE("write_sweep_csv emits the exact header and empty optionals") {
    const auto records = run_sweep(tiny_config());
    std::ostringstream out;
    write_sweep_csv(records, out);
    const auto lines = lines_of(out.str());

    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "alpha,p,sigma_s2,sigma_n2,k1_star,decoder_a,d_closed,d_quad,d_mc,mc_stderr,rel_err_quad");

    // MC disabled: the two optional columns are empty, not zero.
    for (size_t i = 1; i < lines.size(); ++i) CHECK(lines[i].find(",,") != std::string::npos);

    // 17 significant digits round-trip doubles exactly.
    std::istringstream first_row(lines[1]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(first_row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 11);
    CHECK(std::stod(fields[0]) == records[0].alpha);
    CHECK(std::stod(fields[6]) == records[0].d_closed);
    CHECK(std::stod(fields[7]) == records[0].d_quad);
    CHECK(fields[8].empty());
    CHECK(fields[9].empty());

    SweepConfig with_mc = tiny_config();
    with_mc.mc_enabled = true;
    with_mc.mc_samples = 1000;
    std::ostringstream out_mc;
    write_sweep_csv(run_sweep(with_mc), out_mc);
    const auto mc_lines = lines_of(out_mc.str());
    for (size_t i = 1; i < mc_lines.size(); ++i) CHECK(mc_lines[i].find(",,") == std::string::npos);
}

TEST_CASE("write_power_curves groups by alpha in descending blocks") {
    const auto records = run_sweep(tiny_config());
    std::ostringstream out;
    write_power_curves(records, out);
    const auto lines = lines_of(out.str());

    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "# alpha=1");
    CHECK(lines[1] == "0 1");
    CHECK(lines[2] == "1 0.5");
    CHECK(lines[3].empty());
    CHECK(lines[4] == "# alpha=0.5");
    CHECK(lines[5] == "0 2");
    CHECK(lines[6] == "1 1");
}

TEST_CASE("run_verification returns the full oracle suite in order") {
    SweepConfig cfg;
    cfg.alphas = {0.75, 1.0};
    cfg.p_grid = {0.0, 1.0, 2.0};
    cfg.mc_samples = 20000;
    cfg.quad_nodes = 48;

    const auto checks = run_verification(cfg);
    const std::vector<std::string> names{
        "discretization_convergence_karmarkar", "discretization_convergence_power_tail",
        "alpha_normalizer", "encoder_optimality", "decoder_optimality",
        "sweep_quadrature", "mc_agreement", "mc_cross_estimators"};
    REQUIRE(checks.size() == names.size());
    for (size_t i = 0; i < names.size(); ++i) CHECK(checks[i].name == names[i]);
    CHECK(all_pass(checks));

    CHECK(find_check(checks, "discretization_convergence_karmarkar").metric ==
          doctest::Approx(0.026924983684072).epsilon(1e-10));
    CHECK(find_check(checks, "discretization_convergence_power_tail").metric < 5e-3);
    CHECK(find_check(checks, "alpha_normalizer").metric < 1e-6);
    CHECK(find_check(checks, "sweep_quadrature").metric < 1e-5);
    CHECK(find_check(checks, "mc_agreement").metric < 4.0);
    CHECK(find_check(checks, "mc_agreement").metric > 0.0);
    CHECK(find_check(checks, "mc_cross_estimators").metric < 4.0);
}

TEST_CASE("run_verification corruption hook proves the failure path fires") {
    SweepConfig cfg;
    cfg.alphas = {1.0};
    cfg.p_grid = {0.0, 1.0};
    cfg.mc_samples = 2000;
    cfg.quad_nodes = 32;

    VerificationOptions opts;
    opts.corrupt_normalizer = 1.0e-3;
    const auto checks = run_verification(cfg, opts);
    const CheckResult& corrupted = find_check(checks, "alpha_normalizer");
    CHECK_FALSE(corrupted.pass);
    CHECK(corrupted.metric == doctest::Approx(1.0e-3).epsilon(1e-2));
    CHECK_FALSE(all_pass(checks));

    std::ostringstream report;
    write_verification_report(checks, report);
    CHECK(report.str().find("FAIL alpha_normalizer") != std::string::npos);
}

TEST_CASE("write_verification_report states names, metrics, and tolerances") {
    const std::vector<CheckResult> checks{
        CheckResult{"alpha_normalizer", true, 4.5e-15, 1.0e-6},
        CheckResult{"mc_agreement", false, 5.25, 4.0},
    };
    std::ostringstream out;
    write_verification_report(checks, out);
    const auto lines = lines_of(out.str());

    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "# closed-form verification against independent numerical oracles");
    CHECK(lines[1] == "# line format: PASS|FAIL <check-name> <metric> <tolerance>");
    CHECK(lines[2].find("# tolerances:") == 0);
    CHECK(lines[2].find("alpha_normalizer=1e-06") != std::string::npos);
    CHECK(lines[5] == "PASS alpha_normalizer 4.5e-15 1e-06");
    CHECK(lines[6] == "FAIL mc_agreement 5.25 4");
}

TEST_CASE("write_sweep_outputs creates files and surfaces io failures") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ptgauss_test_sweep_out";
    fs::remove_all(dir);

    SweepConfig cfg = tiny_config();
    cfg.output_dir = dir.string();
    const auto records = run_sweep(cfg);
    const std::string csv = write_sweep_outputs(cfg, records);
    CHECK(fs::exists(dir / "sweep.csv"));
    CHECK(fs::exists(dir / "distortion_vs_power.dat"));
    CHECK(csv == (dir / "sweep.csv").string());

    const std::string report = write_verification_output(cfg, {CheckResult{"alpha_normalizer", true, 0.0, 1e-6}});
    CHECK(fs::exists(dir / "verification.txt"));
    CHECK(report == (dir / "verification.txt").string());

    // A regular file where the directory should be makes creation fail.
    const fs::path blocker = fs::temp_directory_path() / "ptgauss_test_blocker";
    { std::ofstream out(blocker); out << "x"; }
    SweepConfig bad = cfg;
    bad.output_dir = (blocker / "sub").string();
    CHECK_THROWS_AS(write_sweep_outputs(bad, records), io_error);

    fs::remove_all(dir);
    fs::remove(blocker);
}
