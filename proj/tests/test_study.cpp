#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "amink/errors.hpp"
#include "amink/io.hpp"
#include "amink/study.hpp"
#include "test_helpers.hpp"

using namespace amink;
using namespace amink::testing;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string mask_wall_ms(const std::string& csv) {
    // the trailing column is wall time; blank it before comparing bytes
    return std::regex_replace(csv, std::regex(",[^,\n]*\n"), ",X\n");
}

StudyConfig base_config(StudyKind kind) {
    StudyConfig cfg;
    cfg.kind = kind;
    cfg.e_shape = "square";
    cfg.c_shape = "square";
    cfg.out_csv = temp_path("amink_test.csv");
    return cfg;
}

}  // namespace

TEST_CASE("fit_linear examples") {
    ContentSeries exact;
    exact.samples = {{0.1, 4.4}, {0.05, 4.2}, {0.025, 4.1}};
    const FitResult fit = fit_linear(exact);
    CHECK(fit.limit_estimate == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(fit.slope == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(fit.max_residual <= 1e-12);

    ContentSeries constant;
    constant.samples = {{0.1, 7.5}, {0.05, 7.5}};
    const FitResult flat = fit_linear(constant);
    CHECK(flat.limit_estimate == doctest::Approx(7.5).epsilon(1e-12));
    CHECK(flat.slope == doctest::Approx(0.0));

    ContentSeries lone;
    lone.samples = {{0.1, 1.0}};
    CHECK_THROWS_AS(fit_linear(lone), TooFewSamples);
}

TEST_CASE("builtin shapes") {
    const SimplePolygon sq = builtin_polygon("square");
    CHECK(sq.area() == doctest::Approx(4.0));

    const SimplePolygon disk = builtin_polygon("disk64");
    REQUIRE(disk.vertices().size() == 64);
    bool has_unit_x = false;
    for (Vec2 v : disk.vertices()) {
        if (v.x == 1.0 && v.y == 0.0) has_unit_x = true;
    }
    CHECK(has_unit_x);

    const SimplePolygon tri = builtin_polygon("triangle-asym");
    CHECK(tri.vertices().size() == 3);

    const SimplePolygon lshape = builtin_polygon("lshape");
    CHECK_FALSE(lshape.is_convex());
    CHECK(lshape.area() == doctest::Approx(0.64).epsilon(1e-12));

    const SimplePolygon blob7 = builtin_polygon("blob", 7);
    const SimplePolygon blob7_again = builtin_polygon("blob", 7);
    CHECK(blob7.area() == blob7_again.area());
    const SimplePolygon blob8 = builtin_polygon("blob", 8);
    CHECK(blob7.area() != blob8.area());

    CHECK_THROWS_AS(builtin_polygon("dodecahedron"), UnknownShape);
    CHECK_THROWS_AS(builtin_body("nope"), UnknownShape);
}

TEST_CASE("config validation") {
    StudyConfig cfg = base_config(StudyKind::converge);
    cfg.spacing = 1.0 / 64.0;
    cfg.epsilons = {16.0 / 64.0, 8.0 / 64.0};

    StudyConfig empty_eps = cfg;
    empty_eps.epsilons.clear();
    CHECK_THROWS_AS(run_study(empty_eps), BadConfig);

    StudyConfig increasing = cfg;
    increasing.epsilons = {0.1, 0.2};
    CHECK_THROWS_AS(run_study(increasing), BadConfig);

    StudyConfig negative = cfg;
    negative.epsilons = {0.1, -0.05};
    CHECK_THROWS_AS(run_study(negative), BadConfig);

    StudyConfig below_8h = cfg;
    below_8h.epsilons = {16.0 / 64.0, 4.0 / 64.0};
    CHECK_THROWS_AS(run_study(below_8h), BadConfig);

    StudyConfig no_h = cfg;
    no_h.spacing = 0.0;
    CHECK_THROWS_AS(run_study(no_h), BadConfig);

    StudyConfig no_csv = cfg;
    no_csv.out_csv.clear();
    CHECK_THROWS_AS(run_study(no_csv), BadConfig);

    // non-convex sets never reach the exact convex pipeline
    StudyConfig lshape_steiner = base_config(StudyKind::steiner);
    lshape_steiner.e_shape = "lshape";
    lshape_steiner.epsilons = {0.2, 0.1};
    CHECK_THROWS_AS(run_study(lshape_steiner), BadConfig);

    StudyConfig bad_csv_dir = base_config(StudyKind::steiner);
    bad_csv_dir.epsilons = {0.2, 0.1};
    bad_csv_dir.out_csv = "/nonexistent-dir/amink.csv";
    CHECK_THROWS_AS(run_study(bad_csv_dir), IoFailure);
}

TEST_CASE("steiner study rows satisfy the exact identity") {
    StudyConfig cfg = base_config(StudyKind::steiner);
    cfg.epsilons = {0.2, 0.1, 0.05};
    const StudySummary summary = run_study(cfg);
    REQUIRE(summary.rows.size() == 3);
    for (const CsvRow& row : summary.rows) {
        CHECK(row.abs_err <= 1e-9);
    }
    // square [-1,1]^2 with the square body: perimeter term 8, slope |C| = 4
    CHECK(summary.reference == doctest::Approx(8.0));
    CHECK(summary.limit_estimate == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(summary.fit.slope == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("converge study reports the exact reference and a close limit") {
    StudyConfig cfg = base_config(StudyKind::converge);
    cfg.e_shape = "diamond";
    cfg.spacing = 1.0 / 128.0;
    cfg.epsilons = {32.0 / 128.0, 16.0 / 128.0, 8.0 / 128.0};
    cfg.out_svg = temp_path("amink_test.svg");
    const StudySummary summary = run_study(cfg);
    CHECK(summary.reference == doctest::Approx(8.0));
    CHECK(summary.rel_err <= 0.02);
    for (const CsvRow& row : summary.rows) {
        CHECK(row.reference == doctest::Approx(8.0));
        CHECK(row.rel_err == doctest::Approx(row.abs_err / 8.0).epsilon(1e-12));
    }
    CHECK(std::filesystem::exists(cfg.out_svg));
    const std::string svg = slurp(cfg.out_svg);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
}

TEST_CASE("coarea study rows match to accumulation round-off") {
    StudyConfig cfg = base_config(StudyKind::coarea);
    cfg.e_shape = "diamond";
    cfg.c_shape = "diamond";
    cfg.spacing = 1.0 / 64.0;
    cfg.epsilons = {16.0 / 64.0, 8.0 / 64.0};
    const StudySummary summary = run_study(cfg);
    for (const CsvRow& row : summary.rows) {
        CHECK(row.abs_err <= 1e-12 * (1.0 + row.estimate));
    }
}

TEST_CASE("affine study matches the support reference") {
    StudyConfig cfg = base_config(StudyKind::affine);
    cfg.c_shape = "diamond";
    cfg.spacing = 1.0 / 32.0;
    cfg.epsilons = {2.0, 1.0};
    cfg.seed = 3;
    const StudySummary summary = run_study(cfg);
    REQUIRE(summary.rows.size() == 2);
    const double g_norm = std::hypot(summary.extras.at("gradient_x"),
                                     summary.extras.at("gradient_y"));
    for (const CsvRow& row : summary.rows) {
        CHECK(row.abs_err <= 2.0 * g_norm * cfg.spacing);
    }
}

TEST_CASE("distbench study compares chamfer against the exact dilation") {
    StudyConfig cfg = base_config(StudyKind::distbench);
    cfg.e_shape = "blob";
    cfg.c_shape = "diamond";
    cfg.seed = 11;
    cfg.spacing = 1.0 / 24.0;
    cfg.epsilons = {12.0 / 24.0, 8.0 / 24.0};
    const StudySummary summary = run_study(cfg);
    CHECK(summary.extras.at("chamfer_max_rel_err") >= 0.0);
    CHECK(summary.extras.at("chamfer_max_rel_err") <= 0.05);
    for (const CsvRow& row : summary.rows) {
        CHECK(row.rel_err <= 0.05);
    }
}

TEST_CASE("CSV schema and determinism") {
    StudyConfig cfg = base_config(StudyKind::symmetric);
    cfg.e_shape = "blob";
    cfg.c_shape = "triangle-asym";
    cfg.seed = 5;
    cfg.spacing = 1.0 / 48.0;
    cfg.epsilons = {16.0 / 48.0, 8.0 / 48.0};
    cfg.out_csv = temp_path("amink_det_a.csv");
    run_study(cfg);
    StudyConfig cfg2 = cfg;
    cfg2.out_csv = temp_path("amink_det_b.csv");
    run_study(cfg2);

    const std::string a = slurp(cfg.out_csv);
    const std::string b = slurp(cfg2.out_csv);
    CHECK(a.substr(0, a.find('\n')) == "epsilon,estimate,reference,abs_err,rel_err,wall_ms");
    CHECK(a.find('\r') == std::string::npos);  // LF endings only
    CHECK(mask_wall_ms(a) == mask_wall_ms(b));

    // 12 significant digits
    CHECK(format_sig12(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("vertex files feed both shape roles") {
    const std::string path = temp_path("amink_verts.txt");
    {
        std::ofstream out(path);
        out << "# a comment line\n";
        out << "1 -1\n-1 -1\n";
        out << "   1    1\n";
        out << "-1 1\n";
    }
    const std::vector<Vec2> pts = read_vertex_file(path);
    REQUIRE(pts.size() == 4);

    const ConvexBody body = resolve_body_shape(path, 0);
    CHECK(body.area() == doctest::Approx(4.0));
    const SimplePolygon poly = resolve_set_shape(path, 0);
    CHECK(poly.area() == doctest::Approx(4.0));

    CHECK_THROWS_AS(read_vertex_file(temp_path("missing_amink.txt")), IoFailure);
}

TEST_CASE("scalar field round trip") {
    const GridDomain dom = make_domain({0, 0}, 0.125, 6, 4);
    ScalarField field{dom, std::vector<double>(dom.cell_count())};
    SplitMix64 rng(78);
    for (double& v : field.values) v = rng.next_double(-2.0, 2.0);
    const std::string path = temp_path("amink_field.txt");
    write_scalar_field(path, field);
    const ScalarField back = read_scalar_field(path);
    CHECK(back.domain.nx == 6);
    CHECK(back.domain.ny == 4);
    CHECK(back.domain.spacing == doctest::Approx(0.125).epsilon(1e-12));
    for (std::size_t k = 0; k < field.values.size(); ++k) {
        CHECK(back.values[k] == doctest::Approx(field.values[k]).epsilon(1e-10));
    }
}

TEST_CASE("grid set raster export") {
    const GridDomain dom = make_domain({0, 0}, 0.5, 3, 2);
    GridSet set{dom, {1, 0, 1, 0, 1, 0}};
    const std::string path = temp_path("amink_raster.txt");
    write_gridset_pgm(path, set);
    const std::string text = slurp(path);
    CHECK(text.rfind("P1-like: 3 2 0.5\n", 0) == 0);
    CHECK(text.find("1 0 1") != std::string::npos);
}
