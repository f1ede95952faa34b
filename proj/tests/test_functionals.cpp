#include <doctest.h>

#include <cmath>
#include <vector>

#include "amink/errors.hpp"
#include "amink/functionals.hpp"
#include "test_helpers.hpp"

using namespace amink;
using namespace amink::testing;

namespace {

ScalarField constant_field(const GridDomain& dom, double value) {
    return ScalarField{dom, std::vector<double>(dom.cell_count(), value)};
}

}  // namespace

TEST_CASE("sup filter basics") {
    const GridDomain dom = make_domain({0, 0}, 1.0 / 32.0, 48, 48);
    const ConvexBody body = diamond_body();

    const ScalarField c = constant_field(dom, 3.25);
    const ScalarField fc = sup_filter(c, 4.0 / 32.0, body);
    CHECK(fc.values == c.values);

    // indicator maps to the indicator of the dilated set
    SplitMix64 rng(71);
    const GridSet blob = random_grid_set(rng, dom, 6);
    const ScalarField ind = indicator_field(blob);
    const double eps = 5.0 / 32.0;
    const ScalarField find = sup_filter(ind, eps, body);
    const GridSet grown = dilate_exact(blob, eps, body);
    for (std::size_t k = 0; k < find.values.size(); ++k) {
        CHECK(find.values[k] == (grown.mask[k] ? 1.0 : 0.0));
    }
}

TEST_CASE("sup filter of an affine field away from the boundary") {
    const GridDomain dom = make_domain({0, 0}, 1.0 / 64.0, 96, 96);
    const Vec2 g{1.3, -0.4};
    const ConvexBody body = square_body();
    const ScalarField u = affine_field(dom, g);
    const double eps = 8.0 / 64.0;
    const ScalarField v = sup_filter(u, eps, body);
    const double expected_gain = eps * body.support(-g);
    const double slack = 2.0 * norm(g) * dom.spacing;
    const int margin = static_cast<int>(std::ceil(eps * body.outer_radius() / dom.spacing)) + 2;
    for (int j = margin; j < dom.ny - margin; j += 3) {
        for (int i = margin; i < dom.nx - margin; i += 3) {
            const double gain = v.values[dom.index(i, j)] - u.values[dom.index(i, j)];
            CHECK(std::abs(gain - expected_gain) <= slack);
        }
    }
}

TEST_CASE("sup filter is extensive and monotone") {
    SplitMix64 rng(72);
    const GridDomain dom = make_domain({0, 0}, 0.05, 24, 24);
    const ConvexBody body = asym_triangle_body();
    std::vector<double> lo(dom.cell_count()), hi(dom.cell_count());
    for (std::size_t k = 0; k < lo.size(); ++k) {
        lo[k] = rng.next_double(-1.0, 1.0);
        hi[k] = lo[k] + rng.next_double(0.0, 0.5);
    }
    const ScalarField u1{dom, lo}, u2{dom, hi};
    const ScalarField f1 = sup_filter(u1, 0.2, body);
    const ScalarField f2 = sup_filter(u2, 0.2, body);
    for (std::size_t k = 0; k < lo.size(); ++k) {
        CHECK(f1.values[k] >= u1.values[k]);
        CHECK(f1.values[k] <= f2.values[k]);
    }
}

TEST_CASE("both sup filter paths agree") {
    // eps/h below and above the 32 stencil threshold must give the same field
    SplitMix64 rng(73);
    const GridDomain coarse = make_domain({0, 0}, 1.0 / 8.0, 40, 40);
    const GridDomain fine = make_domain({0, 0}, 1.0 / 40.0, 200, 200);
    const ConvexBody body = diamond_body();
    const GridSet blob_coarse = random_grid_set(rng, coarse, 10);
    // same eps on both grids: ratio 8 on the coarse grid, 40 on the fine one
    const double eps = 1.0;
    const GridSet grown_coarse = dilate_exact(blob_coarse, eps, body);
    const ScalarField f_coarse = sup_filter(indicator_field(blob_coarse), eps, body);
    for (std::size_t k = 0; k < f_coarse.values.size(); ++k) {
        CHECK(f_coarse.values[k] == (grown_coarse.mask[k] ? 1.0 : 0.0));
    }
    const GridSet blob_fine = random_grid_set(rng, fine, 45);
    const GridSet grown_fine = dilate_exact(blob_fine, eps, body);
    const ScalarField f_fine = sup_filter(indicator_field(blob_fine), eps, body);
    for (std::size_t k = 0; k < f_fine.values.size(); ++k) {
        CHECK(f_fine.values[k] == (grown_fine.mask[k] ? 1.0 : 0.0));
    }
}

TEST_CASE("grayscale content examples") {
    const GridDomain dom = make_domain({0, 0}, 1.0 / 32.0, 48, 48);
    const ConvexBody body = diamond_body();

    CHECK(grayscale_content(constant_field(dom, 7.0), 0.25, body) == 0.0);

    // indicator consistency, bit for bit
    SplitMix64 rng(74);
    for (int trial = 0; trial < 6; ++trial) {
        const GridSet blob = random_grid_set(rng, dom, 6);
        const double eps = (trial % 2 == 0) ? 8.0 / 32.0 : 11.0 / 32.0;
        const double via_field = grayscale_content(indicator_field(blob), eps, body);
        const double via_set = outer_content_grid(blob, eps, body);
        CHECK(via_field == via_set);
    }
}

TEST_CASE("grayscale content invariances") {
    SplitMix64 rng(75);
    const GridDomain dom = make_domain({0, 0}, 0.05, 32, 32);
    const ConvexBody body = asym_triangle_body();
    std::vector<double> vals(dom.cell_count());
    for (double& v : vals) v = rng.next_double(-2.0, 2.0);
    const ScalarField u{dom, vals};
    const double eps = 0.4;
    const double base = grayscale_content(u, eps, body);

    ScalarField shifted = u;
    for (double& v : shifted.values) v += 11.5;
    CHECK(grayscale_content(shifted, eps, body) == doctest::Approx(base).epsilon(1e-12));

    ScalarField scaled = u;
    for (double& v : scaled.values) v *= 3.0;
    CHECK(grayscale_content(scaled, eps, body) == doctest::Approx(3.0 * base).epsilon(1e-12));

    CHECK(base >= 0.0);
}

TEST_CASE("level decomposition") {
    const GridDomain dom = make_domain({0, 0}, 0.1, 8, 8);
    std::vector<double> vals(dom.cell_count(), 0.0);
    for (std::size_t k = 0; k < vals.size(); ++k) {
        vals[k] = static_cast<double>(k % 3);  // values {0, 1, 2}
    }
    const ScalarField u{dom, vals};
    const LevelDecomposition levels = decompose_levels(u);
    REQUIRE(levels.thresholds.size() == 3);
    CHECK(levels.thresholds[0] == 0.0);
    CHECK(levels.thresholds[2] == 2.0);
    // nested decreasing
    for (std::size_t k = 0; k + 1 < levels.superlevel_sets.size(); ++k) {
        for (std::size_t c = 0; c < vals.size(); ++c) {
            if (levels.superlevel_sets[k + 1].mask[c]) {
                CHECK(levels.superlevel_sets[k].mask[c]);
            }
        }
    }
    CHECK(levels.superlevel_sets.back().occupied_count() == 0);

    std::vector<double> many(dom.cell_count());
    for (std::size_t k = 0; k < many.size(); ++k) many[k] = static_cast<double>(k) * 1.0e-6;
    // 64 cells only; grow the domain to force >4096 distinct values
    const GridDomain big = make_domain({0, 0}, 0.1, 80, 80);
    std::vector<double> lots(big.cell_count());
    for (std::size_t k = 0; k < lots.size(); ++k) lots[k] = static_cast<double>(k);
    CHECK_THROWS_AS(decompose_levels(ScalarField{big, lots}), TooManyLevels);
}

TEST_CASE("coarea identity for quantized fields") {
    const GridDomain dom = make_domain({0, 0}, 1.0 / 32.0, 48, 48);
    const ConvexBody body = diamond_body();
    const double eps = 8.0 / 32.0;

    // two-valued field c * indicator
    SplitMix64 rng(76);
    const GridSet blob = random_grid_set(rng, dom, 9);
    ScalarField two = indicator_field(blob);
    for (double& v : two.values) v *= 2.5;
    CHECK(levelset_content_sum(two, eps, body) ==
          doctest::Approx(2.5 * outer_content_grid(blob, eps, body)).epsilon(1e-12));

    // constant field: both sides vanish
    CHECK(levelset_content_sum(constant_field(dom, 4.0), eps, body) == 0.0);
    CHECK(grayscale_content(constant_field(dom, 4.0), eps, body) == 0.0);

    // three concentric squares
    ScalarField tiers{dom, std::vector<double>(dom.cell_count(), 0.0)};
    for (int j = 0; j < dom.ny; ++j) {
        for (int i = 0; i < dom.nx; ++i) {
            const Vec2 c = dom.cell_center(i, j);
            const double d = std::max(std::abs(c.x - 0.75), std::abs(c.y - 0.75));
            if (d < 0.45) tiers.values[dom.index(i, j)] += 1.0;
            if (d < 0.30) tiers.values[dom.index(i, j)] += 0.5;
            if (d < 0.15) tiers.values[dom.index(i, j)] += 0.25;
        }
    }
    const double f = grayscale_content(tiers, eps, body);
    const double coarea = levelset_content_sum(tiers, eps, body);
    CHECK(std::abs(f - coarea) <= 1e-12 * (1.0 + f));

    // seeded quantized fields
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<double> vals(dom.cell_count());
        for (double& v : vals) v = rng.next_double(-1.0, 3.0);
        const ScalarField q = quantize_levels(ScalarField{dom, vals}, 256);
        const double lhs = grayscale_content(q, eps, body);
        const double rhs = levelset_content_sum(q, eps, body);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + lhs));
    }
}

TEST_CASE("reference values") {
    const SimplePolygon sq = unit_square_at_origin();
    CHECK(indicator_limit_reference(sq, square_body()) == doctest::Approx(4.0));
    const SimplePolygon diamond =
        make_polygon(std::vector<Vec2>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(indicator_limit_reference(diamond, square_body()) == doctest::Approx(8.0));
    // homogeneity in the body
    CHECK(indicator_limit_reference(sq, square_body().scaled(2.5)) ==
          doctest::Approx(2.5 * 4.0).epsilon(1e-12));

    CHECK(affine_limit_reference({0, 0}, square_body(), 1.0) == 0.0);
    CHECK(affine_limit_reference({1, 0}, square_body(), 1.0) == doctest::Approx(1.0));
    CHECK(affine_limit_reference({1, 0}, asym_triangle_body(), 1.0) == doctest::Approx(1.0));
}

TEST_CASE("quantization produces at most the requested level count") {
    SplitMix64 rng(77);
    const GridDomain dom = make_domain({0, 0}, 0.1, 30, 30);
    std::vector<double> vals(dom.cell_count());
    for (double& v : vals) v = rng.next_double(-5.0, 5.0);
    const ScalarField q = quantize_levels(ScalarField{dom, vals}, 16);
    const LevelDecomposition levels = decompose_levels(q);
    CHECK(levels.thresholds.size() <= 16);
}
