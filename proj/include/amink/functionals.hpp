#pragma once

#include <vector>

#include "amink/convex_body.hpp"
#include "amink/grid.hpp"
#include "amink/polygon.hpp"

namespace amink {

/// Moving maximum of u over the set neighborhood {y ∈ Ω : gauge(x - y) <= eps}.
/// Extensive (result >= u pointwise) and monotone in u. On an indicator field
/// this is exactly the indicator of the dilated set.
ScalarField sup_filter(const ScalarField& u, double epsilon, const ConvexBody& body);

/// h^d * sum over cells of (sup_filter(u) - u) / eps; always >= 0.
/// Reduction uses a fixed-order pairwise sum, so results are reproducible.
double grayscale_content(const ScalarField& u, double epsilon, const ConvexBody& body);

/// Superlevel decomposition of a finitely-valued field.
struct LevelDecomposition {
    std::vector<double> thresholds;      // distinct values, strictly increasing
    std::vector<GridSet> superlevel_sets;  // {u > s_k}, nested decreasing
};

/// Throws TooManyLevels when the field has more than 4096 distinct values.
LevelDecomposition decompose_levels(const ScalarField& u);

/// Sum over level gaps of (s_{k+1} - s_k) * outer_content_grid({u > s_k});
/// equals grayscale_content up to accumulation round-off for quantized fields.
double levelset_content_sum(const ScalarField& u, double epsilon, const ConvexBody& body);

/// Limit value of the grayscale content on a rasterized indicator:
/// the anisotropic perimeter of the polygon.
double indicator_limit_reference(const SimplePolygon& set, const ConvexBody& body);

/// Limit value for an affine field with gradient g over a window:
/// window_measure * support(body, -g).
double affine_limit_reference(Vec2 gradient, const ConvexBody& body, double window_measure);

/// Rounds the field's values onto `levels` equispaced levels spanning its range.
ScalarField quantize_levels(const ScalarField& u, int levels = 256);

/// 1 on occupied cells, 0 elsewhere.
ScalarField indicator_field(const GridSet& set);

/// u(x) = gradient · x sampled at cell centers.
ScalarField affine_field(const GridDomain& domain, Vec2 gradient);

}  // namespace amink
