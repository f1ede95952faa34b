#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "amink/common.hpp"
#include "amink/convex_body.hpp"
#include "amink/polygon.hpp"

namespace amink {

/// Rectangular sampling lattice for the ambient domain. Cell (i, j) has its
/// center at origin + ((i + 1/2) h, (j + 1/2) h).
struct GridDomain {
    Vec2 origin;
    double spacing = 0.0;
    int nx = 0;
    int ny = 0;

    Vec2 cell_center(int i, int j) const {
        return {origin.x + (i + 0.5) * spacing, origin.y + (j + 0.5) * spacing};
    }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) +
               static_cast<std::size_t>(i);
    }
    std::size_t cell_count() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    }
    double cell_area() const { return spacing * spacing; }
    bool operator==(const GridDomain&) const = default;
};

/// Throws BadConfig unless spacing > 0 and both extents >= 1.
GridDomain make_domain(Vec2 origin, double spacing, int nx, int ny);

/// Discretized indicator of a set over a GridDomain, row-major.
struct GridSet {
    GridDomain domain;
    std::vector<std::uint8_t> mask;

    std::size_t occupied_count() const;
    GridSet complement() const;
};

/// Nonnegative per-cell distances; +inf where unreached.
struct DistanceField {
    GridDomain domain;
    std::vector<double> values;
};

/// Per-cell signed values: negative strictly inside, positive strictly outside.
struct SignedField {
    GridDomain domain;
    std::vector<double> values;
};

/// Grayscale function sampled at cell centers.
struct ScalarField {
    GridDomain domain;
    std::vector<double> values;
};

/// Cell marked iff its center is inside the polygon by the even-odd rule.
GridSet rasterize(const SimplePolygon& set, const GridDomain& domain);

/// (occupied cell count) * h^2.
double measure(const GridSet& set);

/// Exact anisotropic distance oracle: for every cell center x, the minimum
/// over occupied cell centers y of gauge(body, x - y). O(cells * sources).
/// Displacements are evaluated as (di*h, dj*h) so results agree bit-for-bit
/// with the stencil-based dilation below. Throws EmptySource.
DistanceField brute_distance(const GridSet& source, const ConvexBody& body);

/// Two-pass chamfer approximation propagating value(y) + gauge(body, x - y)
/// over all integer offsets with infinity-norm <= mask_radius.
/// Always >= brute_distance pointwise. Throws EmptySource.
DistanceField chamfer_distance(const GridSet& source, const ConvexBody& body, int mask_radius);

/// Sublevel thresholding of a distance field: cells with value <= epsilon.
/// The field must live on the source's domain (MismatchedField otherwise).
GridSet dilate(const GridSet& source, double epsilon, const ConvexBody& body,
               const DistanceField& field);

/// Lattice trace of the scaled body: integer offsets o with
/// gauge(body, o*h) <= epsilon, stored as one contiguous interval per row.
/// `max_reach`, when nonnegative, truncates the trace to |o|inf <= max_reach;
/// offsets past the grid extents can never pair two cells, so truncating at
/// the extent leaves dilation results unchanged.
struct OffsetStencil {
    int qmin = 0;                              // first row offset
    std::vector<std::pair<int, int>> rows;     // inclusive [plo, phi] per row

    bool contains(int p, int q) const {
        const std::size_t r = static_cast<std::size_t>(q - qmin);
        if (q < qmin || r >= rows.size()) return false;
        return rows[r].first <= p && p <= rows[r].second;
    }
};
OffsetStencil lattice_stencil(const ConvexBody& body, double epsilon, double spacing,
                              int max_reach = -1);
OffsetStencil ball_stencil(double radius, double spacing, int max_reach = -1);

/// Exact dilation {x : exists y in S with gauge(x - y) <= epsilon}, clipped
/// to the domain. Set-identical to thresholding brute_distance at epsilon,
/// computed in O(cells * stencil_rows) by per-row window tests.
GridSet dilate_exact(const GridSet& source, double epsilon, const ConvexBody& body);
GridSet dilate_with_stencil(const GridSet& source, const OffsetStencil& stencil);

/// Outer dilation content (|dilate(S, eps) ∩ Ω| - |S|) / eps on the grid.
double outer_content_grid(const GridSet& set, double epsilon, const ConvexBody& body);

/// Two-sided content: average of the outer contents of the set and of its
/// complement in the domain.
double symmetric_content_grid(const GridSet& set, double epsilon, const ConvexBody& body);

/// brute_distance(S) - brute_distance(complement), with the body's gauge.
/// Throws DegenerateSplit when S or its complement is empty.
SignedField signed_distance(const GridSet& set, const ConvexBody& body);

/// Euclidean band measure |{ |d_E| <= eps }| / (2 eps), where d_E is the
/// Euclidean signed distance between the set and its complement.
double boundary_content(const GridSet& set, double epsilon);

/// Per-cell |support(body, central-difference gradient) - 1| on cells with
/// positive field value and a full interior stencil; +inf markers elsewhere.
ScalarField eikonal_residual(const DistanceField& field, const ConvexBody& body);

}  // namespace amink
