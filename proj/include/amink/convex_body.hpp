#pragma once

#include <span>
#include <vector>

#include "amink/common.hpp"

namespace amink {

/// A closed convex body: a strictly convex CCW polygon with the origin
/// strictly in its interior. Immutable after construction; all queries are
/// pure functions, safe to share across threads.
///
/// The body is stored both as its vertex list and as the intersection of
/// half-planes x·n_e <= c_e (one per edge, n_e unnormalized, c_e > 0), which
/// gives exact support and gauge evaluation:
///   support(v) = max over vertices of x·v
///   gauge(x)   = max over edges of (x·n_e)/c_e  (0 at the origin)
class ConvexBody {
public:
    std::span<const Vec2> vertices() const { return verts_; }

    /// Largest r with the disk of radius r around the origin inside the body
    /// (min over edges of the origin-to-edge-line distance).
    double inner_radius() const { return inner_radius_; }

    /// Smallest R with the body inside the disk of radius R (max vertex norm).
    double outer_radius() const { return outer_radius_; }

    /// Support function: max over body points of x·dir. Attained at a vertex.
    double support(Direction dir) const;

    /// Gauge (Minkowski functional): min{t >= 0 : point ∈ t·body}.
    double gauge(Vec2 point) const;

    /// Shoelace area, strictly positive.
    double area() const;

    /// Body scaled by t > 0; support scales by t, gauge by 1/t.
    ConvexBody scaled(double t) const;

    /// Pointwise negation, reordered CCW: gauge(reflected, x) == gauge(x == -x).
    ConvexBody reflected() const;

    friend ConvexBody build_body(std::span<const Vec2> points);

private:
    ConvexBody() = default;
    void finish();  // derive normals, offsets, radii from verts_

    std::vector<Vec2> verts_;          // CCW, strictly convex
    std::vector<Vec2> edge_normals_;   // outward, unnormalized (dy, -dx)
    std::vector<double> edge_offsets_; // c_e = v_e·n_e, strictly positive
    double inner_radius_ = 0.0;
    double outer_radius_ = 0.0;
};

/// Builds a body from arbitrary points: recomputes the convex hull (input
/// order is irrelevant), merges duplicates within 1e-12, and requires at
/// least 3 hull vertices with the origin strictly interior.
/// Throws DegenerateInput or OriginNotInterior.
ConvexBody build_body(std::span<const Vec2> points);

/// Minkowski sum by the rotating edge merge, O(m+n): the support function of
/// the result is the sum of the operands' support functions.
ConvexBody minkowski_sum(const ConvexBody& p, const ConvexBody& q);

/// Regular m-gon inscribed in the disk of radius r, one vertex at (r, 0).
/// The default 64-gon stands in for the Euclidean ball throughout.
ConvexBody regular_polygon_body(int sides, double radius = 1.0);

/// CCW vertex chain of the Minkowski sum of two convex CCW chains
/// (rotating edge merge; collinear consecutive edges merged).
std::vector<Vec2> convex_sum_vertices(std::span<const Vec2> a, std::span<const Vec2> b);

}  // namespace amink
