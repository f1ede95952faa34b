#pragma once

#include <span>
#include <utility>
#include <vector>

#include "amink/common.hpp"
#include "amink/convex_body.hpp"

namespace amink {

/// Boundary edge of a CCW polygon with its unit outer normal
/// (edge direction rotated by -90 degrees).
struct OrientedEdge {
    Vec2 start;
    Vec2 end;
    Vec2 outer_normal;
    double length = 0.0;
};

/// Simple (non-self-intersecting) polygon with positive area, stored CCW.
/// Test sets E live here; the boundary is rectifiable by construction.
class SimplePolygon {
public:
    std::span<const Vec2> vertices() const { return verts_; }

    double area() const;

    /// Edges with collinear runs merged, each with its unit outer normal.
    std::vector<OrientedEdge> edges() const;

    /// All consecutive-edge cross products >= 0.
    bool is_convex() const;

    SimplePolygon scaled(double t) const;      // about the origin, t > 0
    SimplePolygon translated(Vec2 shift) const;

    friend SimplePolygon make_polygon(std::span<const Vec2> points);

private:
    SimplePolygon() = default;
    std::vector<Vec2> verts_;
};

/// Validates simplicity and nonzero area; reverses CW input to CCW.
/// Throws DegenerateInput.
SimplePolygon make_polygon(std::span<const Vec2> points);

/// Boundary integral of the body's support function at the outer normal:
/// sum over edges of length(e) * support(body, normal(e)).
double anisotropic_perimeter(const SimplePolygon& set, const ConvexBody& body);

/// Two-sided variant: sum of length(e) * (support(n) + support(-n)) / 2.
double symmetric_anisotropic_perimeter(const SimplePolygon& set, const ConvexBody& body);

/// Dilation area growth rate (|E ⊕ εC| - |E|) / ε, computed exactly via the
/// convex Minkowski sum; the whole plane plays the role of the ambient
/// domain (no clipping). Requires convex E; throws NonConvexSet.
double outer_content_exact(const SimplePolygon& set, const ConvexBody& body, double epsilon);

/// The two coefficients of the exact 2D dilation expansion:
/// outer_content_exact(E, C, ε) == perimeter_term + ε * area_term for all ε > 0.
struct SteinerCoefficients {
    double perimeter_term = 0.0;  // anisotropic perimeter of E
    double area_term = 0.0;       // area of the body
};
SteinerCoefficients steiner_coefficients(const SimplePolygon& set, const ConvexBody& body);

/// E ⊕ tC as a polygon (rotating edge merge). Requires convex E.
SimplePolygon dilate_polygon(const SimplePolygon& set, const ConvexBody& body, double t);

}  // namespace amink
