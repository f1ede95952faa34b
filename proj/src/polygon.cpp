#include "amink/polygon.hpp"

#include <algorithm>
#include <cmath>

#include "amink/errors.hpp"

namespace amink {

namespace {

double shoelace(std::span<const Vec2> v) {
    double twice = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        twice += cross(v[i], v[(i + 1) % v.size()]);
    }
    return 0.5 * twice;
}

// Proper crossing of two closed segments.
bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

std::vector<Vec2> merge_collinear(std::span<const Vec2> verts) {
    const std::size_t n = verts.size();
    std::vector<Vec2> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 prev = verts[(i + n - 1) % n];
        const Vec2 cur = verts[i];
        const Vec2 next = verts[(i + 1) % n];
        if (std::abs(cross(cur - prev, next - cur)) <= kGeomTol) continue;
        out.push_back(cur);
    }
    return out;
}

}  // namespace

double SimplePolygon::area() const { return shoelace(verts_); }

std::vector<OrientedEdge> SimplePolygon::edges() const {
    const std::vector<Vec2> verts = merge_collinear(verts_);
    std::vector<OrientedEdge> out;
    out.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Vec2 a = verts[i];
        const Vec2 b = verts[(i + 1) % verts.size()];
        const Vec2 d = b - a;
        const double len = norm(d);
        out.push_back({a, b, Vec2{d.y / len, -d.x / len}, len});
    }
    return out;
}

bool SimplePolygon::is_convex() const {
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = verts_[i];
        const Vec2 b = verts_[(i + 1) % n];
        const Vec2 c = verts_[(i + 2) % n];
        if (cross(b - a, c - b) < -kGeomTol) return false;
    }
    return true;
}

SimplePolygon SimplePolygon::scaled(double t) const {
    if (!(t > 0.0)) throw NonPositiveScale("scale factor must be positive");
    SimplePolygon out;
    out.verts_.reserve(verts_.size());
    for (Vec2 v : verts_) out.verts_.push_back(v * t);
    return out;
}

SimplePolygon SimplePolygon::translated(Vec2 shift) const {
    SimplePolygon out;
    out.verts_.reserve(verts_.size());
    for (Vec2 v : verts_) out.verts_.push_back(v + shift);
    return out;
}

SimplePolygon make_polygon(std::span<const Vec2> points) {
    std::vector<Vec2> verts;
    verts.reserve(points.size());
    for (Vec2 p : points) {
        if (!verts.empty() && std::abs(p.x - verts.back().x) <= kGeomTol &&
            std::abs(p.y - verts.back().y) <= kGeomTol) {
            continue;
        }
        verts.push_back(p);
    }
    while (verts.size() > 1 && std::abs(verts.front().x - verts.back().x) <= kGeomTol &&
           std::abs(verts.front().y - verts.back().y) <= kGeomTol) {
        verts.pop_back();
    }
    if (verts.size() < 3) throw DegenerateInput("polygon needs at least 3 distinct vertices");

    const double signed_area = shoelace(verts);
    if (std::abs(signed_area) <= kGeomTol) throw DegenerateInput("polygon has zero area");
    if (signed_area < 0.0) std::reverse(verts.begin(), verts.end());

    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // skip adjacent edges (sharing a vertex)
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_cross(verts[i], verts[(i + 1) % n], verts[j], verts[(j + 1) % n])) {
                throw DegenerateInput("polygon is self-intersecting");
            }
        }
    }

    SimplePolygon poly;
    poly.verts_ = std::move(verts);
    return poly;
}

double anisotropic_perimeter(const SimplePolygon& set, const ConvexBody& body) {
    double total = 0.0;
    for (const OrientedEdge& e : set.edges()) {
        total += e.length * body.support(e.outer_normal);
    }
    return total;
}

double symmetric_anisotropic_perimeter(const SimplePolygon& set, const ConvexBody& body) {
    double total = 0.0;
    for (const OrientedEdge& e : set.edges()) {
        total += e.length * 0.5 * (body.support(e.outer_normal) + body.support(-e.outer_normal));
    }
    return total;
}

SimplePolygon dilate_polygon(const SimplePolygon& set, const ConvexBody& body, double t) {
    if (!set.is_convex()) throw NonConvexSet("exact dilation requires a convex set");
    if (!(t > 0.0)) throw NonPositiveScale("dilation scale must be positive");
    const ConvexBody scaled_body = body.scaled(t);
    std::vector<Vec2> verts =
        convex_sum_vertices(merge_collinear(set.vertices()), scaled_body.vertices());
    return make_polygon(verts);
}

double outer_content_exact(const SimplePolygon& set, const ConvexBody& body, double epsilon) {
    const SimplePolygon dilated = dilate_polygon(set, body, epsilon);
    return (dilated.area() - set.area()) / epsilon;
}

SteinerCoefficients steiner_coefficients(const SimplePolygon& set, const ConvexBody& body) {
    if (!set.is_convex()) throw NonConvexSet("Steiner coefficients require a convex set");
    return {anisotropic_perimeter(set, body), body.area()};
}

}  // namespace amink
