#include "amink/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "amink/errors.hpp"

namespace amink {

namespace {

// Shoelace area of a closed CCW chain.
double shoelace(std::span<const Vec2> v) {
    double twice = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i];
        const Vec2 b = v[(i + 1) % v.size()];
        twice += cross(a, b);
    }
    return 0.5 * twice;
}

// Andrew monotone chain, strictly convex output (collinear points dropped).
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    // merge duplicates within tolerance
    std::vector<Vec2> uniq;
    for (Vec2 p : pts) {
        if (!uniq.empty() && std::abs(p.x - uniq.back().x) <= kGeomTol &&
            std::abs(p.y - uniq.back().y) <= kGeomTol) {
            continue;
        }
        uniq.push_back(p);
    }
    if (uniq.size() < 3) return uniq;

    auto build = [&](auto begin, auto end) {
        std::vector<Vec2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(chain.back() - chain[chain.size() - 2], *it - chain.back()) <= kGeomTol) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
        return chain;
    };

    std::vector<Vec2> lower = build(uniq.begin(), uniq.end());
    std::vector<Vec2> upper = build(uniq.rbegin(), uniq.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

}  // namespace

void ConvexBody::finish() {
    const std::size_t n = verts_.size();
    edge_normals_.resize(n);
    edge_offsets_.resize(n);
    inner_radius_ = std::numeric_limits<double>::infinity();
    outer_radius_ = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = verts_[i];
        const Vec2 b = verts_[(i + 1) % n];
        const Vec2 d = b - a;
        const Vec2 normal{d.y, -d.x};  // outward for CCW order
        const double offset = dot(a, normal);
        const double len = norm(normal);
        if (offset / len <= kGeomTol) {
            throw OriginNotInterior("origin is not strictly inside the body");
        }
        edge_normals_[i] = normal;
        edge_offsets_[i] = offset;
        inner_radius_ = std::min(inner_radius_, offset / len);
        outer_radius_ = std::max(outer_radius_, norm(a));
    }
}

double ConvexBody::support(Direction dir) const {
    double best = -std::numeric_limits<double>::infinity();
    for (Vec2 v : verts_) best = std::max(best, dot(v, dir));
    return best;
}

double ConvexBody::gauge(Vec2 point) const {
    if (point.x == 0.0 && point.y == 0.0) return 0.0;
    double best = 0.0;
    for (std::size_t i = 0; i < edge_normals_.size(); ++i) {
        best = std::max(best, dot(point, edge_normals_[i]) / edge_offsets_[i]);
    }
    return best;
}

double ConvexBody::area() const { return shoelace(verts_); }

ConvexBody ConvexBody::scaled(double t) const {
    if (!(t > 0.0)) throw NonPositiveScale("scale factor must be positive");
    ConvexBody out;
    out.verts_.reserve(verts_.size());
    for (Vec2 v : verts_) out.verts_.push_back(v * t);
    out.finish();
    return out;
}

ConvexBody ConvexBody::reflected() const {
    ConvexBody out;
    out.verts_.reserve(verts_.size());
    // point reflection is a rotation in 2D, so CCW order is preserved
    for (Vec2 v : verts_) out.verts_.push_back(-v);
    out.finish();
    return out;
}

ConvexBody build_body(std::span<const Vec2> points) {
    if (points.size() < 3) throw DegenerateInput("need at least 3 points");
    std::vector<Vec2> hull = convex_hull({points.begin(), points.end()});
    if (hull.size() < 3) throw DegenerateInput("hull has fewer than 3 vertices");
    ConvexBody body;
    body.verts_ = std::move(hull);
    body.finish();
    return body;
}

ConvexBody minkowski_sum(const ConvexBody& p, const ConvexBody& q) {
    std::vector<Vec2> sum = convex_sum_vertices(p.vertices(), q.vertices());
    return build_body(sum);
}

ConvexBody regular_polygon_body(int sides, double radius) {
    if (sides < 3) throw DegenerateInput("need at least 3 sides");
    if (!(radius > 0.0)) throw NonPositiveScale("radius must be positive");
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(sides));
    for (int k = 0; k < sides; ++k) {
        const double angle = 2.0 * M_PI * k / sides;
        pts.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
    }
    return build_body(pts);
}

std::vector<Vec2> convex_sum_vertices(std::span<const Vec2> a, std::span<const Vec2> b) {
    // Edge vectors of a CCW convex chain, consecutive parallel edges merged.
    auto edge_vectors = [](std::span<const Vec2> v, std::size_t start) {
        std::vector<Vec2> out;
        out.reserve(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            const Vec2 p = v[(start + k) % v.size()];
            const Vec2 q = v[(start + k + 1) % v.size()];
            const Vec2 e = q - p;
            if (!out.empty() && std::abs(cross(out.back(), e)) <= kGeomTol &&
                dot(out.back(), e) > 0.0) {
                out.back() = out.back() + e;
            } else {
                out.push_back(e);
            }
        }
        return out;
    };
    // Bottom-most (then left-most) starting vertex: edge angles mapped to
    // [0, 2pi) are then strictly increasing along the chain.
    auto lowest = [](std::span<const Vec2> v) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
        }
        return best;
    };
    auto angle_of = [](Vec2 e) {
        double t = std::atan2(e.y, e.x);
        if (t < 0.0) t += 2.0 * M_PI;
        return t;
    };

    const std::size_t ia = lowest(a), ib = lowest(b);
    const std::vector<Vec2> ea = edge_vectors(a, ia);
    const std::vector<Vec2> eb = edge_vectors(b, ib);

    std::vector<Vec2> merged;
    merged.reserve(ea.size() + eb.size());
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        Vec2 e;
        if (i < ea.size() && j < eb.size()) {
            const double ta = angle_of(ea[i]);
            const double tb = angle_of(eb[j]);
            if (std::abs(ta - tb) <= 1e-12) {
                e = ea[i++] + eb[j++];
            } else if (ta < tb) {
                e = ea[i++];
            } else {
                e = eb[j++];
            }
        } else if (i < ea.size()) {
            e = ea[i++];
        } else {
            e = eb[j++];
        }
        merged.push_back(e);
    }

    std::vector<Vec2> out;
    out.reserve(merged.size());
    Vec2 p = a[ia] + b[ib];
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        out.push_back(p);
        p = p + merged[k];
    }
    out.push_back(p);  // final edge closes the chain back to out.front()
    return out;
}

}  // namespace amink
