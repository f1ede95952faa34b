#include "amink/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "amink/errors.hpp"

namespace amink {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::pair<int, int>> occupied_cells(const GridSet& s) {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < s.domain.ny; ++j) {
        for (int i = 0; i < s.domain.nx; ++i) {
            if (s.mask[s.domain.index(i, j)]) out.emplace_back(i, j);
        }
    }
    return out;
}

// Row-wise prefix counts: pre[j * (nx + 1) + i] = occupied cells in row j, columns [0, i).
std::vector<std::int32_t> row_prefix_counts(const GridSet& s) {
    const int nx = s.domain.nx, ny = s.domain.ny;
    std::vector<std::int32_t> pre(static_cast<std::size_t>(ny) * (nx + 1));
    for (int j = 0; j < ny; ++j) {
        std::int32_t run = 0;
        const std::size_t base = static_cast<std::size_t>(j) * (nx + 1);
        pre[base] = 0;
        for (int i = 0; i < nx; ++i) {
            run += s.mask[s.domain.index(i, j)] ? 1 : 0;
            pre[base + i + 1] = run;
        }
    }
    return pre;
}

}  // namespace

GridDomain make_domain(Vec2 origin, double spacing, int nx, int ny) {
    if (!(spacing > 0.0)) throw BadConfig("grid spacing must be positive");
    if (nx < 1 || ny < 1) throw BadConfig("grid extents must be at least 1");
    return GridDomain{origin, spacing, nx, ny};
}

std::size_t GridSet::occupied_count() const {
    std::size_t n = 0;
    for (std::uint8_t m : mask) n += m ? 1 : 0;
    return n;
}

GridSet GridSet::complement() const {
    GridSet out{domain, std::vector<std::uint8_t>(mask.size())};
    for (std::size_t k = 0; k < mask.size(); ++k) out.mask[k] = mask[k] ? 0 : 1;
    return out;
}

GridSet rasterize(const SimplePolygon& set, const GridDomain& domain) {
    GridSet out{domain, std::vector<std::uint8_t>(domain.cell_count(), 0)};
    const auto verts = set.vertices();
    const std::size_t n = verts.size();
    for (int j = 0; j < domain.ny; ++j) {
        for (int i = 0; i < domain.nx; ++i) {
            const Vec2 c = domain.cell_center(i, j);
            bool inside = false;
            for (std::size_t k = 0; k < n; ++k) {
                const Vec2 a = verts[k];
                const Vec2 b = verts[(k + 1) % n];
                if ((a.y > c.y) != (b.y > c.y)) {
                    const double x_cross = a.x + (c.y - a.y) * (b.x - a.x) / (b.y - a.y);
                    if (c.x < x_cross) inside = !inside;
                }
            }
            if (inside) out.mask[domain.index(i, j)] = 1;
        }
    }
    return out;
}

double measure(const GridSet& set) {
    return static_cast<double>(set.occupied_count()) * set.domain.cell_area();
}

DistanceField brute_distance(const GridSet& source, const ConvexBody& body) {
    const auto cells = occupied_cells(source);
    if (cells.empty()) throw EmptySource("distance transform needs a nonempty source");
    const GridDomain& dom = source.domain;
    const double h = dom.spacing;
    DistanceField out{dom, std::vector<double>(dom.cell_count(), kInf)};
    for (int j = 0; j < dom.ny; ++j) {
        for (int i = 0; i < dom.nx; ++i) {
            double best = kInf;
            for (const auto& [si, sj] : cells) {
                const double d = body.gauge({(i - si) * h, (j - sj) * h});
                best = std::min(best, d);
            }
            out.values[dom.index(i, j)] = best;
        }
    }
    return out;
}

DistanceField chamfer_distance(const GridSet& source, const ConvexBody& body, int mask_radius) {
    if (mask_radius < 1) throw BadConfig("chamfer mask radius must be at least 1");
    if (source.occupied_count() == 0) {
        throw EmptySource("distance transform needs a nonempty source");
    }
    const GridDomain& dom = source.domain;
    const double h = dom.spacing;

    struct Step {
        int p, q;
        double cost;
    };
    std::vector<Step> forward, backward;
    for (int q = -mask_radius; q <= mask_radius; ++q) {
        for (int p = -mask_radius; p <= mask_radius; ++p) {
            if (p == 0 && q == 0) continue;
            const double cost = body.gauge({p * h, q * h});
            if (q > 0 || (q == 0 && p > 0)) {
                forward.push_back({p, q, cost});
            } else {
                backward.push_back({p, q, cost});
            }
        }
    }

    DistanceField out{dom, std::vector<double>(dom.cell_count(), kInf)};
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        if (source.mask[k]) out.values[k] = 0.0;
    }

    auto sweep = [&](const std::vector<Step>& steps, bool reverse) {
        const int nx = dom.nx, ny = dom.ny;
        for (int jj = 0; jj < ny; ++jj) {
            const int j = reverse ? ny - 1 - jj : jj;
            for (int ii = 0; ii < nx; ++ii) {
                const int i = reverse ? nx - 1 - ii : ii;
                double best = out.values[dom.index(i, j)];
                for (const Step& s : steps) {
                    const int si = i - s.p;
                    const int sj = j - s.q;
                    if (si < 0 || si >= nx || sj < 0 || sj >= ny) continue;
                    const double cand = out.values[dom.index(si, sj)] + s.cost;
                    best = std::min(best, cand);
                }
                out.values[dom.index(i, j)] = best;
            }
        }
    };
    sweep(forward, false);
    sweep(backward, true);
    return out;
}

GridSet dilate(const GridSet& source, double epsilon, const ConvexBody& body,
               const DistanceField& field) {
    (void)body;
    if (!(epsilon > 0.0)) throw NonPositiveScale("dilation radius must be positive");
    if (!(field.domain == source.domain)) {
        throw MismatchedField("distance field does not match the source grid");
    }
    GridSet out{source.domain, std::vector<std::uint8_t>(source.mask.size())};
    for (std::size_t k = 0; k < out.mask.size(); ++k) {
        out.mask[k] = (field.values[k] <= epsilon) ? 1 : 0;
    }
    return out;
}

OffsetStencil lattice_stencil(const ConvexBody& body, double epsilon, double spacing,
                               int max_reach) {
    if (!(epsilon > 0.0)) throw NonPositiveScale("stencil radius must be positive");
    const double h = spacing;
    const double wanted = std::ceil(epsilon * body.outer_radius() / h) + 1.0;
    int reach = wanted < 1e9 ? static_cast<int>(wanted) : 1000000000;
    if (max_reach >= 0) reach = std::min(reach, max_reach);
    OffsetStencil st;
    st.qmin = -reach;
    st.rows.reserve(static_cast<std::size_t>(2 * reach + 1));
    for (int q = -reach; q <= reach; ++q) {
        int plo = 1, phi = 0;
        int admissible = 0;
        // convex slice: the admissible p form one contiguous interval
        for (int p = -reach; p <= reach; ++p) {
            if (body.gauge({p * h, q * h}) <= epsilon) {
                if (plo > phi) plo = p;
                phi = p;
                ++admissible;
            }
        }
        if (plo > phi) {
            st.rows.emplace_back(1, 0);  // empty row
        } else {
            if (admissible != phi - plo + 1) {
                throw Error("lattice stencil row is not contiguous");
            }
            st.rows.emplace_back(plo, phi);
        }
    }
    return st;
}

OffsetStencil ball_stencil(double radius, double spacing, int max_reach) {
    if (!(radius > 0.0)) throw NonPositiveScale("ball radius must be positive");
    const double h = spacing;
    const double wanted = std::ceil(radius / h) + 1.0;
    int reach = wanted < 1e9 ? static_cast<int>(wanted) : 1000000000;
    if (max_reach >= 0) reach = std::min(reach, max_reach);
    const double r2 = radius * radius;
    OffsetStencil st;
    st.qmin = -reach;
    st.rows.reserve(static_cast<std::size_t>(2 * reach + 1));
    for (int q = -reach; q <= reach; ++q) {
        int plo = 1, phi = 0;
        for (int p = -reach; p <= reach; ++p) {
            const double d2 = (p * h) * (p * h) + (q * h) * (q * h);
            if (d2 <= r2) {
                if (plo > phi) plo = p;
                phi = p;
            }
        }
        if (plo > phi) {
            st.rows.emplace_back(1, 0);
        } else {
            st.rows.emplace_back(plo, phi);
        }
    }
    return st;
}

GridSet dilate_with_stencil(const GridSet& source, const OffsetStencil& stencil) {
    const GridDomain& dom = source.domain;
    const int nx = dom.nx, ny = dom.ny;
    const auto pre = row_prefix_counts(source);
    GridSet out{dom, std::vector<std::uint8_t>(source.mask.size(), 0)};
    for (int j = 0; j < ny; ++j) {
        std::uint8_t* out_row = out.mask.data() + dom.index(0, j);
        for (std::size_t r = 0; r < stencil.rows.size(); ++r) {
            const auto [plo, phi] = stencil.rows[r];
            if (plo > phi) continue;
            const int jj = j - (stencil.qmin + static_cast<int>(r));
            if (jj < 0 || jj >= ny) continue;
            const std::int32_t* row_pre = pre.data() + static_cast<std::size_t>(jj) * (nx + 1);
            if (row_pre[nx] == 0) continue;
            for (int i = 0; i < nx; ++i) {
                if (out_row[i]) continue;
                const int c1 = std::max(0, i - phi);
                const int c2 = std::min(nx - 1, i - plo);
                if (c2 < c1) continue;
                if (row_pre[c2 + 1] - row_pre[c1] > 0) out_row[i] = 1;
            }
        }
    }
    return out;
}

GridSet dilate_exact(const GridSet& source, double epsilon, const ConvexBody& body) {
    const int cap = std::max(source.domain.nx, source.domain.ny);
    return dilate_with_stencil(source,
                               lattice_stencil(body, epsilon, source.domain.spacing, cap));
}

double outer_content_grid(const GridSet& set, double epsilon, const ConvexBody& body) {
    if (!(epsilon > 0.0)) throw NonPositiveScale("epsilon must be positive");
    const GridSet dilated = dilate_exact(set, epsilon, body);
    const std::size_t grown = dilated.occupied_count();
    const std::size_t base = set.occupied_count();
    return static_cast<double>(grown - base) * set.domain.cell_area() / epsilon;
}

double symmetric_content_grid(const GridSet& set, double epsilon, const ConvexBody& body) {
    return 0.5 * (outer_content_grid(set, epsilon, body) +
                  outer_content_grid(set.complement(), epsilon, body));
}

SignedField signed_distance(const GridSet& set, const ConvexBody& body) {
    const std::size_t occ = set.occupied_count();
    if (occ == 0 || occ == set.mask.size()) {
        throw DegenerateSplit("signed distance needs both the set and its complement nonempty");
    }
    const DistanceField inside = brute_distance(set, body);
    const DistanceField outside = brute_distance(set.complement(), body);
    SignedField out{set.domain, std::vector<double>(set.mask.size())};
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        out.values[k] = inside.values[k] - outside.values[k];
    }
    return out;
}

double boundary_content(const GridSet& set, double epsilon) {
    if (!(epsilon > 0.0)) throw NonPositiveScale("epsilon must be positive");
    const std::size_t occ = set.occupied_count();
    if (occ == 0 || occ == set.mask.size()) {
        throw DegenerateSplit("boundary content needs both the set and its complement nonempty");
    }
    // |d_E(x)| is the Euclidean distance to the opposite side, so the band
    // {|d_E| <= eps} is (S ∩ dilate(complement)) ∪ (complement ∩ dilate(S)).
    const int cap = std::max(set.domain.nx, set.domain.ny);
    const OffsetStencil ball = ball_stencil(epsilon, set.domain.spacing, cap);
    const GridSet near_set = dilate_with_stencil(set, ball);
    const GridSet near_complement = dilate_with_stencil(set.complement(), ball);
    std::size_t band = 0;
    for (std::size_t k = 0; k < set.mask.size(); ++k) {
        if (set.mask[k] ? near_complement.mask[k] : near_set.mask[k]) ++band;
    }
    return static_cast<double>(band) * set.domain.cell_area() / (2.0 * epsilon);
}

ScalarField eikonal_residual(const DistanceField& field, const ConvexBody& body) {
    const GridDomain& dom = field.domain;
    const double h = dom.spacing;
    ScalarField out{dom, std::vector<double>(field.values.size(), kInf)};
    for (int j = 1; j + 1 < dom.ny; ++j) {
        for (int i = 1; i + 1 < dom.nx; ++i) {
            const double center = field.values[dom.index(i, j)];
            if (!(center > 0.0) || !std::isfinite(center)) continue;
            const double e = field.values[dom.index(i + 1, j)];
            const double w = field.values[dom.index(i - 1, j)];
            const double n = field.values[dom.index(i, j + 1)];
            const double s = field.values[dom.index(i, j - 1)];
            if (!std::isfinite(e) || !std::isfinite(w) || !std::isfinite(n) || !std::isfinite(s)) {
                continue;
            }
            const Vec2 grad{(e - w) / (2.0 * h), (n - s) / (2.0 * h)};
            out.values[dom.index(i, j)] = std::abs(body.support(grad) - 1.0);
        }
    }
    return out;
}

}  // namespace amink
