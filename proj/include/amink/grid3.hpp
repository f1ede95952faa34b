#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "amink/errors.hpp"

namespace amink {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    bool operator==(const Vec3&) const = default;
};

/// Axis-aligned box body [-rx, rx] x [-ry, ry] x [-rz, rz].
struct BoxBody3 {
    double rx = 1.0, ry = 1.0, rz = 1.0;

    double gauge(Vec3 v) const {
        return std::max({std::abs(v.x) / rx, std::abs(v.y) / ry, std::abs(v.z) / rz});
    }
    double support(Vec3 dir) const {
        return rx * std::abs(dir.x) + ry * std::abs(dir.y) + rz * std::abs(dir.z);
    }
    double inner_radius() const { return std::min({rx, ry, rz}); }
    double outer_radius() const { return std::sqrt(rx * rx + ry * ry + rz * rz); }
};

/// Euclidean ball body of the given radius.
struct BallBody3 {
    double radius = 1.0;

    double gauge(Vec3 v) const {
        return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z) / radius;
    }
    double support(Vec3 dir) const {
        return radius * std::sqrt(dir.x * dir.x + dir.y * dir.y + dir.z * dir.z);
    }
    double inner_radius() const { return radius; }
    double outer_radius() const { return radius; }
};

struct GridDomain3 {
    Vec3 origin;
    double spacing = 0.0;
    int nx = 0, ny = 0, nz = 0;

    Vec3 cell_center(int i, int j, int k) const {
        return {origin.x + (i + 0.5) * spacing, origin.y + (j + 0.5) * spacing,
                origin.z + (k + 0.5) * spacing};
    }
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * ny + j) * nx + i;
    }
    std::size_t cell_count() const {
        return static_cast<std::size_t>(nx) * ny * nz;
    }
    double cell_volume() const { return spacing * spacing * spacing; }
    bool operator==(const GridDomain3&) const = default;
};

inline GridDomain3 make_domain3(Vec3 origin, double spacing, int nx, int ny, int nz) {
    if (!(spacing > 0.0)) throw BadConfig("grid spacing must be positive");
    if (nx < 1 || ny < 1 || nz < 1) throw BadConfig("grid extents must be at least 1");
    return GridDomain3{origin, spacing, nx, ny, nz};
}

struct GridSet3 {
    GridDomain3 domain;
    std::vector<std::uint8_t> mask;

    std::size_t occupied_count() const {
        std::size_t n = 0;
        for (std::uint8_t m : mask) n += m ? 1 : 0;
        return n;
    }
};

struct DistanceField3 {
    GridDomain3 domain;
    std::vector<double> values;
};

/// Cells whose centers lie inside the closed box [lo, hi].
GridSet3 rasterize_box3(const GridDomain3& domain, Vec3 lo, Vec3 hi);

inline double measure3(const GridSet3& set) {
    return static_cast<double>(set.occupied_count()) * set.domain.cell_volume();
}

/// Lattice trace of the scaled 3D body, one contiguous p-interval per (q, r) row.
struct OffsetStencil3 {
    int qmin = 0, rmin = 0;
    int qcount = 0, rcount = 0;
    std::vector<std::pair<int, int>> rows;  // indexed (r - rmin) * qcount + (q - qmin)
};

template <typename Body>
OffsetStencil3 lattice_stencil3(const Body& body, double epsilon, double spacing) {
    if (!(epsilon > 0.0)) throw NonPositiveScale("stencil radius must be positive");
    const double h = spacing;
    const int reach = static_cast<int>(std::ceil(epsilon * body.outer_radius() / h)) + 1;
    OffsetStencil3 st;
    st.qmin = st.rmin = -reach;
    st.qcount = st.rcount = 2 * reach + 1;
    st.rows.reserve(static_cast<std::size_t>(st.qcount) * st.rcount);
    for (int r = -reach; r <= reach; ++r) {
        for (int q = -reach; q <= reach; ++q) {
            int plo = 1, phi = 0;
            for (int p = -reach; p <= reach; ++p) {
                if (body.gauge({p * h, q * h, r * h}) <= epsilon) {
                    if (plo > phi) plo = p;
                    phi = p;
                }
            }
            st.rows.emplace_back(plo, phi);
        }
    }
    return st;
}

GridSet3 dilate_with_stencil3(const GridSet3& source, const OffsetStencil3& stencil);

template <typename Body>
GridSet3 dilate_exact3(const GridSet3& source, double epsilon, const Body& body) {
    return dilate_with_stencil3(source, lattice_stencil3(body, epsilon, source.domain.spacing));
}

template <typename Body>
double outer_content_grid3(const GridSet3& set, double epsilon, const Body& body) {
    if (!(epsilon > 0.0)) throw NonPositiveScale("epsilon must be positive");
    const GridSet3 dilated = dilate_exact3(set, epsilon, body);
    return static_cast<double>(dilated.occupied_count() - set.occupied_count()) *
           set.domain.cell_volume() / epsilon;
}

template <typename Body>
DistanceField3 brute_distance3(const GridSet3& source, const Body& body) {
    const GridDomain3& dom = source.domain;
    const double h = dom.spacing;
    std::vector<std::array<int, 3>> cells;
    for (int k = 0; k < dom.nz; ++k) {
        for (int j = 0; j < dom.ny; ++j) {
            for (int i = 0; i < dom.nx; ++i) {
                if (source.mask[dom.index(i, j, k)]) cells.push_back({i, j, k});
            }
        }
    }
    if (cells.empty()) throw EmptySource("distance transform needs a nonempty source");
    DistanceField3 out{dom, std::vector<double>(dom.cell_count(),
                                                std::numeric_limits<double>::infinity())};
    for (int k = 0; k < dom.nz; ++k) {
        for (int j = 0; j < dom.ny; ++j) {
            for (int i = 0; i < dom.nx; ++i) {
                double best = out.values[dom.index(i, j, k)];
                for (const auto& c : cells) {
                    best = std::min(best,
                                    body.gauge({(i - c[0]) * h, (j - c[1]) * h, (k - c[2]) * h}));
                }
                out.values[dom.index(i, j, k)] = best;
            }
        }
    }
    return out;
}

template <typename Body>
DistanceField3 chamfer_distance3(const GridSet3& source, const Body& body, int mask_radius) {
    if (mask_radius < 1) throw BadConfig("chamfer mask radius must be at least 1");
    if (source.occupied_count() == 0) {
        throw EmptySource("distance transform needs a nonempty source");
    }
    const GridDomain3& dom = source.domain;
    const double h = dom.spacing;

    struct Step {
        int p, q, r;
        double cost;
    };
    std::vector<Step> forward, backward;
    for (int r = -mask_radius; r <= mask_radius; ++r) {
        for (int q = -mask_radius; q <= mask_radius; ++q) {
            for (int p = -mask_radius; p <= mask_radius; ++p) {
                if (p == 0 && q == 0 && r == 0) continue;
                const double cost = body.gauge({p * h, q * h, r * h});
                const bool fwd = r > 0 || (r == 0 && (q > 0 || (q == 0 && p > 0)));
                if (fwd) {
                    forward.push_back({p, q, r, cost});
                } else {
                    backward.push_back({p, q, r, cost});
                }
            }
        }
    }

    DistanceField3 out{dom, std::vector<double>(dom.cell_count(),
                                                std::numeric_limits<double>::infinity())};
    for (std::size_t n = 0; n < out.values.size(); ++n) {
        if (source.mask[n]) out.values[n] = 0.0;
    }
    auto sweep = [&](const std::vector<Step>& steps, bool reverse) {
        for (int kk = 0; kk < dom.nz; ++kk) {
            const int k = reverse ? dom.nz - 1 - kk : kk;
            for (int jj = 0; jj < dom.ny; ++jj) {
                const int j = reverse ? dom.ny - 1 - jj : jj;
                for (int ii = 0; ii < dom.nx; ++ii) {
                    const int i = reverse ? dom.nx - 1 - ii : ii;
                    double best = out.values[dom.index(i, j, k)];
                    for (const Step& s : steps) {
                        const int si = i - s.p, sj = j - s.q, sk = k - s.r;
                        if (si < 0 || si >= dom.nx || sj < 0 || sj >= dom.ny || sk < 0 ||
                            sk >= dom.nz) {
                            continue;
                        }
                        best = std::min(best, out.values[dom.index(si, sj, sk)] + s.cost);
                    }
                    out.values[dom.index(i, j, k)] = best;
                }
            }
        }
    };
    sweep(forward, false);
    sweep(backward, true);
    return out;
}

}  // namespace amink
