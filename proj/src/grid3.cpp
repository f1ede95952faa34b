#include "amink/grid3.hpp"

#include <array>

namespace amink {

GridSet3 rasterize_box3(const GridDomain3& domain, Vec3 lo, Vec3 hi) {
    GridSet3 out{domain, std::vector<std::uint8_t>(domain.cell_count(), 0)};
    for (int k = 0; k < domain.nz; ++k) {
        for (int j = 0; j < domain.ny; ++j) {
            for (int i = 0; i < domain.nx; ++i) {
                const Vec3 c = domain.cell_center(i, j, k);
                if (c.x >= lo.x && c.x <= hi.x && c.y >= lo.y && c.y <= hi.y && c.z >= lo.z &&
                    c.z <= hi.z) {
                    out.mask[domain.index(i, j, k)] = 1;
                }
            }
        }
    }
    return out;
}

GridSet3 dilate_with_stencil3(const GridSet3& source, const OffsetStencil3& stencil) {
    const GridDomain3& dom = source.domain;
    const int nx = dom.nx, ny = dom.ny, nz = dom.nz;
    // per-(j,k) row prefix counts over i
    std::vector<std::int32_t> pre(static_cast<std::size_t>(ny) * nz * (nx + 1));
    for (int k = 0; k < nz; ++k) {
        for (int j = 0; j < ny; ++j) {
            const std::size_t base = (static_cast<std::size_t>(k) * ny + j) * (nx + 1);
            std::int32_t run = 0;
            pre[base] = 0;
            for (int i = 0; i < nx; ++i) {
                run += source.mask[dom.index(i, j, k)] ? 1 : 0;
                pre[base + i + 1] = run;
            }
        }
    }
    GridSet3 out{dom, std::vector<std::uint8_t>(source.mask.size(), 0)};
    for (int k = 0; k < nz; ++k) {
        for (int j = 0; j < ny; ++j) {
            std::uint8_t* out_row = out.mask.data() + dom.index(0, j, k);
            for (int rr = 0; rr < stencil.rcount; ++rr) {
                const int sk = k - (stencil.rmin + rr);
                if (sk < 0 || sk >= nz) continue;
                for (int qq = 0; qq < stencil.qcount; ++qq) {
                    const auto [plo, phi] =
                        stencil.rows[static_cast<std::size_t>(rr) * stencil.qcount + qq];
                    if (plo > phi) continue;
                    const int sj = j - (stencil.qmin + qq);
                    if (sj < 0 || sj >= ny) continue;
                    const std::int32_t* row_pre =
                        pre.data() + (static_cast<std::size_t>(sk) * ny + sj) * (nx + 1);
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
        }
    }
    return out;
}

}  // namespace amink
