#include "amink/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "amink/errors.hpp"

namespace amink {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// out[i] = max(out[i], max over t in [i - phi, i - plo] ∩ [0, n) of row[t]),
/// computed with the block prefix/suffix trick in O(n + window).
class SlidingMax {
public:
    void apply(const double* row, int n, int plo, int phi, double* out) {
        const int w = phi - plo + 1;
        const int off = std::max(0, phi);
        const int len = n + off + std::max(0, -plo) + w;
        padded_.assign(static_cast<std::size_t>(len), kNegInf);
        for (int t = 0; t < n; ++t) padded_[static_cast<std::size_t>(t + off)] = row[t];

        prefix_.resize(static_cast<std::size_t>(len));
        suffix_.resize(static_cast<std::size_t>(len));
        for (int t = 0; t < len; ++t) {
            prefix_[t] = (t % w == 0) ? padded_[t] : std::max(prefix_[t - 1], padded_[t]);
        }
        for (int t = len - 1; t >= 0; --t) {
            suffix_[t] = (t % w == w - 1 || t == len - 1)
                             ? padded_[t]
                             : std::max(suffix_[t + 1], padded_[t]);
        }
        for (int i = 0; i < n; ++i) {
            const int start = i - phi + off;           // padded window [start, start + w - 1]
            const double m = std::max(suffix_[start], prefix_[start + w - 1]);
            if (m > out[i]) out[i] = m;
        }
    }

private:
    std::vector<double> padded_, prefix_, suffix_;
};

}  // namespace

ScalarField sup_filter(const ScalarField& u, double epsilon, const ConvexBody& body) {
    if (!(epsilon > 0.0)) throw NonPositiveScale("epsilon must be positive");
    const GridDomain& dom = u.domain;
    const double h = dom.spacing;
    ScalarField out{dom, std::vector<double>(u.values.size(), kNegInf)};

    if (epsilon / h <= 32.0) {
        // small neighborhoods: test the gauge directly, no stencil
        const int reach = static_cast<int>(std::ceil(epsilon * body.outer_radius() / h)) + 1;
        for (int j = 0; j < dom.ny; ++j) {
            for (int i = 0; i < dom.nx; ++i) {
                double best = kNegInf;
                const int q0 = std::max(-reach, j - (dom.ny - 1));
                const int q1 = std::min(reach, j);
                const int p0 = std::max(-reach, i - (dom.nx - 1));
                const int p1 = std::min(reach, i);
                for (int q = q0; q <= q1; ++q) {
                    for (int p = p0; p <= p1; ++p) {
                        if (body.gauge({p * h, q * h}) > epsilon) continue;
                        best = std::max(best, u.values[dom.index(i - p, j - q)]);
                    }
                }
                out.values[dom.index(i, j)] = best;
            }
        }
        return out;
    }

    const OffsetStencil st =
        lattice_stencil(body, epsilon, h, std::max(dom.nx, dom.ny));
    SlidingMax slider;
    for (int j = 0; j < dom.ny; ++j) {
        double* out_row = out.values.data() + dom.index(0, j);
        for (std::size_t r = 0; r < st.rows.size(); ++r) {
            const auto [plo, phi] = st.rows[r];
            if (plo > phi) continue;
            const int jj = j - (st.qmin + static_cast<int>(r));
            if (jj < 0 || jj >= dom.ny) continue;
            slider.apply(u.values.data() + dom.index(0, jj), dom.nx, plo, phi, out_row);
        }
    }
    return out;
}

double grayscale_content(const ScalarField& u, double epsilon, const ConvexBody& body) {
    const ScalarField filtered = sup_filter(u, epsilon, body);
    std::vector<double> excess(u.values.size());
    for (std::size_t k = 0; k < excess.size(); ++k) {
        excess[k] = filtered.values[k] - u.values[k];
    }
    return pairwise_sum(excess) * u.domain.cell_area() / epsilon;
}

LevelDecomposition decompose_levels(const ScalarField& u) {
    std::vector<double> values = u.values;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() > 4096) {
        throw TooManyLevels("field has more than 4096 distinct values");
    }
    LevelDecomposition out;
    out.thresholds = values;
    out.superlevel_sets.reserve(values.size());
    for (double s : values) {
        GridSet level{u.domain, std::vector<std::uint8_t>(u.values.size())};
        for (std::size_t k = 0; k < u.values.size(); ++k) {
            level.mask[k] = (u.values[k] > s) ? 1 : 0;
        }
        out.superlevel_sets.push_back(std::move(level));
    }
    return out;
}

double levelset_content_sum(const ScalarField& u, double epsilon, const ConvexBody& body) {
    const LevelDecomposition levels = decompose_levels(u);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < levels.thresholds.size(); ++k) {
        const double gap = levels.thresholds[k + 1] - levels.thresholds[k];
        total += gap * outer_content_grid(levels.superlevel_sets[k], epsilon, body);
    }
    return total;
}

double indicator_limit_reference(const SimplePolygon& set, const ConvexBody& body) {
    return anisotropic_perimeter(set, body);
}

double affine_limit_reference(Vec2 gradient, const ConvexBody& body, double window_measure) {
    if (!(window_measure > 0.0)) throw BadConfig("window measure must be positive");
    return window_measure * body.support(-gradient);
}

ScalarField quantize_levels(const ScalarField& u, int levels) {
    if (levels < 2) throw BadConfig("need at least 2 quantization levels");
    const auto [lo_it, hi_it] = std::minmax_element(u.values.begin(), u.values.end());
    const double lo = *lo_it, hi = *hi_it;
    ScalarField out{u.domain, u.values};
    if (hi == lo) return out;
    const double step = (hi - lo) / (levels - 1);
    for (double& v : out.values) {
        const double k = std::round((v - lo) / step);
        v = lo + k * step;
    }
    return out;
}

ScalarField indicator_field(const GridSet& set) {
    ScalarField out{set.domain, std::vector<double>(set.mask.size())};
    for (std::size_t k = 0; k < set.mask.size(); ++k) {
        out.values[k] = set.mask[k] ? 1.0 : 0.0;
    }
    return out;
}

ScalarField affine_field(const GridDomain& domain, Vec2 gradient) {
    ScalarField out{domain, std::vector<double>(domain.cell_count())};
    for (int j = 0; j < domain.ny; ++j) {
        for (int i = 0; i < domain.nx; ++i) {
            out.values[domain.index(i, j)] = dot(gradient, domain.cell_center(i, j));
        }
    }
    return out;
}

}  // namespace amink
