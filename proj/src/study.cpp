#include "amink/study.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>

#include "amink/errors.hpp"
#include "amink/functionals.hpp"
#include "amink/grid.hpp"

namespace amink {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Bbox {
    Vec2 lo, hi;
};

Bbox bbox_of(std::span<const Vec2> verts) {
    Bbox b{verts.front(), verts.front()};
    for (Vec2 v : verts) {
        b.lo.x = std::min(b.lo.x, v.x);
        b.lo.y = std::min(b.lo.y, v.y);
        b.hi.x = std::max(b.hi.x, v.x);
        b.hi.y = std::max(b.hi.y, v.y);
    }
    return b;
}

/// Domain covering the set's bounding box with a margin of eps_max * b plus
/// a little slack, so dilations never hit the domain boundary.
GridDomain auto_domain(const SimplePolygon& set, const ConvexBody& body, double h,
                       double eps_max) {
    const Bbox b = bbox_of(set.vertices());
    const double margin = eps_max * body.outer_radius() + 4.0 * h;
    const Vec2 origin{b.lo.x - margin, b.lo.y - margin};
    const int nx = static_cast<int>(std::ceil((b.hi.x + margin - origin.x) / h));
    const int ny = static_cast<int>(std::ceil((b.hi.y + margin - origin.y) / h));
    return make_domain(origin, h, nx, ny);
}

Vec2 centroid_of(const SimplePolygon& set) {
    const auto v = set.vertices();
    double cx = 0.0, cy = 0.0, a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 p = v[i], q = v[(i + 1) % v.size()];
        const double w = cross(p, q);
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    return {cx / (3.0 * a), cy / (3.0 * a)};
}

SimplePolygon scaled_about_centroid(const SimplePolygon& set, double t) {
    const Vec2 c = centroid_of(set);
    std::vector<Vec2> verts;
    for (Vec2 v : set.vertices()) verts.push_back(c + (v - c) * t);
    return make_polygon(verts);
}

Vec2 seeded_gradient(std::uint64_t seed) {
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 1ULL);
    const double angle = 2.0 * M_PI * rng.next_double();
    const double magnitude = 0.5 + rng.next_double();
    return {magnitude * std::cos(angle), magnitude * std::sin(angle)};
}

void validate(const StudyConfig& cfg) {
    if (cfg.epsilons.empty()) throw BadConfig("epsilon list is empty");
    for (double e : cfg.epsilons) {
        if (!(e > 0.0)) throw BadConfig("epsilon values must be strictly positive");
    }
    for (std::size_t k = 0; k + 1 < cfg.epsilons.size(); ++k) {
        if (!(cfg.epsilons[k] > cfg.epsilons[k + 1])) {
            throw BadConfig("epsilon values must be strictly decreasing");
        }
    }
    if (cfg.out_csv.empty()) throw BadConfig("missing output CSV path");
    const bool grid_study = cfg.kind != StudyKind::steiner;
    if (grid_study) {
        if (!(cfg.spacing > 0.0)) throw BadConfig("grid study requires a positive spacing");
        const double eps_min = cfg.epsilons.back();
        if (eps_min < 8.0 * cfg.spacing - 1e-12) {
            throw BadConfig("grid study requires eps_min >= 8h");
        }
    }
}

CsvRow make_row(double eps, double estimate, double reference, double wall_ms) {
    CsvRow r;
    r.epsilon = eps;
    r.estimate = estimate;
    r.reference = reference;
    r.abs_err = std::abs(estimate - reference);
    r.rel_err = reference != 0.0 ? r.abs_err / std::abs(reference) : r.abs_err;
    r.wall_ms = wall_ms;
    return r;
}

FitResult fit_rows(const std::vector<CsvRow>& rows) {
    ContentSeries series;
    for (const CsvRow& r : rows) series.samples.emplace_back(r.epsilon, r.estimate);
    return fit_linear(series);
}

}  // namespace

StudyKind parse_study_kind(const std::string& name) {
    if (name == "steiner") return StudyKind::steiner;
    if (name == "converge") return StudyKind::converge;
    if (name == "symmetric") return StudyKind::symmetric;
    if (name == "coarea") return StudyKind::coarea;
    if (name == "affine") return StudyKind::affine;
    if (name == "distbench") return StudyKind::distbench;
    throw BadConfig("unknown study kind: " + name);
}

std::string study_kind_name(StudyKind kind) {
    switch (kind) {
        case StudyKind::steiner: return "steiner";
        case StudyKind::converge: return "converge";
        case StudyKind::symmetric: return "symmetric";
        case StudyKind::coarea: return "coarea";
        case StudyKind::affine: return "affine";
        case StudyKind::distbench: return "distbench";
    }
    throw BadConfig("unknown study kind");
}

FitResult fit_linear(const ContentSeries& series) {
    const auto& s = series.samples;
    if (s.size() < 2) throw TooFewSamples("linear fit needs at least 2 samples");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(s.size());
    for (const auto& [x, y] : s) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double det = n * sxx - sx * sx;
    FitResult fit;
    if (det == 0.0) {
        fit.slope = 0.0;
        fit.limit_estimate = sy / n;
    } else {
        fit.slope = (n * sxy - sx * sy) / det;
        fit.limit_estimate = (sy - fit.slope * sx) / n;
    }
    for (const auto& [x, y] : s) {
        fit.max_residual =
            std::max(fit.max_residual, std::abs(y - (fit.limit_estimate + fit.slope * x)));
    }
    return fit;
}

SimplePolygon builtin_polygon(const std::string& name, std::uint64_t seed) {
    if (name == "square") {
        return make_polygon(std::vector<Vec2>{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    }
    if (name == "diamond") {
        return make_polygon(std::vector<Vec2>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    }
    if (name == "disk64") {
        const ConvexBody disk = regular_polygon_body(64);
        return make_polygon(std::vector<Vec2>(disk.vertices().begin(), disk.vertices().end()));
    }
    if (name == "triangle-asym") {
        return make_polygon(std::vector<Vec2>{{2, 0}, {0, 1}, {-1, -1}});
    }
    if (name == "lshape") {
        return make_polygon(std::vector<Vec2>{
            {0, 0}, {1, 0}, {1, 0.4}, {0.4, 0.4}, {0.4, 1}, {0, 1}});
    }
    if (name == "blob") {
        // star-shaped polygon around the origin: jittered angles, radii in [0.5, 1)
        SplitMix64 rng(seed + 0x5bd1e995ULL);
        constexpr int kSpokes = 16;
        std::vector<Vec2> verts;
        verts.reserve(kSpokes);
        for (int k = 0; k < kSpokes; ++k) {
            const double jitter = 0.35 * (rng.next_double() - 0.5) * (2.0 * M_PI / kSpokes);
            const double angle = 2.0 * M_PI * k / kSpokes + jitter;
            const double radius = 0.5 + 0.5 * rng.next_double();
            verts.push_back({radius * std::cos(angle), radius * std::sin(angle)});
        }
        return make_polygon(verts);
    }
    throw UnknownShape("unknown shape: " + name);
}

ConvexBody builtin_body(const std::string& name, std::uint64_t seed) {
    const SimplePolygon poly = builtin_polygon(name, seed);
    return build_body(poly.vertices());
}

SimplePolygon resolve_set_shape(const std::string& spec, std::uint64_t seed) {
    if (std::filesystem::exists(spec)) {
        // file vertices carry no guaranteed order; keep the hull
        const std::vector<Vec2> pts = read_vertex_file(spec);
        const ConvexBody hull = build_body(pts);
        return make_polygon(hull.vertices());
    }
    return builtin_polygon(spec, seed);
}

ConvexBody resolve_body_shape(const std::string& spec, std::uint64_t seed) {
    if (std::filesystem::exists(spec)) {
        return build_body(read_vertex_file(spec));
    }
    return builtin_body(spec, seed);
}

StudySummary run_study(const StudyConfig& cfg) {
    validate(cfg);

    StudySummary out;
    out.kind = study_kind_name(cfg.kind);

    const SimplePolygon e_poly = resolve_set_shape(cfg.e_shape, cfg.seed);
    const ConvexBody body = resolve_body_shape(cfg.c_shape, cfg.seed);
    const double eps_max = cfg.epsilons.front();

    switch (cfg.kind) {
        case StudyKind::steiner: {
            if (!e_poly.is_convex()) {
                throw BadConfig("steiner study requires a convex E shape");
            }
            const SteinerCoefficients sc = steiner_coefficients(e_poly, body);
            for (double eps : cfg.epsilons) {
                const auto t0 = Clock::now();
                const double estimate = outer_content_exact(e_poly, body, eps);
                const double wall = elapsed_ms(t0);
                out.rows.push_back(
                    make_row(eps, estimate, sc.perimeter_term + eps * sc.area_term, wall));
            }
            out.reference = sc.perimeter_term;
            break;
        }
        case StudyKind::converge: {
            const GridDomain dom = auto_domain(e_poly, body, cfg.spacing, eps_max);
            const GridSet set = rasterize(e_poly, dom);
            const double reference = anisotropic_perimeter(e_poly, body);
            for (double eps : cfg.epsilons) {
                const auto t0 = Clock::now();
                const double estimate = outer_content_grid(set, eps, body);
                out.rows.push_back(make_row(eps, estimate, reference, elapsed_ms(t0)));
            }
            out.reference = reference;
            break;
        }
        case StudyKind::symmetric: {
            const GridDomain dom = auto_domain(e_poly, body, cfg.spacing, eps_max);
            const GridSet set = rasterize(e_poly, dom);
            const double reference = symmetric_anisotropic_perimeter(e_poly, body);
            for (double eps : cfg.epsilons) {
                const auto t0 = Clock::now();
                const double estimate = symmetric_content_grid(set, eps, body);
                out.rows.push_back(make_row(eps, estimate, reference, elapsed_ms(t0)));
            }
            out.reference = reference;
            break;
        }
        case StudyKind::coarea: {
            const GridDomain dom = auto_domain(e_poly, body, cfg.spacing, eps_max);
            // nested three-level field: scaled copies of E about its centroid
            const double scales[3] = {1.0, 0.65, 0.35};
            const double weights[3] = {0.5, 0.25, 0.25};
            ScalarField u{dom, std::vector<double>(dom.cell_count(), 0.0)};
            double level_reference = 0.0;
            for (int k = 0; k < 3; ++k) {
                const SimplePolygon layer = scaled_about_centroid(e_poly, scales[k]);
                const GridSet raster = rasterize(layer, dom);
                for (std::size_t c = 0; c < u.values.size(); ++c) {
                    if (raster.mask[c]) u.values[c] += weights[k];
                }
                level_reference += weights[k] * anisotropic_perimeter(layer, body);
            }
            for (double eps : cfg.epsilons) {
                const auto t0 = Clock::now();
                const double estimate = grayscale_content(u, eps, body);
                const double reference = levelset_content_sum(u, eps, body);
                out.rows.push_back(make_row(eps, estimate, reference, elapsed_ms(t0)));
            }
            out.reference = level_reference;
            break;
        }
        case StudyKind::affine: {
            const Vec2 g = seeded_gradient(cfg.seed);
            const Bbox window = bbox_of(e_poly.vertices());
            // trim of eps*b + 2h around the window, plus slack
            const double margin = eps_max * body.outer_radius() + 4.0 * cfg.spacing;
            const Vec2 origin{window.lo.x - margin, window.lo.y - margin};
            const int nx =
                static_cast<int>(std::ceil((window.hi.x + margin - origin.x) / cfg.spacing));
            const int ny =
                static_cast<int>(std::ceil((window.hi.y + margin - origin.y) / cfg.spacing));
            const GridDomain dom = make_domain(origin, cfg.spacing, nx, ny);
            const ScalarField u = affine_field(dom, g);
            const double reference = body.support(-g);
            for (double eps : cfg.epsilons) {
                const auto t0 = Clock::now();
                const ScalarField v = sup_filter(u, eps, body);
                double windowed = 0.0;
                std::size_t window_cells = 0;
                for (int j = 0; j < dom.ny; ++j) {
                    for (int i = 0; i < dom.nx; ++i) {
                        const Vec2 c = dom.cell_center(i, j);
                        if (c.x < window.lo.x || c.x > window.hi.x || c.y < window.lo.y ||
                            c.y > window.hi.y) {
                            continue;
                        }
                        windowed += v.values[dom.index(i, j)] - u.values[dom.index(i, j)];
                        ++window_cells;
                    }
                }
                const double window_measure =
                    static_cast<double>(window_cells) * dom.cell_area();
                const double estimate =
                    windowed * dom.cell_area() / (eps * window_measure);
                out.rows.push_back(make_row(eps, estimate, reference, elapsed_ms(t0)));
            }
            out.reference = reference;
            out.extras["gradient_x"] = g.x;
            out.extras["gradient_y"] = g.y;
            break;
        }
        case StudyKind::distbench: {
            const GridDomain dom = auto_domain(e_poly, body, cfg.spacing, eps_max);
            const GridSet set = rasterize(e_poly, dom);
            const DistanceField brute = brute_distance(set, body);
            const DistanceField chamfer = chamfer_distance(set, body, 3);
            double max_rel = 0.0;
            for (std::size_t k = 0; k < brute.values.size(); ++k) {
                if (brute.values[k] > 0.0 && std::isfinite(brute.values[k])) {
                    max_rel = std::max(
                        max_rel, (chamfer.values[k] - brute.values[k]) / brute.values[k]);
                }
            }
            for (double eps : cfg.epsilons) {
                const auto t0 = Clock::now();
                const GridSet approx = dilate(set, eps, body, chamfer);
                const double estimate =
                    static_cast<double>(approx.occupied_count() - set.occupied_count()) *
                    dom.cell_area() / eps;
                const double reference = outer_content_grid(set, eps, body);
                out.rows.push_back(make_row(eps, estimate, reference, elapsed_ms(t0)));
            }
            // compare extrapolations of the two routes, not a limit against a
            // fixed-eps value
            ContentSeries exact_series;
            for (const CsvRow& r : out.rows) {
                exact_series.samples.emplace_back(r.epsilon, r.reference);
            }
            out.reference = fit_linear(exact_series).limit_estimate;
            out.extras["chamfer_max_rel_err"] = max_rel;
            break;
        }
    }

    out.fit = fit_rows(out.rows);
    out.limit_estimate = out.fit.limit_estimate;
    out.rel_err = out.reference != 0.0
                      ? std::abs(out.limit_estimate - out.reference) / std::abs(out.reference)
                      : std::abs(out.limit_estimate - out.reference);

    write_study_csv(cfg.out_csv, out.rows);
    if (!cfg.out_svg.empty()) {
        write_study_svg(cfg.out_svg, out.rows, out.kind + " study: content vs epsilon");
    }
    return out;
}

}  // namespace amink
