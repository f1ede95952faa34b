#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "amink/convex_body.hpp"
#include "amink/errors.hpp"
#include "amink/functionals.hpp"
#include "amink/grid.hpp"
#include "amink/io.hpp"
#include "amink/polygon.hpp"
#include "amink/study.hpp"

namespace py = pybind11;
using namespace amink;

namespace {

std::vector<Vec2> to_vecs(const std::vector<std::pair<double, double>>& pts) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back({x, y});
    return out;
}

std::vector<std::pair<double, double>> from_vecs(std::span<const Vec2> pts) {
    std::vector<std::pair<double, double>> out;
    out.reserve(pts.size());
    for (Vec2 v : pts) out.emplace_back(v.x, v.y);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Anisotropic dilation contents: exact polygon pipeline and grid estimators.";

    py::register_exception<DegenerateInput>(m, "DegenerateInput");
    py::register_exception<OriginNotInterior>(m, "OriginNotInterior");
    py::register_exception<NonPositiveScale>(m, "NonPositiveScale");
    py::register_exception<NonConvexSet>(m, "NonConvexSet");
    py::register_exception<EmptySource>(m, "EmptySource");
    py::register_exception<MismatchedField>(m, "MismatchedField");
    py::register_exception<DegenerateSplit>(m, "DegenerateSplit");
    py::register_exception<TooManyLevels>(m, "TooManyLevels");
    py::register_exception<TooFewSamples>(m, "TooFewSamples");
    py::register_exception<UnknownShape>(m, "UnknownShape");
    py::register_exception<BadConfig>(m, "BadConfig");
    py::register_exception<IoFailure>(m, "IoFailure");

    py::class_<ConvexBody>(m, "ConvexBody")
        .def_property_readonly("vertices",
                               [](const ConvexBody& b) { return from_vecs(b.vertices()); })
        .def_property_readonly("inner_radius", &ConvexBody::inner_radius)
        .def_property_readonly("outer_radius", &ConvexBody::outer_radius)
        .def("support",
             [](const ConvexBody& b, std::pair<double, double> d) {
                 return b.support({d.first, d.second});
             })
        .def("gauge",
             [](const ConvexBody& b, std::pair<double, double> p) {
                 return b.gauge({p.first, p.second});
             })
        .def("area", &ConvexBody::area)
        .def("scaled", &ConvexBody::scaled)
        .def("reflected", &ConvexBody::reflected);

    m.def("build_body", [](const std::vector<std::pair<double, double>>& pts) {
        return build_body(to_vecs(pts));
    });
    m.def("minkowski_sum", &minkowski_sum);
    m.def("regular_polygon_body", &regular_polygon_body, py::arg("sides"),
          py::arg("radius") = 1.0);

    py::class_<SimplePolygon>(m, "SimplePolygon")
        .def_property_readonly("vertices",
                               [](const SimplePolygon& p) { return from_vecs(p.vertices()); })
        .def("area", &SimplePolygon::area)
        .def("is_convex", &SimplePolygon::is_convex)
        .def("scaled", &SimplePolygon::scaled)
        .def("translated", [](const SimplePolygon& p, std::pair<double, double> shift) {
            return p.translated({shift.first, shift.second});
        });

    m.def("make_polygon", [](const std::vector<std::pair<double, double>>& pts) {
        return make_polygon(to_vecs(pts));
    });
    m.def("anisotropic_perimeter", &anisotropic_perimeter);
    m.def("symmetric_anisotropic_perimeter", &symmetric_anisotropic_perimeter);
    m.def("outer_content_exact", &outer_content_exact);
    m.def("steiner_coefficients", [](const SimplePolygon& e, const ConvexBody& c) {
        const SteinerCoefficients sc = steiner_coefficients(e, c);
        return std::make_pair(sc.perimeter_term, sc.area_term);
    });
    m.def("dilate_polygon", &dilate_polygon);

    py::class_<GridDomain>(m, "GridDomain")
        .def(py::init([](std::pair<double, double> origin, double spacing, int nx, int ny) {
                 return make_domain({origin.first, origin.second}, spacing, nx, ny);
             }),
             py::arg("origin"), py::arg("spacing"), py::arg("nx"), py::arg("ny"))
        .def_property_readonly(
            "origin", [](const GridDomain& d) { return std::make_pair(d.origin.x, d.origin.y); })
        .def_readonly("spacing", &GridDomain::spacing)
        .def_readonly("nx", &GridDomain::nx)
        .def_readonly("ny", &GridDomain::ny)
        .def("cell_center", [](const GridDomain& d, int i, int j) {
            const Vec2 c = d.cell_center(i, j);
            return std::make_pair(c.x, c.y);
        });

    py::class_<GridSet>(m, "GridSet")
        .def_readonly("domain", &GridSet::domain)
        .def_property_readonly(
            "mask", [](const GridSet& s) { return std::vector<bool>(s.mask.begin(), s.mask.end()); })
        .def("occupied_count", &GridSet::occupied_count)
        .def("complement", &GridSet::complement);

    py::class_<DistanceField>(m, "DistanceField")
        .def_readonly("domain", &DistanceField::domain)
        .def_readonly("values", &DistanceField::values);
    py::class_<SignedField>(m, "SignedField")
        .def_readonly("domain", &SignedField::domain)
        .def_readonly("values", &SignedField::values);
    py::class_<ScalarField>(m, "ScalarField")
        .def(py::init([](const GridDomain& d, std::vector<double> values) {
                 if (values.size() != d.cell_count()) {
                     throw BadConfig("value count does not match the domain");
                 }
                 return ScalarField{d, std::move(values)};
             }),
             py::arg("domain"), py::arg("values"))
        .def_readonly("domain", &ScalarField::domain)
        .def_readonly("values", &ScalarField::values);

    m.def("rasterize", &rasterize);
    m.def("measure", &measure);
    m.def("brute_distance", &brute_distance);
    m.def("chamfer_distance", &chamfer_distance, py::arg("source"), py::arg("body"),
          py::arg("mask_radius") = 3);
    m.def("dilate", &dilate);
    m.def("dilate_exact", &dilate_exact);
    m.def("outer_content_grid", &outer_content_grid);
    m.def("symmetric_content_grid", &symmetric_content_grid);
    m.def("signed_distance", &signed_distance);
    m.def("boundary_content", &boundary_content);
    m.def("eikonal_residual", &eikonal_residual);

    m.def("sup_filter", &sup_filter);
    m.def("grayscale_content", &grayscale_content);
    m.def("levelset_content_sum", &levelset_content_sum);
    m.def("indicator_limit_reference", &indicator_limit_reference);
    m.def("affine_limit_reference",
          [](std::pair<double, double> g, const ConvexBody& body, double window_measure) {
              return affine_limit_reference({g.first, g.second}, body, window_measure);
          });
    m.def("quantize_levels", &quantize_levels, py::arg("field"), py::arg("levels") = 256);
    m.def("indicator_field", &indicator_field);
    m.def("affine_field", [](const GridDomain& d, std::pair<double, double> g) {
        return affine_field(d, {g.first, g.second});
    });

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("limit_estimate", &FitResult::limit_estimate)
        .def_readonly("slope", &FitResult::slope)
        .def_readonly("max_residual", &FitResult::max_residual);

    m.def("fit_linear", [](const std::vector<std::pair<double, double>>& samples) {
        ContentSeries series;
        series.samples = samples;
        return fit_linear(series);
    });

    py::class_<StudySummary>(m, "StudySummary")
        .def_readonly("kind", &StudySummary::kind)
        .def_readonly("limit_estimate", &StudySummary::limit_estimate)
        .def_readonly("reference", &StudySummary::reference)
        .def_readonly("rel_err", &StudySummary::rel_err)
        .def_readonly("fit", &StudySummary::fit)
        .def_readonly("extras", &StudySummary::extras);

    m.def(
        "run_study",
        [](const std::string& kind, const std::string& e_shape, const std::string& c_shape,
           double h, const std::vector<double>& eps, const std::string& out_csv,
           const std::string& out_svg, std::uint64_t seed) {
            StudyConfig cfg;
            cfg.kind = parse_study_kind(kind);
            cfg.e_shape = e_shape;
            cfg.c_shape = c_shape;
            cfg.spacing = h;
            cfg.epsilons = eps;
            cfg.out_csv = out_csv;
            cfg.out_svg = out_svg;
            cfg.seed = seed;
            return run_study(cfg);
        },
        py::arg("kind"), py::arg("e_shape"), py::arg("c_shape"), py::arg("h"), py::arg("eps"),
        py::arg("out_csv"), py::arg("out_svg") = std::string(), py::arg("seed") = 0);

    m.def("builtin_polygon", &builtin_polygon, py::arg("name"), py::arg("seed") = 0);
    m.def("builtin_body", &builtin_body, py::arg("name"), py::arg("seed") = 0);

    m.def("read_vertex_file", &read_vertex_file);
    m.def("read_scalar_field", &read_scalar_field);
    m.def("write_scalar_field", &write_scalar_field);
    m.def("write_gridset_pgm", &write_gridset_pgm);
}
