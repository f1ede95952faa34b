#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amink/convex_body.hpp"
#include "amink/io.hpp"
#include "amink/polygon.hpp"

namespace amink {

enum class StudyKind { steiner, converge, symmetric, coarea, affine, distbench };

/// Throws BadConfig for unknown kinds.
StudyKind parse_study_kind(const std::string& name);
std::string study_kind_name(StudyKind kind);

struct StudyConfig {
    StudyKind kind = StudyKind::steiner;
    std::string e_shape;             // builtin name or vertex file path
    std::string c_shape;             // builtin name or vertex file path
    double spacing = 0.0;            // grid h; required for grid studies
    std::vector<double> epsilons;    // strictly positive, strictly decreasing
    std::string out_csv;
    std::string out_svg;             // empty: no chart
    std::uint64_t seed = 0;
};

/// (epsilon, content) samples along a sweep, epsilon strictly decreasing.
struct ContentSeries {
    std::vector<std::pair<double, double>> samples;
    std::optional<double> reference;
};

/// Affine extrapolation value ≈ limit + slope * epsilon.
struct FitResult {
    double limit_estimate = 0.0;
    double slope = 0.0;
    double max_residual = 0.0;
};

/// Least-squares affine fit; throws TooFewSamples below 2 samples.
FitResult fit_linear(const ContentSeries& series);

struct StudySummary {
    std::string kind;
    double limit_estimate = 0.0;
    double reference = 0.0;
    double rel_err = 0.0;
    FitResult fit;
    std::vector<CsvRow> rows;
    std::map<std::string, double> extras;  // study-specific diagnostics
};

/// Runs one study: validates the config, sweeps the epsilon list, writes the
/// CSV (and optional SVG), and returns the summary.
/// Throws BadConfig / IoFailure / UnknownShape.
StudySummary run_study(const StudyConfig& config);

/// Canonical test sets. lshape and blob are non-convex (grid studies only);
/// blob is a seeded star-shaped polygon. Throws UnknownShape.
SimplePolygon builtin_polygon(const std::string& name, std::uint64_t seed = 0);

/// Structuring bodies; file paths and all builtin names are accepted, with
/// the convex hull recomputed. Throws UnknownShape / OriginNotInterior.
ConvexBody builtin_body(const std::string& name, std::uint64_t seed = 0);

/// Resolves a shape spec (builtin name or vertex file path) for each role.
SimplePolygon resolve_set_shape(const std::string& spec, std::uint64_t seed);
ConvexBody resolve_body_shape(const std::string& spec, std::uint64_t seed);

}  // namespace amink
