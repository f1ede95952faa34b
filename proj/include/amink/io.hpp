#pragma once

#include <string>
#include <vector>

#include "amink/common.hpp"
#include "amink/grid.hpp"

namespace amink {

/// Vertex file: one vertex per line as two decimals separated by whitespace;
/// lines beginning with '#' ignored; order irrelevant (hulls are recomputed,
/// polygons keep file order). Throws IoFailure / DegenerateInput.
std::vector<Vec2> read_vertex_file(const std::string& path);
void write_vertex_file(const std::string& path, std::span<const Vec2> vertices);

/// Scalar field format: header "nx ny h", then row-major decimal values.
ScalarField read_scalar_field(const std::string& path);
void write_scalar_field(const std::string& path, const ScalarField& field);

/// Debug raster dump: header line "P1-like: nx ny h", then 0/1 rows.
/// Not a stability-guaranteed format.
void write_gridset_pgm(const std::string& path, const GridSet& set);

/// One CSV row of a study sweep.
struct CsvRow {
    double epsilon = 0.0;
    double estimate = 0.0;
    double reference = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double wall_ms = 0.0;
};

/// Writes `epsilon,estimate,reference,abs_err,rel_err,wall_ms` rows with
/// 12 significant digits and LF line endings.
void write_study_csv(const std::string& path, const std::vector<CsvRow>& rows);

/// Single 800x600 line chart of (epsilon, estimate) with a reference line.
void write_study_svg(const std::string& path, const std::vector<CsvRow>& rows,
                     const std::string& title);

/// 12-significant-digit decimal rendering used by the CSV writer.
std::string format_sig12(double value);

}  // namespace amink
