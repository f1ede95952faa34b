#include "amink/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "amink/errors.hpp"

namespace amink {

std::vector<Vec2> read_vertex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open vertex file: " + path);
    std::vector<Vec2> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream iss(line);
        double x = 0.0, y = 0.0;
        if (!(iss >> x >> y)) {
            throw DegenerateInput("bad vertex line " + std::to_string(lineno) + " in " + path);
        }
        out.push_back({x, y});
    }
    return out;
}

void write_vertex_file(const std::string& path, std::span<const Vec2> vertices) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot write vertex file: " + path);
    for (Vec2 v : vertices) {
        out << format_sig12(v.x) << ' ' << format_sig12(v.y) << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path);
}

ScalarField read_scalar_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open field file: " + path);
    int nx = 0, ny = 0;
    double h = 0.0;
    if (!(in >> nx >> ny >> h)) throw IoFailure("bad field header in " + path);
    const GridDomain dom = make_domain({0.0, 0.0}, h, nx, ny);
    ScalarField field{dom, std::vector<double>(dom.cell_count())};
    for (double& v : field.values) {
        if (!(in >> v)) throw IoFailure("truncated field data in " + path);
    }
    return field;
}

void write_scalar_field(const std::string& path, const ScalarField& field) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot write field file: " + path);
    out << field.domain.nx << ' ' << field.domain.ny << ' ' << format_sig12(field.domain.spacing)
        << '\n';
    for (int j = 0; j < field.domain.ny; ++j) {
        for (int i = 0; i < field.domain.nx; ++i) {
            if (i) out << ' ';
            out << format_sig12(field.values[field.domain.index(i, j)]);
        }
        out << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path);
}

void write_gridset_pgm(const std::string& path, const GridSet& set) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot write raster file: " + path);
    out << "P1-like: " << set.domain.nx << ' ' << set.domain.ny << ' '
        << format_sig12(set.domain.spacing) << '\n';
    for (int j = 0; j < set.domain.ny; ++j) {
        for (int i = 0; i < set.domain.nx; ++i) {
            if (i) out << ' ';
            out << (set.mask[set.domain.index(i, j)] ? '1' : '0');
        }
        out << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path);
}

std::string format_sig12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_study_csv(const std::string& path, const std::vector<CsvRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot write CSV: " + path);
    out << "epsilon,estimate,reference,abs_err,rel_err,wall_ms\n";
    for (const CsvRow& r : rows) {
        out << format_sig12(r.epsilon) << ',' << format_sig12(r.estimate) << ','
            << format_sig12(r.reference) << ',' << format_sig12(r.abs_err) << ','
            << format_sig12(r.rel_err) << ',' << format_sig12(r.wall_ms) << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path);
}

void write_study_svg(const std::string& path, const std::vector<CsvRow>& rows,
                     const std::string& title) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot write SVG: " + path);

    const double width = 800.0, height = 600.0;
    const double ml = 80.0, mr = 30.0, mt = 50.0, mb = 60.0;

    double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
    if (!rows.empty()) {
        xlo = xhi = rows.front().epsilon;
        ylo = yhi = rows.front().estimate;
        for (const CsvRow& r : rows) {
            xlo = std::min(xlo, r.epsilon);
            xhi = std::max(xhi, r.epsilon);
            ylo = std::min({ylo, r.estimate, r.reference});
            yhi = std::max({yhi, r.estimate, r.reference});
        }
        xlo = std::min(xlo, 0.0);  // show the extrapolation target at eps = 0
        if (yhi == ylo) {
            yhi += 1.0;
            ylo -= 1.0;
        }
        const double pad = 0.08 * (yhi - ylo);
        ylo -= pad;
        yhi += pad;
    }
    auto sx = [&](double x) { return ml + (x - xlo) / (xhi - xlo) * (width - ml - mr); };
    auto sy = [&](double y) { return height - mb - (y - ylo) / (yhi - ylo) * (height - mt - mb); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << title << "</text>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">epsilon"
        << "</text>\n";
    if (!rows.empty()) {
        // reference line
        const double yref = sy(rows.front().reference);
        out << "<line x1=\"" << ml << "\" y1=\"" << yref << "\" x2=\"" << width - mr
            << "\" y2=\"" << yref
            << "\" stroke=\"#888888\" stroke-dasharray=\"6 4\"/>\n";
        // content polyline
        out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
        for (const CsvRow& r : rows) {
            out << sx(r.epsilon) << ',' << sy(r.estimate) << ' ';
        }
        out << "\"/>\n";
        for (const CsvRow& r : rows) {
            out << "<circle cx=\"" << sx(r.epsilon) << "\" cy=\"" << sy(r.estimate)
                << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
        }
        // axis extremes
        out << "<text x=\"" << ml << "\" y=\"" << height - mb + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_sig12(xlo) << "</text>\n";
        out << "<text x=\"" << sx(xhi) << "\" y=\"" << height - mb + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_sig12(xhi) << "</text>\n";
        out << "<text x=\"" << ml - 6 << "\" y=\"" << sy(ylo)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_sig12(ylo) << "</text>\n";
        out << "<text x=\"" << ml - 6 << "\" y=\"" << sy(yhi)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_sig12(yhi) << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw IoFailure("write failed: " + path);
}

}  // namespace amink
