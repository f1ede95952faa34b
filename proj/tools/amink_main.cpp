#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amink/errors.hpp"
#include "amink/study.hpp"

namespace {

std::vector<double> parse_eps_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw amink::BadConfig("bad epsilon value: " + item);
            out.push_back(v);
        } catch (const std::invalid_argument&) {
            throw amink::BadConfig("bad epsilon value: " + item);
        } catch (const std::out_of_range&) {
            throw amink::BadConfig("epsilon value out of range: " + item);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anisotropic dilation content laboratory"};
    app.set_help_flag("--help", "print help");  // frees -h / --h for the spacing flag
    app.require_subcommand(1);

    CLI::App* study = app.add_subcommand(
        "study", "run one sweep study and write a CSV (plus optional SVG chart)");
    study->set_help_flag("--help", "print help");
    std::string kind;
    std::string e_shape, c_shape;
    double spacing = 0.0;
    std::string eps_csv;
    std::string out_csv, out_svg;
    std::uint64_t seed = 0;

    study->add_option("kind", kind,
                      "study kind: steiner|converge|symmetric|coarea|affine|distbench")
        ->required();
    study->add_option("--e-shape", e_shape, "set shape: builtin name or vertex file")->required();
    study->add_option("--c-shape", c_shape, "structuring body: builtin name or vertex file")
        ->required();
    study->add_option("--h", spacing, "grid spacing (grid studies)");
    study->add_option("--eps", eps_csv, "comma-separated epsilon list, strictly decreasing")
        ->required();
    study->add_option("--out", out_csv, "output CSV path")->required();
    study->add_option("--svg", out_svg, "optional SVG chart path");
    study->add_option("--seed", seed, "seed for random shapes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        amink::StudyConfig cfg;
        cfg.kind = amink::parse_study_kind(kind);
        cfg.e_shape = e_shape;
        cfg.c_shape = c_shape;
        cfg.spacing = spacing;
        cfg.epsilons = parse_eps_list(eps_csv);
        cfg.out_csv = out_csv;
        cfg.out_svg = out_svg;
        cfg.seed = seed;

        const amink::StudySummary summary = amink::run_study(cfg);

        nlohmann::json j;
        j["kind"] = summary.kind;
        j["limit_estimate"] = summary.limit_estimate;
        j["reference"] = summary.reference;
        j["rel_err"] = summary.rel_err;
        j["slope"] = summary.fit.slope;
        j["max_residual"] = summary.fit.max_residual;
        j["rows"] = summary.rows.size();
        j["csv"] = out_csv;
        for (const auto& [key, value] : summary.extras) j[key] = value;
        std::printf("%s\n", j.dump().c_str());
        return 0;
    } catch (const amink::IoFailure& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const amink::BadConfig& e) {
        std::fprintf(stderr, "bad config: %s\n", e.what());
        return 2;
    } catch (const amink::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return 1;
    }
}
