// barcode-strata: inspect barcodes through their Coxeter-complex coordinates,
// strata and modified matching distances.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strata/io.hpp"
#include "strata/metrics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void fail(const std::string& message) {
    std::cerr << json{{"error", message}}.dump() << "\n";
    std::exit(1);
}

strata::Barcode load(const std::string& path) {
    try {
        return strata::read_barcode_file(path);
    } catch (const strata::ParseError& e) {
        fail(path + ": " + e.what());
    } catch (const std::exception& e) {
        fail(e.what());
    }
    __builtin_unreachable();
}

int face_dim(const strata::ParabolicSubgroup& p) {
    return static_cast<int>(p.n()) - 2 - static_cast<int>(p.generators().size());
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coxeter-complex coordinates, strata and modified matching "
                 "distances for persistence barcodes"};
    app.require_subcommand(1);

    strata::Config cfg;
    try {
        cfg = strata::apply_env_overrides(cfg);
    } catch (const std::exception& e) {
        fail(e.what());
    }

    // analyze
    std::string analyze_file;
    bool enumerate_dc = false;
    auto* analyze = app.add_subcommand("analyze", "Invariants and coordinates of one barcode");
    analyze->add_option("file", analyze_file, "Barcode file (.csv or .json)")->required();
    analyze->add_option("--tol", cfg.tol, "Tie-detection tolerance")->check(CLI::NonNegativeNumber);
    analyze->add_flag("--enumerate-dc", enumerate_dc, "List all double-coset elements");

    // dist
    std::string metric = "bottleneck";
    std::string dist_a, dist_b;
    auto* dist = app.add_subcommand("dist", "Modified distance between two barcodes");
    dist->add_option("--metric", metric, "bottleneck or wasserstein")
        ->check(CLI::IsMember({"bottleneck", "wasserstein"}));
    dist->add_option("a", dist_a, "First barcode file")->required();
    dist->add_option("b", dist_b, "Second barcode file")->required();

    // dist-matrix
    std::string matrix_dir;
    auto* dist_matrix = app.add_subcommand("dist-matrix", "Pairwise distances for a directory");
    dist_matrix->add_option("--metric", metric, "bottleneck or wasserstein")
        ->check(CLI::IsMember({"bottleneck", "wasserstein"}));
    dist_matrix->add_option("dir", matrix_dir, "Directory of barcode files")->required();

    // stratum
    std::string stratum_file;
    auto* stratum = app.add_subcommand("stratum", "Minimal stratum of a barcode");
    stratum->add_option("file", stratum_file, "Barcode file")->required();
    stratum->add_option("--tol", cfg.tol, "Tie-detection tolerance")->check(CLI::NonNegativeNumber);

    // stratum-compare
    std::string cmp_a, cmp_b;
    auto* stratum_compare =
        app.add_subcommand("stratum-compare", "Order relation between the strata of two barcodes");
    stratum_compare->add_option("a", cmp_a, "First barcode file")->required();
    stratum_compare->add_option("b", cmp_b, "Second barcode file")->required();
    stratum_compare->add_option("--tol", cfg.tol, "Tie-detection tolerance")
        ->check(CLI::NonNegativeNumber);

    // complex
    std::size_t complex_n = 3;
    auto* complex_cmd = app.add_subcommand("complex", "Export the Coxeter complex face poset");
    complex_cmd->add_option("--n", complex_n, "Number of bars (2..6)")->required();

    // gen
    std::size_t gen_n = 0;
    bool gen_strict = false;
    std::string gen_format = "csv";
    auto* gen = app.add_subcommand("gen", "Generate a random barcode");
    gen->add_option("--n", gen_n, "Number of bars")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", cfg.seed, "RNG seed");
    gen->add_flag("--strict", gen_strict, "Resample until births and deaths are distinct");
    gen->add_option("--format", gen_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const auto barcode = load(analyze_file);
            std::cout << strata::analyze_report(barcode, cfg, enumerate_dc).dump() << "\n";
        } else if (*dist) {
            const auto a = load(dist_a);
            const auto b = load(dist_b);
            const auto result = metric == "bottleneck" ? strata::modified_bottleneck(a, b)
                                                       : strata::modified_wasserstein(a, b);
            std::cout << json{{"distance", result.distance},
                              {"matching", strata::to_json(result.matching)}}
                             .dump()
                      << "\n";
        } else if (*dist_matrix) {
            std::vector<std::string> names;
            for (const auto& entry : fs::directory_iterator(matrix_dir)) {
                if (!entry.is_regular_file()) continue;
                const auto ext = entry.path().extension().string();
                if (ext == ".csv" || ext == ".json") names.push_back(entry.path().string());
            }
            if (names.empty()) fail("no .csv or .json barcode files in " + matrix_dir);
            std::sort(names.begin(), names.end());
            std::vector<strata::Barcode> barcodes;
            for (const auto& name : names) barcodes.push_back(load(name));
            const auto m = strata::distance_matrix(
                barcodes, metric == "bottleneck" ? strata::Norm::linf : strata::Norm::l2);
            std::cout << "file";
            for (const auto& name : names) std::cout << "," << fs::path(name).filename().string();
            std::cout << "\n";
            for (std::size_t i = 0; i < names.size(); ++i) {
                std::cout << fs::path(names[i]).filename().string();
                for (std::size_t j = 0; j < names.size(); ++j)
                    std::cout << "," << format_value(m[i][j]);
                std::cout << "\n";
            }
        } else if (*stratum) {
            const auto barcode = load(stratum_file);
            const auto s = strata::stratum_of(barcode, cfg.tol);
            std::cout << json{{"left_generators", strata::to_json(s.left())},
                              {"rep", strata::to_json(s.rep())},
                              {"right_generators", strata::to_json(s.right())},
                              {"dim_pair", {face_dim(s.left()), face_dim(s.right())}}}
                             .dump()
                      << "\n";
        } else if (*stratum_compare) {
            const auto a = load(cmp_a);
            const auto b = load(cmp_b);
            const auto order =
                strata::compare_strata(strata::stratum_of(a, cfg.tol), strata::stratum_of(b, cfg.tol));
            switch (order) {
            case strata::StratumOrder::equal: std::cout << "equal\n"; break;
            case strata::StratumOrder::leq: std::cout << "leq\n"; break;
            case strata::StratumOrder::geq: std::cout << "geq\n"; break;
            case strata::StratumOrder::incomparable: std::cout << "incomparable\n"; break;
            }
        } else if (*complex_cmd) {
            const auto poset = strata::enumerate_complex(complex_n, cfg.complex_max_n);
            std::cout << strata::complex_report(poset).dump() << "\n";
        } else if (*gen) {
            cfg.format = gen_format == "csv" ? strata::OutputFormat::csv
                                             : strata::OutputFormat::json;
            std::mt19937_64 rng(cfg.seed);
            const auto barcode = strata::random_barcode(gen_n, rng, gen_strict);
            if (cfg.format == strata::OutputFormat::csv)
                std::cout << strata::to_csv(barcode);
            else
                std::cout << strata::to_json(barcode).dump() << "\n";
        }
    } catch (const strata::ParseError& e) {
        fail(e.what());
    } catch (const std::exception& e) {
        fail(e.what());
    }
    return 0;
}
