// blobcheck: command-line front end for the verification suites.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "blob/config.hpp"
#include "blob/report.hpp"
#include "blob/runner.hpp"
#include "blob/transfer.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw blob::ConfigError("config error: cannot read \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << bytes;
}

blob::RunConfig load_config(const std::string& path, const std::vector<std::string>& suite_override) {
    blob::RunConfig cfg = blob::parse_config(read_file(path));
    if (const char* env_seed = std::getenv("BLOB_SEED")) {
        try {
            cfg.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            throw blob::ConfigError("config error: BLOB_SEED is not an unsigned integer");
        }
    }
    if (!suite_override.empty()) {
        for (const auto& s : suite_override)
            if (std::find(blob::known_suites().begin(), blob::known_suites().end(), s) ==
                blob::known_suites().end())
                throw blob::ConfigError("config error: unknown suite \"" + s + "\"");
        cfg.suites = suite_override;
    }
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for open-boundary integrable lattice models"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json-lines";
    std::vector<std::string> suites;

    auto* check = app.add_subcommand("check", "run the configured check suites");
    check->add_option("--config", config_path, "path to a JSON run configuration")->required();
    check->add_option("--suite", suites, "restrict to the named suites (repeatable)");
    check->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json-lines", "summary-text"}));
    check->add_option("--out", out_path, "write the report here instead of stdout");

    std::string spec_config, spec_out;
    auto* spect = app.add_subcommand("spectrum", "emit the Hamiltonian spectrum as CSV");
    spect->add_option("--config", spec_config, "path to a JSON run configuration")->required();
    spect->add_option("--out", spec_out, "CSV output path")->required();

    auto* list = app.add_subcommand("list-checks", "list the available suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (list->parsed()) {
            for (const auto& [name, description] : blob::suite_descriptions())
                std::cout << name << ": " << description << "\n";
            return 0;
        }
        if (check->parsed()) {
            const blob::RunConfig cfg = load_config(config_path, suites);
            blob::SuiteRunner runner(cfg);
            const auto reports = runner.run();
            write_output(out_path, format == "json-lines" ? blob::emit_json_lines(reports)
                                                          : blob::emit_summary_text(reports));
            for (const auto& r : reports)
                if (!r.passed) return 1;
            return 0;
        }
        if (spect->parsed()) {
            const blob::RunConfig cfg = load_config(spec_config, {});
            const auto params = blob::make_params(cfg.mu, cfg.Q, cfg.zeta, cfg.model, cfg.boundary);
            const auto rep = blob::make_rep(params, cfg.num_sites);
            const blob::DoubleRow dr(blob::LaxFactory::from_rep(rep), cfg.num_sites);
            const auto eigs = blob::spectrum(dr.hamiltonian());
            write_output(spec_out, blob::emit_spectrum_csv(eigs));
            return 0;
        }
    } catch (const blob::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
