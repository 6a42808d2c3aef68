#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.
//
// Exit codes: 0 ok, 1 domain failure or invariant breach, 2 I/O or usage,
// 3 dashing stuck, 4 dashing inconsistent.

#include "qcube/json.hpp"
#include "qcube/qcube.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qcube::cli {

enum Exit : int { Ok = 0, DomainFailure = 1, IoFailure = 2, Stuck = 3, Inconsistent = 4 };

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::string format = "json";
    std::string out_dir;
    double tolerance = 1e-8;
    double k_b = 1.0;
    double temperature = 1.0;
    std::uint64_t seed = 1;
    bool oracle = false;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Error raised while running one stage, tagged with the stage name.
struct StageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        throw StageError(std::string(name) + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline GeneratorMatrix load_code(const std::string& path) {
    const std::string text = read_file(path);
    return stage("codes", [&] { return parse_code(text); });
}

inline GeneratorMatrix load_valid_code(const std::string& path) {
    GeneratorMatrix code = load_code(path);
    stage("codes", [&] { require_doubly_even(code); });
    return code;
}

inline void write_spectrum_csv(std::ostream& out, const SpectrumTable& s) {
    out << "lambda,multiplicity\n";
    for (const auto& [lambda, mult] : s.entries()) out << lambda << ',' << mult << '\n';
}

inline void write_spectrum_text(std::ostream& out, const SpectrumTable& s) {
    bool first = true;
    out << '{';
    for (const auto& [lambda, mult] : s.entries()) {
        out << (first ? "" : ", ") << lambda;
        if (mult != 1) out << '^' << mult;
        first = false;
    }
    out << "}\n";
}

// ---------------------------------------------------------------------------

inline int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    const GeneratorMatrix code = load_code(cfg.inputs.at(0));
    const ValidationReport report = validate_doubly_even(code);
    const bool ok = report.ok() && report.within_kmax();
    if (cfg.format == "text") {
        out << (ok ? "valid" : "invalid") << " N=" << report.length << " k=" << report.k << " kmax=" << report.kmax
            << '\n';
        for (Word w : report.bad_span_words)
            out << "span word " << format_word(w, report.length) << " has weight " << weight(w) << '\n';
        for (int i : report.dependent_rows) out << "row " << i + 1 << " is linearly dependent\n";
    } else {
        out << json::validation(report).dump(2) << '\n';
    }
    return ok ? Ok : DomainFailure;
}

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    const GeneratorMatrix code = load_valid_code(cfg.inputs.at(0));
    const SpectrumTable closed = stage("spectrum", [&] { return spectrum_closed_form(code); });

    if (cfg.format == "csv") {
        write_spectrum_csv(out, closed);
    } else if (cfg.format == "text") {
        write_spectrum_text(out, closed);
    }
    if (!cfg.oracle) {
        if (cfg.format == "json") out << json::spectrum(code, closed).dump(2) << '\n';
        return Ok;
    }

    const SpectrumTable numeric = stage("spectrum", [&] { return spectrum_numeric(build_quotient(code), cfg.tolerance); });
    const SpectrumTable table = stage("spectrum", [&] { return anti_diagonal_sums(multiplicity_table(code)); });

    // Column-permutation invariance on seeded random permutations.
    std::mt19937_64 rng(cfg.seed);
    bool permutation_invariant = true;
    std::vector<int> perm(static_cast<std::size_t>(code.length()));
    for (int trial = 0; trial < 3; ++trial) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        permutation_invariant = permutation_invariant && spectrum_closed_form(permute_columns(code, perm)) == closed;
    }
    const bool agree = numeric == closed && table == closed && permutation_invariant;

    if (cfg.format == "json") {
        auto doc = json::spectrum(code, closed);
        doc["numeric_eigenvalues"] = json::eigenvalues(numeric);
        doc["multiplicity_table_eigenvalues"] = json::eigenvalues(table);
        doc["permutation_invariant"] = permutation_invariant;
        doc["agree"] = agree;
        out << doc.dump(2) << '\n';
    } else {
        out << "# oracle agree=" << (agree ? "true" : "false") << '\n';
    }
    return agree ? Ok : DomainFailure;
}

inline int cmd_trees(const RunConfig& cfg, std::ostream& out) {
    const GeneratorMatrix code = load_valid_code(cfg.inputs.at(0));
    const BigCount trees = stage("counting", [&] { return tree_count_from_spectrum(spectrum_closed_form(code)); });
    json::Json doc = {{"trees", trees.str()}};
    bool agree = true;
    if (cfg.oracle) {
        const QuotientGraph g = stage("quotient_graph", [&] { return build_quotient(code); });
        if (g.vertex_count() <= kMaxDeterminantVertices) {
            const BigCount det = tree_count_determinant(g);
            doc["determinant"] = det.str();
            agree = agree && det == trees;
        }
        if (code.k() == 0 && code.n() <= kMaxHypercubeTreeN) {
            const BigCount closed = tree_count_hypercube(code.n());
            doc["hypercube_closed_form"] = closed.str();
            agree = agree && closed == trees;
        }
        doc["agree"] = agree;
    }
    out << doc.dump(2) << '\n';
    return agree ? Ok : DomainFailure;
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    const GeneratorMatrix code = load_valid_code(cfg.inputs.at(0));
    const BaobabBounds b = stage("counting", [&] { return baobab_bounds(code, spectrum_closed_form(code)); });
    out << json::bounds(b).dump(2) << '\n';
    return Ok;
}

inline int cmd_report(const RunConfig& cfg, std::ostream& out) {
    const GeneratorMatrix code = load_valid_code(cfg.inputs.at(0));
    const SpectrumTable s = stage("spectrum", [&] { return spectrum_closed_form(code); });
    const BaobabBounds b = stage("counting", [&] { return baobab_bounds(code, s); });
    const EntropyReport e = stage("thermo", [&] { return entropy_bounds(b, cfg.k_b); });
    const LatentHeat heat = stage("thermo", [&] { return latent_heat(e.s_approx, cfg.temperature); });

    json::Json adjacency = json::Json::array();
    for (const auto& [mu, mult] : adjacency_spectrum(s, code.length()))
        adjacency.push_back({{"mu", mu}, {"multiplicity", mult}});

    json::Json doc = {{"code", json::code_summary(code)},
                      {"spectrum", json::eigenvalues(s)},
                      {"adjacency_spectrum", adjacency},
                      {"mode", spectral_mode(s)},
                      {"trees", b.trees.str()},
                      {"bounds", json::bounds(b)},
                      {"entropy", json::entropy(e, heat)}};
    if (!satisfies_spectrum_invariants(s, code.n(), code.length()))
        throw StageError("spectrum: table violates the multiplicity or trace invariant");
    out << doc.dump(2) << '\n';
    return Ok;
}

inline int cmd_histogram(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int status = Ok;
    std::ostringstream summary;
    summary << "file,N,n,k,mode\n";
    for (const auto& path : cfg.inputs) {
        try {
            const GeneratorMatrix code = load_valid_code(path);
            const SpectrumTable s = stage("spectrum", [&] { return spectrum_closed_form(code); });
            if (cfg.out_dir.empty()) {
                out << "# " << path << '\n';
                write_spectrum_csv(out, s);
            } else {
                const auto target =
                    std::filesystem::path(cfg.out_dir) / (std::filesystem::path(path).stem().string() + ".csv");
                std::ofstream file(target);
                if (!file) throw IoError("cannot write '" + target.string() + "'");
                write_spectrum_csv(file, s);
            }
            summary << path << ',' << code.length() << ',' << code.n() << ',' << code.k() << ',' << spectral_mode(s)
                    << '\n';
        } catch (const IoError& e) {
            err << "error: " << e.what() << '\n';
            status = std::max(status, static_cast<int>(IoFailure));
        } catch (const StageError& e) {
            err << "error: " << path << ": " << e.what() << '\n';
            status = std::max(status, static_cast<int>(DomainFailure));
        }
    }
    out << summary.str();
    return status;
}

inline int cmd_cospectral(const RunConfig& cfg, std::ostream& out) {
    if (cfg.inputs.size() < 2) throw StageError("cospectral: needs at least two code files");
    std::vector<GeneratorMatrix> codes;
    for (const auto& path : cfg.inputs) codes.push_back(load_valid_code(path));
    const auto groups = stage("spectrum", [&] { return meta_equivalence_scan(codes); });

    json::Json arr = json::Json::array();
    for (const auto& g : groups) {
        json::Json classes = json::Json::array();
        for (const auto& cls : g.classes) {
            json::Json files = json::Json::array();
            for (std::size_t i : cls) files.push_back(cfg.inputs[i]);
            classes.push_back(files);
        }
        arr.push_back({{"eigenvalues", json::eigenvalues(g.spectrum)}, {"classes", classes}, {"witness", g.witness()}});
    }
    out << json::Json{{"groups", arr}}.dump(2) << '\n';
    return Ok;
}

inline int cmd_dash(const RunConfig& cfg, std::ostream& out) {
    if (cfg.inputs.size() != 2) throw StageError("dash: expects a code file and a dashing file");
    const GeneratorMatrix code = load_valid_code(cfg.inputs[0]);
    const std::string text = read_file(cfg.inputs[1]);
    const DashingAssignment partial = stage("dashing", [&] { return parse_dashing(text); });
    const QuotientGraph g = stage("quotient_graph", [&] { return build_quotient(code); });
    const CompletionResult r = stage("dashing", [&] { return complete_dashing(g, partial); });
    switch (r.status) {
    case CompletionStatus::Complete:
        out << format_dashing(r.assignment);
        return Ok;
    case CompletionStatus::Stuck:
        out << json::completion_failure(r).dump(2) << '\n';
        return Stuck;
    case CompletionStatus::Inconsistent:
        out << json::completion_failure(r).dump(2) << '\n';
        return Inconsistent;
    }
    return DomainFailure;
}

inline int cmd_graph(const RunConfig& cfg, std::ostream& out) {
    const GeneratorMatrix code = load_valid_code(cfg.inputs.at(0));
    const QuotientGraph g = stage("quotient_graph", [&] { return build_quotient(code); });
    const json::Json header = {{"n", g.n()}, {"k", g.k()}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    out << header.dump() << '\n';
    write_edge_list(out, g);
    return Ok;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quotient hypercubes: spectra, tree counts, baobab bounds, entropy and dashings", "qcube"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--tol", cfg.tolerance, "Even-integer rounding tolerance for the numeric spectrum")
        ->check(CLI::PositiveNumber);
    app.add_option("--kb", cfg.k_b, "Entropy scale constant");
    app.add_option("-T", cfg.temperature, "Temperature for the latent heat");
    app.add_option("--seed", cfg.seed, "Seed for randomized oracle checks");
    app.add_flag("--oracle", cfg.oracle, "Cross-check against independent oracles");

    const auto single = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("codefile", cfg.inputs, "Code file")->required()->expected(1);
        return sub;
    };
    single("validate", "Check that a code is doubly even and within k_max");
    single("spectrum", "Laplacian spectrum of the quotient hypercube");
    single("report", "Spectrum, mode, trees, bounds, entropy and heat in one document");
    single("trees", "Exact spanning-tree count");
    single("bounds", "Baobab multiplicity bounds");
    single("graph", "Edge list of the quotient graph");
    auto* hist = app.add_subcommand("histogram", "Spectrum CSV per code file plus a mode summary");
    hist->add_option("codefiles", cfg.inputs, "Code files")->required();
    hist->add_option("--out-dir", cfg.out_dir, "Directory for the per-file CSVs");
    auto* cosp = app.add_subcommand("cospectral", "Group codes by spectrum and column-permutation class");
    cosp->add_option("codefiles", cfg.inputs, "Code files")->required();
    auto* dash = app.add_subcommand("dash", "Complete a partial dashing by NDXOR propagation");
    dash->add_option("files", cfg.inputs, "Code file and dashing file")->required()->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return IoFailure;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (cfg.subcommand == "validate") return cmd_validate(cfg, out);
        if (cfg.subcommand == "spectrum") return cmd_spectrum(cfg, out);
        if (cfg.subcommand == "report") return cmd_report(cfg, out);
        if (cfg.subcommand == "trees") return cmd_trees(cfg, out);
        if (cfg.subcommand == "bounds") return cmd_bounds(cfg, out);
        if (cfg.subcommand == "graph") return cmd_graph(cfg, out);
        if (cfg.subcommand == "histogram") return cmd_histogram(cfg, out, err);
        if (cfg.subcommand == "cospectral") return cmd_cospectral(cfg, out);
        if (cfg.subcommand == "dash") return cmd_dash(cfg, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return IoFailure;
    } catch (const StageError& e) {
        err << "error: " << e.what() << '\n';
        return DomainFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return DomainFailure;
    }
    return IoFailure;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"qcube"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qcube::cli
