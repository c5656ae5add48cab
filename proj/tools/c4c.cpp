#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "c4c/exchange.hpp"
#include "c4c/families.hpp"
#include "c4c/generate.hpp"
#include "c4c/graph6.hpp"
#include "c4c/structure.hpp"

using namespace c4c;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCountMismatch = 3;

void emit(const CubicGraph& g, const std::string& format, std::ostream& out) {
    if (format == "g6")
        out << to_graph6(g) << '\n';
    else
        write_edge_list(out, g);
}

std::vector<CubicGraph> load_all(const std::vector<std::string>& paths) {
    std::vector<CubicGraph> graphs;
    for (const auto& p : paths)
        for (auto& g : read_graph_file(p)) graphs.push_back(std::move(g));
    return graphs;
}

SpreadThreshold parse_threshold(const std::string& s) {
    if (s == "distinct") return SpreadThreshold::Distinct;
    if (s == "11") return SpreadThreshold::AtLeast11;
    if (s == "12") return SpreadThreshold::AtLeast12;
    if (s == "22") return SpreadThreshold::AtLeast22;
    throw GraphError(ErrorCode::BadInput, "threshold must be distinct|11|12|22");
}

int cmd_families(const std::string& family, int k, const std::string& format,
                 const std::string& out_path) {
    if (family != "ladder" && family != "moebius" && family != "petersen" && family != "wheel3")
        throw GraphError(ErrorCode::BadInput, "unknown family " + family);
    CubicGraph g = family == "ladder"    ? ladder(k)
                   : family == "moebius" ? moebius(k)
                   : family == "petersen" ? petersen()
                                          : wheel3();
    if (out_path.empty()) {
        emit(g, format, std::cout);
    } else {
        std::ofstream out(out_path);
        emit(g, format, out);
    }
    return kExitOk;
}

int cmd_generate(const std::string& pipeline, int max_n, const std::string& out_dir, int jobs,
                 bool verify, const std::string& seeds_path, const std::string& expected_path) {
    auto t0 = std::chrono::steady_clock::now();
    Census census;
    if (pipeline == "wormald") {
        census = pipeline_wormald(max_n, jobs, verify, out_dir);
    } else if (pipeline == "nonplanar") {
        census = pipeline_nonplanar(max_n, jobs, verify, out_dir);
    } else if (pipeline == "planar") {
        census = pipeline_planar(max_n, jobs, verify, out_dir);
    } else if (pipeline == "c5c") {
        std::vector<CubicGraph> seeds =
            seeds_path.empty() ? std::vector<CubicGraph>{petersen()} : load_all({seeds_path});
        census = pipeline_c5c(seeds, max_n, jobs, out_dir);
    } else {
        throw GraphError(ErrorCode::BadInput, "unknown pipeline " + pipeline);
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    std::ostringstream manifest;
    manifest << "command: generate " << pipeline << "\nmax_n: " << max_n << "\njobs: " << jobs
             << "\nverify: " << (verify ? "yes" : "no") << "\nout_dir: "
             << (out_dir.empty() ? "-" : out_dir) << "\nwall_time_ms: " << ms << "\n";
    if (pipeline == "c5c") manifest << "note: cyclically 5-connected census is NOT exhaustive\n";
    for (const auto& [n, count] : census.counts())
        manifest << "level " << n << ": " << count << " graphs ("
                 << census.generated_counts()[n] << " generated)\n";

    int rc = kExitOk;
    if (!expected_path.empty()) {
        auto report = count_report(census, read_counts_csv(expected_path));
        manifest << "count check:\n" << report.table;
        if (!report.pass) rc = kExitCountMismatch;
    }
    std::cout << manifest.str();
    if (!out_dir.empty()) {
        std::ofstream mf(std::filesystem::path(out_dir) / "manifest.txt");
        mf << manifest.str();
    }
    return rc;
}

int cmd_validate(const std::vector<std::string>& paths, int k) {
    bool all_ok = true;
    for (const CubicGraph& g : load_all(paths)) {
        StructureReport r = structure_report(g);
        bool ok = k == 5 ? r.cyclic_5 : r.cyclic_4;
        if (!ok) all_ok = false;
        std::cout << "n=" << g.order() << " girth=" << r.girth
                  << " kappa=" << r.vertex_connectivity << " c4c=" << (r.cyclic_4 ? 1 : 0)
                  << " c5c=" << (r.cyclic_5 ? 1 : 0) << " planar=" << (r.planar ? 1 : 0)
                  << " class=" << r.chromatic_class << (ok ? " PASS" : " FAIL") << '\n';
    }
    return all_ok ? kExitOk : kExitValidationFailure;
}

int cmd_analyze(const std::string& path, const std::string& e1s, const std::string& e2s,
                const std::string& threshold) {
    auto graphs = read_graph_file(path);
    if (graphs.empty()) throw GraphError(ErrorCode::BadInput, "no graphs in " + path);
    const CubicGraph& g = graphs.front();
    if (!e1s.empty() && !e2s.empty()) {
        auto parse_edge = [](const std::string& s) {
            int u, v;
            char sep;
            std::istringstream in(s);
            if (!(in >> u >> sep >> v)) throw GraphError(ErrorCode::BadInput, "edge format is u,v");
            return Edge(u, v);
        };
        auto s = cycle_spread(g, parse_edge(e1s), parse_edge(e2s));
        if (s)
            std::cout << "(" << s->i << "," << s->j << ")\n";
        else
            std::cout << "no common cycle\n";
        return kExitOk;
    }
    SpreadThreshold t = parse_threshold(threshold);
    for (const auto& [a, b] : candidate_pairs(g, t))
        std::cout << a.u << '-' << a.v << ' ' << b.u << '-' << b.v << '\n';
    return kExitOk;
}

int cmd_cert(const std::vector<std::string>& paths) {
    for (const CubicGraph& g : load_all(paths)) std::cout << to_hex(certificate(g)) << '\n';
    return kExitOk;
}

int cmd_snark_filter(const std::vector<std::string>& paths) {
    for (const CubicGraph& g : load_all(paths))
        if (is_snark(g)) std::cout << to_graph6(g) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generator and certifier for cyclically 4-connected cubic graphs"};
    app.require_subcommand(1);

    std::string family = "ladder", format = "g6", out_path;
    int k = 4;
    auto* fam = app.add_subcommand("families", "emit a named family member");
    fam->add_option("--family", family, "ladder|moebius|petersen|wheel3")->required();
    fam->add_option("-k", k, "ladder/moebius parameter");
    fam->add_option("--format", format, "g6|edges");
    fam->add_option("-o,--out", out_path, "output file (default stdout)");

    std::string pipeline, out_dir, seeds_path, expected_path;
    int max_n = 10, jobs = 1;
    bool verify = false;
    auto* gen = app.add_subcommand("generate", "run a census pipeline");
    gen->add_option("--pipeline", pipeline, "wormald|nonplanar|planar|c5c")->required();
    gen->add_option("--max-n", max_n, "largest vertex count");
    gen->add_option("--out", out_dir, "output directory");
    gen->add_option("--jobs", jobs, "parallel expansion workers");
    gen->add_flag("--verify", verify, "certify every output");
    gen->add_option("--seeds", seeds_path, "seed file for c5c");
    gen->add_option("--expected", expected_path, "counts CSV to compare against");

    std::vector<std::string> val_paths;
    int val_k = 4;
    auto* val = app.add_subcommand("validate", "structure report per graph");
    val->add_option("paths", val_paths, "input files")->required();
    val->add_option("-k", val_k, "cyclic connectivity level (4 or 5)");

    std::string an_path, an_e1, an_e2, an_threshold = "11";
    auto* an = app.add_subcommand("analyze", "cycle spread / candidate pairs");
    an->add_option("path", an_path, "input file")->required();
    an->add_option("--e1", an_e1, "first edge as u,v");
    an->add_option("--e2", an_e2, "second edge as u,v");
    an->add_option("--threshold", an_threshold, "distinct|11|12|22");

    std::vector<std::string> cert_paths;
    auto* crt = app.add_subcommand("cert", "print certificates in hex");
    crt->add_option("paths", cert_paths, "input files")->required();

    std::vector<std::string> snark_paths;
    auto* snk = app.add_subcommand("snark-filter", "keep only snarks");
    snk->add_option("paths", snark_paths, "input files")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (fam->parsed()) return cmd_families(family, k, format, out_path);
        if (gen->parsed())
            return cmd_generate(pipeline, max_n, out_dir, jobs, verify, seeds_path, expected_path);
        if (val->parsed()) return cmd_validate(val_paths, val_k);
        if (an->parsed()) return cmd_analyze(an_path, an_e1, an_e2, an_threshold);
        if (crt->parsed()) return cmd_cert(cert_paths);
        if (snk->parsed()) return cmd_snark_filter(snark_paths);
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
