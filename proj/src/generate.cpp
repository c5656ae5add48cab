#include "c4c/generate.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "c4c/families.hpp"
#include "c4c/graph6.hpp"
#include "c4c/structure.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace c4c {

std::map<int, int> Census::counts() const {
    std::map<int, int> out;
    for (const auto& [n, entries] : per_n) out[n] = static_cast<int>(entries.size());
    return out;
}

std::map<int, int> Census::generated_counts() const {
    std::map<int, int> out;
    for (const auto& [n, entries] : per_n) {
        int c = 0;
        for (const auto& e : entries)
            if (!e.is_seed) ++c;
        out[n] = c;
    }
    return out;
}

const CensusEntry* Census::find(int n, const Certificate& c) const {
    auto it = per_n.find(n);
    if (it == per_n.end()) return nullptr;
    for (const auto& e : it->second)
        if (e.cert == c) return &e;
    return nullptr;
}

namespace {

struct Child {
    Certificate cert;
    CubicGraph graph;
    BridgeSpec via;
};

// All bridgings of one parent at threshold t, in candidate-pair order.
std::vector<Child> expand_one(const CubicGraph& g, SpreadThreshold t, PostFilter pf) {
    std::vector<Child> out;
    for (const auto& [e1, e2] : candidate_pairs(g, t)) {
        CubicGraph child = bridge(g, e1, e2);
        if (pf == PostFilter::PlanarOnly && !is_planar(child)) continue;
        out.push_back({certificate(child), std::move(child), {e1, e2, g.order(), g.order() + 1}});
    }
    return out;
}

void write_census(const Census& census, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::ofstream counts(fs::path(out_dir) / "counts.csv");
    counts << "# n,count\n";
    std::ofstream prov(fs::path(out_dir) / "provenance.txt");
    for (const auto& [n, entries] : census.per_n) {
        std::ofstream g6(fs::path(out_dir) / ("level_" + std::to_string(n) + ".g6"));
        for (const auto& e : entries) {
            g6 << to_graph6(e.graph) << '\n';
            if (e.is_seed)
                prov << to_hex(e.cert) << " seed\n";
            else
                prov << to_hex(e.cert) << ' ' << to_hex(e.parent_cert) << ' ' << e.via.e1.u
                     << '-' << e.via.e1.v << ' ' << e.via.e2.u << '-' << e.via.e2.v << '\n';
        }
        counts << n << ',' << entries.size() << '\n';
    }
}

}  // namespace

std::vector<CubicGraph> expand(const CubicGraph& g, SpreadThreshold t) {
    std::map<Certificate, CubicGraph> seen;
    for (auto& c : expand_one(g, t, PostFilter::None)) seen.try_emplace(std::move(c.cert), c.graph);
    std::vector<CubicGraph> out;
    for (auto& [cert, graph] : seen) out.push_back(graph);
    return out;
}

Census closure(const PipelineConfig& cfg) {
    Census census;
    int min_level = cfg.max_n;
    for (const CubicGraph& seed : cfg.seeds) {
        if (seed.order() > cfg.max_n)
            throw GraphError(ErrorCode::BadInput, "seed larger than max_n");
        min_level = std::min(min_level, seed.order());
        Certificate c = certificate(seed);
        auto& level = census.per_n[seed.order()];
        bool dup = std::any_of(level.begin(), level.end(),
                               [&](const CensusEntry& e) { return e.cert == c; });
        if (!dup) level.push_back({std::move(c), seed, true, {}, {}});
    }
    for (auto& [n, level] : census.per_n)
        std::sort(level.begin(), level.end(),
                  [](const CensusEntry& a, const CensusEntry& b) { return a.cert < b.cert; });

    for (int n = min_level; n + 2 <= cfg.max_n; n += 2) {
        auto it = census.per_n.find(n);
        if (it == census.per_n.end() || it->second.empty()) continue;
        const auto& parents = it->second;
        std::vector<std::vector<Child>> per_parent(parents.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, cfg.jobs)) if (cfg.jobs > 1)
#endif
        for (int p = 0; p < static_cast<int>(parents.size()); ++p)
            per_parent[p] = expand_one(parents[p].graph, cfg.threshold, cfg.post_filter);

        // deterministic merge in parent order
        std::map<Certificate, CensusEntry> level;
        // keep any preplaced seeds of this order authoritative
        if (auto pre = census.per_n.find(n + 2); pre != census.per_n.end())
            for (const auto& e : pre->second) level.emplace(e.cert, e);
        for (size_t p = 0; p < per_parent.size(); ++p)
            for (auto& c : per_parent[p]) {
                if (level.count(c.cert)) continue;
                level.emplace(c.cert,
                              CensusEntry{c.cert, std::move(c.graph), false, parents[p].cert, c.via});
            }
        auto& out = census.per_n[n + 2];
        out.clear();
        for (auto& [cert, entry] : level) out.push_back(std::move(entry));
    }

    if (cfg.verify) {
        for (const auto& [n, level] : census.per_n)
            for (const auto& e : level)
                if (!is_cyclically_k_connected(e.graph, cfg.verify_k))
                    throw GraphError(ErrorCode::PreconditionViolated,
                                     "generated graph fails cyclic connectivity check at n=" +
                                         std::to_string(n));
    }
    if (!cfg.out_dir.empty()) write_census(census, cfg.out_dir);
    return census;
}

Census pipeline_wormald(int max_n, int jobs, bool verify, const std::string& out_dir) {
    if (max_n < 8) throw GraphError(ErrorCode::BadInput, "max_n must be >= 8");
    PipelineConfig cfg;
    cfg.seeds = {ladder(4), moebius(4)};
    cfg.threshold = SpreadThreshold::AtLeast11;
    cfg.max_n = max_n;
    cfg.verify = verify;
    cfg.jobs = jobs;
    cfg.out_dir = out_dir;
    return closure(cfg);
}

Census pipeline_nonplanar(int max_n, int jobs, bool verify, const std::string& out_dir) {
    if (max_n < 10) throw GraphError(ErrorCode::BadInput, "max_n must be >= 10");
    PipelineConfig cfg;
    cfg.seeds = {ladder(4)};
    cfg.threshold = SpreadThreshold::AtLeast12;
    cfg.max_n = max_n;
    cfg.verify = verify;
    cfg.jobs = jobs;
    cfg.out_dir = out_dir;
    return closure(cfg);
}

Census pipeline_planar(int max_n, int jobs, bool verify, const std::string& out_dir) {
    if (max_n < 10) throw GraphError(ErrorCode::BadInput, "max_n must be >= 10");
    PipelineConfig cfg;
    for (int k = 4; 2 * k <= max_n; ++k) cfg.seeds.push_back(ladder(k));
    cfg.threshold = SpreadThreshold::AtLeast12;
    cfg.max_n = max_n;
    cfg.post_filter = PostFilter::PlanarOnly;
    cfg.verify = verify;
    cfg.jobs = jobs;
    cfg.out_dir = out_dir;
    return closure(cfg);
}

Census pipeline_c5c(const std::vector<CubicGraph>& seeds, int max_n, int jobs,
                    const std::string& out_dir) {
    for (const CubicGraph& s : seeds)
        if (!is_cyclically_k_connected(s, 5))
            throw GraphError(ErrorCode::SeedNotC5C, "seed is not cyclically 5-connected");
    PipelineConfig cfg;
    cfg.seeds = seeds;
    cfg.threshold = SpreadThreshold::AtLeast22;
    cfg.max_n = max_n;
    cfg.jobs = jobs;
    cfg.verify = true;
    cfg.verify_k = 5;
    cfg.out_dir = out_dir;
    return closure(cfg);
}

CountReport count_report(const Census& census, const std::map<int, int>& expected,
                         bool generated_only) {
    auto actual = generated_only ? census.generated_counts() : census.counts();
    CountReport r;
    std::ostringstream t;
    t << "n,expected,actual,status\n";
    for (const auto& [n, want] : expected) {
        int got = actual.count(n) ? actual[n] : 0;
        bool ok = got == want;
        if (!ok) r.pass = false;
        t << n << ',' << want << ',' << got << ',' << (ok ? "pass" : "FAIL") << '\n';
    }
    r.table = t.str();
    return r;
}

std::map<int, int> read_counts_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError(ErrorCode::BadInput, "cannot open " + path);
    std::map<int, int> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        int n, count;
        if (row >> n >> count) out[n] = count;
    }
    return out;
}

}  // namespace c4c
