#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "c4c/canon.hpp"
#include "c4c/spread.hpp"
#include "c4c/transform.hpp"

namespace c4c {

enum class PostFilter { None, PlanarOnly };

struct PipelineConfig {
    std::vector<CubicGraph> seeds;
    SpreadThreshold threshold = SpreadThreshold::AtLeast11;
    int max_n = 8;
    PostFilter post_filter = PostFilter::None;
    bool verify = false;         // certify every output cyclically 4-connected
    int jobs = 1;                // expansion worker count; results are identical
    int verify_k = 4;
    std::string out_dir;         // when set, levels are written as graph6 + sidecars
};

struct CensusEntry {
    Certificate cert;
    CubicGraph graph;
    bool is_seed = false;
    // provenance (empty cert for seeds)
    Certificate parent_cert;
    BridgeSpec via;
};

struct Census {
    // per level, sorted by certificate
    std::map<int, std::vector<CensusEntry>> per_n;
    std::map<int, int> counts() const;
    // counts excluding seed graphs
    std::map<int, int> generated_counts() const;
    const CensusEntry* find(int n, const Certificate& c) const;
};

// Bridge over candidate_pairs(g, t), children deduplicated by certificate.
std::vector<CubicGraph> expand(const CubicGraph& g, SpreadThreshold t);

// Level-synchronous closure under bridging. Deterministic: output is
// independent of cfg.jobs.
Census closure(const PipelineConfig& cfg);

// Closure from {Q8, V8} at spread >= (1,1): the full cyclically
// 4-connected census per level.
Census pipeline_wormald(int max_n, int jobs = 1, bool verify = false,
                        const std::string& out_dir = "");

// Closure from {Q8} at spread >= (1,2). Outputs exclude the seed; together
// with the Moebius ladders and the Petersen graph they are all non-planar
// cyclically 4-connected cubic graphs.
Census pipeline_nonplanar(int max_n, int jobs = 1, bool verify = false,
                          const std::string& out_dir = "");

// Closure from all ladders at spread >= (1,2) with a planarity post-filter.
// Outputs plus the ladders are all planar cyclically 4-connected cubic
// graphs.
Census pipeline_planar(int max_n, int jobs = 1, bool verify = false,
                       const std::string& out_dir = "");

// Closure at spread >= (2,2) from cyclically 5-connected seeds. Every
// output is cyclically 5-connected; the census is NOT exhaustive.
Census pipeline_c5c(const std::vector<CubicGraph>& seeds, int max_n, int jobs = 1,
                    const std::string& out_dir = "");

struct CountReport {
    bool pass = true;
    std::string table;
};

// Compare census level counts against expected values (only levels present
// in `expected` are checked).
CountReport count_report(const Census& census, const std::map<int, int>& expected,
                         bool generated_only = false);

// "n,count" lines, '#' comments.
std::map<int, int> read_counts_csv(const std::string& path);

}  // namespace c4c
