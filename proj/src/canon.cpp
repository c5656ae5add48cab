#include "c4c/canon.hpp"

#include <algorithm>

namespace c4c {

namespace {

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: repeatedly split cells by neighbor counts into
// every cell, in deterministic order, until stable.
void refine(const CubicGraph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t s = 0; s < p.size() && !changed; ++s) {
            std::vector<int> cnt(g.order(), 0);
            for (int v : p[s])
                for (int w : g.neighbors(v)) ++cnt[w];
            for (size_t c = 0; c < p.size(); ++c) {
                if (p[c].size() <= 1) continue;
                auto& cell = p[c];
                int c0 = cnt[cell[0]];
                bool uniform = std::all_of(cell.begin(), cell.end(),
                                           [&](int v) { return cnt[v] == c0; });
                if (uniform) continue;
                std::stable_sort(cell.begin(), cell.end(),
                                 [&](int a, int b) { return cnt[a] < cnt[b]; });
                Partition sub;
                for (int v : cell) {
                    if (sub.empty() || cnt[sub.back().front()] != cnt[v]) sub.emplace_back();
                    sub.back().push_back(v);
                }
                p.erase(p.begin() + c);
                p.insert(p.begin() + c, sub.begin(), sub.end());
                changed = true;
                break;
            }
        }
    }
}

struct CanonSearch {
    const CubicGraph& g;
    Certificate best;
    bool have_best = false;

    explicit CanonSearch(const CubicGraph& graph) : g(graph) {}

    Certificate encode(const Partition& p) const {
        const int n = g.order();
        std::vector<int> label(n);
        int pos = 0;
        for (const auto& cell : p) label[cell.front()] = pos++;
        Certificate out;
        out.push_back(static_cast<std::uint8_t>(n));
        int nbits = n * (n - 1) / 2;
        out.resize(1 + (nbits + 7) / 8, 0);
        // inverse labeling: canonical position -> original vertex
        std::vector<int> orig(n);
        for (int v = 0; v < n; ++v) orig[label[v]] = v;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (g.has_edge(orig[i], orig[j]))
                    out[1 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
                ++bit;
            }
        return out;
    }

    void descend(Partition p) {
        refine(g, p);
        // first smallest non-singleton cell
        int target = -1;
        size_t target_size = g.order() + 1;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1 && p[i].size() < target_size) {
                target = static_cast<int>(i);
                target_size = p[i].size();
            }
        if (target < 0) {
            Certificate c = encode(p);
            if (!have_best || c < best) {
                best = std::move(c);
                have_best = true;
            }
            return;
        }
        for (int v : p[target]) {
            Partition q = p;
            std::vector<int> rest;
            for (int w : p[target])
                if (w != v) rest.push_back(w);
            q[target] = {v};
            q.insert(q.begin() + target + 1, std::move(rest));
            descend(std::move(q));
        }
    }
};

}  // namespace

Certificate certificate(const CubicGraph& g) {
    CanonSearch s(g);
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    s.descend({all});
    return s.best;
}

std::string to_hex(const Certificate& c) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(c.size() * 2);
    for (std::uint8_t b : c) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

bool are_isomorphic(const CubicGraph& g, const CubicGraph& h) {
    if (g.order() != h.order()) return false;
    return certificate(g) == certificate(h);
}

std::map<Certificate, CubicGraph> dedup(const std::vector<CubicGraph>& graphs) {
    std::map<Certificate, CubicGraph> out;
    for (const CubicGraph& g : graphs) out.try_emplace(certificate(g), g);
    return out;
}

}  // namespace c4c
