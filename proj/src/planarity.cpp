#include <algorithm>
#include <queue>
#include <set>

#include "c4c/structure.hpp"

namespace c4c {

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

std::pair<int, int> key(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

// A fragment of G relative to the embedded subgraph H: either a single
// chord between two H-vertices, or a component of G - V(H) together with
// its attachment vertices.
struct Fragment {
    std::vector<int> attachments;   // H-vertices, sorted
    std::vector<int> interior;      // component vertices (empty for a chord)
    int chord_u = -1, chord_v = -1;
};

struct Demoucron {
    const SimpleGraph& g;
    EdgeSet embedded;
    std::vector<char> in_h;
    std::vector<std::vector<int>> faces;

    explicit Demoucron(const SimpleGraph& graph) : g(graph), in_h(graph.n, 0) {}

    std::vector<int> find_cycle() const {
        std::vector<int> parent(g.n, -2);
        std::vector<int> stack{0};
        parent[0] = -1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[v]) {
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back(w);
                } else if (w != parent[v] && parent[v] != -2) {
                    // back/cross edge v-w; walk both tails to the root and splice
                    std::vector<int> pv, pw;
                    for (int t = v; t != -1; t = parent[t]) pv.push_back(t);
                    for (int t = w; t != -1; t = parent[t]) pw.push_back(t);
                    std::set<int> on_pv(pv.begin(), pv.end());
                    int meet = -1;
                    for (int t : pw)
                        if (on_pv.count(t)) {
                            meet = t;
                            break;
                        }
                    std::vector<int> cyc;
                    for (int t : pv) {
                        cyc.push_back(t);
                        if (t == meet) break;
                    }
                    std::vector<int> half;
                    for (int t : pw) {
                        if (t == meet) break;
                        half.push_back(t);
                    }
                    std::reverse(half.begin(), half.end());
                    cyc.insert(cyc.end(), half.begin(), half.end());
                    return cyc;
                }
            }
        }
        return {};
    }

    void embed_path(const std::vector<int>& path, int face_idx) {
        for (size_t i = 0; i + 1 < path.size(); ++i)
            embedded.insert(key(path[i], path[i + 1]));
        for (int v : path) in_h[v] = 1;

        std::vector<int> f = faces[face_idx];
        int u = path.front(), w = path.back();
        int iu = static_cast<int>(std::find(f.begin(), f.end(), u) - f.begin());
        int iw = static_cast<int>(std::find(f.begin(), f.end(), w) - f.begin());
        const int L = static_cast<int>(f.size());

        std::vector<int> interior(path.begin() + 1, path.end() - 1);

        std::vector<int> f1;  // u .. w along the face, then path back w->u
        for (int i = iu; i != iw; i = (i + 1) % L) f1.push_back(f[i]);
        f1.push_back(f[iw]);
        for (auto it = interior.rbegin(); it != interior.rend(); ++it) f1.push_back(*it);

        std::vector<int> f2;  // w .. u along the face, then path u->w
        for (int i = iw; i != iu; i = (i + 1) % L) f2.push_back(f[i]);
        f2.push_back(f[iu]);
        f2.insert(f2.end(), interior.begin(), interior.end());

        faces[face_idx] = std::move(f1);
        faces.push_back(std::move(f2));
    }

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        for (int u = 0; u < g.n; ++u)
            for (int v : g.adj[u]) {
                if (u >= v) continue;
                if (in_h[u] && in_h[v] && !embedded.count(key(u, v))) {
                    Fragment fr;
                    fr.attachments = {u, v};
                    fr.chord_u = u;
                    fr.chord_v = v;
                    out.push_back(std::move(fr));
                }
            }
        std::vector<char> seen(g.n, 0);
        for (int s = 0; s < g.n; ++s) {
            if (in_h[s] || seen[s]) continue;
            Fragment fr;
            std::set<int> attach;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                fr.interior.push_back(v);
                for (int w : g.adj[v]) {
                    if (in_h[w])
                        attach.insert(w);
                    else if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            fr.attachments.assign(attach.begin(), attach.end());
            out.push_back(std::move(fr));
        }
        return out;
    }

    std::vector<int> admissible_faces(const Fragment& fr) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
            bool ok = true;
            for (int a : fr.attachments)
                if (std::find(faces[i].begin(), faces[i].end(), a) == faces[i].end()) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(i);
        }
        return out;
    }

    // Path through the fragment between two distinct attachments.
    std::vector<int> fragment_path(const Fragment& fr) const {
        if (fr.chord_u >= 0) return {fr.chord_u, fr.chord_v};
        std::vector<char> inside(g.n, 0);
        for (int v : fr.interior) inside[v] = 1;
        int a0 = fr.attachments.front();
        std::vector<int> prev(g.n, -1);
        std::queue<int> q;
        // start into the component from a0
        for (int w : g.adj[a0])
            if (inside[w] && prev[w] < 0) {
                prev[w] = a0;
                q.push(w);
            }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v]) {
                if (inside[w]) {
                    if (prev[w] < 0) {
                        prev[w] = v;
                        q.push(w);
                    }
                } else if (w != a0 && in_h[w] &&
                           std::find(fr.attachments.begin(), fr.attachments.end(), w) !=
                               fr.attachments.end()) {
                    std::vector<int> path{w};
                    for (int t = v; t != a0; t = prev[t]) path.push_back(t);
                    path.push_back(a0);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
            }
        }
        return {};
    }

    bool run() {
        const int m = g.edge_count();
        if (g.n >= 3 && m > 3 * g.n - 6) return false;
        auto cyc = find_cycle();
        if (cyc.empty()) return true;  // forest
        for (size_t i = 0; i < cyc.size(); ++i) {
            in_h[cyc[i]] = 1;
            embedded.insert(key(cyc[i], cyc[(i + 1) % cyc.size()]));
        }
        faces.push_back(cyc);
        faces.push_back(cyc);

        while (static_cast<int>(embedded.size()) < m) {
            auto frs = fragments();
            if (frs.empty()) return true;
            int chosen = -1, chosen_face = -1;
            for (int i = 0; i < static_cast<int>(frs.size()); ++i) {
                auto adm = admissible_faces(frs[i]);
                if (adm.empty()) return false;
                if (adm.size() == 1) {
                    chosen = i;
                    chosen_face = adm[0];
                    break;
                }
                if (chosen < 0) {
                    chosen = i;
                    chosen_face = adm[0];
                }
            }
            auto path = fragment_path(frs[chosen]);
            embed_path(path, chosen_face);
        }
        return true;
    }
};

// Biconnected blocks as edge lists, via DFS with an edge stack.
struct BlockFinder {
    const SimpleGraph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int counter = 0;

    explicit BlockFinder(const SimpleGraph& graph) : g(graph), num(graph.n, -1), low(graph.n, 0) {}

    void dfs(int v, int parent) {
        num[v] = low[v] = counter++;
        for (int w : g.adj[v]) {
            if (w == parent) {
                parent = -1;  // skip the tree edge back once (no parallel edges here)
                continue;
            }
            if (num[w] < 0) {
                estack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    blocks.emplace_back();
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        blocks.back().push_back(e);
                        if (e == std::pair{v, w}) break;
                    }
                }
            } else if (num[w] < num[v]) {
                estack.push_back({v, w});
                low[v] = std::min(low[v], num[w]);
            }
        }
    }

    std::vector<std::vector<std::pair<int, int>>> run() {
        for (int v = 0; v < g.n; ++v)
            if (num[v] < 0) dfs(v, -1);
        return blocks;
    }
};

}  // namespace

bool is_planar(const SimpleGraph& g) {
    for (const auto& block : BlockFinder(g).run()) {
        if (block.size() <= 2) continue;
        std::vector<int> ids;
        for (auto [u, v] : block) {
            ids.push_back(u);
            ids.push_back(v);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        SimpleGraph sub(static_cast<int>(ids.size()));
        auto id_of = [&](int v) {
            return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
        };
        for (auto [u, v] : block) sub.add_edge(id_of(u), id_of(v));
        if (!Demoucron(sub).run()) return false;
    }
    return true;
}

bool is_planar(const CubicGraph& g) { return is_planar(SimpleGraph(g)); }

}  // namespace c4c
