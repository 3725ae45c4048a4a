#include "folkman/coloring.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "folkman/cliques.hpp"

namespace folkman {

namespace {

vmask max_clique_mask(const Graph& g) {
    // exact maximum clique, returning one witness mask
    int target = clique_number(g);
    vmask found = 0;
    std::function<bool(vmask, vmask, int)> rec = [&](vmask cand, vmask cur,
                                                     int need) -> bool {
        if (need == 0) {
            found = cur;
            return true;
        }
        while (popcount(cand) >= need) {
            int v = lowest(cand);
            cand &= cand - 1;
            if (rec(g.adj[v] & cand, cur | bit(v), need - 1)) return true;
        }
        return false;
    };
    rec(g.vertices(), 0, target);
    return found;
}

struct KColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;  // 0 = unassigned

    KColorSearch(const Graph& graph, int kk) : g(graph), k(kk), color(graph.n, 0) {}

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v]) continue;
            vmask used = 0;
            for_each_bit(g.adj[v], [&](int u) {
                if (color[u]) used |= bit(color[u] - 1);
            });
            int sat = popcount(used);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int used) {
        int v = pick();
        if (v < 0) return true;
        vmask neighbor_colors = 0;
        for_each_bit(g.adj[v], [&](int u) {
            if (color[u]) neighbor_colors |= bit(color[u] - 1);
        });
        int limit = std::min(k, used + 1);  // at most one fresh color
        for (int c = 1; c <= limit; ++c) {
            if ((neighbor_colors >> (c - 1)) & 1) continue;
            color[v] = c;
            if (solve(std::max(used, c))) return true;
            color[v] = 0;
        }
        return false;
    }
};

}  // namespace

bool k_colorable(const Graph& g, int k) {
    if (g.n == 0) return true;
    if (k <= 0) return false;
    vmask clique = max_clique_mask(g);
    if (popcount(clique) > k) return false;
    KColorSearch search(g, k);
    int used = 0;
    for_each_bit(clique, [&](int v) { search.color[v] = ++used; });
    return search.solve(used);
}

int chromatic_number(const Graph& g) {
    if (g.n == 0) return 0;
    int lb = clique_number(g);
    for (int k = lb;; ++k)
        if (k_colorable(g, k)) return k;
}

namespace {

struct ArrowsVSearch {
    const Graph& g;
    std::vector<int> class_size;   // a_i, descending
    std::vector<vmask> class_mask;
    std::vector<int> order;        // vertices by descending degree
    std::vector<int> assignment;   // class per vertex, -1 unassigned

    ArrowsVSearch(const Graph& graph, std::vector<int> sizes)
        : g(graph), class_size(std::move(sizes)), class_mask(class_size.size(), 0),
          assignment(graph.n, -1) {
        order.resize(g.n);
        for (int i = 0; i < g.n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.degree(a) > g.degree(b);
        });
    }

    // true iff a coloring with no class i containing K_{a_i} exists
    bool free_coloring(int idx) {
        if (idx == g.n) return true;
        int v = order[idx];
        int tried_empty_size = 0;  // empty classes of equal size are interchangeable
        for (size_t i = 0; i < class_size.size(); ++i) {
            if (class_mask[i] == 0) {
                if (class_size[i] == tried_empty_size) continue;
                tried_empty_size = class_size[i];
            }
            int a = class_size[i];
            vmask inside = class_mask[i] & g.adj[v];
            if (a == 2) {
                if (inside) continue;
            } else if (has_clique(g, inside, a - 1)) {
                continue;
            }
            class_mask[i] |= bit(v);
            assignment[v] = static_cast<int>(i);
            if (free_coloring(idx + 1)) return true;
            class_mask[i] &= ~bit(v);
            assignment[v] = -1;
        }
        return false;
    }
};

}  // namespace

bool arrows_v(const Graph& g, const std::vector<int>& parts, ColoringWitness* witness) {
    ArrowParams params(parts, kMaxVertices + 1);
    if (params.parts.empty()) return g.n > 0;  // only inert entries

    std::vector<int> sizes = params.parts;
    std::sort(sizes.rbegin(), sizes.rend());
    ArrowsVSearch search(g, sizes);
    if (search.free_coloring(0)) {
        if (witness) {
            // report classes in ascending-parts order
            witness->flavor = ColoringWitness::Flavor::vertex;
            witness->assignment.assign(g.n, -1);
            int s = static_cast<int>(sizes.size());
            for (int v = 0; v < g.n; ++v)
                witness->assignment[v] = s - 1 - search.assignment[v];
        }
        return false;
    }
    return true;
}

std::vector<std::vector<int>> uni_check_tuples(int m, int p) {
    // ascending tuples, sum (a_i - 1) = m - 1, entries in [2, p], a1+a2-1 > p
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int minval) {
        if (remaining == 0) {
            if (cur.size() >= 2 && cur[0] + cur[1] - 1 > p) out.push_back(cur);
            return;
        }
        for (int a = minval; a <= p && a - 1 <= remaining; ++a) {
            cur.push_back(a);
            rec(remaining - (a - 1), a);
            cur.pop_back();
        }
    };
    rec(m - 1, 2);
    return out;
}

bool arrows_v_uni(const Graph& g, int m, int p) {
    if (m <= p) return clique_number(g) >= m;
    for (const auto& tuple : uni_check_tuples(m, p))
        if (!arrows_v(g, tuple)) return false;
    return true;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    // vertices by descending degree; edges sorted so that both endpoints
    // appear early as soon as possible (closes triangles early)
    std::vector<int> pos(g.n);
    {
        std::vector<int> order(g.n);
        for (int i = 0; i < g.n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.degree(a) > g.degree(b);
        });
        for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u) {
        vmask row = g.adj[u] & ~low_mask(u + 1);
        for_each_bit(row, [&](int v) { edges.emplace_back(u, v); });
    }
    std::stable_sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
        int amax = std::max(pos[a.first], pos[a.second]);
        int bmax = std::max(pos[b.first], pos[b.second]);
        if (amax != bmax) return amax < bmax;
        return std::min(pos[a.first], pos[a.second]) < std::min(pos[b.first], pos[b.second]);
    });
    return edges;
}

namespace {

// Edge 2-coloring search with triangle propagation. Colors are 1/2,
// 0 = unassigned. Every triangle is stored per edge as the index pair of
// the two other edges, flattened into one buffer.
struct EdgeColorSearch {
    const Graph& g;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> tri_buf;  // (other1, other2), grouped by edge
    std::vector<int> tri_begin;                // per-edge offsets into tri_buf
    std::vector<int> colors;
    std::vector<int> trail;

    explicit EdgeColorSearch(const Graph& graph) : g(graph), edges(edge_list(graph)) {
        int m = static_cast<int>(edges.size());
        std::vector<int> eid(static_cast<size_t>(g.n) * g.n, -1);
        for (int i = 0; i < m; ++i) {
            eid[edges[i].first * g.n + edges[i].second] = i;
            eid[edges[i].second * g.n + edges[i].first] = i;
        }
        tri_begin.assign(m + 1, 0);
        colors.assign(m, 0);
        trail.reserve(m);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = edges[i];
            tri_begin[i] = static_cast<int>(tri_buf.size());
            vmask common = g.adj[u] & g.adj[v];
            for_each_bit(common, [&](int w) {
                tri_buf.emplace_back(eid[u * g.n + w], eid[v * g.n + w]);
            });
        }
        tri_begin[m] = static_cast<int>(tri_buf.size());
    }

    // Assign edge e to color c and propagate forced colors. Returns false on
    // a monochromatic triangle; the trail records assignments to undo.
    bool assign(int e, int c) {
        size_t qhead = trail.size();
        colors[e] = c;
        trail.push_back(e);
        while (qhead < trail.size()) {
            int cur = trail[qhead++];
            int cc = colors[cur];
            for (int t = tri_begin[cur]; t < tri_begin[cur + 1]; ++t) {
                auto [f, h] = tri_buf[t];
                int cf = colors[f], ch = colors[h];
                if (cf == cc && ch == cc) return false;
                if (cf == cc && ch == 0) {
                    colors[h] = 3 - cc;
                    trail.push_back(h);
                } else if (ch == cc && cf == 0) {
                    colors[f] = 3 - cc;
                    trail.push_back(f);
                }
            }
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail.size() > mark) {
            colors[trail.back()] = 0;
            trail.pop_back();
        }
    }

    int next_unassigned(int from) const {
        int m = static_cast<int>(edges.size());
        while (from < m && colors[from]) ++from;
        return from;
    }

    // Enumerates all completions; visit returns false to abort the search.
    bool enumerate(int from, const std::function<bool(const std::vector<int>&)>& visit) {
        int e = next_unassigned(from);
        if (e == static_cast<int>(edges.size())) return visit(colors);
        for (int c = 1; c <= 2; ++c) {
            if (e == 0 && c == 2) break;  // color swap symmetry
            size_t mark = trail.size();
            if (assign(e, c)) {
                if (!enumerate(e + 1, visit)) {
                    undo(mark);
                    return false;
                }
            }
            undo(mark);
        }
        return true;
    }
};

}  // namespace

bool arrows_e33(const Graph& g, ColoringWitness* witness) {
    EdgeColorSearch search(g);
    bool found = false;
    search.enumerate(0, [&](const std::vector<int>& colors) {
        found = true;
        if (witness) {
            witness->flavor = ColoringWitness::Flavor::edge;
            witness->assignment = colors;
        }
        return false;  // first coloring suffices
    });
    return !found;
}

void enumerate_33free_colorings(const Graph& g,
                                const std::function<bool(const std::vector<int>&)>& visit) {
    EdgeColorSearch search(g);
    search.enumerate(0, visit);
}

long k3_multiplicity(const Graph& g) {
    // plain branch and bound over edge colorings, counting completed
    // monochromatic triangles as edges get colored
    EdgeColorSearch base(g);
    int m = static_cast<int>(base.edges.size());
    long best = static_cast<long>(base.tri_buf.size()) / 3;  // the all-one coloring
    if (m == 0) return 0;

    std::function<void(int, long)> rec = [&](int e, long mono) {
        if (mono >= best) return;
        if (e == m) {
            best = mono;
            return;
        }
        for (int c = 1; c <= 2; ++c) {
            if (e == 0 && c == 2) break;
            base.colors[e] = c;
            long added = 0;
            for (int t = base.tri_begin[e]; t < base.tri_begin[e + 1]; ++t) {
                auto [f, h] = base.tri_buf[t];
                if (base.colors[f] == c && base.colors[h] == c) ++added;
            }
            rec(e + 1, mono + added);
            base.colors[e] = 0;
        }
    };
    rec(0, 0);
    return best;
}

bool star_extension_exists(const Graph& h, const std::vector<int>& colors, vmask m) {
    // assign a color b_x to each star edge {new, x}, x in m; a triangle
    // (new, x, y) is monochromatic iff b_x = b_y = color(xy)
    auto edges = edge_list(h);
    std::vector<int> members;
    std::array<int, kMaxVertices> index{};
    for_each_bit(m, [&](int v) {
        index[v] = static_cast<int>(members.size());
        members.push_back(v);
    });
    int k = static_cast<int>(members.size());
    std::vector<std::vector<std::pair<int, int>>> constraints(k);  // (earlier index, edge color)
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if ((m >> u & 1) && (m >> v & 1)) {
            int a = index[u], b = index[v];
            constraints[std::max(a, b)].emplace_back(std::min(a, b), colors[i]);
        }
    }
    std::vector<int> b(k, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == k) return true;
        for (int c = 1; c <= 2; ++c) {
            bool ok = true;
            for (auto [j, ec] : constraints[i])
                if (b[j] == c && ec == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            b[i] = c;
            if (rec(i + 1)) return true;
            b[i] = 0;
        }
        return false;
    };
    return rec(0);
}

bool is_marked_set(const Graph& h, vmask m) {
    bool marked = false;
    enumerate_33free_colorings(h, [&](const std::vector<int>& colors) {
        if (!star_extension_exists(h, colors, m)) {
            marked = true;
            return false;
        }
        return true;
    });
    return marked;
}

namespace {

using Bitset = std::vector<std::uint64_t>;

// All minimal covers of the universe {0..u-1} by the given sets, optionally
// restricted to an exact cover size. Branches on the first uncovered
// element; ban sets make every candidate family unique.
struct CoverEnum {
    int u;
    const std::vector<Bitset>& sets;
    std::optional<int> exact_size;
    std::vector<std::vector<int>> out;

    bool covered(const Bitset& acc, int x) const {
        return (acc[x >> 6] >> (x & 63)) & 1;
    }

    void run() {
        Bitset acc((u + 63) / 64, 0);
        std::vector<int> chosen;
        std::vector<char> banned(sets.size(), 0);
        rec(acc, chosen, banned);
    }

    void rec(Bitset& acc, std::vector<int>& chosen, std::vector<char>& banned) {
        int first = -1;
        for (int x = 0; x < u; ++x)
            if (!covered(acc, x)) {
                first = x;
                break;
            }
        if (first < 0) {
            if (exact_size && static_cast<int>(chosen.size()) != *exact_size) return;
            if (minimal(chosen)) out.push_back(chosen);
            return;
        }
        if (exact_size && static_cast<int>(chosen.size()) >= *exact_size) return;
        std::vector<int> local_bans;
        for (size_t i = 0; i < sets.size(); ++i) {
            if (banned[i] || !((sets[i][first >> 6] >> (first & 63)) & 1)) continue;
            Bitset next = acc;
            for (size_t w = 0; w < next.size(); ++w) next[w] |= sets[i][w];
            chosen.push_back(static_cast<int>(i));
            rec(next, chosen, banned);
            chosen.pop_back();
            banned[i] = 1;
            local_bans.push_back(static_cast<int>(i));
        }
        for (int i : local_bans) banned[i] = 0;
    }

    bool minimal(const std::vector<int>& chosen) const {
        // every member covers some element no other member covers
        for (size_t drop = 0; drop < chosen.size(); ++drop) {
            bool private_found = false;
            for (int x = 0; x < u && !private_found; ++x) {
                if (!((sets[chosen[drop]][x >> 6] >> (x & 63)) & 1)) continue;
                bool other = false;
                for (size_t j = 0; j < chosen.size(); ++j) {
                    if (j == drop) continue;
                    if ((sets[chosen[j]][x >> 6] >> (x & 63)) & 1) {
                        other = true;
                        break;
                    }
                }
                if (!other) private_found = true;
            }
            if (!private_found) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<std::vector<vmask>> minimal_complete_families(
    const Graph& h, const std::vector<vmask>& candidates,
    std::optional<int> exact_size) {
    std::vector<std::vector<int>> colorings;
    enumerate_33free_colorings(h, [&](const std::vector<int>& c) {
        colorings.push_back(c);
        return true;
    });
    int u = static_cast<int>(colorings.size());
    if (u == 0) {
        // no colorings to block: the empty family is vacuously complete
        if (!exact_size || *exact_size == 0) return {{}};
        return {};
    }
    std::vector<Bitset> blocked(candidates.size(), Bitset((u + 63) / 64, 0));
    for (size_t i = 0; i < candidates.size(); ++i)
        for (int j = 0; j < u; ++j)
            if (!star_extension_exists(h, colorings[j], candidates[i]))
                blocked[i][j >> 6] |= std::uint64_t{1} << (j & 63);

    CoverEnum cover{u, blocked, exact_size, {}};
    cover.run();
    std::vector<std::vector<vmask>> out;
    out.reserve(cover.out.size());
    for (const auto& family : cover.out) {
        std::vector<vmask> f;
        f.reserve(family.size());
        for (int i : family) f.push_back(candidates[i]);
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_vertex_witness(const Graph& g, const std::vector<int>& parts,
                           const std::vector<int>& assignment) {
    ArrowParams params(parts, kMaxVertices + 1);
    const auto& canon = params.parts;
    if (static_cast<int>(assignment.size()) != g.n) return false;
    std::vector<vmask> classes(canon.size(), 0);
    for (int v = 0; v < g.n; ++v) {
        int c = assignment[v];
        if (c < 0 || c >= static_cast<int>(canon.size())) return false;
        classes[c] |= bit(v);
    }
    for (size_t i = 0; i < canon.size(); ++i)
        if (has_clique(g, classes[i], canon[i])) return false;
    return true;
}

bool verify_edge_witness(const Graph& g, const std::vector<int>& colors) {
    auto edges = edge_list(g);
    if (colors.size() != edges.size()) return false;
    std::vector<std::vector<int>> eid(g.n, std::vector<int>(g.n, -1));
    for (size_t i = 0; i < edges.size(); ++i) {
        if (colors[i] != 1 && colors[i] != 2) return false;
        eid[edges[i].first][edges[i].second] = eid[edges[i].second][edges[i].first] =
            static_cast<int>(i);
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (!g.has_edge(u, v)) continue;
            vmask common = g.adj[u] & g.adj[v] & ~low_mask(v + 1);
            bool bad = false;
            for_each_bit(common, [&](int w) {
                int c = colors[eid[u][v]];
                if (colors[eid[u][w]] == c && colors[eid[v][w]] == c) bad = true;
            });
            if (bad) return false;
        }
    return true;
}

}  // namespace folkman
