#include "folkman/cliques.hpp"

#include <algorithm>

namespace folkman {

bool has_clique(const Graph& g, vmask cand, int k) {
    if (k <= 0) return true;
    while (popcount(cand) >= k) {
        int v = lowest(cand);
        cand &= cand - 1;
        // cliques through v, using only later candidates; the loop covers
        // cliques avoiding v
        if (has_clique(g, g.adj[v] & cand, k - 1)) return true;
    }
    return false;
}

namespace {

// Greedy coloring of g[cand]: number of color classes bounds the clique size.
int coloring_bound(const Graph& g, vmask cand) {
    int colors = 0;
    while (cand) {
        vmask cls = 0;
        vmask avail = cand;
        while (avail) {
            int v = lowest(avail);
            cls |= bit(v);
            avail &= ~(g.adj[v] | bit(v));
        }
        cand &= ~cls;
        ++colors;
    }
    return colors;
}

void max_clique_rec(const Graph& g, vmask cand, int depth, int& best) {
    if (depth + popcount(cand) <= best) return;
    if (depth + coloring_bound(g, cand) <= best) return;
    while (cand) {
        if (depth + popcount(cand) <= best) return;
        int v = lowest(cand);
        cand &= cand - 1;
        if (depth + 1 > best && (g.adj[v] & cand) == 0) {
            best = depth + 1;
            continue;
        }
        max_clique_rec(g, g.adj[v] & cand, depth + 1, best);
        if (depth + 1 > best) best = depth + 1;
    }
}

}  // namespace

int max_clique_in(const Graph& g, vmask cand) {
    int best = 0;
    max_clique_rec(g, cand & g.vertices(), 0, best);
    return best;
}

int clique_number(const Graph& g) { return max_clique_in(g, g.vertices()); }

int independence_number(const Graph& g) {
    return clique_number(complement(g));
}

bool alpha_at_most(const Graph& g, vmask cand, int t) {
    // alpha > t iff the complement has a (t+1)-clique in cand
    Graph co = complement(g);
    return !has_clique(co, cand & g.vertices(), t + 1);
}

namespace {

void cliques_rec(const Graph& g, vmask cand, vmask cur, int k,
                 std::vector<vmask>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    while (popcount(cand) >= k) {
        int v = lowest(cand);
        cand &= cand - 1;
        cliques_rec(g, g.adj[v] & cand, cur | bit(v), k - 1, out);
    }
}

// Enumerates all minimal transversals of a small hypergraph given as edge
// masks. Branches on the vertices of the first uncovered edge; the ban set
// makes each vertex set appear once, and minimality is the private-edge
// condition at the leaves.
struct TransversalEnum {
    const std::vector<vmask>& edges;
    std::vector<vmask>& out;

    void run() { rec(0, 0); }

    void rec(vmask t, vmask banned) {
        vmask uncovered = 0;
        for (vmask e : edges)
            if ((e & t) == 0) {
                uncovered = e;
                break;
            }
        if (!uncovered) {
            if (minimal(t)) out.push_back(t);
            return;
        }
        vmask choices = uncovered & ~banned;
        while (choices) {
            int v = lowest(choices);
            choices &= choices - 1;
            rec(t | bit(v), banned);
            banned |= bit(v);
        }
    }

    bool minimal(vmask t) const {
        vmask witnessed = 0;
        for (vmask e : edges) {
            vmask hit = e & t;
            if (popcount(hit) == 1) witnessed |= hit;
        }
        return witnessed == t;
    }
};

}  // namespace

std::vector<vmask> enumerate_cliques(const Graph& g, int r) {
    std::vector<vmask> out;
    cliques_rec(g, g.vertices(), 0, r, out);
    return out;
}

std::vector<vmask> maximal_kfree_subsets(const Graph& g, int r) {
    std::vector<vmask> cliques = enumerate_cliques(g, r);
    if (cliques.empty()) return {g.vertices()};
    std::vector<vmask> transversals;
    TransversalEnum{cliques, transversals}.run();
    std::vector<vmask> out;
    out.reserve(transversals.size());
    for (vmask t : transversals) out.push_back(g.vertices() & ~t);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_maximal_kqfree(const Graph& g, int q) {
    if (has_clique(g, g.vertices(), q)) return false;
    for (int v = 0; v < g.n; ++v) {
        vmask nonadj = g.vertices() & ~g.adj[v] & ~low_mask(v + 1);
        while (nonadj) {
            int u = lowest(nonadj);
            nonadj &= nonadj - 1;
            if (!has_clique(g, g.adj[v] & g.adj[u], q - 2)) return false;
        }
    }
    return true;
}

bool is_plus_kp(const Graph& g, int p) {
    for (int v = 0; v < g.n; ++v) {
        vmask nonadj = g.vertices() & ~g.adj[v] & ~low_mask(v + 1);
        while (nonadj) {
            int u = lowest(nonadj);
            nonadj &= nonadj - 1;
            if (!has_clique(g, g.adj[v] & g.adj[u], p - 2)) return false;
        }
    }
    return true;
}

std::optional<std::pair<int, int>> sperner_witness(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) {
            if (u == v) continue;
            if ((g.adj[u] & ~g.adj[v]) == 0) return std::make_pair(u, v);
        }
    return std::nullopt;
}

bool is_sperner(const Graph& g) { return sperner_witness(g).has_value(); }

vmask cone_vertices(const Graph& g) {
    vmask out = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v] == (g.vertices() & ~bit(v))) out |= bit(v);
    return out;
}

}  // namespace folkman
