#include "folkman/canon.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace folkman {

namespace {

// Packed leaf: n, then the upper triangle of the relabeled adjacency,
// row-major, MSB-first. Fixed buffer so leaves compare with memcmp.
struct PackedLeaf {
    int len = 0;
    std::array<std::uint8_t, 1 + (64 * 63 / 2 + 7) / 8> bytes{};

    int compare(const PackedLeaf& o) const {
        return std::memcmp(bytes.data(), o.bytes.data(), len);
    }
};

void pack_leaf(const Graph& g, const int* lab, PackedLeaf& out) {
    out.bytes.fill(0);
    out.bytes[0] = static_cast<std::uint8_t>(g.n);
    int bitpos = 0;
    for (int i = 0; i < g.n; ++i) {
        vmask row = g.adj[lab[i]];
        for (int j = i + 1; j < g.n; ++j) {
            if ((row >> lab[j]) & 1)
                out.bytes[1 + (bitpos >> 3)] |= std::uint8_t(0x80u >> (bitpos & 7));
            ++bitpos;
        }
    }
    out.len = 1 + (bitpos + 7) / 8;
}

struct UnionFind {
    std::array<int, kMaxVertices> parent;

    void reset(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Ordered partition in nauty's lab/ptn style: lab holds the vertices in
// partition order, ptn[i] == 1 means positions i and i+1 share a cell.
struct Searcher {
    const Graph& g;
    int n;

    std::vector<std::vector<int>> generators;
    PackedLeaf best;
    std::array<int, kMaxVertices> best_lab{};
    bool have_best = false;

    std::vector<int> prefix;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.n) {}

    void refine(int* lab, int* ptn, int* pos, std::vector<vmask>& queue) {
        std::array<int, kMaxVertices> cnt{};
        while (!queue.empty()) {
            vmask splitter = queue.back();
            queue.pop_back();
            for (int start = 0; start < n;) {
                int end = start;
                while (ptn[end]) ++end;
                ++end;  // cell is [start, end)
                if (end - start >= 2) {
                    bool uniform = true;
                    int first = popcount(g.adj[lab[start]] & splitter);
                    for (int i = start; i < end; ++i) {
                        cnt[i] = popcount(g.adj[lab[i]] & splitter);
                        if (cnt[i] != first) uniform = false;
                    }
                    if (!uniform) {
                        std::stable_sort(lab + start, lab + end, [&](int a, int b) {
                            return popcount(g.adj[a] & splitter) <
                                   popcount(g.adj[b] & splitter);
                        });
                        for (int i = start; i < end; ++i)
                            cnt[i] = popcount(g.adj[lab[i]] & splitter);
                        int sub = start;
                        for (int i = start; i < end; ++i) {
                            bool last = (i + 1 == end) || (cnt[i + 1] != cnt[i]);
                            if (last) {
                                ptn[i] = 0;
                                vmask m = 0;
                                for (int j = sub; j <= i; ++j) m |= bit(lab[j]);
                                queue.push_back(m);
                                sub = i + 1;
                            } else {
                                ptn[i] = 1;
                            }
                        }
                    }
                }
                start = end;
            }
        }
        for (int i = 0; i < n; ++i) pos[lab[i]] = i;
    }

    // First smallest non-singleton cell, or -1 when discrete.
    int target_cell(const int* ptn) const {
        int best_start = -1, best_size = n + 1;
        for (int start = 0; start < n;) {
            int end = start;
            while (ptn[end]) ++end;
            ++end;
            int size = end - start;
            if (size >= 2 && size < best_size) {
                best_size = size;
                best_start = start;
            }
            start = end;
        }
        return best_start;
    }

    void handle_leaf(const int* lab) {
        PackedLeaf leaf;
        pack_leaf(g, lab, leaf);
        if (!have_best || leaf.compare(best) < 0) {
            best = leaf;
            std::copy(lab, lab + n, best_lab.begin());
            have_best = true;
        } else if (leaf.compare(best) == 0) {
            // leaf and best label the same graph: best_lab[i] -> lab[i] is an
            // automorphism
            std::vector<int> gamma(n);
            for (int i = 0; i < n; ++i) gamma[best_lab[i]] = lab[i];
            bool identity = true;
            for (int i = 0; i < n; ++i)
                if (gamma[i] != i) {
                    identity = false;
                    break;
                }
            if (!identity && generators.size() < 128) generators.push_back(std::move(gamma));
        }
    }

    void search(std::array<int, kMaxVertices> lab, std::array<int, kMaxVertices> ptn,
                std::vector<vmask> pending) {
        std::array<int, kMaxVertices> pos{};
        refine(lab.data(), ptn.data(), pos.data(), pending);
        int cell = target_cell(ptn.data());
        if (cell < 0) {
            handle_leaf(lab.data());
            return;
        }
        int end = cell;
        while (ptn[end]) ++end;
        ++end;

        std::array<int, kMaxVertices> cell_vertices{};
        int csize = end - cell;
        std::copy(lab.begin() + cell, lab.begin() + end, cell_vertices.begin());
        std::sort(cell_vertices.begin(), cell_vertices.begin() + csize);

        UnionFind uf;
        vmask tried = 0;
        for (int idx = 0; idx < csize; ++idx) {
            int v = cell_vertices[idx];
            if (idx > 0 && tried) {
                // orbits under the generators that fix the whole prefix
                uf.reset(n);
                for (const auto& gen : generators) {
                    bool fixes = true;
                    for (int p : prefix)
                        if (gen[p] != p) {
                            fixes = false;
                            break;
                        }
                    if (!fixes) continue;
                    for (int i = 0; i < n; ++i) uf.unite(i, gen[i]);
                }
                bool skip = false;
                int rv = uf.find(v);
                for_each_bit(tried, [&](int u) {
                    if (uf.find(u) == rv) skip = true;
                });
                if (skip) continue;
            }
            tried |= bit(v);

            auto lab2 = lab;
            auto ptn2 = ptn;
            // individualize: move v to the front of its cell
            for (int i = cell; i < end; ++i)
                if (lab2[i] == v) {
                    std::swap(lab2[i], lab2[cell]);
                    break;
                }
            ptn2[cell] = 0;
            prefix.push_back(v);
            search(lab2, ptn2, {bit(v)});
            prefix.pop_back();
        }
    }
};

CanonicalForm run_canon(const Graph& g, std::span<const int> colors) {
    if (g.n == 0) return CanonicalForm{{0}};
    Searcher s(g);
    std::array<int, kMaxVertices> lab{}, ptn{};

    // initial cells by ascending color
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = colors.empty() ? 0 : colors[a];
        int cb = colors.empty() ? 0 : colors[b];
        return ca < cb;
    });
    std::vector<vmask> initial_cells;
    vmask cur = 0;
    for (int i = 0; i < g.n; ++i) {
        lab[i] = order[i];
        cur |= bit(order[i]);
        bool last = (i + 1 == g.n) ||
                    (!colors.empty() && colors[order[i + 1]] != colors[order[i]]);
        ptn[i] = last ? 0 : 1;
        if (last) {
            initial_cells.push_back(cur);
            cur = 0;
        }
    }

    std::vector<std::uint8_t> cell_header;
    if (!colors.empty() && initial_cells.size() > 1) {
        for (vmask c : initial_cells)
            cell_header.push_back(static_cast<std::uint8_t>(popcount(c)));
    }

    s.search(lab, ptn, std::move(initial_cells));

    CanonicalForm f;
    f.bytes.reserve(cell_header.size() + s.best.len);
    f.bytes.insert(f.bytes.end(), cell_header.begin(), cell_header.end());
    f.bytes.insert(f.bytes.end(), s.best.bytes.begin(), s.best.bytes.begin() + s.best.len);
    return f;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return run_canon(g, {}); }

CanonicalForm canonical_form_colored(const Graph& g, std::span<const int> colors) {
    return run_canon(g, colors);
}

Graph decode_form(const CanonicalForm& f) {
    if (f.bytes.empty()) throw std::invalid_argument("empty canonical form");
    int n = f.bytes[0];
    Graph g(n);
    int bitpos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint8_t byte = f.bytes.at(1 + (bitpos >> 3));
            if (byte & (0x80u >> (bitpos & 7))) g.add_edge(i, j);
            ++bitpos;
        }
    return g;
}

Graph canonical_copy(const Graph& g) { return decode_form(canonical_form(g)); }

std::vector<Graph> dedup_isomorphs(const std::vector<Graph>& graphs) {
    std::vector<CanonicalForm> forms;
    forms.reserve(graphs.size());
    for (const Graph& g : graphs) forms.push_back(canonical_form(g));
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const CanonicalForm& f : forms) out.push_back(decode_form(f));
    return out;
}

std::uint64_t automorphism_count(const Graph& g) {
    if (g.n > 20)
        throw std::invalid_argument("automorphism counting is supported up to 20 vertices");
    if (g.n <= 1) return 1;

    // orbit-stabilizer chain: fix vertices one at a time; the orbit of v
    // within the current stabilizer is found by comparing colored forms in
    // which each candidate is individualized on top of the fixed prefix.
    std::vector<int> colors(g.n, 0);
    std::uint64_t order = 1;
    for (int level = 0; level < g.n; ++level) {
        int v = -1;
        for (int i = 0; i < g.n; ++i)
            if (colors[i] == 0) {
                v = i;
                break;
            }
        if (v < 0) break;
        auto distinguished = [&](int u) {
            std::vector<int> c = colors;
            c[u] = -1;  // its own cell, ahead of the unfixed ones
            return canonical_form_colored(g, c);
        };
        CanonicalForm ref = distinguished(v);
        std::uint64_t orbit = 1;
        for (int u = 0; u < g.n; ++u) {
            if (u == v || colors[u] != 0) continue;
            if (distinguished(u) == ref) ++orbit;
        }
        order *= orbit;
        colors[v] = level + 1;  // pin v in its own cell from now on
    }
    return order;
}

std::string graph6_encode(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(63 + g.n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((g.n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (g.n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(const std::string& line) {
    auto fail = [&](size_t offset, const std::string& why) {
        throw std::runtime_error("graph6 parse error at byte " +
                                 std::to_string(offset) + ": " + why);
    };
    if (line.empty()) fail(0, "empty line");
    size_t pos = 0;
    int n;
    if (line[0] == '~') {
        if (line.size() < 4) fail(line.size(), "truncated order field");
        if (line[1] == '~') fail(1, "order beyond supported range");
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            int c = static_cast<unsigned char>(line[k]) - 63;
            if (c < 0 || c > 63) fail(k, "byte out of graph6 range");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(line[0]) - 63;
        if (n < 0 || n > 62) fail(0, "byte out of graph6 range");
        pos = 1;
    }
    if (n > kMaxVertices) fail(0, "graph order " + std::to_string(n) + " exceeds 64");
    Graph g(n);
    int nbits = n * (n - 1) / 2;
    int acc = 0, have = 0, bitindex = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                if (pos >= line.size()) fail(line.size(), "truncated bit field");
                acc = static_cast<unsigned char>(line[pos]) - 63;
                if (acc < 0 || acc > 63) fail(pos, "byte out of graph6 range");
                ++pos;
                have = 6;
            }
            if ((acc >> (have - 1)) & 1) g.add_edge(i, j);
            --have;
            ++bitindex;
        }
    (void)bitindex;
    size_t expected = (line[0] == '~' ? 4 : 1) + (nbits + 5) / 6;
    if (line.size() != expected) fail(line.size(), "line length does not match order");
    return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace folkman
