#include "folkman/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace folkman {

Graph::Graph(int nv) : n(nv) {
    if (nv < 0 || nv > kMaxVertices)
        throw std::invalid_argument("graph capacity is 64 vertices, got " +
                                    std::to_string(nv));
}

void Graph::add_edge(int u, int v) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += popcount(adj[v]);
    return total / 2;
}

bool Graph::operator==(const Graph& o) const {
    if (n != o.n) return false;
    for (int v = 0; v < n; ++v)
        if (adj[v] != o.adj[v]) return false;
    return true;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.adj[v] = low_mask(n) & ~bit(v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    for (int v = 0; v < g.n; ++v) c.adj[v] = (~g.adj[v] & low_mask(g.n)) & ~bit(v);
    return c;
}

Graph join(const Graph& a, const Graph& b) {
    if (a.n + b.n > kMaxVertices)
        throw std::invalid_argument("join exceeds 64-vertex capacity");
    Graph g(a.n + b.n);
    vmask a_block = low_mask(a.n);
    vmask b_block = low_mask(g.n) & ~a_block;
    for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v] | b_block;
    for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = (b.adj[v] << a.n) | a_block;
    return g;
}

Graph extremal_graph(int m, int p) {
    if (m < p + 1) throw std::invalid_argument("extremal graph needs m >= p+1");
    return join(complete_graph(m - p - 1), complement(cycle_graph(2 * p + 1)));
}

Graph remove_vertices(const Graph& g, vmask s) {
    s &= g.vertices();
    if (s == g.vertices())
        throw std::invalid_argument("removing every vertex leaves no graph");
    vmask keep = g.vertices() & ~s;
    return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, vmask keep) {
    keep &= g.vertices();
    int map[kMaxVertices];
    int m = 0;
    for_each_bit(keep, [&](int v) { map[v] = m++; });
    Graph h(m);
    for_each_bit(keep, [&](int v) {
        vmask row = g.adj[v] & keep;
        for_each_bit(row, [&](int u) { h.adj[map[v]] |= bit(map[u]); });
    });
    return h;
}

int add_vertex(Graph& g, vmask neighborhood) {
    if (g.n >= kMaxVertices)
        throw std::invalid_argument("add_vertex exceeds 64-vertex capacity");
    int v = g.n++;
    g.adj[v] = neighborhood & low_mask(v);
    for_each_bit(g.adj[v], [&](int u) { g.adj[u] |= bit(v); });
    return v;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats st;
    st.sequence.reserve(g.n);
    for (int v = 0; v < g.n; ++v) st.sequence.push_back(g.degree(v));
    std::sort(st.sequence.rbegin(), st.sequence.rend());
    st.max_degree = g.n ? st.sequence.front() : 0;
    st.min_degree = g.n ? st.sequence.back() : 0;
    return st;
}

namespace {

struct NamedParser {
    const std::string& s;
    size_t pos = 0;

    explicit NamedParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected number in graph expression: " + s);
        return std::stoi(s.substr(start, pos - start));
    }

    // expr := term ('+' term)*           (join)
    Graph parse_expr() {
        Graph g = parse_term();
        while (eat('+')) g = join(g, parse_term());
        return g;
    }

    Graph parse_term() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("truncated graph expression: " + s);
        char c = s[pos];
        Graph g(0);
        if (c == '(') {
            ++pos;
            g = parse_expr();
            if (!eat(')')) throw std::invalid_argument("missing ')' in: " + s);
        } else if (s.compare(pos, 3, "co(") == 0) {
            pos += 3;
            g = complement(parse_expr());
            if (!eat(')')) throw std::invalid_argument("missing ')' in: " + s);
        } else if (s.compare(pos, 9, "extremal(") == 0) {
            pos += 9;
            int m = parse_int();
            if (!eat(',')) throw std::invalid_argument("extremal needs two arguments: " + s);
            int p = parse_int();
            if (!eat(')')) throw std::invalid_argument("missing ')' in: " + s);
            g = extremal_graph(m, p);
        } else if (c == 'K' || c == 'C' || c == 'E' || c == 'P') {
            ++pos;
            int n = parse_int();
            switch (c) {
                case 'K': g = complete_graph(n); break;
                case 'C': g = cycle_graph(n); break;
                case 'E': g = empty_graph(n); break;
                case 'P': g = path_graph(n); break;
            }
        } else {
            throw std::invalid_argument("cannot parse graph expression: " + s);
        }
        // optional "-e": delete one edge (the lexicographically first one)
        skip_ws();
        if (s.compare(pos, 2, "-e") == 0) {
            pos += 2;
            bool removed = false;
            for (int v = 0; v < g.n && !removed; ++v) {
                vmask row = g.adj[v] & ~low_mask(v + 1);
                if (row) {
                    g.remove_edge(v, lowest(row));
                    removed = true;
                }
            }
            if (!removed) throw std::invalid_argument("no edge to delete in: " + s);
        }
        return g;
    }
};

}  // namespace

Graph parse_named_graph(const std::string& expr) {
    NamedParser p(expr);
    Graph g = p.parse_expr();
    p.skip_ws();
    if (p.pos != expr.size())
        throw std::invalid_argument("trailing input in graph expression: " + expr);
    return g;
}

ArrowParams::ArrowParams(std::vector<int> raw_parts, int clique_bound, Flavor f)
    : q(clique_bound), flavor(f) {
    for (int a : raw_parts) {
        if (a < 1) throw std::invalid_argument("arrowing parts must be positive");
        if (a > 1) parts.push_back(a);  // entries equal to 1 are inert
    }
    std::sort(parts.begin(), parts.end());
}

int ArrowParams::m() const {
    int sum = 1;
    for (int a : parts) sum += a - 1;
    return sum;
}

int ArrowParams::p() const {
    return parts.empty() ? 1 : parts.back();
}

ArrowParams ArrowParams::decrement_first() const {
    if (parts.empty())
        throw std::invalid_argument("cannot decrement an empty parameter tuple");
    std::vector<int> next = parts;
    next.front() -= 1;
    return ArrowParams(std::move(next), q, flavor);
}

std::string ArrowParams::describe() const {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    out += ";" + std::to_string(q) + ")";
    return out;
}

std::vector<int> parse_parts(const std::string& csv) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(std::stoi(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty parts list");
    return out;
}

}  // namespace folkman
