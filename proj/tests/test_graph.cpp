#include <doctest.h>

#include <random>

#include "folkman/canon.hpp"
#include "folkman/graph.hpp"

using namespace folkman;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
    return canonical_form(a) == canonical_form(b);
}

}  // namespace

TEST_CASE("join of K3 and C5") {
    Graph g = join(complete_graph(3), cycle_graph(5));
    CHECK(g.n == 8);
    CHECK(g.edge_count() == 3 + 5 + 3 * 5);
}

TEST_CASE("complement is an involution") {
    Graph c7 = cycle_graph(7);
    CHECK(complement(complement(c7)) == c7);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(9, 0.4, rng);
        CHECK(complement(complement(g)) == g);
        for (int v = 0; v < g.n; ++v)
            CHECK(complement(g).degree(v) == g.n - 1 - g.degree(v));
    }
}

TEST_CASE("extremal graph for m=5, p=3") {
    Graph g = extremal_graph(5, 3);
    CHECK(g.n == 8);
    CHECK(isomorphic(g, join(complete_graph(1), complement(cycle_graph(7)))));
    CHECK_THROWS(extremal_graph(3, 3));
}

TEST_CASE("remove_vertices") {
    CHECK(isomorphic(remove_vertices(cycle_graph(5), bit(2)), path_graph(4)));
    CHECK(isomorphic(remove_vertices(complete_graph(6), bit(0)), complete_graph(5)));
    // dropping the cycle block of K3 + C5 leaves K3
    Graph j = join(complete_graph(3), cycle_graph(5));
    vmask cycle_block = low_mask(8) & ~low_mask(3);
    CHECK(isomorphic(remove_vertices(j, cycle_block), complete_graph(3)));
    CHECK_THROWS(remove_vertices(complete_graph(3), low_mask(3)));
}

TEST_CASE("degree stats") {
    DegreeStats k6 = degree_stats(complete_graph(6));
    CHECK(k6.min_degree == 5);
    CHECK(k6.max_degree == 5);
    CHECK(k6.sequence == std::vector<int>(6, 5));

    // cycle-block vertices get 2+3, clique-block vertices 2+5
    DegreeStats j = degree_stats(join(complete_graph(3), cycle_graph(5)));
    CHECK(j.min_degree == 5);
    CHECK(j.max_degree == 7);
    CHECK(j.sequence == std::vector<int>{7, 7, 7, 5, 5, 5, 5, 5});

    DegreeStats e4 = degree_stats(empty_graph(4));
    CHECK(e4.min_degree == 0);
    CHECK(e4.max_degree == 0);
}

TEST_CASE("add then remove an edge is the identity") {
    std::mt19937 rng(11);
    Graph g = random_graph(10, 0.3, rng);
    Graph before = g;
    int u = 0, v = 0;
    for (int a = 0; a < g.n && !v; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (!g.has_edge(a, b)) {
                u = a;
                v = b;
                break;
            }
    g.add_edge(u, v);
    g.remove_edge(u, v);
    CHECK(g == before);
}

TEST_CASE("join edge count on random graphs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph a = random_graph(5, 0.5, rng);
        Graph b = random_graph(6, 0.5, rng);
        CHECK(join(a, b).edge_count() == a.edge_count() + b.edge_count() + a.n * b.n);
    }
}

TEST_CASE("capacity guard") {
    CHECK_THROWS(join(complete_graph(40), complete_graph(30)));
    CHECK_THROWS(Graph(65));
}

TEST_CASE("named graph expressions") {
    CHECK(parse_named_graph("K6") == complete_graph(6));
    CHECK(isomorphic(parse_named_graph("K3+C5"), join(complete_graph(3), cycle_graph(5))));
    CHECK(isomorphic(parse_named_graph("co(C7)"), complement(cycle_graph(7))));
    CHECK(isomorphic(parse_named_graph("extremal(5,3)"), extremal_graph(5, 3)));
    CHECK(parse_named_graph("K7-e").edge_count() == 20);
    CHECK_THROWS(parse_named_graph("Q5"));
}

TEST_CASE("arrow params canonicalization") {
    ArrowParams p({5, 2, 1, 2}, 6);
    CHECK(p.parts == std::vector<int>{2, 2, 5});
    CHECK(p.m() == 7);
    CHECK(p.p() == 5);
    CHECK(p.describe() == "(2,2,5;6)");

    ArrowParams seed = p.decrement_first();
    CHECK(seed.parts == std::vector<int>{2, 5});  // the decremented 2 became inert
    CHECK(ArrowParams({3, 5}, 6).decrement_first().parts == std::vector<int>{2, 5});
}
