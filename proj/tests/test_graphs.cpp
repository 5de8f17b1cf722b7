#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "linespec/graph.hpp"
#include "linespec/graph_io.hpp"

using namespace linespec;

namespace {

Graph plain(int order, std::vector<std::pair<int, int>> edges) { return Graph(order, edges); }

Polynomial poly(std::vector<long long> coeffs) { return Polynomial(coeffs.begin(), coeffs.end()); }

BipartiteGraph random_bipartite(std::mt19937& rng, int m, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y)
            if (coin(rng))
                edges.push_back({x, y});
    return BipartiteGraph(m, n, edges);
}

} // namespace

TEST_CASE("graph construction rejects bad input")
{
    CHECK_THROWS_AS(plain(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(plain(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(plain(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(0, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(1, 1, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(1, 1, {{0, 0}, {0, 0}}), std::invalid_argument);
    BipartiteGraph g(2, 2, {{1, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 0}});
}

TEST_CASE("line_graph examples")
{
    auto k13 = line_graph(complete_bipartite(1, 3));
    CHECK(k13.graph == plain(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(k13.labels == std::vector<Edge>{{0, 0}, {0, 1}, {0, 2}});

    auto c4 = line_graph(complete_bipartite(2, 2));
    CHECK(c4.graph.regular_degree() == 2);
    CHECK(c4.graph.edge_count() == 4);
    CHECK(is_connected(c4.graph));

    auto single = line_graph(complete_bipartite(1, 1));
    CHECK(single.graph.order() == 1);
    CHECK(single.graph.edge_count() == 0);

    CHECK_THROWS_AS(line_graph(BipartiteGraph(2, 2, {})), std::invalid_argument);
}

TEST_CASE("star decomposition splits L(g) by shared endpoint")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_bipartite(rng, 2 + trial % 4, 2 + trial % 5, 0.5);
        if (g.edge_count() == 0)
            continue;
        auto lg = line_graph(g);
        auto stars = star_decomposition(g);
        const int e = g.edge_count();
        for (int u = 0; u < e; ++u)
            for (int v = 0; v < e; ++v) {
                if (u == v)
                    continue;
                CHECK_FALSE((stars.by_x.adjacent(u, v) && stars.by_y.adjacent(u, v)));
                CHECK(lg.graph.adjacent(u, v) == (stars.by_x.adjacent(u, v) || stars.by_y.adjacent(u, v)));
            }
    }
}

TEST_CASE("degree_partitions")
{
    auto dp = degree_partitions(complete_bipartite(1, 3));
    CHECK(dp.alpha == Partition{3});
    CHECK(dp.beta == Partition{1, 1, 1});
    auto c6 = degree_partitions(cycle(6));
    CHECK(c6.alpha == Partition{2, 2, 2});
    CHECK(c6.beta == Partition{2, 2, 2});
    CHECK_THROWS_WITH_AS(degree_partitions(BipartiteGraph(2, 1, {{0, 0}})), doctest::Contains("x1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(degree_partitions(BipartiteGraph(1, 2, {{0, 1}})), doctest::Contains("y0"),
                         std::invalid_argument);
}

TEST_CASE("characteristic polynomial examples")
{
    CHECK(char_poly_exact(Graph(1)) == poly({0, 1}));
    CHECK(char_poly_exact(plain(2, {{0, 1}})) == poly({-1, 0, 1}));
    auto c4 = line_graph(complete_bipartite(2, 2)).graph;
    CHECK(char_poly_exact(c4) == poly({0, 0, -4, 0, 1}));
    CHECK(to_string(char_poly_exact(c4)) == "x^4 - 4x^2");
    CHECK(to_string(poly({-1, 0, 1})) == "x^2 - 1");
    CHECK(multiply(poly({-1, 1}), poly({1, 1})) == poly({-1, 0, 1}));
}

TEST_CASE("characteristic polynomial matches an exact determinant")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 9;
        std::bernoulli_distribution coin(0.4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.push_back({u, v});
        Graph g(n, edges);
        auto p = char_poly_exact(g);
        REQUIRE(p.size() == static_cast<std::size_t>(n + 1));
        CHECK(p.back() == 1);
        for (int x = -3; x <= 3; ++x)
            CHECK(testing::evaluate(p, x) == testing::char_poly_at(g, x));
    }
}

TEST_CASE("integer spectra")
{
    auto c4 = integer_spectrum(line_graph(complete_bipartite(2, 2)).graph);
    REQUIRE(c4);
    CHECK(*c4 == IntegerSpectrum{{2, 1}, {0, 2}, {-2, 1}});

    auto k3 = integer_spectrum(line_graph(complete_bipartite(1, 3)).graph);
    REQUIRE(k3);
    CHECK(*k3 == IntegerSpectrum{{2, 1}, {-1, 2}});

    auto c5 = plain(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK_FALSE(integer_spectrum(c5));
    CHECK_THROWS_AS(cycle(5), std::invalid_argument);

    // x^2 (x - 2)(x + 3)
    auto p = multiply(multiply(poly({0, 0, 1}), poly({-2, 1})), poly({3, 1}));
    auto roots = integer_roots(p, 5);
    REQUIRE(roots);
    CHECK(*roots == IntegerSpectrum{{2, 1}, {0, 2}, {-3, 1}});
    CHECK_FALSE(integer_roots(p, 2));
    CHECK(root_multiplicity(p, 0) == 2);
    CHECK(root_multiplicity(p, 1) == 0);
    CHECK(expand(*roots) == std::vector<std::int64_t>{2, 0, 0, -3});
}

TEST_CASE("numeric spectrum agrees with the exact one")
{
    for (const auto& g : testing::connected_bipartite_graphs(6)) {
        auto lg = line_graph(g).graph;
        auto ex = integer_spectrum(lg);
        auto num = numeric_spectrum(lg);
        REQUIRE(num.size() == static_cast<std::size_t>(lg.order()));
        CHECK(std::is_sorted(num.begin(), num.end(), std::greater<>()));
        if (!ex)
            continue;
        auto values = expand(*ex);
        for (std::size_t i = 0; i < values.size(); ++i)
            CHECK(std::abs(num[i] - values[i]) <= 1e-9 * std::max(1.0, std::abs(num[0])));
    }
}

TEST_CASE("diameter and clique number")
{
    CHECK(diameter(line_graph(complete_bipartite(1, 3)).graph) == 1);
    CHECK(diameter(line_graph(complete_bipartite(2, 2)).graph) == 2);
    CHECK(diameter(line_graph(complete_bipartite(2, 3)).graph) == 2);
    CHECK(diameter(line_graph(cycle(8)).graph) == 4);
    CHECK(diameter(Graph(1)) == 0);
    CHECK_FALSE(diameter(Graph(2)));

    CHECK(clique_number(line_graph(complete_bipartite(2, 3)).graph) == 3);
    CHECK(clique_number(line_graph(complete_bipartite(1, 4)).graph) == 4);
    CHECK(clique_number(line_graph(cycle(6)).graph) == 2);
    CHECK(clique_number(Graph(3)) == 1);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + trial % 12;
        std::bernoulli_distribution coin(0.5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.push_back({u, v});
        Graph g(n, edges);
        CHECK(clique_number(g) == testing::brute_force_clique(g));
    }
}

TEST_CASE("generators and complement")
{
    auto k = complete_bipartite(2, 3);
    CHECK(k.edge_count() == 6);
    CHECK(bipartite_complement(k).edge_count() == 0);
    CHECK(bipartite_complement(bipartite_complement(cycle(6))) == cycle(6));

    auto m = matching(3);
    CHECK(m.edge_count() == 3);
    CHECK_FALSE(is_connected(m));
    auto comp = bipartite_complement(m);
    CHECK(comp.edge_count() == 6);
    CHECK(is_connected(comp));
    CHECK(comp.as_graph().regular_degree() == 2);

    auto c8 = cycle(8);
    CHECK(c8.x_size() == 4);
    CHECK(c8.as_graph().regular_degree() == 2);
    CHECK(is_connected(c8));

    std::vector<BipartiteGraph> parts{cycle(4), cycle(6)};
    auto u = disjoint_union(parts);
    CHECK(u.x_size() == 5);
    CHECK(u.y_size() == 5);
    CHECK(u.edge_count() == 10);
    CHECK_FALSE(is_connected(u));
    CHECK(u.has_edge(2, 2));
    CHECK_FALSE(u.has_edge(0, 2));
}

TEST_CASE("complement of a regular bipartite graph")
{
    // p_G(x) (x^2 - (n-s)^2) == p_comp(x) (x^2 - s^2)
    std::vector<BipartiteGraph> regular{cycle(6), cycle(8), matching(4), complete_bipartite(3, 3)};
    std::vector<BipartiteGraph> two_cycles{cycle(4), cycle(6)};
    regular.push_back(disjoint_union(two_cycles));
    for (const auto& g : regular) {
        const long long n = g.x_size();
        const long long s = *g.as_graph().regular_degree();
        auto pg = char_poly_exact(g.as_graph());
        auto pc = char_poly_exact(bipartite_complement(g).as_graph());
        CHECK(multiply(pg, poly({-(n - s) * (n - s), 0, 1})) == multiply(pc, poly({-s * s, 0, 1})));
    }
}

TEST_CASE("line graph spectral invariants on every small graph")
{
    auto corpus = testing::connected_bipartite_graphs(7);
    CHECK(corpus.size() > 50);
    for (const auto& g : corpus) {
        auto lg = line_graph(g);
        auto ex = exact_spectrum(lg.graph);
        const std::int64_t e = g.edge_count(), nu = g.order();
        CAPTURE(e);
        CAPTURE(nu);
        // -2 appears exactly e - nu + 1 times
        CHECK(static_cast<std::int64_t>(root_multiplicity(ex.char_poly, -2)) == e - nu + 1);
        auto num = numeric_spectrum(lg.graph);
        CHECK(num.back() >= -2 - 1e-9);

        // the X-star part has spectrum alpha - 1 padded with -1
        auto stars = star_decomposition(g);
        auto dp = degree_partitions(g);
        auto sx = numeric_spectrum(stars.by_x);
        for (std::size_t i = 0; i < sx.size(); ++i)
            CHECK(std::abs(sx[i] + 1 - static_cast<double>(dp.alpha[i])) <= 1e-9 * std::max<double>(1, dp.alpha[0]));
    }
}

TEST_CASE("text and JSON graph formats")
{
    std::istringstream text("# K_{1,2}\nX 1\nY 2\n\n0 0\n0 1\n");
    auto g = read_bipartite_text(text);
    CHECK(g == complete_bipartite(1, 2));

    std::ostringstream out;
    write_bipartite_text(out, g);
    std::istringstream back(out.str());
    CHECK(read_bipartite_text(back) == g);

    auto j = to_json(g);
    CHECK(j["x_size"] == 1);
    CHECK(j["edges"].size() == 2);
    CHECK(bipartite_from_json(j) == g);

    auto lj = to_json(line_graph(g));
    CHECK(lj["order"] == 2);
    CHECK(lj["labels"][1] == nlohmann::json::array({0, 1}));

    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_bipartite_text(in);
    };
    CHECK_THROWS_AS(parse("Y 2\nX 1\n"), ParseError);
    CHECK_THROWS_AS(parse("X 1\nY 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse("X 1\nY 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("X 1\nY 1\n0 0\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse("X a\nY 1\n"), ParseError);
    CHECK_THROWS_AS(bipartite_from_json(nlohmann::json{{"x_size", 1}}), ParseError);
    CHECK_THROWS_AS(load_bipartite("/nonexistent/graph.txt"), std::runtime_error);
}

TEST_CASE("corpus generator covers every connected bipartite graph")
{
    // connected bipartite graphs by order, uncoloured: 1, 1, 3, 5, 17, 44 for orders 2..7
    const std::map<int, std::size_t> known{{2, 1}, {3, 1}, {4, 3}, {5, 5}, {6, 17}, {7, 44}};
    std::map<int, std::set<std::vector<char>>> classes;
    for (const auto& bg : testing::connected_bipartite_graphs(7)) {
        auto g = bg.as_graph();
        const int n = g.order();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<char> best;
        do {
            std::vector<char> adj(n * n);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    adj[perm[u] * n + perm[v]] = g.adjacent(u, v);
            if (best.empty() || adj < best)
                best = adj;
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes[n].insert(best);
    }
    for (auto [order, count] : known) {
        CAPTURE(order);
        CHECK(classes[order].size() == count);
    }
}
