#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linespec/partition.hpp"

namespace linespec {

/// Edge of a bipartite graph: x indexes colour class X, y indexes Y (both 0-based).
struct Edge {
    int x = 0;
    int y = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    /// Throws std::invalid_argument on loops, duplicate edges or out-of-range endpoints.
    Graph(int order, std::span<const std::pair<int, int>> edges);

    int order() const { return order_; }
    bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
    const std::vector<int>& neighbors(int u) const { return neighbors_[u]; }
    int degree(int u) const { return static_cast<int>(neighbors_[u].size()); }
    int max_degree() const;
    std::size_t edge_count() const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// The common degree when every vertex has the same degree.
    std::optional<int> regular_degree() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.order_ == b.order_ && a.adj_ == b.adj_; }

private:
    std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * order_ + v; }
    void add_edge(int u, int v);

    int order_ = 0;
    std::vector<char> adj_;
    std::vector<std::vector<int>> neighbors_;
};

/// Bipartite graph with explicit colour classes X (size m) and Y (size n).
/// Edges are kept sorted by (x, y); that order is the vertex order of the
/// line graph.
class BipartiteGraph {
public:
    /// Throws std::invalid_argument on empty classes, out-of-range indices or duplicate edges.
    BipartiteGraph(int x_size, int y_size, std::vector<Edge> edges);

    int x_size() const { return x_size_; }
    int y_size() const { return y_size_; }
    int order() const { return x_size_ + y_size_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int x, int y) const;

    std::vector<int> x_degrees() const;
    std::vector<int> y_degrees() const;

    /// The same graph without colour information: X is 0..m-1, Y is m..m+n-1.
    Graph as_graph() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    int x_size_;
    int y_size_;
    std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);
bool is_connected(const BipartiteGraph& g);

/// Line graph together with the base edge behind each vertex.
struct LineGraph {
    Graph graph;
    std::vector<Edge> labels;
};

LineGraph line_graph(const BipartiteGraph& g);

/// Split of L(g) by the colour class of the shared endpoint; by_x + by_y = L(g).
struct StarDecomposition {
    Graph by_x;
    Graph by_y;
};

StarDecomposition star_decomposition(const BipartiteGraph& g);

struct DegreePartitions {
    Partition alpha;
    Partition beta;
};

/// Degree sequences of X and Y as partitions. Throws std::invalid_argument
/// naming the first isolated vertex.
DegreePartitions degree_partitions(const BipartiteGraph& g);

/// Integer polynomial, coefficient of x^i at index i.
using Polynomial = std::vector<BigInt>;

std::string to_string(const Polynomial& p);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// det(xI - A) over the integers (Faddeev-LeVerrier; every division is exact).
Polynomial char_poly_exact(const Graph& g);

/// Eigenvalue -> multiplicity, largest eigenvalue first.
using IntegerSpectrum = std::map<std::int64_t, std::size_t, std::greater<>>;

/// Full integer root multiset of a monic polynomial when it splits over the
/// integers, otherwise nullopt. Only roots with |root| <= bound are tried.
std::optional<IntegerSpectrum> integer_roots(const Polynomial& p, std::int64_t bound);

/// Multiplicity of `root` as a root of p.
std::size_t root_multiplicity(const Polynomial& p, std::int64_t root);

struct ExactSpectrum {
    Polynomial char_poly;
    std::optional<IntegerSpectrum> integer_roots;
};

ExactSpectrum exact_spectrum(const Graph& g);
std::optional<IntegerSpectrum> integer_spectrum(const Graph& g);

/// Adjacency eigenvalues, sorted descending.
std::vector<double> numeric_spectrum(const Graph& g);

/// Eigenvalues of an integer spectrum listed with multiplicity, descending.
std::vector<std::int64_t> expand(const IntegerSpectrum& s);

/// Largest BFS distance; nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);

int clique_number(const Graph& g);

BipartiteGraph bipartite_complement(const BipartiteGraph& g);

BipartiteGraph complete_bipartite(int s, int t);
/// Even cycle C_length with x_i ~ y_i and x_i ~ y_{i+1 mod length/2}.
BipartiteGraph cycle(int length);
/// n disjoint edges x_i ~ y_i.
BipartiteGraph matching(int n);
/// Classes are concatenated in the order given.
BipartiteGraph disjoint_union(std::span<const BipartiteGraph> parts);

} // namespace linespec
