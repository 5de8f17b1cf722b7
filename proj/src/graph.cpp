#include "linespec/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace linespec {

Graph::Graph(int order)
    : order_(order)
{
    if (order < 0)
        throw std::invalid_argument("graph order must be non-negative");
    adj_.assign(static_cast<std::size_t>(order) * order, 0);
    neighbors_.resize(order);
}

Graph::Graph(int order, std::span<const std::pair<int, int>> edges)
    : Graph(order)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
    for (auto& nb : neighbors_)
        std::ranges::sort(nb);
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (adj_[index(u, v)])
        throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
}

int Graph::max_degree() const
{
    int d = 0;
    for (int u = 0; u < order_; ++u)
        d = std::max(d, degree(u));
    return d;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& nb : neighbors_)
        twice += nb.size();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u)
        for (int v : neighbors_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::optional<int> Graph::regular_degree() const
{
    if (order_ == 0)
        return std::nullopt;
    int d = degree(0);
    for (int u = 1; u < order_; ++u)
        if (degree(u) != d)
            return std::nullopt;
    return d;
}

BipartiteGraph::BipartiteGraph(int x_size, int y_size, std::vector<Edge> edges)
    : x_size_(x_size)
    , y_size_(y_size)
    , edges_(std::move(edges))
{
    if (x_size < 1 || y_size < 1)
        throw std::invalid_argument("colour classes must be non-empty");
    for (const auto& e : edges_)
        if (e.x < 0 || e.x >= x_size || e.y < 0 || e.y >= y_size)
            throw std::invalid_argument("edge (" + std::to_string(e.x) + "," + std::to_string(e.y)
                                        + ") out of range");
    std::ranges::sort(edges_);
    if (auto dup = std::ranges::adjacent_find(edges_); dup != edges_.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->x) + "," + std::to_string(dup->y) + ")");
}

bool BipartiteGraph::has_edge(int x, int y) const { return std::ranges::binary_search(edges_, Edge{x, y}); }

std::vector<int> BipartiteGraph::x_degrees() const
{
    std::vector<int> d(x_size_, 0);
    for (const auto& e : edges_)
        ++d[e.x];
    return d;
}

std::vector<int> BipartiteGraph::y_degrees() const
{
    std::vector<int> d(y_size_, 0);
    for (const auto& e : edges_)
        ++d[e.y];
    return d;
}

Graph BipartiteGraph::as_graph() const
{
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_)
        pairs.emplace_back(e.x, x_size_ + e.y);
    return Graph(order(), pairs);
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int source)
{
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

void require_edges(const BipartiteGraph& g, const char* what)
{
    if (g.edge_count() == 0)
        throw std::invalid_argument(std::string(what) + " needs at least one edge");
}

// Vertices of L(g) sharing an endpoint in X (or Y) form a clique.
Graph shared_endpoint_graph(const BipartiteGraph& g, bool by_x, bool by_y)
{
    const auto& edges = g.edges();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if ((by_x && edges[a].x == edges[b].x) || (by_y && edges[a].y == edges[b].y))
                pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Graph(g.edge_count(), pairs);
}

// Horner evaluation and quotient for division by (x - root).
std::pair<Polynomial, BigInt> divide_linear(const Polynomial& p, const BigInt& root)
{
    if (p.empty())
        return {{}, 0};
    Polynomial q(p.size() - 1);
    BigInt acc = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = acc;
        acc = acc * root + p[i];
    }
    return {q, acc};
}

} // namespace

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    auto dist = bfs_distances(g, 0);
    return std::ranges::none_of(dist, [](int d) { return d < 0; });
}

bool is_connected(const BipartiteGraph& g) { return is_connected(g.as_graph()); }

LineGraph line_graph(const BipartiteGraph& g)
{
    require_edges(g, "line graph");
    return {shared_endpoint_graph(g, true, true), g.edges()};
}

StarDecomposition star_decomposition(const BipartiteGraph& g)
{
    require_edges(g, "star decomposition");
    return {shared_endpoint_graph(g, true, false), shared_endpoint_graph(g, false, true)};
}

DegreePartitions degree_partitions(const BipartiteGraph& g)
{
    auto dx = g.x_degrees();
    auto dy = g.y_degrees();
    for (int i = 0; i < g.x_size(); ++i)
        if (dx[i] == 0)
            throw std::invalid_argument("isolated vertex x" + std::to_string(i));
    for (int i = 0; i < g.y_size(); ++i)
        if (dy[i] == 0)
            throw std::invalid_argument("isolated vertex y" + std::to_string(i));
    return {Partition(std::vector<Partition::part_type>(dx.begin(), dx.end())),
            Partition(std::vector<Partition::part_type>(dy.begin(), dy.end()))};
}

std::string to_string(const Polynomial& p)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const BigInt& c = p[i];
        if (c == 0)
            continue;
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1 || i == 0)
            os << mag;
        if (i >= 1)
            os << 'x';
        if (i >= 2)
            os << '^' << i;
        first = false;
    }
    if (first)
        os << '0';
    return os.str();
}

Polynomial multiply(const Polynomial& a, const Polynomial& b)
{
    if (a.empty() || b.empty())
        return {};
    Polynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

Polynomial char_poly_exact(const Graph& g)
{
    const int n = g.order();
    const auto un = static_cast<std::size_t>(n);
    Polynomial coeff(un + 1, 0);
    coeff[un] = 1;
    if (n == 0)
        return coeff;

    // M_1 = I; A M_k is a row-sum over neighbours since A is 0/1.
    std::vector<BigInt> m(un * un, 0);
    std::vector<BigInt> am(un * un, 0);
    for (std::size_t i = 0; i < un; ++i)
        m[i * un + i] = 1;

    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            BigInt* row = &am[static_cast<std::size_t>(i) * un];
            for (std::size_t j = 0; j < un; ++j)
                row[j] = 0;
            for (int nb : g.neighbors(i)) {
                const BigInt* src = &m[static_cast<std::size_t>(nb) * un];
                for (std::size_t j = 0; j < un; ++j)
                    row[j] += src[j];
            }
        }
        BigInt trace = 0;
        for (std::size_t i = 0; i < un; ++i)
            trace += am[i * un + i];
        BigInt c = -trace / k;
        coeff[un - k] = c;
        if (k == n)
            break;
        std::swap(m, am);
        for (std::size_t i = 0; i < un; ++i)
            m[i * un + i] += c;
    }
    return coeff;
}

std::size_t root_multiplicity(const Polynomial& p, std::int64_t root)
{
    std::size_t mult = 0;
    Polynomial cur = p;
    while (cur.size() > 1) {
        auto [q, rem] = divide_linear(cur, root);
        if (rem != 0)
            break;
        cur = std::move(q);
        ++mult;
    }
    return mult;
}

std::optional<IntegerSpectrum> integer_roots(const Polynomial& p, std::int64_t bound)
{
    if (p.empty() || p.back() != 1)
        throw std::invalid_argument("integer_roots expects a monic polynomial");
    IntegerSpectrum roots;
    Polynomial cur = p;
    std::size_t zeros = 0;
    while (cur.size() > 1 && cur.front() == 0) {
        cur.erase(cur.begin());
        ++zeros;
    }
    if (zeros)
        roots[0] = zeros;
    for (std::int64_t d = 1; d <= bound && cur.size() > 1; ++d) {
        for (std::int64_t cand : {d, -d}) {
            while (cur.size() > 1 && cur.front() % cand == 0) {
                auto [q, rem] = divide_linear(cur, cand);
                if (rem != 0)
                    break;
                cur = std::move(q);
                ++roots[cand];
            }
        }
    }
    if (cur.size() > 1)
        return std::nullopt;
    return roots;
}

ExactSpectrum exact_spectrum(const Graph& g)
{
    ExactSpectrum s;
    s.char_poly = char_poly_exact(g);
    // every adjacency eigenvalue lies in [-maxdeg, maxdeg]
    s.integer_roots = integer_roots(s.char_poly, g.max_degree());
    return s;
}

std::optional<IntegerSpectrum> integer_spectrum(const Graph& g) { return exact_spectrum(g).integer_roots; }

std::vector<double> numeric_spectrum(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        return {};
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            a(u, v) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + n);
    std::ranges::sort(out, std::greater<>());
    return out;
}

std::vector<std::int64_t> expand(const IntegerSpectrum& s)
{
    std::vector<std::int64_t> out;
    for (auto [value, mult] : s)
        out.insert(out.end(), mult, value);
    return out;
}

std::optional<int> diameter(const Graph& g)
{
    int best = 0;
    for (int u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int d : dist) {
            if (d < 0)
                return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

namespace {

// Bron-Kerbosch with Tomita pivoting, tracking only the best size.
void max_clique(const Graph& g, int depth, std::vector<int> candidates, std::vector<int> excluded, int& best)
{
    if (candidates.empty()) {
        best = std::max(best, depth);
        return;
    }
    if (depth + static_cast<int>(candidates.size()) <= best)
        return;
    int pivot = candidates.front();
    std::size_t pivot_hits = 0;
    for (const auto* pool : {&candidates, &excluded})
        for (int u : *pool) {
            std::size_t hits = 0;
            for (int v : candidates)
                hits += g.adjacent(u, v);
            if (hits > pivot_hits) {
                pivot_hits = hits;
                pivot = u;
            }
        }
    std::vector<int> branch;
    for (int v : candidates)
        if (!g.adjacent(pivot, v))
            branch.push_back(v);
    for (int v : branch) {
        std::vector<int> next_c, next_x;
        for (int u : candidates)
            if (g.adjacent(v, u))
                next_c.push_back(u);
        for (int u : excluded)
            if (g.adjacent(v, u))
                next_x.push_back(u);
        max_clique(g, depth + 1, std::move(next_c), std::move(next_x), best);
        std::erase(candidates, v);
        excluded.push_back(v);
    }
}

} // namespace

int clique_number(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i)
        all[i] = i;
    int best = 1;
    max_clique(g, 0, std::move(all), {}, best);
    return best;
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g)
{
    std::vector<Edge> edges;
    for (int x = 0; x < g.x_size(); ++x)
        for (int y = 0; y < g.y_size(); ++y)
            if (!g.has_edge(x, y))
                edges.push_back({x, y});
    return BipartiteGraph(g.x_size(), g.y_size(), std::move(edges));
}

BipartiteGraph complete_bipartite(int s, int t)
{
    std::vector<Edge> edges;
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < t; ++y)
            edges.push_back({x, y});
    return BipartiteGraph(s, t, std::move(edges));
}

BipartiteGraph cycle(int length)
{
    if (length < 4 || length % 2 != 0)
        throw std::invalid_argument("bipartite cycle length must be even and at least 4, got "
                                    + std::to_string(length));
    int k = length / 2;
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.push_back({i, i});
        edges.push_back({i, (i + 1) % k});
    }
    return BipartiteGraph(k, k, std::move(edges));
}

BipartiteGraph matching(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, i});
    return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph disjoint_union(std::span<const BipartiteGraph> parts)
{
    if (parts.empty())
        throw std::invalid_argument("disjoint union of no graphs");
    int mx = 0;
    int my = 0;
    std::vector<Edge> edges;
    for (const auto& g : parts) {
        for (const auto& e : g.edges())
            edges.push_back({e.x + mx, e.y + my});
        mx += g.x_size();
        my += g.y_size();
    }
    return BipartiteGraph(mx, my, std::move(edges));
}

} // namespace linespec
