#include "linespec/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace linespec {

namespace {

int read_class_size(std::istringstream& line, const std::string& tag, int lineno)
{
    std::string head;
    int size = 0;
    std::string trailing;
    if (!(line >> head >> size) || head != tag || (line >> trailing))
        throw ParseError("line " + std::to_string(lineno) + ": expected '" + tag + " <size>'");
    return size;
}

} // namespace

BipartiteGraph read_bipartite_text(std::istream& in)
{
    std::string raw;
    int lineno = 0;
    int stage = 0;
    int m = 0;
    int n = 0;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#')
            continue;
        std::istringstream line(raw);
        if (stage == 0) {
            m = read_class_size(line, "X", lineno);
            stage = 1;
        } else if (stage == 1) {
            n = read_class_size(line, "Y", lineno);
            stage = 2;
        } else {
            Edge e;
            std::string trailing;
            if (!(line >> e.x >> e.y) || (line >> trailing))
                throw ParseError("line " + std::to_string(lineno) + ": expected '<x> <y>'");
            edges.push_back(e);
        }
    }
    if (stage < 2)
        throw ParseError("missing 'X <m>' / 'Y <n>' header");
    try {
        return BipartiteGraph(m, n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void write_bipartite_text(std::ostream& out, const BipartiteGraph& g)
{
    out << "X " << g.x_size() << "\nY " << g.y_size() << '\n';
    for (const auto& e : g.edges())
        out << e.x << ' ' << e.y << '\n';
}

BipartiteGraph bipartite_from_json(const nlohmann::json& j)
{
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("edge entries must be [x, y] pairs");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        return BipartiteGraph(j.at("x_size").get<int>(), j.at("y_size").get<int>(), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json to_json(const BipartiteGraph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.x, e.y});
    return {{"x_size", g.x_size()}, {"y_size", g.y_size()}, {"edges", edges}};
}

nlohmann::json to_json(const LineGraph& lg)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : lg.graph.edges())
        edges.push_back({u, v});
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& e : lg.labels)
        labels.push_back({e.x, e.y});
    return {{"order", lg.graph.order()}, {"edges", edges}, {"labels", labels}};
}

BipartiteGraph load_bipartite(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    try {
        if (path.extension() == ".json") {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::parse_error& e) {
                throw ParseError(e.what());
            }
            return bipartite_from_json(j);
        }
        return read_bipartite_text(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

} // namespace linespec
