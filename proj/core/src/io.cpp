#include "acqtime/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace acqtime {

namespace {

std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        return line.substr(start);
    }
    throw std::runtime_error("unexpected end of file");
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::istringstream header(next_data_line(in));
    long long n = 0, m = 0;
    if (!(header >> n >> m)) throw std::runtime_error("graph file: bad header, expected \"n m\"");
    if (n < 0 || m < 0) throw std::runtime_error("graph file: negative counts");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::istringstream row(next_data_line(in));
        long long u = 0, v = 0;
        if (!(row >> u >> v)) throw std::runtime_error("graph file: bad edge line");
        if (u >= v) throw std::runtime_error("graph file: edges must satisfy u < v");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    auto in = open_in(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_graph(out, g);
}

StrategyFile read_strategy(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("strategy file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rounds"))
        throw std::runtime_error("strategy file: expected object with fields n and rounds");
    StrategyFile f;
    f.strategy.n = doc.at("n").get<int>();
    if (f.strategy.n < 0) throw std::runtime_error("strategy file: negative n");
    for (const auto& round : doc.at("rounds")) {
        Matching m;
        for (const auto& pair : round) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::runtime_error("strategy file: each pair must be [u, v]");
            m.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        f.strategy.rounds.push_back(normalize_matching(std::move(m)));
    }
    if (doc.contains("metadata"))
        for (const auto& [key, value] : doc.at("metadata").items())
            f.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
    return f;
}

StrategyFile read_strategy_file(const std::string& path) {
    auto in = open_in(path);
    return read_strategy(in);
}

void write_strategy(std::ostream& out, const Strategy& s,
                    const std::map<std::string, std::string>& metadata) {
    nlohmann::json doc;
    doc["format_version"] = kFormatVersion;
    doc["n"] = s.n;
    auto rounds = nlohmann::json::array();
    for (const Matching& m : s.rounds) {
        auto round = nlohmann::json::array();
        for (auto [u, v] : m) round.push_back({u, v});
        rounds.push_back(std::move(round));
    }
    doc["rounds"] = std::move(rounds);
    if (!metadata.empty()) doc["metadata"] = metadata;
    out << doc.dump(2) << '\n';
}

void write_strategy_file(const std::string& path, const Strategy& s,
                         const std::map<std::string, std::string>& metadata) {
    auto out = open_out(path);
    write_strategy(out, s, metadata);
}

Coloring read_coloring(std::istream& in) {
    std::istringstream header(next_data_line(in));
    int n = 0, k = 0;
    if (!(header >> n >> k)) throw std::runtime_error("coloring file: bad header, expected \"n K\"");
    if (n < 0 || k < 0) throw std::runtime_error("coloring file: negative counts");
    Coloring c;
    c.k = k;
    c.color.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::istringstream row(next_data_line(in));
        int col = 0;
        if (!(row >> col)) throw std::runtime_error("coloring file: bad color line");
        if (col < 0 || col >= k) throw std::runtime_error("coloring file: color id out of range");
        c.color.push_back(col);
    }
    return c;
}

Coloring read_coloring_file(const std::string& path) {
    auto in = open_in(path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& c) {
    out << c.color.size() << ' ' << c.k << '\n';
    for (int col : c.color) out << col << '\n';
}

void write_coloring_file(const std::string& path, const Coloring& c) {
    auto out = open_out(path);
    write_coloring(out, c);
}

}  // namespace acqtime
