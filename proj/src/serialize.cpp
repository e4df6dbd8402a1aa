#include "park/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "park/errors.hpp"

namespace park {

Prefs parse_prefs_csv(const std::string& text) {
    Prefs prefs;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view field(text.data() + pos,
                               (comma == std::string::npos ? text.size() : comma) - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.begin(), field.end(), value);
        if (ec != std::errc{} || ptr != field.end())
            throw std::invalid_argument("expected comma-separated integers, got '" +
                                        text + "'");
        prefs.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return prefs;
}

json partition_to_json(const SetPartition& p) {
    return json{{"n", p.ground()}, {"blocks", p.blocks()}};
}

SetPartition partition_from_json(const json& j) {
    try {
        auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        return SetPartition(j.at("n").get<int>(), std::move(blocks));
    } catch (const json::exception& e) {
        throw domain_error("bad_partition_json", e.what());
    }
}

json chain_to_json(const MaximalChain& chain) {
    json partitions = json::array();
    for (const auto& p : chain.partitions) partitions.push_back(p.blocks());
    int ground = chain.partitions.empty() ? 0 : chain.partitions.front().ground();
    return json{{"ground", ground}, {"labels", chain.labels()}, {"partitions", partitions}};
}

MaximalChain chain_from_json(const json& j) {
    try {
        const json& parts = j.is_array() ? j : j.at("partitions");
        int ground = 0;
        if (j.is_object() && j.contains("ground"))
            ground = j.at("ground").get<int>();
        else if (!parts.empty())
            for (const auto& block : parts.front()) ground += static_cast<int>(block.size());
        MaximalChain chain;
        for (const auto& blocks_json : parts) {
            auto blocks = blocks_json.get<std::vector<std::vector<int>>>();
            chain.partitions.emplace_back(ground, std::move(blocks));
        }
        return chain;
    } catch (const json::exception& e) {
        throw domain_error("bad_chain_json", e.what());
    }
}

json labeled_path_to_json(const LabeledDyckPath& lp) {
    return json{{"labels", lp.labels}, {"word", to_word(lp.path)}};
}

LabeledDyckPath labeled_path_from_json(const json& j) {
    try {
        return LabeledDyckPath{path_from_word(j.at("word").get<std::string>()),
                               j.at("labels").get<std::vector<int>>()};
    } catch (const json::exception& e) {
        throw domain_error("bad_path_json", e.what());
    }
}

std::string block_notation(const SetPartition& p) {
    std::ostringstream out;
    for (const auto& block : p.blocks()) {
        out << '{';
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) out << ',';
            out << block[i];
        }
        out << '}';
    }
    return out.str();
}

std::string hasse_to_dot(const HasseDiagram& h) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    int max_rank = h.ranks.empty() ? -1 : *std::max_element(h.ranks.begin(), h.ranks.end());
    for (int rank = 0; rank <= max_rank; ++rank) {
        out << "  { rank=same;";
        for (size_t i = 0; i < h.nodes.size(); ++i)
            if (h.ranks[i] == rank)
                out << " n" << i << " [label=\"" << block_notation(h.nodes[i]) << "\"];";
        out << " }\n";
    }
    for (auto [lo, hi] : h.edges) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

json hasse_to_json(const HasseDiagram& h) {
    json nodes = json::array();
    for (const auto& node : h.nodes) nodes.push_back(partition_to_json(node));
    json edges = json::array();
    for (auto [lo, hi] : h.edges) edges.push_back(json::array({lo, hi}));
    return json{{"edges", edges}, {"n", h.ground}, {"nodes", nodes}, {"ranks", h.ranks}};
}

namespace {

std::string point_label(const LatticePoint& v, int n) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i && n > 9) out << ',';
        out << v[i];
    }
    return out.str();
}

} // namespace

std::string permutahedron_to_dot(const PermutahedronGraph& g) {
    std::ostringstream out;
    out << "graph permutahedron {\n  node [shape=circle];\n";
    for (size_t i = 0; i < g.vertices.size(); ++i)
        out << "  v" << i << " [label=\"" << point_label(g.vertices[i], g.n) << "\"];\n";
    for (auto [a, b] : g.edges) out << "  v" << a << " -- v" << b << ";\n";
    out << "}\n";
    return out.str();
}

json permutahedron_to_json(const PermutahedronGraph& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
    return json{{"edges", edges}, {"n", g.n}, {"vertices", g.vertices}};
}

std::string points_to_csv(const std::vector<LatticePoint>& points, bool header) {
    std::ostringstream out;
    if (header && !points.empty()) {
        for (size_t i = 0; i < points.front().size(); ++i) {
            if (i) out << ',';
            out << 'x' << i + 1;
        }
        out << '\n';
    }
    for (const auto& p : points) {
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) out << ',';
            out << p[i];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace park
