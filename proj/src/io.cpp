#include "latres/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "latres/errors.hpp"

namespace latres {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<std::string> string_list(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw input_error(std::string("missing or non-array field \"") + key + "\"");
    std::vector<std::string> out;
    for (const auto& e : j[key]) {
        if (!e.is_string())
            throw input_error(std::string("field \"") + key + "\" must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::string quoted(const std::string& s) {
    return json(s).dump();
}

} // namespace

Poset poset_from_json(const std::string& text) {
    json j = parse(text);
    auto elements = string_list(j, "elements");
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
        if (!j["covers"].is_array()) throw input_error("\"covers\" must be an array");
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                throw input_error("each cover must be a [lower, upper] label pair");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    }
    return make_poset(elements, covers);
}

std::string poset_to_json(const Poset& p) {
    json j;
    j["elements"] = p.labels;
    j["covers"] = json::array();
    for (const auto& [lo, hi] : p.covers)
        j["covers"].push_back({p.labels[lo], p.labels[hi]});
    return j.dump(2);
}

BipartiteGraph graph_from_json(const std::string& text) {
    json j = parse(text);
    auto left = string_list(j, "left");
    auto right = string_list(j, "right");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw input_error("missing or non-array field \"edges\"");
    auto find = [](const std::vector<std::string>& v, const std::string& s) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] == s) return static_cast<int>(i);
        return -1;
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw input_error("each edge must be a [left, right] label pair");
        int l = find(left, e[0].get<std::string>());
        int r = find(right, e[1].get<std::string>());
        if (l < 0 || r < 0)
            throw input_error("edge endpoint " + e.dump() + " not in the declared parts");
        edges.emplace_back(l, r);
    }
    return make_bipartite(left, right, edges);
}

std::string graph_to_json(const BipartiteGraph& g) {
    json j;
    j["left"] = g.left;
    j["right"] = g.right;
    j["edges"] = json::array();
    for (const auto& [l, r] : g.edges) j["edges"].push_back({g.left[l], g.right[r]});
    return j.dump(2);
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = parse(text);
    auto vertices = string_list(j, "vertices");
    if (!j.contains("facets") || !j["facets"].is_array())
        throw input_error("missing or non-array field \"facets\"");
    std::vector<Mask> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw input_error("each facet must be a vertex list");
        Mask m = 0;
        for (const auto& v : f) {
            if (!v.is_string()) throw input_error("facet entries must be vertex labels");
            auto it = std::find(vertices.begin(), vertices.end(), v.get<std::string>());
            if (it == vertices.end())
                throw input_error("facet vertex " + v.dump() + " not declared");
            m |= bit(static_cast<int>(it - vertices.begin()));
        }
        facets.push_back(m);
    }
    return make_complex(vertices, facets);
}

std::string complex_to_json(const SimplicialComplex& c) {
    json j;
    j["vertices"] = c.vertices;
    j["facets"] = json::array();
    for (Mask f : c.facets) {
        json face = json::array();
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            if ((f >> i) & 1) face.push_back(c.vertices[i]);
        j["facets"].push_back(face);
    }
    return j.dump(2);
}

std::string hasse_dot(const Poset& p) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (const auto& l : p.labels) os << "  " << quoted(l) << ";\n";
    for (const auto& [lo, hi] : p.covers)
        os << "  " << quoted(p.labels[lo]) << " -> " << quoted(p.labels[hi]) << ";\n";
    os << "}\n";
    return os.str();
}

std::string lattice_dot(const Poset& p, const DistributiveLattice& lat) {
    auto name = [&](Mask ideal) {
        std::string s = "{";
        bool first = true;
        for (const auto& l : p.member_labels(ideal)) {
            if (!first) s += ",";
            s += l;
            first = false;
        }
        return s + "}";
    };
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (Mask ideal : lat.ideals) os << "  " << quoted(name(ideal)) << ";\n";
    // Covers in J(P): add one addable element.
    for (Mask ideal : lat.ideals)
        for (int e = 0; e < p.size(); ++e)
            if (!((ideal >> e) & 1) && lat.contains(ideal | bit(e)))
                if ((p.down[e] & ~bit(e) & ~ideal) == 0)
                    os << "  " << quoted(name(ideal)) << " -> " << quoted(name(ideal | bit(e)))
                       << ";\n";
    os << "}\n";
    return os.str();
}

std::string bipartite_dot(const BipartiteGraph& g) {
    std::ostringstream os;
    os << "graph bipartite {\n  node [shape=circle];\n";
    os << "  { rank=same;";
    for (const auto& l : g.left) os << " " << quoted(l) << ";";
    os << " }\n  { rank=same;";
    for (const auto& r : g.right) os << " " << quoted(r) << ";";
    os << " }\n";
    for (const auto& [l, r] : g.edges)
        os << "  " << quoted(g.left[l]) << " -- " << quoted(g.right[r]) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace latres
