#pragma once

// Simple labeled graphs with stable vertex ids. Ids are dense on
// construction; vertex deletion (used by independence-complex folds) keeps
// surviving ids unchanged, so id sets may become sparse.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace morsetilings {

using json = nlohmann::json;

struct GraphEdge {
    int u = -1;
    int v = -1;
    std::string label;
};

class Graph {
public:
    Graph() = default;

    int add_vertex(std::string label) {
        if (vlabel_to_id_.count(label))
            throw std::invalid_argument("duplicate vertex label: " + label);
        int id = next_id_++;
        ids_.push_back(id);
        labels_.push_back(label);
        vlabel_to_id_.emplace(std::move(label), id);
        return id;
    }

    int add_edge(int u, int v, std::string label) {
        if (u == v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        require_vertex(u);
        require_vertex(v);
        if (u > v) std::swap(u, v);
        for (const auto& e : edges_)
            if (e.u == u && e.v == v)
                throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
        if (elabel_to_id_.count(label))
            throw std::invalid_argument("duplicate edge label: " + label);
        int id = static_cast<int>(edges_.size());
        elabel_to_id_.emplace(label, id);
        edges_.push_back(GraphEdge{u, v, std::move(label)});
        return id;
    }

    void set_family(std::string family, std::map<std::string, long long> params) {
        family_ = std::move(family);
        params_ = std::move(params);
    }

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<int>& vertex_ids() const { return ids_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const std::string& family() const { return family_; }
    const std::map<std::string, long long>& params() const { return params_; }

    bool has_vertex(int id) const {
        return std::binary_search(ids_.begin(), ids_.end(), id);
    }

    const std::string& vertex_label(int id) const {
        return labels_[vertex_pos(id)];
    }

    std::optional<int> vertex_by_label(std::string_view label) const {
        auto it = vlabel_to_id_.find(std::string(label));
        if (it == vlabel_to_id_.end()) return std::nullopt;
        return it->second;
    }

    const GraphEdge& edge(int e) const {
        if (e < 0 || e >= static_cast<int>(edges_.size()))
            throw std::out_of_range("invalid edge id " + std::to_string(e));
        return edges_[static_cast<std::size_t>(e)];
    }

    const std::string& edge_label(int e) const { return edge(e).label; }

    int edge_by_label(std::string_view label) const {
        auto it = elabel_to_id_.find(std::string(label));
        if (it == elabel_to_id_.end())
            throw std::out_of_range("unknown edge label: " + std::string(label));
        return it->second;
    }

    bool has_edge_label(std::string_view label) const {
        return elabel_to_id_.count(std::string(label)) > 0;
    }

    std::vector<int> neighborhood(int v) const {
        require_vertex(v);
        std::vector<int> out;
        for (const auto& e : edges_) {
            if (e.u == v) out.push_back(e.v);
            else if (e.v == v) out.push_back(e.u);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> incident_edges(int v) const {
        require_vertex(v);
        std::vector<int> out;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].u == v || edges_[i].v == v) out.push_back(static_cast<int>(i));
        return out;
    }

    std::size_t degree(int v) const { return incident_edges(v).size(); }

    // Copy with vertex w and its incident edges removed; other ids unchanged.
    Graph without_vertex(int w) const {
        require_vertex(w);
        Graph g;
        g.family_ = "derived";
        g.next_id_ = next_id_;
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (ids_[i] == w) continue;
            g.ids_.push_back(ids_[i]);
            g.labels_.push_back(labels_[i]);
            g.vlabel_to_id_.emplace(labels_[i], ids_[i]);
        }
        for (const auto& e : edges_) {
            if (e.u == w || e.v == w) continue;
            g.elabel_to_id_.emplace(e.label, static_cast<int>(g.edges_.size()));
            g.edges_.push_back(e);
        }
        return g;
    }

    Graph without_edges(const std::vector<int>& edge_ids) const {
        std::vector<bool> drop(edges_.size(), false);
        for (int e : edge_ids) {
            edge(e);
            drop[static_cast<std::size_t>(e)] = true;
        }
        Graph g;
        g.family_ = "derived";
        g.next_id_ = next_id_;
        g.ids_ = ids_;
        g.labels_ = labels_;
        g.vlabel_to_id_ = vlabel_to_id_;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (drop[i]) continue;
            g.elabel_to_id_.emplace(edges_[i].label, static_cast<int>(g.edges_.size()));
            g.edges_.push_back(edges_[i]);
        }
        return g;
    }

private:
    std::size_t vertex_pos(int id) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id)
            throw std::out_of_range("invalid vertex id " + std::to_string(id));
        return static_cast<std::size_t>(it - ids_.begin());
    }

    void require_vertex(int id) const { (void)vertex_pos(id); }

    std::vector<int> ids_;              // sorted
    std::vector<std::string> labels_;   // parallel to ids_
    std::vector<GraphEdge> edges_;      // index = edge id
    std::map<std::string, int> vlabel_to_id_;
    std::map<std::string, int> elabel_to_id_;
    std::string family_ = "custom";
    std::map<std::string, long long> params_;
    int next_id_ = 0;
};

// Vertex-label bijection that carries edges of a onto edges of b exactly.
// Edge labels are not compared: derived graphs keep composite labels whose
// text is incidental.
inline bool labeled_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::map<int, int> a_to_b;
    for (int id : a.vertex_ids()) {
        auto other = b.vertex_by_label(a.vertex_label(id));
        if (!other) return false;
        a_to_b[id] = *other;
    }
    auto key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
    std::vector<std::pair<int, int>> ea, eb;
    for (const auto& e : a.edges()) ea.push_back(key(a_to_b[e.u], a_to_b[e.v]));
    for (const auto& e : b.edges()) eb.push_back(key(e.u, e.v));
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

inline json graph_to_json(const Graph& g) {
    json jv = json::array();
    for (int id : g.vertex_ids())
        jv.push_back(json{{"id", id}, {"label", g.vertex_label(id)}});
    json je = json::array();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(static_cast<int>(i));
        je.push_back(json{{"id", static_cast<int>(i)}, {"u", e.u}, {"v", e.v}, {"label", e.label}});
    }
    json params = json::object();
    for (const auto& [k, v] : g.params()) params[k] = v;
    return json{{"family", g.family()}, {"params", params}, {"vertices", jv}, {"edges", je}};
}

inline std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int id : g.vertex_ids())
        out << "  v" << id << " [label=\"" << g.vertex_label(id) << "\"];\n";
    for (const auto& e : g.edges())
        out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace morsetilings
