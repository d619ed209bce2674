#include "cyclecount/graph_io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace cyclecount {

namespace {

struct RawGraph {
    std::optional<std::int64_t> declared_vertices;
    std::vector<std::int64_t> vertex_order;  // first appearance in rotations
    std::map<std::int64_t, std::vector<std::int64_t>> rotations;
    std::vector<std::array<std::int64_t, 3>> edges;  // id, u, v
};

CubicPlanarGraph build(const RawGraph& raw) {
    std::map<std::int64_t, int> vidx, eidx;
    std::vector<std::int64_t> vlabels, elabels;
    for (std::int64_t v : raw.vertex_order) {
        vidx[v] = static_cast<int>(vlabels.size());
        vlabels.push_back(v);
    }
    if (raw.declared_vertices && *raw.declared_vertices != static_cast<std::int64_t>(vlabels.size()))
        throw GraphError("malformed", -1,
                         "declared " + std::to_string(*raw.declared_vertices) + " vertices but " +
                             std::to_string(vlabels.size()) + " have rotations");
    std::vector<std::array<int, 2>> ends;
    for (const auto& [id, u, v] : raw.edges) {
        if (eidx.count(id)) throw GraphError("malformed", id, "duplicate edge id " + std::to_string(id));
        auto iu = vidx.find(u), iv = vidx.find(v);
        if (iu == vidx.end() || iv == vidx.end())
            throw GraphError("malformed", id, "edge " + std::to_string(id) + " uses a vertex without a rotation");
        eidx[id] = static_cast<int>(elabels.size());
        elabels.push_back(id);
        ends.push_back({iu->second, iv->second});
    }
    std::vector<std::array<int, 3>> rotation(vlabels.size());
    for (const auto& [v, ids] : raw.rotations) {
        if (ids.size() != 3)
            throw GraphError("degree", v,
                             "vertex " + std::to_string(v) + " lists " + std::to_string(ids.size()) + " edges");
        for (int i = 0; i < 3; ++i) {
            auto it = eidx.find(ids[i]);
            if (it == eidx.end())
                throw GraphError("malformed", ids[i], "rotation of vertex " + std::to_string(v) +
                                                          " names unknown edge " + std::to_string(ids[i]));
            rotation[vidx[v]][i] = it->second;
        }
    }
    return CubicPlanarGraph::from_rotation(std::move(ends), std::move(rotation), std::move(vlabels),
                                           std::move(elabels));
}

void add_rotation(RawGraph& raw, std::int64_t v, std::vector<std::int64_t> ids) {
    if (raw.rotations.count(v)) throw GraphError("malformed", v, "duplicate rotation for vertex " + std::to_string(v));
    raw.vertex_order.push_back(v);
    raw.rotations[v] = std::move(ids);
}

CubicPlanarGraph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw GraphError("malformed", -1, std::string("invalid JSON: ") + e.what());
    }
    RawGraph raw;
    try {
        if (j.contains("vertices")) {
            if (j["vertices"].is_number_integer())
                raw.declared_vertices = j["vertices"].get<std::int64_t>();
            else
                raw.declared_vertices = static_cast<std::int64_t>(j["vertices"].size());
        }
        for (const auto& e : j.at("edges")) {
            if (e.size() != 3) throw GraphError("malformed", -1, "edge entries must be [id, u, v]");
            raw.edges.push_back({e[0].get<std::int64_t>(), e[1].get<std::int64_t>(), e[2].get<std::int64_t>()});
        }
        // Object keys carry no order; vertices are numbered by id.
        std::map<std::int64_t, std::vector<std::int64_t>> rots;
        for (const auto& [key, ids] : j.at("rotations").items()) {
            std::size_t used = 0;
            std::int64_t v = std::stoll(key, &used);
            if (used != key.size() || rots.count(v)) throw std::invalid_argument(key);
            rots[v] = ids.get<std::vector<std::int64_t>>();
        }
        for (auto& [v, ids] : rots) add_rotation(raw, v, std::move(ids));
    } catch (const nlohmann::json::exception& e) {
        throw GraphError("malformed", -1, std::string("unexpected JSON structure: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw GraphError("malformed", -1, "rotation keys must be distinct integer vertex ids");
    }
    return build(raw);
}

CubicPlanarGraph parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    RawGraph raw;
    bool header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        auto bad = [&](const std::string& why) {
            return GraphError("malformed", lineno, "line " + std::to_string(lineno) + ": " + why);
        };
        if (!header) {
            std::string version;
            ls >> version;
            if (word != "cubic-planar" || version != "v1") throw bad("expected header 'cubic-planar v1'");
            header = true;
            continue;
        }
        std::vector<std::int64_t> nums;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                nums.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw bad("not an integer: " + tok);
            } catch (const std::logic_error&) {
                throw bad("not an integer: " + tok);
            }
        }
        if (word == "vertices") {
            if (nums.size() != 1) throw bad("'vertices' takes one count");
            raw.declared_vertices = nums[0];
        } else if (word == "edge") {
            if (nums.size() != 3) throw bad("'edge' takes id, u, v");
            raw.edges.push_back({nums[0], nums[1], nums[2]});
        } else if (word == "rot") {
            if (nums.empty()) throw bad("'rot' needs a vertex id");
            add_rotation(raw, nums[0], std::vector<std::int64_t>(nums.begin() + 1, nums.end()));
        } else {
            throw bad("unknown keyword '" + word + "'");
        }
    }
    if (!header) throw GraphError("malformed", -1, "empty input");
    return build(raw);
}

}  // namespace

CubicPlanarGraph parse_graph(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);
    return parse_text(text);
}

CubicPlanarGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("malformed", -1, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string to_text(const CubicPlanarGraph& h) {
    std::ostringstream os;
    os << "cubic-planar v1\n";
    os << "vertices " << h.num_vertices() << "\n";
    for (int e = 0; e < h.num_edges(); ++e)
        os << "edge " << h.edge_label(e) << " " << h.vertex_label(h.ends(e)[0]) << " "
           << h.vertex_label(h.ends(e)[1]) << "\n";
    for (int v = 0; v < h.num_vertices(); ++v) {
        os << "rot " << h.vertex_label(v);
        for (int e : h.rotation(v)) os << " " << h.edge_label(e);
        os << "\n";
    }
    return os.str();
}

std::string to_json(const CubicPlanarGraph& h) {
    nlohmann::json j;
    j["vertices"] = h.num_vertices();
    j["edges"] = nlohmann::json::array();
    for (int e = 0; e < h.num_edges(); ++e)
        j["edges"].push_back({h.edge_label(e), h.vertex_label(h.ends(e)[0]), h.vertex_label(h.ends(e)[1])});
    j["rotations"] = nlohmann::json::object();
    for (int v = 0; v < h.num_vertices(); ++v) {
        auto& r = j["rotations"][std::to_string(h.vertex_label(v))];
        for (int e : h.rotation(v)) r.push_back(h.edge_label(e));
    }
    return j.dump() + "\n";
}

}  // namespace cyclecount
