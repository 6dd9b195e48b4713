#include "ceamp/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ceamp/check.hpp"

namespace ceamp {

using json = nlohmann::ordered_json;

std::string instance_to_json(const Instance& inst) {
  json j;
  j["ell"] = inst.ell;
  json verts = json::array();
  for (int v = 0; v < (int)inst.vertices.size(); ++v) {
    json e;
    e["id"] = inst.vertices[v].str();
    e["clique"] = inst.cliques[inst.vertex_clique[v]].str();
    e["level"] = inst.clique_level[inst.vertex_clique[v]];
    verts.push_back(e);
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (auto [u, v] : inst.graph.sorted_edges())
    edges.push_back(json::array({inst.vertices[u].str(), inst.vertices[v].str()}));
  j["edges"] = edges;
  json packing = json::array();
  for (const PackedP3& p : inst.packing) {
    json e;
    e["x"] = inst.vertices[p.x].str();
    e["y"] = inst.vertices[p.y].str();
    e["z"] = inst.vertices[p.z].str();
    e["role"] = role_name(p.role);
    packing.push_back(e);
  }
  j["packing"] = packing;
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  json j = json::parse(text);
  Instance inst;
  inst.ell = j.at("ell").get<int>();
  require(inst.ell == 0, "only ell = 0 instances are supported");

  struct RawVertex { VertexId id; CliqueId clique; int level; };
  std::vector<RawVertex> raw;
  for (const json& e : j.at("vertices"))
    raw.push_back(RawVertex{VertexId::parse(e.at("id").get<std::string>()),
                            CliqueId::parse(e.at("clique").get<std::string>()),
                            e.at("level").get<int>()});
  std::sort(raw.begin(), raw.end(),
            [](const RawVertex& a, const RawVertex& b) { return a.id < b.id; });

  std::vector<CliqueId> cliques;
  std::vector<int> levels;
  std::unordered_map<std::string, int> clique_idx;
  for (const RawVertex& rv : raw) {
    auto [it, fresh] = clique_idx.emplace(rv.clique.str(), (int)cliques.size());
    if (fresh) {
      cliques.push_back(rv.clique);
      levels.push_back(rv.level);
    } else {
      require(levels[it->second] == rv.level,
              "inconsistent level for clique " + rv.clique.str());
    }
  }
  std::vector<int> corder((int)cliques.size());
  for (int i = 0; i < (int)corder.size(); ++i) corder[i] = i;
  std::sort(corder.begin(), corder.end(),
            [&](int a, int b) { return cliques[a] < cliques[b]; });
  std::vector<int> cmap(corder.size());
  for (int i = 0; i < (int)corder.size(); ++i) cmap[corder[i]] = i;

  inst.cliques.resize(cliques.size());
  inst.clique_level.resize(cliques.size());
  for (int old = 0; old < (int)cliques.size(); ++old) {
    inst.cliques[cmap[old]] = cliques[old];
    inst.clique_level[cmap[old]] = levels[old];
  }
  inst.graph = Graph((int)raw.size());
  for (int v = 0; v < (int)raw.size(); ++v) {
    if (v > 0) require(!(raw[v].id == raw[v - 1].id), "duplicate vertex " + raw[v].id.str());
    inst.vertices.push_back(raw[v].id);
    inst.vertex_clique.push_back(cmap[clique_idx.at(raw[v].clique.str())]);
  }
  inst.rebuild_lookup();

  for (const json& e : j.at("edges")) {
    require(e.is_array() && e.size() == 2, "edge entry must be a pair");
    int u = inst.vertex_index(VertexId::parse(e[0].get<std::string>()));
    int v = inst.vertex_index(VertexId::parse(e[1].get<std::string>()));
    inst.graph.add_edge(u, v);
  }
  for (const json& e : j.at("packing")) {
    PackedP3 p;
    p.x = inst.vertex_index(VertexId::parse(e.at("x").get<std::string>()));
    p.y = inst.vertex_index(VertexId::parse(e.at("y").get<std::string>()));
    p.z = inst.vertex_index(VertexId::parse(e.at("z").get<std::string>()));
    p.role = role_from_name(e.at("role").get<std::string>());
    inst.packing.push_back(canonical_p3(p));
  }
  std::sort(inst.packing.begin(), inst.packing.end(), [](const PackedP3& a, const PackedP3& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  return inst;
}

std::string edits_to_json(const Instance& inst, const std::vector<Edit>& edits) {
  std::vector<Edit> sorted = edits;
  sort_edits(sorted);
  json j = json::array();
  for (const Edit& e : sorted) {
    int u = e.u, v = e.v;
    if (inst.vertices[v] < inst.vertices[u]) std::swap(u, v);
    json entry;
    entry["u"] = inst.vertices[u].str();
    entry["v"] = inst.vertices[v].str();
    entry["kind"] = e.insert ? "insert" : "delete";
    j.push_back(entry);
  }
  return j.dump(2) + "\n";
}

std::vector<Edit> edits_from_json(const Instance& inst, const std::string& text) {
  json j = json::parse(text);
  require(j.is_array(), "edit set JSON must be an array");
  std::vector<Edit> out;
  for (const json& e : j) {
    Edit edit;
    edit.u = inst.vertex_index(VertexId::parse(e.at("u").get<std::string>()));
    edit.v = inst.vertex_index(VertexId::parse(e.at("v").get<std::string>()));
    std::string kind = e.at("kind").get<std::string>();
    require(kind == "delete" || kind == "insert", "bad edit kind: " + kind);
    edit.insert = kind == "insert";
    if (edit.u > edit.v) std::swap(edit.u, edit.v);
    out.push_back(edit);
  }
  sort_edits(out);
  return out;
}

std::string instance_to_dot(const Instance& inst) {
  std::ostringstream out;
  out << "graph instance {\n";
  std::vector<std::vector<int>> members = inst.clique_members();
  for (int c = 0; c < (int)inst.cliques.size(); ++c) {
    std::string id = inst.cliques[c].str();
    out << "  subgraph \"cluster_" << id << "\" {\n";
    out << "    label=\"" << id << "\";\n";
    for (int v : members[c]) out << "    \"" << inst.vertices[v].str() << "\";\n";
    out << "  }\n";
  }
  for (auto [u, v] : inst.graph.sorted_edges())
    out << "  \"" << inst.vertices[u].str() << "\" -- \"" << inst.vertices[v].str() << "\";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write " + path);
  out << content;
}

}  // namespace ceamp
