#include "qstack/sset.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "qstack/error.hpp"

namespace qstack {

SSet2::SSet2(std::vector<std::string> vertices, std::vector<Edge> edges,
             std::vector<Triangle> triangles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), triangles_(std::move(triangles)) {
  // First occurrence wins on duplicate ids; validate() reports the duplicate.
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_ix_.emplace(vertices_[i], i);
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_ix_.emplace(edges_[i].id, i);
  for (std::size_t i = 0; i < triangles_.size(); ++i) triangle_ix_.emplace(triangles_[i].id, i);

  auto vlookup = [this](const std::string& id) {
    auto it = vertex_ix_.find(id);
    return it == vertex_ix_.end() ? npos : it->second;
  };
  auto elookup = [this](const std::string& id) {
    auto it = edge_ix_.find(id);
    return it == edge_ix_.end() ? npos : it->second;
  };
  edge_src_.reserve(edges_.size());
  edge_tgt_.reserve(edges_.size());
  for (const auto& e : edges_) {
    edge_src_.push_back(vlookup(e.src));
    edge_tgt_.push_back(vlookup(e.tgt));
  }
  tri_idx_.reserve(triangles_.size());
  for (const auto& t : triangles_) {
    tri_idx_.push_back({elookup(t.first), elookup(t.second), elookup(t.long_edge)});
  }
}

std::size_t SSet2::nondegenerate_edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.identity; }));
}

std::optional<std::size_t> SSet2::vertex_index(const std::string& id) const {
  auto it = vertex_ix_.find(id);
  if (it == vertex_ix_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SSet2::edge_index(const std::string& id) const {
  auto it = edge_ix_.find(id);
  if (it == edge_ix_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SSet2::triangle_index(const std::string& id) const {
  auto it = triangle_ix_.find(id);
  if (it == triangle_ix_.end()) return std::nullopt;
  return it->second;
}

std::string simplex_vertex_id(int i) { return std::to_string(i); }

std::string simplex_edge_id(int i, int j) {
  return "e" + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

void check_simplex_dimension(int n) {
  if (n < 0 || n > kMaxSimplexDimension) {
    throw Error("simplex dimension must lie in [0, " + std::to_string(kMaxSimplexDimension) +
                "], got " + std::to_string(n));
  }
}

SSet2 simplex_impl(int n, bool with_triangles) {
  check_simplex_dimension(n);
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  for (int i = 0; i <= n; ++i) vertices.push_back(simplex_vertex_id(i));
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      edges.push_back({simplex_edge_id(i, j), simplex_vertex_id(i), simplex_vertex_id(j), false});
    }
  }
  if (with_triangles) {
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          triangles.push_back({"t" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                   std::to_string(k),
                               simplex_edge_id(i, j), simplex_edge_id(j, k),
                               simplex_edge_id(i, k)});
        }
      }
    }
  }
  return SSet2(std::move(vertices), std::move(edges), std::move(triangles));
}

// Appends primes until `id` is unused in `taken`.
std::string fresh_id(std::string id, const std::unordered_set<std::string>& taken) {
  while (taken.count(id) != 0) id += "'";
  return id;
}

}  // namespace

SSet2 standard_simplex(int n) { return simplex_impl(n, true); }

SSet2 one_skeleton(int n) { return simplex_impl(n, false); }

SSet2 square() {
  return SSet2({"a", "b", "c", "d"},
               {{"u", "a", "b"}, {"v", "a", "c"}, {"w", "b", "d"}, {"y", "c", "d"},
                {"diag", "a", "d"}},
               {{"upper", "u", "w", "diag"}, {"lower", "v", "y", "diag"}});
}

SSet2 glue_at_vertices(const SSet2& a, const SSet2& b,
                       const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_map<std::string, std::string> b_to_a;
  std::unordered_set<std::string> a_used;
  for (const auto& [va, vb] : pairs) {
    if (!a.vertex_index(va)) throw InvalidShape("glue: unknown vertex '" + va + "' in first shape");
    if (!b.vertex_index(vb)) {
      throw InvalidShape("glue: unknown vertex '" + vb + "' in second shape");
    }
    if (!a_used.insert(va).second || !b_to_a.emplace(vb, va).second) {
      throw InvalidShape("glue: vertex matching is not injective at ('" + va + "', '" + vb + "')");
    }
  }

  std::vector<std::string> vertices = a.vertices();
  std::vector<Edge> edges = a.edges();
  std::vector<Triangle> triangles = a.triangles();

  std::unordered_set<std::string> vertex_taken(vertices.begin(), vertices.end());
  std::unordered_map<std::string, std::string> vrename;
  for (const auto& v : b.vertices()) {
    if (auto it = b_to_a.find(v); it != b_to_a.end()) {
      vrename[v] = it->second;
      continue;
    }
    std::string id = fresh_id(v, vertex_taken);
    vertex_taken.insert(id);
    vrename[v] = id;
    vertices.push_back(id);
  }
  auto vmap = [&](const std::string& v) {
    auto it = vrename.find(v);
    return it == vrename.end() ? v : it->second;
  };

  std::unordered_set<std::string> edge_taken;
  for (const auto& e : edges) edge_taken.insert(e.id);
  std::unordered_map<std::string, std::string> erename;
  for (const auto& e : b.edges()) {
    std::string id = fresh_id(e.id, edge_taken);
    edge_taken.insert(id);
    erename[e.id] = id;
    edges.push_back({id, vmap(e.src), vmap(e.tgt), e.identity});
  }
  auto emap = [&](const std::string& e) {
    auto it = erename.find(e);
    return it == erename.end() ? e : it->second;
  };

  std::unordered_set<std::string> tri_taken;
  for (const auto& t : triangles) tri_taken.insert(t.id);
  for (const auto& t : b.triangles()) {
    std::string id = fresh_id(t.id, tri_taken);
    tri_taken.insert(id);
    triangles.push_back({id, emap(t.first), emap(t.second), emap(t.long_edge)});
  }
  return SSet2(std::move(vertices), std::move(edges), std::move(triangles));
}

SSet2 opposite(const SSet2& a) {
  std::vector<Edge> edges;
  edges.reserve(a.edge_count());
  for (const auto& e : a.edges()) edges.push_back({e.id, e.tgt, e.src, e.identity});
  std::vector<Triangle> triangles;
  triangles.reserve(a.triangle_count());
  for (const auto& t : a.triangles()) triangles.push_back({t.id, t.second, t.first, t.long_edge});
  return SSet2(a.vertices(), std::move(edges), std::move(triangles));
}

std::vector<std::string> validate(const SSet2& a) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& v : a.vertices()) {
    if (!seen.insert(v).second) out.push_back("duplicate vertex id '" + v + "'");
  }
  seen.clear();
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    const auto& e = a.edges()[i];
    if (!seen.insert(e.id).second) out.push_back("duplicate edge id '" + e.id + "'");
    if (a.src_index(i) == npos) {
      out.push_back("edge '" + e.id + "' has unknown source vertex '" + e.src + "'");
    }
    if (a.tgt_index(i) == npos) {
      out.push_back("edge '" + e.id + "' has unknown target vertex '" + e.tgt + "'");
    }
    if (e.identity && e.src != e.tgt) {
      out.push_back("identity edge '" + e.id + "' has distinct endpoints '" + e.src + "' and '" +
                    e.tgt + "'");
    }
  }
  seen.clear();
  for (std::size_t i = 0; i < a.triangle_count(); ++i) {
    const auto& t = a.triangles()[i];
    if (!seen.insert(t.id).second) out.push_back("duplicate triangle id '" + t.id + "'");
    const auto& ix = a.triangle_edges(i);
    bool resolved = true;
    for (auto [idx, name] : {std::pair{ix.first, &t.first}, std::pair{ix.second, &t.second},
                             std::pair{ix.long_edge, &t.long_edge}}) {
      if (idx == npos) {
        out.push_back("triangle '" + t.id + "' references unknown edge '" + *name + "'");
        resolved = false;
      }
    }
    if (!resolved) continue;
    const auto& f = a.edges()[ix.first];
    const auto& s = a.edges()[ix.second];
    const auto& l = a.edges()[ix.long_edge];
    if (f.src != l.src) {
      out.push_back("triangle '" + t.id + "': source of first edge '" + f.id +
                    "' differs from source of long edge '" + l.id + "'");
    }
    if (f.tgt != s.src) {
      out.push_back("triangle '" + t.id + "': target of first edge '" + f.id +
                    "' differs from source of second edge '" + s.id + "'");
    }
    if (s.tgt != l.tgt) {
      out.push_back("triangle '" + t.id + "': target of second edge '" + s.id +
                    "' differs from target of long edge '" + l.id + "'");
    }
  }
  return out;
}

void require_valid(const SSet2& a, const std::string& context) {
  auto diags = validate(a);
  if (!diags.empty()) throw InvalidShape(context + ": " + diags.front());
}

SSet2 canonical_relabel(const SSet2& a) {
  std::unordered_map<std::string, std::string> vnew;
  std::unordered_map<std::string, std::string> enew;
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    vertices.push_back("v" + std::to_string(i));
    vnew.emplace(a.vertices()[i], vertices.back());
  }
  auto vmap = [&](const std::string& v) {
    auto it = vnew.find(v);
    return it == vnew.end() ? v : it->second;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    const auto& e = a.edges()[i];
    edges.push_back({"e" + std::to_string(i), vmap(e.src), vmap(e.tgt), e.identity});
    enew.emplace(e.id, edges.back().id);
  }
  auto emap = [&](const std::string& e) {
    auto it = enew.find(e);
    return it == enew.end() ? e : it->second;
  };
  std::vector<Triangle> triangles;
  for (std::size_t i = 0; i < a.triangle_count(); ++i) {
    const auto& t = a.triangles()[i];
    triangles.push_back(
        {"t" + std::to_string(i), emap(t.first), emap(t.second), emap(t.long_edge)});
  }
  return SSet2(std::move(vertices), std::move(edges), std::move(triangles));
}

std::vector<std::string> validate_map(const SSetMap& map, const SSet2& from, const SSet2& to) {
  std::vector<std::string> out;
  auto image_vertex = [&](const std::string& v) -> std::optional<std::string> {
    auto it = map.vertex_map.find(v);
    if (it == map.vertex_map.end() || !to.vertex_index(it->second)) return std::nullopt;
    return it->second;
  };
  for (const auto& v : from.vertices()) {
    if (!image_vertex(v)) out.push_back("vertex '" + v + "' has no image");
  }
  auto image_edge = [&](const std::string& e) -> const Edge* {
    auto it = map.edge_map.find(e);
    if (it == map.edge_map.end()) return nullptr;
    auto ix = to.edge_index(it->second);
    return ix ? &to.edges()[*ix] : nullptr;
  };
  for (const auto& e : from.edges()) {
    const Edge* img = image_edge(e.id);
    if (img == nullptr) {
      out.push_back("edge '" + e.id + "' has no image");
      continue;
    }
    auto s = image_vertex(e.src);
    auto t = image_vertex(e.tgt);
    if (!s || !t || img->src != *s || img->tgt != *t) {
      out.push_back("edge '" + e.id + "' is not sent to an edge between the images of its ends");
    }
    if (e.identity && !img->identity) {
      out.push_back("identity edge '" + e.id + "' is sent to a non-identity edge");
    }
  }
  std::set<std::tuple<std::string, std::string, std::string>> target_triangles;
  for (const auto& t : to.triangles()) target_triangles.emplace(t.first, t.second, t.long_edge);
  for (const auto& t : from.triangles()) {
    const Edge* f = image_edge(t.first);
    const Edge* s = image_edge(t.second);
    const Edge* l = image_edge(t.long_edge);
    if (f == nullptr || s == nullptr || l == nullptr) continue;
    const bool is_triangle = target_triangles.count({f->id, s->id, l->id}) != 0;
    const bool collapsed = (f->identity && s->id == l->id) || (s->identity && f->id == l->id);
    if (!is_triangle && !collapsed) {
      out.push_back("triangle '" + t.id + "' is not sent to a triangle or a degenerate configuration");
    }
  }
  return out;
}

nlohmann::json to_json(const SSet2& a) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : a.edges()) {
    nlohmann::json je = {{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}};
    if (e.identity) je["identity"] = true;
    edges.push_back(std::move(je));
  }
  nlohmann::json triangles = nlohmann::json::array();
  for (const auto& t : a.triangles()) {
    triangles.push_back(
        {{"id", t.id}, {"first", t.first}, {"second", t.second}, {"long", t.long_edge}});
  }
  return {{"vertices", a.vertices()}, {"edges", std::move(edges)},
          {"triangles", std::move(triangles)}};
}

SSet2 sset_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) {
      edges.push_back({je.at("id").get<std::string>(), je.at("src").get<std::string>(),
                       je.at("tgt").get<std::string>(), je.value("identity", false)});
    }
    std::vector<Triangle> triangles;
    for (const auto& jt : j.at("triangles")) {
      triangles.push_back({jt.at("id").get<std::string>(), jt.at("first").get<std::string>(),
                           jt.at("second").get<std::string>(), jt.at("long").get<std::string>()});
    }
    return SSet2(std::move(vertices), std::move(edges), std::move(triangles));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed simplicial set JSON: ") + e.what());
  }
}

}  // namespace qstack
