#include "qstack/quiver_ops.hpp"

#include <algorithm>

#include "qstack/error.hpp"

namespace qstack {

FramingFn FramingFn::all_regular(const SSet2& shape) {
  FramingFn f;
  for (const auto& v : shape.vertices()) f.framing_[v] = false;
  return f;
}

FramingFn FramingFn::all_framing(const SSet2& shape) {
  FramingFn f;
  for (const auto& v : shape.vertices()) f.framing_[v] = true;
  return f;
}

bool FramingFn::is_framing(const std::string& vertex) const {
  auto it = framing_.find(vertex);
  if (it == framing_.end()) throw InvalidShape("framing function has no value at '" + vertex + "'");
  return it->second;
}

std::vector<std::string> FramingFn::regular_vertices(const SSet2& shape) const {
  std::vector<std::string> out;
  for (const auto& v : shape.vertices()) {
    if (!is_framing(v)) out.push_back(v);
  }
  return out;
}

bool FramingFn::has_framing() const {
  return std::any_of(framing_.begin(), framing_.end(), [](const auto& kv) { return kv.second; });
}

void FramingFn::require_total(const SSet2& shape) const {
  for (const auto& v : shape.vertices()) {
    if (!contains(v)) throw InvalidShape("framing function has no value at '" + v + "'");
  }
}

nlohmann::json to_json(const FramingFn& f) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [v, framed] : f.assignment()) j[v] = framed ? "framing" : "regular";
  return j;
}

FramingFn framing_from_json(const nlohmann::json& j) {
  FramingFn f;
  for (const auto& [v, role] : j.items()) {
    const auto s = role.get<std::string>();
    if (s != "framing" && s != "regular") {
      throw Error("framing role for '" + v + "' must be \"regular\" or \"framing\"");
    }
    f.set(v, s == "framing");
  }
  return f;
}

FramedQuiver frame(const SSet2& quiver, const std::optional<std::vector<std::string>>& vertices) {
  require_valid(quiver, "frame");
  const std::vector<std::string> targets = vertices.value_or(quiver.vertices());

  FramedQuiver out;
  out.framing = FramingFn::all_regular(quiver);
  std::vector<std::string> vs = quiver.vertices();
  std::vector<Edge> es = quiver.edges();
  for (const auto& v : targets) {
    if (!quiver.vertex_index(v)) throw InvalidShape("frame: unknown vertex '" + v + "'");
    if (out.framing_vertex.count(v) != 0) throw InvalidShape("frame: vertex '" + v + "' repeated");
    const std::string w = "w_" + v;
    const std::string e = "fr_" + v;
    vs.push_back(w);
    es.push_back({e, v, w, false});
    out.framing.set(w, true);
    out.framing_vertex[v] = w;
    out.framing_edge[v] = e;
  }
  out.shape = SSet2(std::move(vs), std::move(es), quiver.triangles());
  require_valid(out.shape, "frame: generated ids collide with the input");
  return out;
}

DoubledQuiver double_quiver(const SSet2& quiver) {
  require_valid(quiver, "double");
  DoubledQuiver out;
  std::vector<Edge> es = quiver.edges();
  for (const auto& e : quiver.edges()) {
    if (e.identity) continue;
    const std::string rev = e.id + "*";
    es.push_back({rev, e.tgt, e.src, false});
    out.star[e.id] = rev;
    out.star[rev] = e.id;
  }
  auto starred = [&](const std::string& e) {
    auto it = out.star.find(e);
    return it == out.star.end() ? e : it->second;  // identity edges are shared
  };
  std::vector<Triangle> ts = quiver.triangles();
  for (const auto& t : quiver.triangles()) {
    ts.push_back({t.id + "*", starred(t.second), starred(t.first), starred(t.long_edge)});
  }
  out.shape = SSet2(quiver.vertices(), std::move(es), std::move(ts));
  require_valid(out.shape, "double: generated ids collide with the input");
  return out;
}

TildeQuiver tilde(const SSet2& quiver, const FramingFn& framing) {
  require_valid(quiver, "tilde");
  if (quiver.triangle_count() != 0) {
    throw InvalidShape("tilde: input must be a quiver without triangles");
  }
  framing.require_total(quiver);

  TildeQuiver out;
  const auto regular = framing.regular_vertices(quiver);
  auto is_reg = [&](const std::string& v) { return !framing.is_framing(v); };

  std::vector<std::string> vs;
  for (const auto& v : regular) vs.push_back(v);
  for (const auto& v : regular) {
    out.vertex_copy[v] = v + "'";
    vs.push_back(out.vertex_copy[v]);
  }
  for (const auto& v : quiver.vertices()) {
    if (!is_reg(v)) vs.push_back(v);
  }
  auto copy_of = [&](const std::string& v) { return is_reg(v) ? out.vertex_copy.at(v) : v; };

  std::vector<Edge> es;
  std::vector<const Edge*> incident;  // I_1 \ S
  std::vector<const Edge*> framed_only;  // S
  for (const auto& e : quiver.edges()) {
    (is_reg(e.src) || is_reg(e.tgt) ? incident : framed_only).push_back(&e);
  }
  for (const Edge* e : incident) es.push_back(*e);
  for (const Edge* e : incident) {
    out.edge_copy[e->id] = e->id + "'";
    es.push_back({out.edge_copy[e->id], copy_of(e->src), copy_of(e->tgt), e->identity});
  }
  for (const Edge* e : framed_only) es.push_back(*e);
  for (const auto& v : regular) {
    out.iso[v] = "g_" + v;
    es.push_back({out.iso[v], v, out.vertex_copy[v], false});
  }
  for (const auto& v : regular) {
    out.iso_inverse[v] = "g_" + v + "^-1";
    es.push_back({out.iso_inverse[v], out.vertex_copy[v], v, false});
  }
  for (const Edge* e : incident) {
    if (is_reg(e->src) && is_reg(e->tgt)) {
      out.composite[e->id] = "(g_" + e->tgt + "," + e->id + ")";
      es.push_back({out.composite[e->id], e->src, out.vertex_copy.at(e->tgt), false});
    }
  }
  std::map<std::string, std::string> id_at;
  for (const auto& v : regular) {
    for (const auto& x : {v, out.vertex_copy[v]}) {
      id_at[x] = "id_" + x;
      es.push_back({id_at[x], x, x, true});
    }
  }

  std::vector<Triangle> ts;
  for (const auto& v : regular) {
    ts.push_back({"alpha_" + v, out.iso[v], out.iso_inverse[v], id_at[v]});
  }
  for (const auto& v : regular) {
    ts.push_back({"beta_" + v, out.iso_inverse[v], out.iso[v], id_at[out.vertex_copy[v]]});
  }
  for (const Edge* e : incident) {
    const bool rs = is_reg(e->src);
    const bool rt = is_reg(e->tgt);
    const std::string& ep = out.edge_copy[e->id];
    if (rs && rt) {
      const std::string& comp = out.composite[e->id];
      ts.push_back({"alpha(" + e->id + ")", e->id, out.iso[e->tgt], comp});
      ts.push_back({"beta(" + e->id + ")", out.iso[e->src], ep, comp});
    } else if (rs) {
      ts.push_back({"delta(" + e->id + ")", out.iso[e->src], ep, e->id});
    } else {
      ts.push_back({"epsilon(" + e->id + ")", e->id, out.iso[e->tgt], ep});
    }
  }

  out.shape = SSet2(std::move(vs), std::move(es), std::move(ts));
  require_valid(out.shape, "tilde: generated ids collide with the input");
  for (const auto& v : out.shape.vertices()) {
    out.framing.set(v, quiver.vertex_index(v) && framing.contains(v) && framing.is_framing(v));
  }
  return out;
}

LabeledShape higgs_shape() {
  LabeledShape out;
  out.shape = SSet2({"a", "b", "c", "d", "b'"},
                    {{"e_ab", "a", "b"},
                     {"e_bc", "b", "c"},
                     {"e_cd", "c", "d"},
                     {"e_ab'", "a", "b'"},
                     {"e_b'd", "b'", "d"},
                     {"e_ac", "a", "c"},
                     {"e_ad", "a", "d"}},
                    {{"t_abc", "e_ab", "e_bc", "e_ac"},
                     {"t_acd", "e_ac", "e_cd", "e_ad"},
                     {"t_ab'd", "e_ab'", "e_b'd", "e_ad"}});
  for (const auto& v : out.shape.vertices()) out.labels[v] = v;
  for (const auto& e : out.shape.edges()) out.labels[e.id] = e.id;
  for (const auto& t : out.shape.triangles()) out.labels[t.id] = t.id;
  out.principal_edges = {"e_ab", "e_bc", "e_cd", "e_ab'", "e_b'd"};
  return out;
}

}  // namespace qstack
