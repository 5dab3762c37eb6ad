#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qstack/sset.hpp"

namespace qstack {

/// Marks each vertex as regular (gauged) or framing (fixed).
class FramingFn {
 public:
  FramingFn() = default;
  explicit FramingFn(std::map<std::string, bool> is_framing) : framing_(std::move(is_framing)) {}

  static FramingFn all_regular(const SSet2& shape);
  static FramingFn all_framing(const SSet2& shape);

  bool is_framing(const std::string& vertex) const;
  bool contains(const std::string& vertex) const { return framing_.count(vertex) != 0; }
  void set(const std::string& vertex, bool framing) { framing_[vertex] = framing; }
  const std::map<std::string, bool>& assignment() const noexcept { return framing_; }

  /// Regular vertices of `shape`, in shape order.
  std::vector<std::string> regular_vertices(const SSet2& shape) const;
  bool has_framing() const;

  /// Throws InvalidShape unless every vertex of `shape` is assigned.
  void require_total(const SSet2& shape) const;

  friend bool operator==(const FramingFn&, const FramingFn&) = default;

 private:
  std::map<std::string, bool> framing_;
};

nlohmann::json to_json(const FramingFn& f);
FramingFn framing_from_json(const nlohmann::json& j);

struct FramedQuiver {
  SSet2 shape;
  FramingFn framing;
  /// original vertex -> framing vertex, original vertex -> framing edge.
  std::map<std::string, std::string> framing_vertex;
  std::map<std::string, std::string> framing_edge;
};

/// Glues a copy of 0 -> 1 at each listed vertex (all vertices by default),
/// identifying the vertex with 0. New vertex "w_<v>", new edge "fr_<v>": v -> w_<v>.
FramedQuiver frame(const SSet2& quiver,
                   const std::optional<std::vector<std::string>>& vertices = std::nullopt);

struct DoubledQuiver {
  SSet2 shape;
  /// The reversal involution a <-> a* on non-identity edges.
  std::map<std::string, std::string> star;
};

/// Pushout of J and J^op along their vertices. Reversed copies are named
/// "<e>*"; identity edges are shared rather than duplicated.
DoubledQuiver double_quiver(const SSet2& quiver);

/// The action-encoding shape: representations are triples (g, rho, psi)
/// with g . rho = psi. Cell names: v' for second vertex copies, e' for
/// second edge copies, g_v and g_v^-1 for isomorphism edges, (g_t,e) for the
/// composite edges, id_v / id_v' for identities; triangles alpha_v, beta_v,
/// alpha(e), beta(e), delta(e), epsilon(e).
struct TildeQuiver {
  SSet2 shape;
  FramingFn framing;
  std::map<std::string, std::string> vertex_copy;  // regular v -> v'
  std::map<std::string, std::string> edge_copy;    // e incident to a regular vertex -> e'
  std::map<std::string, std::string> iso;          // regular v -> g_v
  std::map<std::string, std::string> iso_inverse;  // regular v -> g_v^-1
  std::map<std::string, std::string> composite;    // e between regular vertices -> (g_t,e)
};

/// Requires a triangle-free quiver and a total framing function.
TildeQuiver tilde(const SSet2& quiver, const FramingFn& framing);

struct LabeledShape {
  SSet2 shape;
  std::map<std::string, std::string> labels;  // role -> cell id
  std::vector<std::string> principal_edges;
};

/// The pentagon shape carrying the Higgs integrability diagram:
/// a -e_ab-> b -e_bc-> c -e_cd-> d and a -e_ab'-> b' -e_b'd-> d. Witness
/// edges e_ac and e_ad carry the composites, with triangles
/// (e_ab, e_bc, e_ac), (e_ac, e_cd, e_ad) and (e_ab', e_b'd, e_ad).
LabeledShape higgs_shape();

}  // namespace qstack
