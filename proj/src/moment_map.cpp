#include "qstack/moment_map.hpp"

namespace qstack {

MomentExpr build_moment_map(const SSet2& quiver, const FramingFn& framing,
                            const MomentMapOptions& options) {
  require_valid(quiver, "moment map");
  if (quiver.triangle_count() != 0) {
    throw InvalidShape("moment map: input must be a quiver without triangles");
  }
  framing.require_total(quiver);

  std::vector<std::string> to_frame;
  if (options.frame_vertices) {
    to_frame = *options.frame_vertices;
  } else if (!framing.has_framing()) {
    to_frame = quiver.vertices();
  }
  for (const auto& v : to_frame) {
    if (quiver.vertex_index(v) && framing.is_framing(v)) {
      throw InvalidShape("moment map: cannot add framing at framing vertex '" + v + "'");
    }
  }

  const FramedQuiver framed = frame(quiver, to_frame);
  const DoubledQuiver doubled = double_quiver(framed.shape);

  MomentExpr m;
  m.shape = std::make_shared<const SSet2>(doubled.shape);
  m.star = doubled.star;
  for (const auto& v : m.shape->vertices()) {
    const bool is_framing =
        quiver.vertex_index(v) ? framing.is_framing(v) : framed.framing.is_framing(v);
    m.framing.set(v, is_framing);
    if (!is_framing) m.regular.push_back(v);
  }

  const int orientation = options.sign == SignConvention::in_minus_out ? 1 : -1;
  for (const auto& v : m.regular) {
    auto& terms = m.terms[v];
    for (const auto& a : framed.shape.edges()) {
      if (a.identity) continue;
      const std::string& a_star = doubled.star.at(a.id);
      if (a.tgt == v) terms.push_back({orientation, a_star, a.id, 1});
      if (a.src == v) terms.push_back({-orientation, a.id, a_star, 1});
    }
  }
  return m;
}

}  // namespace qstack
