#include "qstack/chain.hpp"

#include <map>
#include <mutex>

namespace qstack {

std::optional<ChainShape> chain_shape(const SSet2& shape) {
  if (shape.vertex_count() == 0) return std::nullopt;
  const int n = static_cast<int>(shape.vertex_count()) - 1;
  if (n > kMaxSimplexDimension) return std::nullopt;
  // Below n = 2 the simplex and its 1-skeleton coincide; report the simplex.
  const bool with_triangles = n < 2 || shape.triangle_count() != 0;
  if (shape == *shared_simplex(n, with_triangles)) return ChainShape{n, with_triangles};
  return std::nullopt;
}

std::shared_ptr<const SSet2> shared_simplex(int n, bool with_triangles) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::shared_ptr<const SSet2>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, with_triangles}];
  if (!slot) {
    slot = std::make_shared<const SSet2>(with_triangles ? standard_simplex(n) : one_skeleton(n));
  }
  return slot;
}

}  // namespace qstack
