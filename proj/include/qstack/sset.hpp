#pragma once

// Finite 2-truncated simplicial sets.
//
// Edges point from source to target. A triangle (first, second, long) is a
// composition witness: src(first) = src(long), tgt(first) = src(second),
// tgt(second) = tgt(long), and a representation must satisfy
// M(second) * M(first) = M(long). Cells above dimension 2 are degenerate and
// never stored. Identity-tagged edges are the degenerate 1-simplices at a
// vertex.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace qstack {

struct Edge {
  std::string id;
  std::string src;
  std::string tgt;
  bool identity = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Triangle {
  std::string id;
  std::string first;
  std::string second;
  std::string long_edge;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

class SSet2 {
 public:
  SSet2() = default;
  /// Takes the cells as given; nothing is checked here, see validate().
  SSet2(std::vector<std::string> vertices, std::vector<Edge> edges,
        std::vector<Triangle> triangles);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t triangle_count() const noexcept { return triangles_.size(); }
  /// Edges that are not identity-tagged.
  std::size_t nondegenerate_edge_count() const noexcept;

  std::optional<std::size_t> vertex_index(const std::string& id) const;
  std::optional<std::size_t> edge_index(const std::string& id) const;
  std::optional<std::size_t> triangle_index(const std::string& id) const;

  // Resolved indices; npos where a reference dangles.
  std::size_t src_index(std::size_t edge) const { return edge_src_[edge]; }
  std::size_t tgt_index(std::size_t edge) const { return edge_tgt_[edge]; }
  struct TriangleIndex {
    std::size_t first, second, long_edge;
  };
  const TriangleIndex& triangle_edges(std::size_t t) const { return tri_idx_[t]; }

  friend bool operator==(const SSet2& a, const SSet2& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.triangles_ == b.triangles_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;

  std::unordered_map<std::string, std::size_t> vertex_ix_;
  std::unordered_map<std::string, std::size_t> edge_ix_;
  std::unordered_map<std::string, std::size_t> triangle_ix_;
  std::vector<std::size_t> edge_src_;
  std::vector<std::size_t> edge_tgt_;
  std::vector<TriangleIndex> tri_idx_;
};

/// A simplicial map, given on vertices and edges. An edge may be sent to an
/// identity edge (a collapse).
struct SSetMap {
  std::unordered_map<std::string, std::string> vertex_map;
  std::unordered_map<std::string, std::string> edge_map;
};

inline constexpr int kMaxSimplexDimension = 16;

/// Vertices "0".."n", edges "ei_j" for i < j, triangles "ti_j_k".
SSet2 standard_simplex(int n);
/// standard_simplex(n) without its triangles.
SSet2 one_skeleton(int n);
/// Delta^1 x Delta^1 with its diagonal: u:a->b, v:a->c, w:b->d, y:c->d,
/// diag:a->d and triangles (u,w,diag), (v,y,diag).
SSet2 square();

std::string simplex_vertex_id(int i);
std::string simplex_edge_id(int i, int j);

/// Pushout of a and b along an injective matching of vertices. Cells of `a`
/// keep their ids and order; cells of `b` follow in their order, renamed with
/// trailing primes where an id would collide. A paired vertex of `b` is
/// replaced by its partner in `a`.
SSet2 glue_at_vertices(const SSet2& a, const SSet2& b,
                       const std::vector<std::pair<std::string, std::string>>& pairs);

/// Reverses every edge; triangle (first, second, long) becomes
/// (second, first, long). Ids are kept.
SSet2 opposite(const SSet2& a);

/// One message per violated invariant, each naming the offending id.
std::vector<std::string> validate(const SSet2& a);

/// Throws InvalidShape with the first diagnostic when validate() is non-empty.
void require_valid(const SSet2& a, const std::string& context);

/// Renames every cell by position: vertices v0.., edges e0.., triangles t0...
SSet2 canonical_relabel(const SSet2& a);

/// Verifies that `map` sends vertices and edges of `from` into `to` while
/// preserving endpoints and triangles (up to collapse). Returns diagnostics.
std::vector<std::string> validate_map(const SSetMap& map, const SSet2& from, const SSet2& to);

nlohmann::json to_json(const SSet2& a);
SSet2 sset_from_json(const nlohmann::json& j);

}  // namespace qstack
