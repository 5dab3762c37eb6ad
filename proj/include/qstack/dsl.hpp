#pragma once

// Line-oriented text format for quivers with composition witnesses:
//
//   quiver NAME
//   vertex ID [framed]
//   edge ID : SRC -> TGT [identity]
//   triangle ID : FIRST . SECOND => LONG
//   dim VERTEX = INT
//
// '#' starts a comment. Identifiers use [A-Za-z0-9_'*^(),] and '-' when it
// does not begin "->". Declarations may appear in any order after the
// quiver line and may refer forward.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qstack/quiver_ops.hpp"
#include "qstack/rep.hpp"
#include "qstack/sset.hpp"

namespace qstack {

struct VertexDecl {
  std::string id;
  bool framed = false;

  friend bool operator==(const VertexDecl&, const VertexDecl&) = default;
};

struct QuiverDoc {
  std::string name;
  std::vector<VertexDecl> vertices;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  std::vector<std::pair<std::string, std::size_t>> dims;  // partial, in declaration order

  SSet2 shape() const;
  FramingFn framing() const;
  DimVector dim_map() const;

  friend bool operator==(const QuiverDoc&, const QuiverDoc&) = default;
};

/// Throws ParseError carrying the 1-based line and column of the problem.
QuiverDoc parse_quiver(std::string_view text);

/// Canonical text: the quiver line, then vertices, edges, triangles and
/// dims, each group in declaration order, single-spaced.
std::string print_quiver(const QuiverDoc& doc);

/// The document for a shape; every identifier must be printable.
QuiverDoc make_doc(const std::string& name, const SSet2& shape, const FramingFn& framing,
                   const DimVector& dims = {});

bool is_identifier(std::string_view s);

}  // namespace qstack
