#include "qstack/dsl.hpp"

#include <charconv>
#include <map>
#include <optional>

#include "qstack/error.hpp"

namespace qstack {

namespace {

bool ident_char(std::string_view s, std::size_t i) {
  const char c = s[i];
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return true;
  switch (c) {
    case '_': case '\'': case '*': case '^': case '(': case ')': case ',':
      return true;
    case '-':
      return i + 1 >= s.size() || s[i + 1] != '>';
    default:
      return false;
  }
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
  bool ident;
};

// Splits one line (comment already removed) into identifiers and the
// punctuation tokens ':', '.', '->', '=>', '='.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (ident_char(line, i)) {
      const std::size_t start = i;
      while (i < line.size() && ident_char(line, i)) ++i;
      out.push_back({std::string(line.substr(start, i - start)), start + 1, true});
      continue;
    }
    if ((c == '-' || c == '=') && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({std::string(line.substr(i, 2)), i + 1, false});
      i += 2;
      continue;
    }
    if (c == ':' || c == '.' || c == '=') {
      out.push_back({std::string(1, c), i + 1, false});
      ++i;
      continue;
    }
    throw ParseError(line_no, i + 1, std::string("unexpected character '") + c + "'");
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_len)
      : tokens_(std::move(tokens)), line_(line_no), end_column_(line_len + 1) {}

  const Token& ident(const char* what) {
    const Token& t = peek(what);
    if (!t.ident) fail(t.column, std::string("expected ") + what + ", found '" + t.text + "'");
    ++pos_;
    return t;
  }

  void punct(const char* p) {
    const Token& t = peek((std::string("'") + p + "'").c_str());
    if (t.ident || t.text != p) fail(t.column, std::string("expected '") + p + "', found '" + t.text + "'");
    ++pos_;
  }

  std::optional<Token> optional_keyword(const char* word) {
    if (pos_ < tokens_.size() && tokens_[pos_].ident && tokens_[pos_].text == word) {
      return tokens_[pos_++];
    }
    return std::nullopt;
  }

  void finish() {
    if (pos_ < tokens_.size()) {
      fail(tokens_[pos_].column, "unexpected '" + tokens_[pos_].text + "' at end of line");
    }
  }

  [[noreturn]] void fail(std::size_t column, const std::string& what) const {
    throw ParseError(line_, column, what);
  }

 private:
  const Token& peek(const char* what) {
    if (pos_ >= tokens_.size()) fail(end_column_, std::string("expected ") + what + " before end of line");
    return tokens_[pos_];
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t end_column_;
};

struct Location {
  std::size_t line;
  std::size_t column;
};

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!ident_char(s, i)) return false;
  }
  return true;
}

QuiverDoc parse_quiver(std::string_view text) {
  QuiverDoc doc;
  bool have_name = false;
  std::map<std::string, Location> vertex_at, edge_at, triangle_at, dim_at;
  struct Ref {
    std::string id;
    Location at;
    bool vertex;  // else edge
  };
  std::vector<Ref> refs;
  std::vector<Location> edge_loc, triangle_loc;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto tokens = tokenize(line, line_no);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    LineParser p(std::move(tokens), line_no, line.size());
    const Token kw = p.ident("a keyword");
    if (!have_name && kw.text != "quiver") p.fail(kw.column, "expected 'quiver NAME' first");

    if (kw.text == "quiver") {
      if (have_name) p.fail(kw.column, "second 'quiver' declaration");
      doc.name = p.ident("quiver name").text;
      have_name = true;
    } else if (kw.text == "vertex") {
      const Token id = p.ident("vertex id");
      const bool framed = p.optional_keyword("framed").has_value();
      if (!vertex_at.emplace(id.text, Location{line_no, id.column}).second) {
        p.fail(id.column, "duplicate vertex id '" + id.text + "'");
      }
      doc.vertices.push_back({id.text, framed});
    } else if (kw.text == "edge") {
      const Token id = p.ident("edge id");
      p.punct(":");
      const Token src = p.ident("source vertex");
      p.punct("->");
      const Token tgt = p.ident("target vertex");
      const bool identity = p.optional_keyword("identity").has_value();
      if (!edge_at.emplace(id.text, Location{line_no, id.column}).second) {
        p.fail(id.column, "duplicate edge id '" + id.text + "'");
      }
      if (identity && src.text != tgt.text) {
        p.fail(tgt.column, "identity edge '" + id.text + "' must be a loop");
      }
      refs.push_back({src.text, {line_no, src.column}, true});
      refs.push_back({tgt.text, {line_no, tgt.column}, true});
      doc.edges.push_back({id.text, src.text, tgt.text, identity});
    } else if (kw.text == "triangle") {
      const Token id = p.ident("triangle id");
      p.punct(":");
      const Token first = p.ident("first edge");
      p.punct(".");
      const Token second = p.ident("second edge");
      p.punct("=>");
      const Token long_edge = p.ident("long edge");
      if (!triangle_at.emplace(id.text, Location{line_no, id.column}).second) {
        p.fail(id.column, "duplicate triangle id '" + id.text + "'");
      }
      for (const Token* t : {&first, &second, &long_edge}) {
        refs.push_back({t->text, {line_no, t->column}, false});
      }
      doc.triangles.push_back({id.text, first.text, second.text, long_edge.text});
    } else if (kw.text == "dim") {
      const Token v = p.ident("vertex");
      p.punct("=");
      const Token n = p.ident("dimension");
      std::size_t value = 0;
      const auto* b = n.text.data();
      const auto* e = b + n.text.size();
      auto [ptr, ec] = std::from_chars(b, e, value);
      if (ec != std::errc() || ptr != e) p.fail(n.column, "dimension must be a non-negative integer");
      if (!dim_at.emplace(v.text, Location{line_no, v.column}).second) {
        p.fail(v.column, "duplicate dimension for '" + v.text + "'");
      }
      refs.push_back({v.text, {line_no, v.column}, true});
      doc.dims.emplace_back(v.text, value);
    } else {
      p.fail(kw.column, "unknown keyword '" + kw.text + "'");
    }
    p.finish();
    if (end == text.size()) break;
  }
  if (!have_name) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'quiver NAME' declaration");

  for (const auto& r : refs) {
    const auto& table = r.vertex ? vertex_at : edge_at;
    if (!table.count(r.id)) {
      throw ParseError(r.at.line, r.at.column, std::string("unresolved ") +
                                                   (r.vertex ? "vertex" : "edge") + " '" + r.id + "'");
    }
  }

  std::map<std::string, const Edge*> edge_by_id;
  for (const auto& e : doc.edges) edge_by_id[e.id] = &e;
  for (const auto& t : doc.triangles) {
    const Edge& f = *edge_by_id.at(t.first);
    const Edge& s = *edge_by_id.at(t.second);
    const Edge& l = *edge_by_id.at(t.long_edge);
    const Location at = triangle_at.at(t.id);
    if (f.tgt != s.src) {
      throw ParseError(at.line, at.column, "triangle '" + t.id + "': '" + f.id + "' ends at '" + f.tgt +
                                               "' but '" + s.id + "' starts at '" + s.src + "'");
    }
    if (f.src != l.src || s.tgt != l.tgt) {
      throw ParseError(at.line, at.column, "triangle '" + t.id + "': long edge '" + l.id +
                                               "' must run from '" + f.src + "' to '" + s.tgt + "'");
    }
  }
  return doc;
}

SSet2 QuiverDoc::shape() const {
  std::vector<std::string> vs;
  vs.reserve(vertices.size());
  for (const auto& v : vertices) vs.push_back(v.id);
  SSet2 out(std::move(vs), edges, triangles);
  require_valid(out, "quiver '" + name + "'");
  return out;
}

FramingFn QuiverDoc::framing() const {
  FramingFn f;
  for (const auto& v : vertices) f.set(v.id, v.framed);
  return f;
}

DimVector QuiverDoc::dim_map() const { return DimVector(dims.begin(), dims.end()); }

std::string print_quiver(const QuiverDoc& doc) {
  std::string out = "quiver " + doc.name + "\n";
  for (const auto& v : doc.vertices) out += "vertex " + v.id + (v.framed ? " framed\n" : "\n");
  for (const auto& e : doc.edges) {
    out += "edge " + e.id + " : " + e.src + " -> " + e.tgt + (e.identity ? " identity\n" : "\n");
  }
  for (const auto& t : doc.triangles) {
    out += "triangle " + t.id + " : " + t.first + " . " + t.second + " => " + t.long_edge + "\n";
  }
  for (const auto& [v, d] : doc.dims) out += "dim " + v + " = " + std::to_string(d) + "\n";
  return out;
}

QuiverDoc make_doc(const std::string& name, const SSet2& shape, const FramingFn& framing,
                   const DimVector& dims) {
  auto check = [](const std::string& id) {
    if (!is_identifier(id)) throw Error("identifier '" + id + "' cannot be written in the text format");
  };
  check(name);
  QuiverDoc doc;
  doc.name = name;
  for (const auto& v : shape.vertices()) {
    check(v);
    doc.vertices.push_back({v, framing.contains(v) && framing.is_framing(v)});
  }
  for (const auto& e : shape.edges()) {
    check(e.id);
    doc.edges.push_back(e);
  }
  for (const auto& t : shape.triangles()) {
    check(t.id);
    doc.triangles.push_back(t);
  }
  for (const auto& v : shape.vertices()) {
    if (auto it = dims.find(v); it != dims.end()) doc.dims.emplace_back(v, it->second);
  }
  return doc;
}

}  // namespace qstack
