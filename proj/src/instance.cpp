#include "reconf/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace reconf {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

/// Splits on whitespace after dropping "#" comments; blank lines vanish.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

template <typename Int>
Int parse_int(const Line& line, const Token& tok, const char* what) {
  Int value{};
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line.number, tok.column,
                     std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
  }
  return value;
}

Vertex parse_vertex(const Line& line, const Token& tok, std::size_t n) {
  const auto v = parse_int<long long>(line, tok, "vertex id");
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw ParseError(line.number, tok.column,
                     "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
  }
  return static_cast<Vertex>(v);
}

/// "<keyword> K: v1 ... vK"
std::vector<Vertex> parse_list(const Line& line, std::size_t n) {
  const auto& toks = line.tokens;
  if (toks.size() < 2 || toks[1].text.empty() || toks[1].text.back() != ':') {
    const std::size_t col = toks.size() < 2 ? toks[0].column + toks[0].text.size() : toks[1].column;
    throw ParseError(line.number, col, "expected '<count>:' after '" + std::string(toks[0].text) + "'");
  }
  Token count_tok{toks[1].text.substr(0, toks[1].text.size() - 1), toks[1].column};
  const auto count = parse_int<long long>(line, count_tok, "count");
  if (count < 0 || static_cast<std::size_t>(count) != toks.size() - 2) {
    throw ParseError(line.number, toks[1].column,
                     "declared " + std::to_string(count) + " entries but listed " +
                         std::to_string(toks.size() - 2));
  }
  std::vector<Vertex> out;
  for (std::size_t i = 2; i < toks.size(); ++i) out.push_back(parse_vertex(line, toks[i], n));
  return out;
}

void expect_arity(const Line& line, std::size_t arity, const char* shape) {
  if (line.tokens.size() != arity) {
    const auto& tok = line.tokens.size() > arity ? line.tokens[arity] : line.tokens.back();
    throw ParseError(line.number, tok.column, std::string("expected '") + shape + "'");
  }
}

}  // namespace

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Tree: return "tree";
    case StructureKind::Graph: return "graph";
    case StructureKind::Intervals: return "intervals";
  }
  return "?";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 message),
      line_(line),
      column_(column) {}

Instance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty instance");

  Instance inst;
  std::size_t idx = 0;
  {
    const Line& head = lines[idx++];
    expect_arity(head, 2, "tree|graph|intervals <n>");
    const auto kw = head.tokens[0].text;
    if (kw == "tree") {
      inst.kind = StructureKind::Tree;
    } else if (kw == "graph") {
      inst.kind = StructureKind::Graph;
    } else if (kw == "intervals") {
      inst.kind = StructureKind::Intervals;
    } else {
      throw ParseError(head.number, head.tokens[0].column,
                       "unknown structure '" + std::string(kw) + "'");
    }
    const auto n = parse_int<long long>(head, head.tokens[1], "vertex count");
    if (n < 1) throw ParseError(head.number, head.tokens[1].column, "vertex count must be positive");
    inst.n = static_cast<std::size_t>(n);
  }

  auto is_keyword = [](const Line& line) {
    return line.tokens[0].text == "tokens" || line.tokens[0].text == "set";
  };

  if (inst.kind == StructureKind::Intervals) {
    std::vector<std::optional<Interval>> slots(inst.n);
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (idx >= lines.size() || is_keyword(lines[idx])) {
        const std::size_t at = idx < lines.size() ? lines[idx].number : lines.back().number + 1;
        throw ParseError(at, 1, "expected " + std::to_string(inst.n) + " interval lines");
      }
      const Line& line = lines[idx++];
      expect_arity(line, 3, "<id> <left> <right>");
      const Vertex v = parse_vertex(line, line.tokens[0], inst.n);
      if (slots[static_cast<std::size_t>(v)]) {
        throw ParseError(line.number, line.tokens[0].column,
                         "interval for vertex " + std::to_string(v) + " given twice");
      }
      Interval iv{parse_int<Coord>(line, line.tokens[1], "left endpoint"),
                  parse_int<Coord>(line, line.tokens[2], "right endpoint")};
      if (iv.left > iv.right) {
        throw ParseError(line.number, line.tokens[1].column, "left endpoint exceeds right endpoint");
      }
      slots[static_cast<std::size_t>(v)] = iv;
    }
    for (const auto& s : slots) inst.intervals.push_back(*s);
  } else {
    while (idx < lines.size() && !is_keyword(lines[idx])) {
      const Line& line = lines[idx++];
      expect_arity(line, 2, "<u> <v>");
      const Vertex u = parse_vertex(line, line.tokens[0], inst.n);
      const Vertex v = parse_vertex(line, line.tokens[1], inst.n);
      if (u == v) throw ParseError(line.number, line.tokens[1].column, "self-loop");
      inst.edges.emplace_back(u, v);
    }
    if (inst.kind == StructureKind::Tree && inst.edges.size() != inst.n - 1) {
      throw ParseError(lines[0].number, lines[0].tokens[1].column,
                       "a tree on " + std::to_string(inst.n) + " vertices needs " +
                           std::to_string(inst.n - 1) + " edges, found " +
                           std::to_string(inst.edges.size()));
    }
  }

  while (idx < lines.size() && lines[idx].tokens[0].text == "set") {
    const Line& line = lines[idx++];
    if (inst.kind == StructureKind::Intervals) {
      throw ParseError(line.number, 1, "set families are only supported on tree and graph instances");
    }
    auto members = parse_list(line, inst.n);
    if (members.empty()) throw ParseError(line.number, line.tokens[1].column, "empty set");
    inst.sets.push_back(std::move(members));
  }

  TokenMultiset* blocks[2] = {&inst.source, &inst.target};
  std::size_t token_lines[2] = {0, 0};
  for (int b = 0; b < 2; ++b) {
    if (idx >= lines.size()) {
      throw ParseError(lines.back().number + 1, 1, "expected two 'tokens' lines");
    }
    const Line& line = lines[idx++];
    if (line.tokens[0].text != "tokens") {
      throw ParseError(line.number, line.tokens[0].column,
                       "expected 'tokens', got '" + std::string(line.tokens[0].text) + "'");
    }
    *blocks[b] = TokenMultiset::from_vertices(inst.n, parse_list(line, inst.n));
    token_lines[b] = line.number;
  }
  if (idx < lines.size()) {
    throw ParseError(lines[idx].number, lines[idx].tokens[0].column, "unexpected trailing content");
  }
  if (inst.source.total() != inst.target.total()) {
    throw ParseError(token_lines[1], 1,
                     "token counts differ: " + std::to_string(inst.source.total()) + " vs " +
                         std::to_string(inst.target.total()));
  }
  return inst;
}

std::string emit_instance(const Instance& instance) {
  std::ostringstream os;
  os << to_string(instance.kind) << ' ' << instance.n << '\n';
  if (instance.kind == StructureKind::Intervals) {
    for (std::size_t v = 0; v < instance.intervals.size(); ++v) {
      os << v << ' ' << instance.intervals[v].left << ' ' << instance.intervals[v].right << '\n';
    }
  } else {
    for (const auto& [u, v] : instance.edges) os << u << ' ' << v << '\n';
  }
  auto list = [&](const char* keyword, const std::vector<Vertex>& items) {
    os << keyword << ' ' << items.size() << ':';
    for (Vertex v : items) os << ' ' << v;
    os << '\n';
  };
  for (const auto& s : instance.sets) list("set", s);
  list("tokens", instance.source.expand());
  list("tokens", instance.target.expand());
  return os.str();
}

MoveSequence parse_moves(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty move file");
  const Line& head = lines[0];
  if (head.tokens[0].text != "moves") {
    throw ParseError(head.number, head.tokens[0].column, "expected 'moves <count>'");
  }
  expect_arity(head, 2, "moves <count>");
  const auto count = parse_int<long long>(head, head.tokens[1], "move count");
  if (count < 0 || static_cast<std::size_t>(count) != lines.size() - 1) {
    throw ParseError(head.number, head.tokens[1].column,
                     "declared " + std::to_string(count) + " moves but found " +
                         std::to_string(lines.size() - 1));
  }
  MoveSequence seq;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_arity(line, 3, "<from> <to> <count>");
    const auto from = parse_int<Vertex>(line, line.tokens[0], "vertex id");
    const auto to = parse_int<Vertex>(line, line.tokens[1], "vertex id");
    const auto c = parse_int<Count>(line, line.tokens[2], "multiplicity");
    if (from < 0 || to < 0) throw ParseError(line.number, 1, "negative vertex id");
    if (c < 1) throw ParseError(line.number, line.tokens[2].column, "multiplicity must be positive");
    seq.push_back({from, to, c});
  }
  return seq;
}

std::string emit_moves(const MoveSequence& seq) {
  std::ostringstream os;
  os << "moves " << seq.size() << '\n';
  for (const Move& m : seq.moves()) os << m.from << ' ' << m.to << ' ' << m.count << '\n';
  return os.str();
}

Graph instance_graph(const Instance& instance) {
  if (instance.kind == StructureKind::Intervals) {
    return intersection_graph(normalize_representation(instance.intervals));
  }
  return Graph(instance.n, instance.edges);
}

}  // namespace reconf
