#include "reconf/multiset.hpp"

#include <algorithm>
#include <sstream>

#include "reconf/errors.hpp"

namespace reconf {

namespace {

void require_same_universe(const TokenMultiset& a, const TokenMultiset& b) {
  if (a.universe() != b.universe()) {
    throw InputError("multisets over different universes (" + std::to_string(a.universe()) +
                     " vs " + std::to_string(b.universe()) + ")");
  }
}

template <typename Op>
TokenMultiset pointwise(const TokenMultiset& a, const TokenMultiset& b, Op op) {
  require_same_universe(a, b);
  TokenMultiset out(a.universe());
  for (std::size_t v = 0; v < a.universe(); ++v) {
    const Count c = op(a.counts()[v], b.counts()[v]);
    if (c > 0) out.add(static_cast<Vertex>(v), c);
  }
  return out;
}

}  // namespace

TokenMultiset TokenMultiset::from_vertices(std::size_t universe, std::span<const Vertex> tokens) {
  TokenMultiset out(universe);
  for (Vertex v : tokens) out.add(v);
  return out;
}

TokenMultiset TokenMultiset::from_counts(std::size_t universe,
                                         std::initializer_list<std::pair<Vertex, Count>> counts) {
  TokenMultiset out(universe);
  for (const auto& [v, c] : counts) out.add(v, c);
  return out;
}

void TokenMultiset::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= counts_.size()) {
    throw InputError("token vertex " + std::to_string(v) + " outside [0, " +
                     std::to_string(counts_.size()) + ")");
  }
}

void TokenMultiset::add(Vertex v, Count c) {
  check(v);
  if (c < 0) throw TokenError("negative multiplicity");
  counts_[static_cast<std::size_t>(v)] += c;
  total_ += c;
}

void TokenMultiset::remove(Vertex v, Count c) {
  check(v);
  auto& slot = counts_[static_cast<std::size_t>(v)];
  if (c < 0 || slot < c) {
    throw TokenError("cannot remove " + std::to_string(c) + " token(s) from vertex " +
                     std::to_string(v) + " holding " + std::to_string(slot));
  }
  slot -= c;
  total_ -= c;
}

std::vector<Vertex> TokenMultiset::support() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < counts_.size(); ++v) {
    if (counts_[v] > 0) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> TokenMultiset::expand() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(total_));
  for (std::size_t v = 0; v < counts_.size(); ++v) {
    out.insert(out.end(), static_cast<std::size_t>(counts_[v]), static_cast<Vertex>(v));
  }
  return out;
}

TokenMultiset multiset_union(const TokenMultiset& a, const TokenMultiset& b) {
  return pointwise(a, b, [](Count x, Count y) { return x + y; });
}

TokenMultiset multiset_intersection(const TokenMultiset& a, const TokenMultiset& b) {
  return pointwise(a, b, [](Count x, Count y) { return std::min(x, y); });
}

TokenMultiset multiset_difference(const TokenMultiset& a, const TokenMultiset& b) {
  return pointwise(a, b, [](Count x, Count y) { return std::max<Count>(x - y, 0); });
}

TokenMultiset multiset_symmetric_difference(const TokenMultiset& a, const TokenMultiset& b) {
  return multiset_union(multiset_difference(a, b), multiset_difference(b, a));
}

TokenMultiset slide(const TokenMultiset& d, Vertex u, Vertex v) {
  TokenMultiset out = d;
  out.remove(u);
  out.add(v);
  return out;
}

std::string to_string(const TokenMultiset& d) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : d.support()) {
    if (!first) os << ", ";
    first = false;
    os << v << ':' << d[v];
  }
  os << '}';
  return os.str();
}

}  // namespace reconf
