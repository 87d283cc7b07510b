#include "reconf/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "reconf/errors.hpp"

namespace reconf {

namespace {

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.contains(v)) {
    throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.size()) + ")");
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

std::vector<Count> distances_from(const Graph& g, Vertex source) {
  require_vertex(g, source, "distances_from");
  std::vector<Count> dist(g.size(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.size());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == kUnreachable) {
        dw = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> succ_set(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u, "succ_set");
  require_vertex(g, v, "succ_set");
  if (u == v) return {};
  auto dist = distances_from(g, v);
  const Count du = dist[static_cast<std::size_t>(u)];
  if (du == kUnreachable) {
    throw DomainError("succ_set: vertex " + std::to_string(v) + " unreachable from " +
                      std::to_string(u));
  }
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(u)) {
    if (dist[static_cast<std::size_t>(w)] == du - 1) out.push_back(w);
  }
  return out;
}

DistanceTable::DistanceTable(const Graph& g) : graph_(&g), n_(g.size()), table_(n_ * n_) {
  for (std::size_t s = 0; s < n_; ++s) {
    auto row = distances_from(g, static_cast<Vertex>(s));
    std::copy(row.begin(), row.end(), table_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

std::vector<Vertex> DistanceTable::successors(Vertex u, Vertex v) const {
  require_vertex(*graph_, u, "succ_set");
  require_vertex(*graph_, v, "succ_set");
  if (u == v) return {};
  const Count du = (*this)(u, v);
  if (du == kUnreachable) {
    throw DomainError("succ_set: vertex " + std::to_string(v) + " unreachable from " +
                      std::to_string(u));
  }
  std::vector<Vertex> out;
  for (Vertex w : graph_->neighbors(u)) {
    if ((*this)(w, v) == du - 1) out.push_back(w);
  }
  return out;
}

RootedTree::RootedTree(Graph base, Vertex root) : base_(std::move(base)), root_(root) {
  const std::size_t n = base_.size();
  if (n == 0) throw InputError("a rooted tree needs at least one vertex");
  require_vertex(base_, root, "RootedTree root");
  if (base_.edge_count() != n - 1) {
    throw InputError("a tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) +
                     " edges, got " + std::to_string(base_.edge_count()));
  }
  parent_.assign(n, -1);
  depth_.assign(n, -1);
  std::vector<Vertex> bfs;
  bfs.reserve(n);
  parent_[static_cast<std::size_t>(root)] = root;
  depth_[static_cast<std::size_t>(root)] = 0;
  bfs.push_back(root);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    Vertex u = bfs[head];
    for (Vertex w : base_.neighbors(u)) {
      if (depth_[static_cast<std::size_t>(w)] < 0) {
        depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(u)] + 1;
        parent_[static_cast<std::size_t>(w)] = u;
        bfs.push_back(w);
      }
    }
  }
  if (bfs.size() != n) throw InputError("tree is not connected");

  // Counting sort by depth; scanning ids upward keeps ties in increasing id.
  const auto max_depth = static_cast<std::size_t>(depth_[static_cast<std::size_t>(bfs.back())]);
  std::vector<std::size_t> start(max_depth + 2, 0);
  for (std::size_t v = 0; v < n; ++v) ++start[max_depth - static_cast<std::size_t>(depth_[v]) + 1];
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  order_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    order_[start[max_depth - static_cast<std::size_t>(depth_[v])]++] = static_cast<Vertex>(v);
  }
}

}  // namespace reconf
