#include "treelink/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "edge_list_parser.hpp"

namespace treelink {

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

SignedGraph::SignedGraph(NodeId node_count, std::vector<Edge> edges,
                         std::vector<Sign> labels,
                         std::vector<std::int64_t> original_ids)
    : node_count_(node_count),
      edges_(std::move(edges)),
      labels_(std::move(labels)),
      original_ids_(std::move(original_ids)) {
  if (node_count_ < 1) throw std::invalid_argument("graph needs >= 1 node");
  if (!labels_.empty() && labels_.size() != edges_.size())
    throw std::invalid_argument("label count != edge count");
  if (!original_ids_.empty() &&
      original_ids_.size() != static_cast<std::size_t>(node_count_))
    throw std::invalid_argument("original id count != node count");

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count_ || e.v >= node_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert(pair_key(e.u, e.v)).second)
      throw std::invalid_argument("duplicate edge");
  }

  offsets_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (NodeId v = 0; v < node_count_; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(edges_.size() * 2);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    adjacency_[cursor[edges_[e].u]++] = Neighbor{edges_[e].v, e};
    adjacency_[cursor[edges_[e].v]++] = Neighbor{edges_[e].u, e};
  }
}

SignedGraph SignedGraph::without_labels() const {
  return SignedGraph(node_count_, edges_, {}, original_ids_);
}

LoadResult load_edge_list(std::istream& in) {
  LoadResult result;
  std::unordered_map<std::int64_t, NodeId> id_map;
  std::vector<std::int64_t> original_ids;
  std::vector<Edge> edges;
  std::vector<Sign> labels;
  std::unordered_map<std::uint64_t, Sign> edge_sign;

  auto dense = [&](std::int64_t orig) {
    auto [it, inserted] =
        id_map.emplace(orig, static_cast<NodeId>(original_ids.size()));
    if (inserted) original_ids.push_back(orig);
    return it->second;
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    detail::ParsedLine p;
    if (!detail::parse_edge_line(raw, line_no, p)) continue;
    if (p.u == p.v) {
      ++result.self_loops;
      continue;
    }
    NodeId u = dense(p.u), v = dense(p.v);
    if (u > v) std::swap(u, v);
    auto [it, inserted] = edge_sign.emplace(pair_key(u, v), p.sign);
    if (!inserted) {
      if (it->second != p.sign)
        detail::malformed(line_no, "conflicting duplicate edge");
      ++result.duplicate_edges;
      continue;
    }
    edges.push_back(Edge{u, v});
    labels.push_back(p.sign);
  }
  if (original_ids.empty())
    throw std::runtime_error("edge list: no nodes found");
  const auto node_count = static_cast<NodeId>(original_ids.size());
  result.graph = SignedGraph(node_count, std::move(edges), std::move(labels),
                             std::move(original_ids));
  return result;
}

LoadResult load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_edge_list(in);
}

void save_edge_list(std::ostream& out, const SignedGraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << g.original_id(ed.u) << ' ' << g.original_id(ed.v) << ' '
        << (g.has_labels() ? sign_token(g.label(e)) : "+1") << '\n';
  }
}

void save_edge_list(std::ostream& out, const SignedGraph& g,
                    std::span<const Sign> signs) {
  if (signs.size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("save_edge_list: sign count != edge count");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << g.original_id(ed.u) << ' ' << g.original_id(ed.v) << ' '
        << sign_token(signs[e]) << '\n';
  }
}

void save_edge_list_file(const std::string& path, const SignedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  save_edge_list(out, g);
}

namespace {

// BFS reach from `start`; returns visited flags and count.
std::pair<std::vector<char>, NodeId> reach(const SignedGraph& g,
                                           NodeId start) {
  std::vector<char> seen(g.node_count(), 0);
  std::queue<NodeId> q;
  q.push(start);
  seen[start] = 1;
  NodeId count = 1;
  while (!q.empty()) {
    NodeId x = q.front();
    q.pop();
    for (const Neighbor& nb : g.neighbors(x)) {
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        ++count;
        q.push(nb.node);
      }
    }
  }
  return {std::move(seen), count};
}

}  // namespace

std::optional<NodeId> first_unreachable(const SignedGraph& g) {
  auto [seen, count] = reach(g, 0);
  if (count == g.node_count()) return std::nullopt;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (!seen[v]) return v;
  return std::nullopt;
}

bool is_connected(const SignedGraph& g) {
  return !first_unreachable(g).has_value();
}

void require_connected(const SignedGraph& g, const char* who) {
  if (auto bad = first_unreachable(g)) {
    throw std::runtime_error(std::string(who) + ": graph is disconnected, node " +
                             std::to_string(*bad) + " (original id " +
                             std::to_string(g.original_id(*bad)) +
                             ") is unreachable from node 0");
  }
}

ComponentExtraction largest_component(const SignedGraph& g) {
  std::vector<int> comp(g.node_count(), -1);
  std::vector<NodeId> comp_size;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comp[v] >= 0) continue;
    int c = static_cast<int>(comp_size.size());
    NodeId size = 0;
    std::queue<NodeId> q;
    q.push(v);
    comp[v] = c;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      ++size;
      for (const Neighbor& nb : g.neighbors(x)) {
        if (comp[nb.node] < 0) {
          comp[nb.node] = c;
          q.push(nb.node);
        }
      }
    }
    comp_size.push_back(size);
  }
  int best = 0;
  for (int c = 1; c < static_cast<int>(comp_size.size()); ++c)
    if (comp_size[c] > comp_size[best]) best = c;

  std::vector<NodeId> remap(g.node_count(), -1);
  std::vector<std::int64_t> original_ids;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comp[v] == best) {
      remap[v] = static_cast<NodeId>(original_ids.size());
      original_ids.push_back(g.original_id(v));
    }
  }
  std::vector<Edge> edges;
  std::vector<Sign> labels;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (comp[ed.u] == best && comp[ed.v] == best) {
      edges.push_back(Edge{remap[ed.u], remap[ed.v]});
      if (g.has_labels()) labels.push_back(g.label(e));
    }
  }
  ComponentExtraction out;
  out.removed_nodes = g.node_count() - comp_size[best];
  out.removed_edges = g.edge_count() - static_cast<EdgeId>(edges.size());
  out.graph = SignedGraph(comp_size[best], std::move(edges), std::move(labels),
                          std::move(original_ids));
  return out;
}

int graph_diameter(const SignedGraph& g) {
  require_connected(g, "graph_diameter");
  int diameter = 0;
  std::vector<int> dist(g.node_count());
  for (NodeId s = 0; s < g.node_count(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<NodeId> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      diameter = std::max(diameter, dist[x]);
      for (const Neighbor& nb : g.neighbors(x)) {
        if (dist[nb.node] < 0) {
          dist[nb.node] = dist[x] + 1;
          q.push(nb.node);
        }
      }
    }
  }
  return diameter;
}

}  // namespace treelink
