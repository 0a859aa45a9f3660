#include "hampow/digraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "hampow/error.hpp"

namespace hampow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotEulerian: return "NotEulerian";
    case ErrorCode::kEdgeMissing: return "EdgeMissing";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kNotAcyclic: return "NotAcyclic";
    case ErrorCode::kNotMinimallyEulerian: return "NotMinimallyEulerian";
    case ErrorCode::kInvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::kNotEulerCircuit: return "NotEulerCircuit";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kParameterTooSmall: return "ParameterTooSmall";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

Digraph Digraph::build(std::size_t n, std::span<const Edge> edges) {
  Digraph g;
  g.out_adj_.assign(n, {});
  g.in_adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(u));
    g.out_adj_[u].push_back(v);
    g.in_adj_[v].push_back(u);
  }
  for (Vertex u = 0; u < n; ++u) {
    auto& adj = g.out_adj_[u];
    std::sort(adj.begin(), adj.end());
    if (auto it = std::adjacent_find(adj.begin(), adj.end()); it != adj.end()) {
      throw Error(ErrorCode::kDuplicateEdge, "(" + std::to_string(u) + "," + std::to_string(*it) + ")");
    }
    std::sort(g.in_adj_[u].begin(), g.in_adj_[u].end());
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  if (u >= out_adj_.size()) return false;
  return std::binary_search(out_adj_[u].begin(), out_adj_[u].end(), v);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < out_adj_.size(); ++u) {
    for (Vertex v : out_adj_[u]) result.emplace_back(u, v);
  }
  return result;
}

std::vector<DegreePair> degrees(const Digraph& g) {
  std::vector<DegreePair> result(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) result[v] = {g.in_degree(v), g.out_degree(v)};
  return result;
}

std::size_t p_sharp(const Digraph& g) {
  std::size_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto out = g.out_degree(v);
    const auto in = g.in_degree(v);
    total += out > in ? out - in : in - out;
  }
  return total / 2;
}

bool is_balanced(const Digraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) != g.in_degree(v)) return false;
  }
  return true;
}

namespace {

std::vector<bool> sweep(std::size_t n, Vertex source, const std::function<std::span<const Vertex>(Vertex)>& next) {
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : next(u)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool all_true(const std::vector<bool>& v) { return std::find(v.begin(), v.end(), false) == v.end(); }

}  // namespace

std::vector<bool> reachable_from(const Digraph& g, Vertex source) {
  return sweep(g.vertex_count(), source, [&](Vertex u) { return g.out_neighbors(u); });
}

bool is_strongly_connected(const Digraph& g) {
  if (g.vertex_count() <= 1) return true;
  return all_true(reachable_from(g, 0)) &&
         all_true(sweep(g.vertex_count(), 0, [&](Vertex u) { return g.in_neighbors(u); }));
}

bool is_connected_eulerian_sense(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (auto nbrs : {g.out_neighbors(u), g.in_neighbors(u)}) {
      for (Vertex w : nbrs) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
  }
  return count == n;
}

std::optional<std::vector<Vertex>> topological_sort(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> pending(n);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    pending[v] = g.in_degree(v);
    if (pending[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    const Vertex u = ready.top();
    ready.pop();
    order.push_back(u);
    for (Vertex w : g.out_neighbors(u)) {
      if (--pending[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

bool is_acyclic(const Digraph& g) { return topological_sort(g).has_value(); }

std::vector<std::uint32_t> bfs_distances(const Digraph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), DistanceMatrix::kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.out_neighbors(u)) {
      if (dist[w] == DistanceMatrix::kInfinity) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix result(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto row = bfs_distances(g, u);
    for (Vertex v = 0; v < n; ++v) result.at(u, v) = row[v];
  }
  return result;
}

std::optional<std::vector<Vertex>> shortest_dipath(const Digraph& g, Vertex from, Vertex to) {
  const std::size_t n = g.vertex_count();
  constexpr Vertex kNone = 0xFFFFFFFFu;
  std::vector<Vertex> parent(n, kNone);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.out_neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) parse_error(line_no, "missing \"n m\" header");
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) parse_error(line_no, "bad header \"" + line + "\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) parse_error(line_no, "expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) parse_error(line_no, "bad edge \"" + line + "\"");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange, "line " + std::to_string(line_no) + ": \"" + line + "\"");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, line_no)) parse_error(line_no, "trailing content after " + std::to_string(m) + " edges");
  return Digraph::build(static_cast<std::size_t>(n), edges);
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& g, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const Digraph& g, const std::string& name) {
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
}

}  // namespace hampow
