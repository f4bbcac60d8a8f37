#include "tglab/timegraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tglab {

namespace {

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
}

std::size_t factorial(int n) {
  std::size_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::size_t>(k);
  return out;
}

}  // namespace

std::size_t edge_count(int n) {
  check_order(n);
  const auto m = static_cast<std::size_t>(n);
  return m * m * (m - 1);
}

bool is_valid_edge(const Edge& e, int n) {
  return e.i >= 1 && e.i <= n && e.j >= 1 && e.j <= n && e.t >= 1 && e.t <= n - 1;
}

std::size_t edge_index(const Edge& e, int n) {
  if (!is_valid_edge(e, n)) {
    throw std::out_of_range("edge " + to_string(e) + " is not in E(" + std::to_string(n) + ")");
  }
  const auto m = static_cast<std::size_t>(n);
  return ((static_cast<std::size_t>(e.t - 1) * m + static_cast<std::size_t>(e.i - 1)) * m) +
         static_cast<std::size_t>(e.j - 1);
}

Edge edge_from_index(std::size_t index, int n) {
  if (index >= edge_count(n)) {
    throw std::out_of_range("edge index " + std::to_string(index) + " out of range for order " +
                            std::to_string(n));
  }
  const auto m = static_cast<std::size_t>(n);
  Edge e;
  e.j = static_cast<int>(index % m) + 1;
  index /= m;
  e.i = static_cast<int>(index % m) + 1;
  e.t = static_cast<int>(index / m) + 1;
  return e;
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.t) + ")";
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const auto n = image_.size();
  std::vector<bool> seen(n, false);
  for (int v : image_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation image");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

std::string to_string(const Permutation& p) {
  std::string out = "(";
  for (int k = 1; k <= p.size(); ++k) {
    if (k > 1) out += ",";
    out += std::to_string(p(k));
  }
  return out + ")";
}

std::vector<Permutation> all_permutations(int n, int cap) {
  check_order(n);
  if (n > cap) {
    throw OracleScaleExceeded("oracle scale exceeded: n = " + std::to_string(n) +
                              " exceeds permutation cap " + std::to_string(cap));
  }
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

bool is_incident(const Edge& e, const Permutation& p) {
  if (!is_valid_edge(e, p.size())) {
    throw std::invalid_argument("edge and permutation have different orders");
  }
  return p(e.t) == e.i && p(e.t + 1) == e.j;
}

std::vector<Edge> incident_edges(const Permutation& p) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(std::max(0, p.size() - 1)));
  for (int t = 1; t < p.size(); ++t) {
    out.push_back(Edge{p(t), p(t + 1), t});
  }
  return out;
}

std::vector<std::size_t> incident_edge_indices(const Permutation& p) {
  std::vector<std::size_t> out;
  for (const Edge& e : incident_edges(p)) out.push_back(edge_index(e, p.size()));
  return out;
}

// --- TimeGraph ---

TimeGraph::TimeGraph(int n) : n_(n), edges_(edge_count(n)) {}

TimeGraph TimeGraph::complete(int n) {
  TimeGraph g(n);
  for (std::size_t k = 0; k < edge_count(n); ++k) g.edges_.set(k);
  return g;
}

TimeGraph TimeGraph::from_indices(int n, const std::vector<std::size_t>& indices) {
  TimeGraph g(n);
  for (std::size_t k : indices) g.add_index(k);
  return g;
}

bool TimeGraph::contains(const Edge& e) const { return edges_.test(edge_index(e, n_)); }

void TimeGraph::add(const Edge& e) { edges_.set(edge_index(e, n_)); }

void TimeGraph::add_index(std::size_t index) {
  if (index >= edges_.size()) {
    throw std::out_of_range("edge index " + std::to_string(index) + " out of range for order " +
                            std::to_string(n_));
  }
  edges_.set(index);
}

void TimeGraph::remove_index(std::size_t index) {
  if (index >= edges_.size()) throw std::out_of_range("edge index out of range");
  edges_.reset(index);
}

std::vector<std::size_t> TimeGraph::complement_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (!edges_.test(k)) out.push_back(k);
  }
  return out;
}

// --- Graph ---

Graph::Graph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  check_order(n);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n, 1);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int k = 0; k < 5; ++k) {
    g.add_edge(k + 1, (k + 1) % 5 + 1);          // outer 5-cycle
    g.add_edge(k + 6, (k + 2) % 5 + 6);          // inner pentagram
    g.add_edge(k + 1, k + 6);                    // spokes
  }
  return g;
}

Graph Graph::from_mask(int n, unsigned long long mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++bit) {
      if ((mask >> bit) & 1ull) g.add_edge(i, j);
    }
  }
  return g;
}

void Graph::add_edge(int i, int j) {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("graph edge {" + std::to_string(i) + "," + std::to_string(j) +
                            "} out of range for n = " + std::to_string(n_));
  }
  if (i == j) throw std::invalid_argument("self-loop {" + std::to_string(i) + "," + std::to_string(i) + "}");
  const auto m = static_cast<std::size_t>(n_);
  adjacency_[static_cast<std::size_t>(i - 1) * m + static_cast<std::size_t>(j - 1)] = true;
  adjacency_[static_cast<std::size_t>(j - 1) * m + static_cast<std::size_t>(i - 1)] = true;
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) return false;
  return adjacency_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j - 1)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::size_t Graph::edge_total() const { return edges().size(); }

// --- Oracles and the reduction ---

bool is_permutation_incident(const Permutation& p, const TimeGraph& g) {
  if (p.size() != g.order()) throw std::invalid_argument("permutation and time-graph orders differ");
  for (int t = 1; t < p.size(); ++t) {
    if (!g.contains(Edge{p(t), p(t + 1), t})) return false;
  }
  return true;
}

std::vector<Permutation> incident_permutations(const TimeGraph& g, int cap) {
  std::vector<Permutation> out;
  for (Permutation& p : all_permutations(g.order(), cap)) {
    if (is_permutation_incident(p, g)) out.push_back(std::move(p));
  }
  return out;
}

bool is_hamiltonian_oracle(const TimeGraph& g, int cap) {
  return !incident_permutations(g, cap).empty();
}

TimeGraph reduce_hamp(const Graph& g) {
  const int n = g.order();
  TimeGraph out(n);
  for (auto [i, j] : g.edges()) {
    for (int t = 1; t < n; ++t) {
      out.add(Edge{i, j, t});
      out.add(Edge{j, i, t});
    }
  }
  return out;
}

namespace {

bool extend_path(const Graph& g, int last, int depth, std::vector<bool>& used) {
  if (depth == g.order()) return true;
  for (int v = 1; v <= g.order(); ++v) {
    if (used[static_cast<std::size_t>(v)] || !g.has_edge(last, v)) continue;
    used[static_cast<std::size_t>(v)] = true;
    if (extend_path(g, v, depth + 1, used)) return true;
    used[static_cast<std::size_t>(v)] = false;
  }
  return false;
}

}  // namespace

bool hamiltonian_path_oracle(const Graph& g, int cap) {
  const int n = g.order();
  check_order(n);
  if (n > cap) {
    throw OracleScaleExceeded("oracle scale exceeded: n = " + std::to_string(n) +
                              " exceeds path-search cap " + std::to_string(cap));
  }
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    used[static_cast<std::size_t>(start)] = true;
    if (extend_path(g, start, 1, used)) return true;
    used[static_cast<std::size_t>(start)] = false;
  }
  return false;
}

// --- Text formats ---

namespace {

std::string next_content_line(std::istream& in, bool& ok) {
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      ok = true;
      return line;
    }
  }
  ok = false;
  return {};
}

int read_order(std::istream& in) {
  bool ok = false;
  std::istringstream header(next_content_line(in, ok));
  int n = 0;
  if (!ok || !(header >> n) || n < 1) throw std::invalid_argument("expected order n >= 1 on first line");
  return n;
}

}  // namespace

Graph read_graph(std::istream& in) {
  Graph g(read_order(in));
  bool ok = true;
  while (true) {
    const std::string line = next_content_line(in, ok);
    if (!ok) break;
    std::istringstream fields(line);
    int i = 0;
    int j = 0;
    if (!(fields >> i >> j)) throw std::invalid_argument("bad graph edge line: " + line);
    g.add_edge(i, j);
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

TimeGraph read_time_graph(std::istream& in) {
  TimeGraph g(read_order(in));
  bool ok = true;
  while (true) {
    const std::string line = next_content_line(in, ok);
    if (!ok) break;
    std::istringstream fields(line);
    long long index = -1;
    if (!(fields >> index) || index < 0) throw std::invalid_argument("bad edge index line: " + line);
    g.add_index(static_cast<std::size_t>(index));
  }
  return g;
}

void write_time_graph(std::ostream& out, const TimeGraph& g) {
  out << g.order() << '\n';
  for (std::size_t k : g.edge_indices()) out << k << '\n';
}

}  // namespace tglab
