#include "lietoric/gaussian.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lietoric {

Graph::Graph(int p_, const std::vector<std::pair<int, int>>& es, std::string nm) : p(p_), name(std::move(nm)) {
  if (p < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto [i, j] : es) add_edge(i, j);
}

void Graph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("graph: loop at vertex " + std::to_string(i));
  if (i < 1 || j < 1 || i > p || j > p)
    throw std::invalid_argument("graph: edge " + std::to_string(i) + " " + std::to_string(j) + " outside 1.." +
                                std::to_string(p));
  edges.insert({std::min(i, j), std::max(i, j)});
}

bool Graph::has_edge(int i, int j) const { return edges.count({std::min(i, j), std::max(i, j)}) > 0; }

std::vector<std::pair<int, int>> Graph::non_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j)
      if (!has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

bool Graph::connected() const {
  std::vector<bool> seen(p + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 1; w <= p; ++w)
      if (!seen[w] && has_edge(v, w)) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == p;
}

Graph Graph::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != p) throw std::invalid_argument("relabel: permutation size");
  Graph g(p, {}, name);
  for (auto [i, j] : edges) g.add_edge(perm[i - 1], perm[j - 1]);
  return g;
}

std::string Graph::edge_string() const {
  std::string s;
  const bool wide = p > 9;
  for (auto [i, j] : edges) {
    if (!s.empty()) s += ",";
    s += wide ? std::to_string(i) + "-" + std::to_string(j) : std::to_string(i) + std::to_string(j);
  }
  return s;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::vector<long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        nums.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("graph line " + std::to_string(lineno) + ": not an integer: " + tok);
      }
    }
    if (nums.empty()) continue;
    if (!g) {
      if (nums.size() != 1) throw std::invalid_argument("graph line " + std::to_string(lineno) + ": expected vertex count");
      g = Graph(static_cast<int>(nums[0]));
      continue;
    }
    if (nums.size() != 2) throw std::invalid_argument("graph line " + std::to_string(lineno) + ": expected `i j`");
    try {
      g->add_edge(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("graph line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!g) throw std::invalid_argument("graph: missing vertex count");
  return *g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  Graph g = parse_graph(ss.str());
  g.name = path;
  return g;
}

std::optional<Graph> named_graph(const std::string& name) {
  for (const auto& g : four_vertex_table())
    if (g.name == name) return g;
  return std::nullopt;
}

std::vector<Graph> four_vertex_table() {
  return {
      Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}, "diamond"),
      Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}, "paw"),
      Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, "cycle"),
      Graph(4, {{1, 2}, {1, 3}, {1, 4}}, "claw"),
      Graph(4, {{1, 2}, {2, 3}, {3, 4}}, "path"),
  };
}

Graph parse_inline_graph(const std::string& spec) {
  if (auto g = named_graph(spec)) return *g;
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("inline graph: expected `p:edges` or a graph name");
  int p = 0;
  try {
    p = std::stoi(spec.substr(0, colon));
  } catch (const std::exception&) {
    throw std::invalid_argument("inline graph: bad vertex count");
  }
  Graph g(p, {}, spec);
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    int i = 0, j = 0;
    auto dash = item.find('-');
    try {
      if (dash != std::string::npos) {
        i = std::stoi(item.substr(0, dash));
        j = std::stoi(item.substr(dash + 1));
      } else if (item.size() == 2 && std::isdigit(item[0]) && std::isdigit(item[1])) {
        i = item[0] - '0';
        j = item[1] - '0';
      } else {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("inline graph: bad edge `" + item + "`");
    }
    g.add_edge(i, j);
  }
  return g;
}

size_t sym_index(int p, int i, int j) {
  if (i > j) std::swap(i, j);
  // rows 1..i-1 contribute p, p-1, ..., p-i+2 entries
  size_t before = static_cast<size_t>((i - 1) * p - (i - 1) * (i - 2) / 2);
  return before + static_cast<size_t>(j - i);
}

RingPtr sym_matrix_ring(int p) {
  if (p < 1 || p * (p + 1) / 2 > 32) throw std::invalid_argument("sym_matrix_ring: supports 1 <= p <= 7");
  std::vector<std::string> names;
  const bool wide = p > 9;
  for (int i = 1; i <= p; ++i)
    for (int j = i; j <= p; ++j)
      names.push_back("s" + std::to_string(i) + (wide ? "_" : "") + std::to_string(j));
  return Ring::make(names);
}

namespace {

// Laplace expansion along the first listed row, memoized on (row set, column set).
struct MinorCache {
  const RingPtr& R;
  int p;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Poly<Rational>> memo;

  Poly<Rational> det(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::uint32_t rm = 0, cm = 0;
    for (int r : rows) rm |= 1u << r;
    for (int c : cols) cm |= 1u << c;
    auto key = std::make_pair(rm, cm);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Poly<Rational> out(R);
    if (rows.size() == 1) {
      out = Poly<Rational>::variable(R, sym_index(p, rows[0], cols[0]));
    } else {
      std::vector<int> sub_rows(rows.begin() + 1, rows.end());
      for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> sub_cols;
        for (size_t l = 0; l < cols.size(); ++l)
          if (l != k) sub_cols.push_back(cols[l]);
        Poly<Rational> term = Poly<Rational>::variable(R, sym_index(p, rows[0], cols[k])) * det(sub_rows, sub_cols);
        out = (k % 2 == 0) ? out + term : out - term;
      }
    }
    memo.emplace(key, out);
    return out;
  }
};

}  // namespace

Poly<Rational> sigma_minor(const RingPtr& R, int p, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("sigma_minor: not square");
  if (rows.empty()) return Poly<Rational>::constant(R, Rational(1));
  MinorCache mc{R, p, {}};
  return mc.det(rows, cols);
}

Ideal<Rational> ci_ideal(const Graph& G, const GroebnerOptions& opt) {
  RingPtr R = sym_matrix_ring(G.p);
  MinorCache mc{R, G.p, {}};
  std::vector<Poly<Rational>> gens;
  for (auto [i, j] : G.non_edges()) {
    std::vector<int> rows, cols;
    for (int k = 1; k <= G.p; ++k) {
      if (k != j) rows.push_back(k);
      if (k != i) cols.push_back(k);
    }
    gens.push_back(mc.det(rows, cols));
  }
  return Ideal<Rational>(R, gens, opt);
}

SaturationError::SaturationError(std::vector<int> m, const std::string& what)
    : std::runtime_error(what), minor(std::move(m)) {}

Ideal<Rational> vanishing_ideal_candidate(const Ideal<Rational>& I, const Graph& G, SaturationTrace* trace) {
  const RingPtr& R = I.ring();
  MinorCache mc{R, G.p, {}};
  std::vector<std::vector<int>> subsets;
  for (std::uint32_t mask = 1; mask < (1u << G.p); ++mask) {
    std::vector<int> s;
    for (int k = 0; k < G.p; ++k)
      if (mask & (1u << k)) s.push_back(k + 1);
    subsets.push_back(s);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  SaturationTrace tr;
  Ideal<Rational> J = I;
  if (J.is_zero()) {
    if (trace) *trace = tr;
    return J;
  }
  for (bool changed = true; changed;) {
    changed = false;
    ++tr.passes;
    for (const auto& s : subsets) {
      Poly<Rational> m = mc.det(s, s);
      Ideal<Rational> K = J;
      try {
        K = saturate(J, m);
      } catch (const GroebnerBudgetExceeded& e) {
        std::string label;
        for (int v : s) label += std::to_string(v);
        throw SaturationError(s, "saturation at the principal minor on {" + label + "}: " + e.what());
      }
      if (!K.equals(J)) {
        J = Ideal<Rational>(R, K.groebner(), I.options());
        changed = true;
        ++tr.colon_steps;
      }
    }
  }
  if (trace) *trace = tr;
  return J;
}

std::uint64_t graph_seed(std::uint64_t master, const Graph& G) {
  // FNV-1a over the canonical edge string, stable across platforms
  std::uint64_t h = 1469598103934665603ull;
  for (char c : std::to_string(G.p) + ":" + G.edge_string()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return master ^ h;
}

ScreenRow screen(const Graph& G, const ScreenOptions& opt) {
  ScreenRow row;
  row.graph = G;
  if (!G.connected()) row.diagnostics.push_back("graph is not connected");
  Ideal<Rational> I = ci_ideal(G, opt.toric.groebner);
  try {
    row.ci_dim = krull_dimension(I);
  } catch (const GroebnerBudgetExceeded& e) {
    row.diagnostics.push_back(std::string("CI dimension: ") + e.what());
  }
  Ideal<Rational> J = I;
  if (opt.saturate) {
    try {
      SaturationTrace tr;
      J = vanishing_ideal_candidate(I, G, &tr);
      row.saturation = tr;
      row.model_dim = krull_dimension(J);
    } catch (const std::runtime_error& e) {
      row.diagnostics.push_back(e.what());
      return row;
    }
  } else {
    row.model_dim = row.ci_dim;
  }
  ToricOptions topt = opt.toric;
  topt.seed = graph_seed(opt.toric.seed, G);
  ToricVerdict v = decide_toric(J, topt);
  row.lie_dim = v.lie_dim;
  if (v.torus_dim >= 0) row.torus_dim = v.torus_dim;
  if (v.status == ToricStatus::Toric) row.toric = true;
  else if (v.definitely_not_toric()) row.toric = false;
  for (const auto& d : v.diagnostics) row.diagnostics.push_back(d);
  row.verdict = std::move(v);
  return row;
}

std::vector<ScreenRow> screen_all(const std::vector<Graph>& graphs, const ScreenOptions& opt, int jobs) {
  std::vector<ScreenRow> rows(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next++) < graphs.size();) {
      try {
        rows[k] = screen(graphs[k], opt);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace lietoric
