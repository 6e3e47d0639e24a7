#pragma once

// Gaussian graphical models: conditional-independence ideals in the entries
// of a symmetric matrix, saturation at principal minors, and table screening.

#include "lietoric/groebner.hpp"
#include "lietoric/toric.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lietoric {

/// Undirected simple graph on vertices 1..p.
struct Graph {
  int p = 0;
  std::set<std::pair<int, int>> edges;  // stored with first < second
  std::string name;                     // optional label for reports

  Graph() = default;
  explicit Graph(int p, const std::vector<std::pair<int, int>>& es = {}, std::string name = "");
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const;
  std::vector<std::pair<int, int>> non_edges() const;
  bool connected() const;
  /// Vertex i goes to perm[i-1].
  Graph relabel(const std::vector<int>& perm) const;
  /// "12,13,23" style edge list.
  std::string edge_string() const;
};

/// `p` on the first line, then one `i j` pair per line; `#` starts a comment.
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);
/// "4:12,13,14" or "4:1-2,1-3,1-4" or one of the named 4-vertex graphs
/// (diamond, paw, cycle, claw, path).
Graph parse_inline_graph(const std::string& spec);
std::optional<Graph> named_graph(const std::string& name);
/// The five connected 4-vertex graphs of the screening table, in table order.
std::vector<Graph> four_vertex_table();

/// Ring with variables s11, s12, ..., spp (i <= j), degrevlex.
RingPtr sym_matrix_ring(int p);
/// Index of sigma_ij (either order) in sym_matrix_ring(p).
size_t sym_index(int p, int i, int j);

/// Determinant of the submatrix of Sigma on the given 1-based rows and columns.
Poly<Rational> sigma_minor(const RingPtr& R, int p, const std::vector<int>& rows, const std::vector<int>& cols);

/// One cofactor per non-edge {i,j}: det of Sigma without row j and column i.
Ideal<Rational> ci_ideal(const Graph& G, const GroebnerOptions& opt = {});

struct SaturationError : std::runtime_error {
  std::vector<int> minor;  // principal minor being saturated at
  SaturationError(std::vector<int> m, const std::string& what);
};

struct SaturationTrace {
  int passes = 0;
  int colon_steps = 0;  // saturations that enlarged the ideal
};

/// Saturates at every principal minor, smallest first, until a full pass
/// changes nothing.
Ideal<Rational> vanishing_ideal_candidate(const Ideal<Rational>& I, const Graph& G, SaturationTrace* trace = nullptr);

struct ScreenOptions {
  bool saturate = false;
  ToricOptions toric;
};

struct ScreenRow {
  Graph graph;
  std::optional<int> ci_dim;     // dimension before saturation
  std::optional<int> model_dim;  // after saturation when requested, else = ci_dim
  std::optional<size_t> lie_dim;
  std::optional<int> torus_dim;
  std::optional<bool> toric;     // empty when undecided
  std::optional<ToricVerdict> verdict;
  std::optional<SaturationTrace> saturation;
  std::vector<std::string> diagnostics;
};

ScreenRow screen(const Graph& G, const ScreenOptions& opt = {});

/// Rows computed on up to `jobs` threads; each row's seed mixes the master
/// seed with a hash of the graph.
std::vector<ScreenRow> screen_all(const std::vector<Graph>& graphs, const ScreenOptions& opt, int jobs = 1);

std::uint64_t graph_seed(std::uint64_t master, const Graph& G);

}  // namespace lietoric
