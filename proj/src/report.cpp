#include "lietoric/report.hpp"

#include <algorithm>
#include <sstream>

namespace lietoric {

using nlohmann::json;

std::vector<std::vector<std::string>> matrix_cells(const QMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

std::vector<std::vector<std::string>> matrix_cells(const AMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
  return out;
}

std::vector<std::string> matrix_lines(const std::vector<std::vector<std::string>>& cells) {
  size_t w = 0;
  for (const auto& row : cells)
    for (const auto& c : row) w = std::max(w, c.size());
  std::vector<std::string> out;
  for (const auto& row : cells) {
    std::string s = "[";
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) s += ", ";
      s += std::string(w - row[j].size(), ' ') + row[j];
    }
    out.push_back(s + "]");
  }
  return out;
}

namespace {

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::vector<std::string> tower_lines(const Tower::Ptr& t) { return t ? t->describe() : std::vector<std::string>{}; }

void put_matrix(std::ostringstream& os, const std::string& key, const AMatrix& m) {
  os << key << ":\n";
  for (const auto& l : matrix_lines(matrix_cells(m))) os << "  " << l << "\n";
}

}  // namespace

json verdict_json(const ToricVerdict& v) {
  json j;
  j["status"] = status_name(v.status);
  j["definitely_not_toric"] = v.definitely_not_toric();
  j["affine"] = v.affine;
  j["torus_dim"] = v.torus_dim;
  j["variety_dim"] = opt_int(v.variety_dim);
  j["complexity"] = opt_int(v.complexity);
  j["unital_excluded"] = v.unital_excluded;
  j["lie_dim"] = v.lie_dim;
  j["cartan_dim"] = v.cartan_dim;
  j["toral_dim"] = v.toral_dim;
  j["nilpotent_dim"] = v.nilpotent_dim;
  j["transform"] = v.transform ? json(matrix_cells(*v.transform)) : json(nullptr);
  if (v.affine) {
    j["translation"] = v.translation ? json(matrix_cells(*v.translation)) : json(nullptr);
    j["linear"] = v.linear ? json(matrix_cells(*v.linear)) : json(nullptr);
  }
  j["tower"] = tower_lines(v.tower);
  j["transformed_basis"] = v.transformed_basis;
  j["used_prime_shortcut"] = v.used_prime_shortcut;
  j["reason"] = v.reason;
  json d = v.diagnostics;
  d.push_back("cartan attempts " + std::to_string(v.cartan_attempts));
  d.push_back("diagonalizer attempts " + std::to_string(v.diagonalizer_attempts));
  d.push_back("tower splits " + std::to_string(v.tower_splits));
  d.push_back("branches " + std::to_string(v.branches));
  j["diagnostics"] = d;
  return j;
}

std::string verdict_text(const ToricVerdict& v) {
  std::ostringstream os;
  os << "status: " << status_name(v.status) << "\n";
  if (v.affine) os << "mode: affine\n";
  os << "reason: " << v.reason << "\n";
  os << "lie_dim: " << v.lie_dim << "\n";
  os << "cartan_dim: " << v.cartan_dim << "\n";
  os << "toral_dim: " << v.toral_dim << "\n";
  os << "nilpotent_dim: " << v.nilpotent_dim << "\n";
  os << "torus_dim: " << v.torus_dim << "\n";
  os << "variety_dim: " << (v.variety_dim ? std::to_string(*v.variety_dim) : "unknown") << "\n";
  os << "complexity: " << (v.complexity ? std::to_string(*v.complexity) : "unknown") << "\n";
  if (v.unital_excluded) os << "unital_excluded: yes\n";
  if (v.used_prime_shortcut) os << "prime_shortcut: yes\n";
  if (v.transform) put_matrix(os, "transform", *v.transform);
  if (v.translation) put_matrix(os, "translation", *v.translation);
  if (v.linear) put_matrix(os, "linear", *v.linear);
  if (!v.transformed_basis.empty()) {
    os << "transformed_basis:\n";
    for (const auto& b : v.transformed_basis) os << "  " << b << "\n";
  }
  os << "cartan_attempts: " << v.cartan_attempts << "\n";
  os << "diagonalizer_attempts: " << v.diagonalizer_attempts << "\n";
  os << "tower_splits: " << v.tower_splits << "\n";
  for (const auto& d : v.diagnostics) os << "note: " << d << "\n";
  auto tl = tower_lines(v.tower);
  if (!tl.empty()) {
    os << "tower:\n";
    for (const auto& l : tl) os << "  " << l << "\n";
  }
  return os.str();
}

json lie_json(const LieAlgebraBasis& g) {
  json j;
  j["n"] = g.n();
  j["dim"] = g.dim();
  json b = json::array();
  for (const auto& m : g.basis()) b.push_back(matrix_cells(m));
  j["basis"] = b;
  bool scalars = g.dim() == 1 && g[0] == QMatrix::identity(g.n());
  j["scalars_only"] = scalars;
  return j;
}

std::string lie_text(const LieAlgebraBasis& g) {
  std::ostringstream os;
  os << "lie_dim: " << g.dim() << "\n";
  if (g.dim() == 1 && g[0] == QMatrix::identity(g.n())) os << "note: only scalar matrices\n";
  for (size_t k = 0; k < g.dim(); ++k) {
    os << "basis " << k + 1 << ":\n";
    for (const auto& l : matrix_lines(matrix_cells(g[k]))) os << "  " << l << "\n";
  }
  return os.str();
}

TorusReport torus_report(const LieAlgebraBasis& g, std::uint64_t seed, int max_retries) {
  TorusReport t;
  t.lie_dim = g.dim();
  auto c = find_cartan(g, seed, max_retries);
  t.attempts = c.attempts;
  t.strategy = c.from_basis_element ? "basis element" : c.from_split_torus ? "split torus" : "random element";
  auto dec = toral_decomposition(c.cartan);
  t.cartan_dim = c.cartan.dim();
  t.toral_dim = dec.toral.dim();
  t.nilpotent_dim = dec.nilpotent.dim();
  t.toral_basis = dec.toral.basis();
  return t;
}

json torus_json(const TorusReport& t) {
  json j;
  j["lie_dim"] = t.lie_dim;
  j["cartan_dim"] = t.cartan_dim;
  j["toral_dim"] = t.toral_dim;
  j["nilpotent_dim"] = t.nilpotent_dim;
  j["cartan_attempts"] = t.attempts;
  j["cartan_seed"] = t.strategy;
  json b = json::array();
  for (const auto& m : t.toral_basis) b.push_back(matrix_cells(m));
  j["toral_basis"] = b;
  return j;
}

std::string torus_text(const TorusReport& t) {
  std::ostringstream os;
  os << "lie_dim: " << t.lie_dim << "\n";
  os << "cartan_dim: " << t.cartan_dim << "\n";
  os << "toral_dim: " << t.toral_dim << "\n";
  os << "nilpotent_dim: " << t.nilpotent_dim << "\n";
  os << "cartan_attempts: " << t.attempts << "\n";
  os << "cartan_seed: " << t.strategy << "\n";
  for (size_t k = 0; k < t.toral_basis.size(); ++k) {
    os << "toral " << k + 1 << ":\n";
    for (const auto& l : matrix_lines(matrix_cells(t.toral_basis[k]))) os << "  " << l << "\n";
  }
  return os.str();
}

json screen_json(const ScreenRow& r) {
  json j;
  j["graph"] = r.graph.name;
  j["p"] = r.graph.p;
  j["edges"] = r.graph.edge_string();
  j["ci_dim"] = opt_int(r.ci_dim);
  j["model_dim"] = opt_int(r.model_dim);
  j["lie_dim"] = r.lie_dim ? json(*r.lie_dim) : json(nullptr);
  j["torus_dim"] = opt_int(r.torus_dim);
  j["toric"] = r.toric ? json(*r.toric) : json(nullptr);
  if (r.saturation) j["saturation"] = {{"passes", r.saturation->passes}, {"colon_steps", r.saturation->colon_steps}};
  j["verdict"] = r.verdict ? verdict_json(*r.verdict) : json(nullptr);
  j["diagnostics"] = r.diagnostics;
  return j;
}

std::string screen_table(const std::vector<ScreenRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"graph", "edges", "dim CI", "dim model", "dim Lie", "dim torus", "toric"}};
  auto s = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); };
  for (const auto& r : rows)
    cells.push_back({r.graph.name.empty() ? "-" : r.graph.name, r.graph.edge_string(), s(r.ci_dim), s(r.model_dim),
                     r.lie_dim ? std::to_string(*r.lie_dim) : "?", s(r.torus_dim),
                     r.toric ? (*r.toric ? "yes" : "no") : "?"});
  std::vector<size_t> w(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t k = 0; k < row.size(); ++k) w[k] = std::max(w[k], row[k].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) line += "  ";
      line += k < 2 ? row[k] + std::string(w[k] - row[k].size(), ' ') : std::string(w[k] - row[k].size(), ' ') + row[k];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  for (const auto& r : rows)
    for (const auto& d : r.diagnostics) os << "note: " << (r.graph.name.empty() ? r.graph.edge_string() : r.graph.name) << ": " << d << "\n";
  return os.str();
}

}  // namespace lietoric
