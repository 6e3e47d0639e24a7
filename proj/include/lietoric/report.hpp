#pragma once

// Line-oriented `key: value` reports and the JSON record for verdicts, Lie
// algebras and screening rows.
//
// Scalars print as num/den. Tower elements print as polynomials in the level
// generators a0, a1, ...; their defining polynomials go in a `tower` footer.

#include "lietoric/gaussian.hpp"
#include "lietoric/liestab.hpp"
#include "lietoric/toric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lietoric {

std::vector<std::vector<std::string>> matrix_cells(const QMatrix& m);
std::vector<std::vector<std::string>> matrix_cells(const AMatrix& m);
/// One "[a, b, c]" line per row.
std::vector<std::string> matrix_lines(const std::vector<std::vector<std::string>>& cells);

nlohmann::json verdict_json(const ToricVerdict& v);
std::string verdict_text(const ToricVerdict& v);

nlohmann::json lie_json(const LieAlgebraBasis& g);
std::string lie_text(const LieAlgebraBasis& g);

struct TorusReport {
  size_t lie_dim = 0;
  size_t cartan_dim = 0;
  size_t toral_dim = 0;
  size_t nilpotent_dim = 0;
  int attempts = 0;
  std::string strategy;  // how the Cartan seed was found
  std::vector<QMatrix> toral_basis;
};

TorusReport torus_report(const LieAlgebraBasis& g, std::uint64_t seed, int max_retries);
nlohmann::json torus_json(const TorusReport& t);
std::string torus_text(const TorusReport& t);

nlohmann::json screen_json(const ScreenRow& r);
/// Aligned table with columns graph, edges, dim CI, dim model, dim Lie,
/// dim torus, toric.
std::string screen_table(const std::vector<ScreenRow>& rows);

}  // namespace lietoric
