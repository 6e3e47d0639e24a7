#include "lietoric/poly.hpp"

namespace lietoric {

RingPtr homogenizing_ring(const RingPtr& r, const std::string& preferred) {
  std::string name = preferred;
  for (int k = 0; r->index_of(name) >= 0; ++k) name = k == 0 ? "h" : "h" + std::to_string(k);
  std::vector<std::string> names{name};
  names.insert(names.end(), r->names().begin(), r->names().end());
  return Ring::make(std::move(names), r->order().kind == OrderKind::Block ? MonomialOrder::degrevlex() : r->order());
}

}  // namespace lietoric
