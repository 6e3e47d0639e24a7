#include "lietoric/tower.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace lietoric {

namespace {

using detail::Node;
using NPoly = std::vector<Node>;
using Levels = std::vector<std::shared_ptr<const TowerLevel>>;

bool nzero(const Node& a, int d) { return d == 0 ? a.q.sign() == 0 : a.c.empty(); }

Node from_rational(const Rational& q, int d) {
  if (d == 0) return Node{q, {}};
  if (q.sign() == 0) return Node{};
  Node n;
  n.c.push_back(from_rational(q, d - 1));
  return n;
}

Node lift(Node a, int from, int to) {
  for (int d = from; d < to; ++d) {
    if (nzero(a, d)) {
      a = Node{};
    } else {
      Node w;
      w.c.push_back(std::move(a));
      a = std::move(w);
    }
  }
  return a;
}

void trim(NPoly& p, int cd) {
  while (!p.empty() && nzero(p.back(), cd)) p.pop_back();
}

Node add(const Node& a, const Node& b, int d) {
  if (d == 0) return Node{a.q + b.q, {}};
  Node r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    if (i < a.c.size() && i < b.c.size()) r.c[i] = add(a.c[i], b.c[i], d - 1);
    else if (i < a.c.size()) r.c[i] = a.c[i];
    else r.c[i] = b.c[i];
  }
  trim(r.c, d - 1);
  return r;
}

Node neg(const Node& a, int d) {
  if (d == 0) return Node{-a.q, {}};
  Node r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(neg(x, d - 1));
  return r;
}

Node sub(const Node& a, const Node& b, int d) { return add(a, neg(b, d), d); }

Node mul(const Node& a, const Node& b, int d, const Levels& L);

NPoly pmul(const NPoly& a, const NPoly& b, int cd, const Levels& L) {
  if (a.empty() || b.empty()) return {};
  NPoly r(a.size() + b.size() - 1, cd == 0 ? Node{Rational(0), {}} : Node{});
  for (size_t i = 0; i < a.size(); ++i) {
    if (nzero(a[i], cd)) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (nzero(b[j], cd)) continue;
      r[i + j] = add(r[i + j], mul(a[i], b[j], cd, L), cd);
    }
  }
  trim(r, cd);
  return r;
}

NPoly padd(const NPoly& a, const NPoly& b, int cd) {
  NPoly r(std::max(a.size(), b.size()), cd == 0 ? Node{Rational(0), {}} : Node{});
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) r[i] = add(a[i], b[i], cd);
    else if (i < a.size()) r[i] = a[i];
    else r[i] = b[i];
  }
  trim(r, cd);
  return r;
}

NPoly pneg(const NPoly& a, int cd) {
  NPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(neg(x, cd));
  return r;
}

// Remainder and quotient of a by b where lc(b) has inverse `lcinv`.
std::pair<NPoly, NPoly> pdivmod(NPoly a, const NPoly& b, const Node& lcinv, int cd,
                                const Levels& L) {
  if (a.size() < b.size()) return {{}, std::move(a)};
  const size_t db = b.size() - 1;
  NPoly q(a.size() - db, cd == 0 ? Node{Rational(0), {}} : Node{});
  for (size_t k = q.size(); k-- > 0;) {
    const Node top = a[k + db];
    if (nzero(top, cd)) continue;
    Node f = mul(top, lcinv, cd, L);
    for (size_t j = 0; j <= db; ++j) a[k + j] = sub(a[k + j], mul(f, b[j], cd, L), cd);
    q[k] = std::move(f);
  }
  a.resize(db);
  trim(a, cd);
  trim(q, cd);
  return {std::move(q), std::move(a)};
}

Node one(int d) { return from_rational(Rational(1), d); }

Node reduce(NPoly a, int d, const Levels& L) {
  trim(a, d - 1);
  const NPoly& m = L[static_cast<size_t>(d - 1)]->poly;
  Node r;
  r.c = pdivmod(std::move(a), m, one(d - 1), d - 1, L).second;
  return r;
}

Node mul(const Node& a, const Node& b, int d, const Levels& L) {
  if (d == 0) return Node{a.q * b.q, {}};
  if (a.c.empty() || b.c.empty()) return Node{};
  return reduce(pmul(a.c, b.c, d - 1, L), d, L);
}

Tower::Ptr tower_from_levels(Levels levels);

UPoly<AlgNum> to_upoly(const NPoly& p, int cd, const Levels& L) {
  auto t = tower_from_levels(Levels(L.begin(), L.begin() + cd));
  std::vector<AlgNum> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(t, x);
  return UPoly<AlgNum>(std::move(c));
}

Node inv(const Node& a, int d, const Tower::Ptr& full, const Levels& L) {
  if (nzero(a, d)) throw std::domain_error("AlgNum: inverse of zero");
  if (d == 0) return Node{Rational(1) / a.q, {}};
  const int cd = d - 1;
  const NPoly& p = L[static_cast<size_t>(cd)]->poly;
  NPoly r0 = p;
  NPoly r1 = a.c;
  NPoly s0;
  NPoly s1{one(cd)};
  while (!r1.empty()) {
    Node li = inv(r1.back(), cd, full, L);
    auto [q, r] = pdivmod(r0, r1, li, cd, L);
    NPoly s2 = padd(s0, pneg(pmul(q, s1, cd, L), cd), cd);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() == 1) {
    Node c = inv(r0[0], cd, full, L);
    NPoly scaled;
    for (const auto& x : s0) scaled.push_back(mul(x, c, cd, L));
    return reduce(std::move(scaled), d, L);
  }
  // Nontrivial gcd with the defining polynomial: report the factorisation.
  Node li = inv(r0.back(), cd, full, L);
  NPoly g;
  for (const auto& x : r0) g.push_back(mul(x, li, cd, L));
  NPoly h = pdivmod(p, g, one(cd), cd, L).first;
  throw SplitEvent(full, cd, to_upoly(g, cd, L), to_upoly(h, cd, L));
}

Node rebase_node(const Node& a, int d, const Levels& L) {
  if (d == 0) return a;
  NPoly c;
  c.reserve(a.c.size());
  for (const auto& x : a.c) c.push_back(rebase_node(x, d - 1, L));
  return reduce(std::move(c), d, L);
}

// Terms of the expanded representation: exponent vector -> coefficient.
void expand(const Node& a, int d, std::vector<int>& exps, std::map<std::vector<int>, Rational>& out) {
  if (d == 0) {
    if (a.q.sign() != 0) out[exps] += a.q;
    return;
  }
  for (size_t i = 0; i < a.c.size(); ++i) {
    exps[static_cast<size_t>(d - 1)] = static_cast<int>(i);
    expand(a.c[i], d - 1, exps, out);
  }
  exps[static_cast<size_t>(d - 1)] = 0;
}

std::string node_string(const Node& a, int d, const Levels& L) {
  std::map<std::vector<int>, Rational> terms;
  std::vector<int> exps(static_cast<size_t>(d), 0);
  expand(a, d, exps, terms);
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int k = d; k-- > 0;) {
      int ek = e[static_cast<size_t>(k)];
      if (ek == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += L[static_cast<size_t>(k)]->name;
      if (ek > 1) mono += "^" + std::to_string(ek);
    }
    Rational ac = c.abs();
    std::string body;
    if (mono.empty()) body = ac.to_string();
    else if (ac == Rational(1)) body = mono;
    else body = ac.to_string() + "*" + mono;
    if (out.empty()) out = (c.sign() < 0 ? "-" : "") + body;
    else out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return out;
}

Tower::Ptr tower_from_levels(Levels levels) { return std::make_shared<Tower>(std::move(levels)); }

}  // namespace

Tower::Ptr Tower::empty() {
  static const Ptr e = std::make_shared<Tower>();
  return e;
}

long Tower::degree() const {
  long d = 1;
  for (const auto& l : levels_) d *= l->degree();
  return d;
}

bool Tower::is_prefix_of(const Tower& other) const {
  if (levels_.size() > other.levels_.size()) return false;
  for (size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i] != other.levels_[i]) return false;
  }
  return true;
}

Tower::Ptr Tower::prefix(int k) const {
  return tower_from_levels(Levels(levels_.begin(), levels_.begin() + k));
}

Tower::Ptr Tower::adjoin(const UPoly<AlgNum>& p, const std::string& name, AlgNum* root) const {
  if (p.degree() < 2) throw std::invalid_argument("Tower::adjoin: defining polynomial needs degree >= 2");
  auto self = tower_from_levels(levels_);
  for (const auto& c : p.coeffs()) {
    if (c.tower() && !c.tower()->is_prefix_of(*self)) {
      throw std::invalid_argument("Tower::adjoin: coefficient from an unrelated tower");
    }
  }
  UPoly<AlgNum> m = p.monic();
  auto g = upoly_gcd(m, m.derivative());
  if (g.degree() > 0) throw std::invalid_argument("Tower::adjoin: defining polynomial is not squarefree");
  auto level = std::make_shared<TowerLevel>();
  level->name = name;
  const int d = depth();
  for (const auto& c : m.coeffs()) level->poly.push_back(lift(c.rep(), c.depth(), d));
  Levels ext = levels_;
  ext.push_back(level);
  auto t = tower_from_levels(std::move(ext));
  if (root) *root = AlgNum::generator(t, d);
  return t;
}

std::pair<Tower::Ptr, Tower::Ptr> Tower::split(const SplitEvent& ev) const {
  const int k = ev.level;
  if (k < 0 || k >= depth()) throw std::invalid_argument("Tower::split: level out of range");
  auto branch = [&](const UPoly<AlgNum>& factor) {
    Levels nl(levels_.begin(), levels_.begin() + k);
    auto lvl = std::make_shared<TowerLevel>();
    lvl->name = levels_[static_cast<size_t>(k)]->name;
    for (const auto& c : factor.coeffs()) lvl->poly.push_back(lift(c.rep(), c.depth(), k));
    nl.push_back(lvl);
    for (int j = k + 1; j < depth(); ++j) {
      auto up = std::make_shared<TowerLevel>();
      up->name = levels_[static_cast<size_t>(j)]->name;
      for (const auto& c : levels_[static_cast<size_t>(j)]->poly) up->poly.push_back(rebase_node(c, j, nl));
      trim(up->poly, j);
      nl.push_back(up);
    }
    return tower_from_levels(std::move(nl));
  };
  return {branch(ev.first), branch(ev.second)};
}

std::vector<std::string> Tower::describe() const {
  std::vector<std::string> out;
  for (int k = 0; k < depth(); ++k) {
    const auto& lvl = *levels_[static_cast<size_t>(k)];
    std::string line = lvl.name + ": ";
    std::string poly;
    for (size_t i = lvl.poly.size(); i-- > 0;) {
      if (nzero(lvl.poly[i], k)) continue;
      std::string cs = node_string(lvl.poly[i], k, levels_);
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      std::string term;
      if (i == 0) {
        term = compound ? "(" + cs + ")" : cs;
      } else {
        std::string pw = "t" + (i > 1 ? "^" + std::to_string(i) : std::string());
        if (cs == "1") term = pw;
        else if (cs == "-1") term = "-" + pw;
        else term = (compound ? "(" + cs + ")" : cs) + "*" + pw;
      }
      if (poly.empty()) {
        poly = term;
      } else if (term[0] == '-' ) {
        poly += " - " + term.substr(1);
      } else {
        poly += " + " + term;
      }
    }
    out.push_back(line + poly);
  }
  return out;
}

Tower::Ptr common_tower(const Tower::Ptr& a, const Tower::Ptr& b) {
  if (!a || a->depth() == 0) return b;
  if (!b || b->depth() == 0) return a;
  if (a == b) return a;
  if (a->depth() <= b->depth() && a->is_prefix_of(*b)) return b;
  if (b->depth() < a->depth() && b->is_prefix_of(*a)) return a;
  throw std::logic_error("AlgNum: operands live in incompatible towers");
}

AlgNum::AlgNum(Tower::Ptr tower, detail::Node rep) : tower_(std::move(tower)), rep_(std::move(rep)) {
  if (tower_ && tower_->depth() == 0) tower_.reset();
}

AlgNum AlgNum::generator(const Tower::Ptr& tower, int k) {
  const auto& L = tower->levels();
  NPoly x{from_rational(Rational(0), k), one(k)};
  Node g = reduce(std::move(x), k + 1, L);
  return AlgNum(tower, lift(std::move(g), k + 1, tower->depth()));
}

bool AlgNum::is_rational() const {
  const Node* n = &rep_;
  for (int d = depth(); d > 0; --d) {
    if (n->c.empty()) return true;
    if (n->c.size() > 1) return false;
    n = &n->c[0];
  }
  return true;
}

Rational AlgNum::to_rational() const {
  const Node* n = &rep_;
  for (int d = depth(); d > 0; --d) {
    if (n->c.empty()) return Rational(0);
    if (n->c.size() > 1) throw std::logic_error("AlgNum::to_rational: element is irrational");
    n = &n->c[0];
  }
  return n->q;
}

AlgNum AlgNum::rebase(const Tower::Ptr& target) const {
  if (!tower_) return *this;
  if (!target || target->depth() < depth()) throw std::invalid_argument("AlgNum::rebase: target too shallow");
  Node r = rebase_node(rep_, depth(), target->levels());
  return AlgNum(target, lift(std::move(r), depth(), target->depth()));
}

AlgNum AlgNum::inverse() const {
  if (!tower_) {
    if (rep_.q.sign() == 0) throw std::domain_error("AlgNum: inverse of zero");
    return AlgNum(Rational(1) / rep_.q);
  }
  return AlgNum(tower_, inv(rep_, depth(), tower_, tower_->levels()));
}

AlgNum AlgNum::operator-() const { return AlgNum(tower_, neg(rep_, depth())); }

namespace {
template <class Op>
AlgNum combine(const AlgNum& a, const AlgNum& b, Op op) {
  auto t = common_tower(a.tower(), b.tower());
  const int d = t ? t->depth() : 0;
  return AlgNum(t, op(lift(a.rep(), a.depth(), d), lift(b.rep(), b.depth(), d), d,
                      t ? t->levels() : Levels{}));
}
}  // namespace

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  if (!a.tower_ && !b.tower_) return AlgNum(a.rep_.q + b.rep_.q);
  return combine(a, b, [](const Node& x, const Node& y, int d, const Levels&) { return add(x, y, d); });
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) {
  if (!a.tower_ && !b.tower_) return AlgNum(a.rep_.q - b.rep_.q);
  return combine(a, b, [](const Node& x, const Node& y, int d, const Levels&) { return sub(x, y, d); });
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  if (!a.tower_ && !b.tower_) return AlgNum(a.rep_.q * b.rep_.q);
  return combine(a, b, [](const Node& x, const Node& y, int d, const Levels& L) { return mul(x, y, d, L); });
}

bool operator==(const AlgNum& a, const AlgNum& b) {
  if (!a.tower_ && !b.tower_) return a.rep_.q == b.rep_.q;
  auto t = common_tower(a.tower_, b.tower_);
  const int d = t ? t->depth() : 0;
  return lift(a.rep_, a.depth(), d) == lift(b.rep_, b.depth(), d);
}

bool is_zero(const AlgNum& a) { return nzero(a.rep(), a.depth()); }

std::string AlgNum::to_string() const {
  if (!tower_) return rep_.q.to_string();
  return node_string(rep_, depth(), tower_->levels());
}

SplitEvent::SplitEvent(Tower::Ptr t, int lvl, UPoly<AlgNum> f, UPoly<AlgNum> s)
    : tower(std::move(t)), level(lvl), first(std::move(f)), second(std::move(s)) {
  std::ostringstream os;
  os << "tower split at level " << level << " (" << tower->level(level).name << "): ("
     << first.to_string() << ") * (" << second.to_string() << ")";
  message_ = os.str();
}

}  // namespace lietoric
