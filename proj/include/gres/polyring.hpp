// Multivariate polynomials over Q in the case rings A = Sym(g1*).
//
// A ring knows its variables, their (positive integer) degrees, and —
// when the case is a tensor representation — which tensor-factor slots
// each variable occupies.  The slot data drives the polarization
// (raising/lowering) operators used to spread invariants across orbits.
//
// Term order: graded reverse lexicographic on the ring's variable order.
#ifndef GRES_POLYRING_HPP
#define GRES_POLYRING_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <iterator>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gres/rational.hpp"

namespace gres {

// One slot of a variable inside a tensor factor: x_{1;23} in E* (x) S2F*
// has slots {E,1},{F,2},{F,3}.
struct Slot {
  std::string factor;
  int index = 0;
  bool operator==(const Slot& o) const {
    return factor == o.factor && index == o.index;
  }
  bool operator<(const Slot& o) const {
    return factor != o.factor ? factor < o.factor : index < o.index;
  }
};

enum class FactorKind { Tensor, Symmetric, Exterior };

struct FactorSpec {
  std::string id;
  int dim = 0;
  FactorKind kind = FactorKind::Tensor;
};

struct VariableSpec {
  std::string name;
  std::size_t index = 0;
  std::string weight_tag;        // optional paper-style weight/root label
  std::vector<Slot> slots;       // empty when the case has no tensor structure
};

using Monomial = std::vector<int>;  // exponent vector, one entry per variable

inline int total_degree(const Monomial& m, const std::vector<int>& grading) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * grading[i];
  return d;
}

// true iff a > b in graded reverse lex.
inline bool grevlex_greater(const Monomial& a, const Monomial& b,
                            const std::vector<int>& grading) {
  int da = total_degree(a, grading), db = total_degree(b, grading);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

class Polynomial;

class PolynomialRing : public std::enable_shared_from_this<PolynomialRing> {
 public:
  static RingPtr create(std::vector<VariableSpec> vars,
                        std::vector<FactorSpec> factors = {},
                        std::vector<int> grading = {}) {
    auto ring = std::shared_ptr<PolynomialRing>(new PolynomialRing(
        std::move(vars), std::move(factors), std::move(grading)));
    ring->build_indexes();
    return ring;
  }

  // Convenience: plain ring from names, all degrees 1, no tensor structure.
  static RingPtr create_simple(const std::vector<std::string>& names) {
    std::vector<VariableSpec> vs;
    for (std::size_t i = 0; i < names.size(); ++i)
      vs.push_back({names[i], i, "", {}});
    return create(std::move(vs));
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<VariableSpec>& variables() const { return vars_; }
  const std::vector<FactorSpec>& factors() const { return factors_; }
  const std::vector<int>& grading() const { return grading_; }

  std::size_t var_index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
      throw std::invalid_argument("unknown variable '" + name + "'");
    return it->second;
  }
  bool has_var(const std::string& name) const {
    return by_name_.count(name) != 0;
  }

  const FactorSpec& factor(const std::string& id) const {
    for (const auto& f : factors_)
      if (f.id == id) return f;
    throw std::invalid_argument("unknown tensor factor '" + id + "'");
  }

  // Variable whose (canonically ordered) slot list equals `slots`, together
  // with the sign produced by sorting exterior slots.  Returns nullopt for
  // slot lists that vanish (repeated exterior index) or are not variables.
  std::optional<std::pair<std::size_t, int>> variable_for_slots(
      std::vector<Slot> slots) const;

  bool operator==(const PolynomialRing& o) const { return this == &o; }

 private:
  PolynomialRing(std::vector<VariableSpec> vars, std::vector<FactorSpec> factors,
                 std::vector<int> grading)
      : vars_(std::move(vars)),
        factors_(std::move(factors)),
        grading_(std::move(grading)) {
    if (vars_.empty())
      throw std::invalid_argument("ring needs at least one variable");
    if (grading_.empty()) grading_.assign(vars_.size(), 1);
    if (grading_.size() != vars_.size())
      throw std::invalid_argument("grading length mismatch");
    for (int d : grading_)
      if (d < 1) throw std::invalid_argument("variable degrees must be >= 1");
  }

  void build_indexes() {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      vars_[i].index = i;
      if (!by_name_.emplace(vars_[i].name, i).second)
        throw std::invalid_argument("duplicate variable '" + vars_[i].name + "'");
      if (!vars_[i].slots.empty())
        by_slots_.emplace(slot_key(vars_[i].slots), i);
    }
  }

  static std::string slot_key(const std::vector<Slot>& slots) {
    std::string k;
    for (const auto& s : slots) k += s.factor + ":" + std::to_string(s.index) + ";";
    return k;
  }

  std::vector<VariableSpec> vars_;
  std::vector<FactorSpec> factors_;
  std::vector<int> grading_;
  std::map<std::string, std::size_t> by_name_;
  std::map<std::string, std::size_t> by_slots_;

  friend class Polynomial;
};

using Point = std::vector<Q>;  // one coordinate per ring variable

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial variable(const RingPtr& ring, std::size_t i) {
    Polynomial p(ring);
    Monomial m(ring->nvars(), 0);
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
  }
  static Polynomial variable(const RingPtr& ring, const std::string& name) {
    return variable(ring, ring->var_index(name));
  }
  static Polynomial constant(const RingPtr& ring, const Q& c) {
    Polynomial p(ring);
    if (!gres::is_zero(c)) p.terms_[Monomial(ring->nvars(), 0)] = c;
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }
  const std::map<Monomial, Q>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Q& c) {
    if (gres::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (gres::is_zero(it->second)) terms_.erase(it);
    }
  }

  // Leading term under grevlex.
  std::pair<Monomial, Q> leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of 0");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (grevlex_greater(it->first, best->first, ring_->grading()))
        best = it;
    return *best;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  Polynomial operator*(const Q& s) const {
    if (gres::is_zero(s)) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(ring_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // Degree of a homogeneous polynomial; -1 for zero.  Throws if mixed.
  int degree() const {
    if (terms_.empty()) return -1;
    int d = total_degree(terms_.begin()->first, ring_->grading());
    for (const auto& [m, c] : terms_)
      if (total_degree(m, ring_->grading()) != d)
        throw std::logic_error("degree(): polynomial is not homogeneous");
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first, ring_->grading());
    for (const auto& [m, c] : terms_)
      if (total_degree(m, ring_->grading()) != d) return false;
    return true;
  }

  Q evaluate(const Point& pt) const {
    if (pt.size() != ring_->nvars())
      throw std::invalid_argument("evaluate: point/ring dimension mismatch");
    Q total = 0;
    for (const auto& [m, c] : terms_) {
      Q t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) t *= pt[i];
      total += t;
    }
    return total;
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      r.add_term(d, c * m[var]);
    }
    return r;
  }

  // Divided content out: integer coefficients with gcd 1, sign of the
  // grevlex-leading coefficient positive.
  Polynomial primitive_part() const {
    if (terms_.empty()) return *this;
    Z den = 1, num = 0;
    for (const auto& [m, c] : terms_) {
      den = ::lcm(den, c.get_den());
      num = ::gcd(num, c.get_num());
    }
    Q scale = Q(den) / Q(num);
    if (sgn(leading().second * scale) < 0) scale = -scale;
    return *this * scale;
  }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::map<Monomial, Q> terms_;
};

inline Polynomial operator*(const Q& s, const Polynomial& p) { return p * s; }

inline std::optional<std::pair<std::size_t, int>>
PolynomialRing::variable_for_slots(std::vector<Slot> slots) const {
  // Canonicalize per factor: stable-partition by factor id order of the
  // ring's factor list, sort indices inside each factor, track exterior sign.
  int sign = 1;
  std::vector<Slot> canon;
  for (const auto& f : factors_) {
    std::vector<int> idx;
    for (const auto& s : slots)
      if (s.factor == f.id) idx.push_back(s.index);
    if (f.kind == FactorKind::Exterior) {
      // count inversions for the sign; repeated index kills the term
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          if (idx[a] == idx[b]) return std::nullopt;
          if (idx[a] > idx[b]) sign = -sign;
        }
    }
    std::sort(idx.begin(), idx.end());
    for (int i : idx) canon.push_back({f.id, i});
  }
  auto it = by_slots_.find(slot_key(canon));
  if (it == by_slots_.end()) return std::nullopt;
  return std::make_pair(it->second, sign);
}

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // print in descending grevlex order
  std::vector<const std::pair<const Monomial, Q>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
    return grevlex_greater(a->first, b->first, ring_->grading());
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    Q c = t->second;
    if (first) {
      if (sgn(c) < 0) { os << "-"; c = -c; }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (any_var) vars << "*";
      vars << ring_->variables()[i].name;
      if (t->first[i] > 1) vars << "^" << t->first[i];
      any_var = true;
    }
    if (!any_var) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << vars.str();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Polarization: Lie-algebra operator E_{i->j} acting on one tensor factor.
// On a variable it re-indexes one slot at a time (with exterior signs); on
// products it acts as a derivation.
// ---------------------------------------------------------------------------

inline Polynomial polarize_variable(const RingPtr& ring, std::size_t var,
                                    const std::string& factor, int i, int j) {
  const auto& spec = ring->variables()[var];
  if (spec.slots.empty())
    throw std::invalid_argument("variable has no tensor-slot data");
  Polynomial out(ring);
  for (std::size_t s = 0; s < spec.slots.size(); ++s) {
    if (spec.slots[s].factor != factor || spec.slots[s].index != i) continue;
    std::vector<Slot> slots = spec.slots;
    slots[s].index = j;
    auto hit = ring->variable_for_slots(slots);
    if (!hit) continue;  // exterior collision: term vanishes
    Monomial m(ring->nvars(), 0);
    m[hit->first] = 1;
    out.add_term(m, Q(hit->second));
  }
  return out;
}

inline Polynomial apply_polarization(const Polynomial& p,
                                     const std::string& factor, int i, int j) {
  const RingPtr& ring = p.ring();
  const auto& fs = ring->factor(factor);
  if (i < 1 || i > fs.dim || j < 1 || j > fs.dim)
    throw std::invalid_argument("polarization index out of range");
  // cache per-variable images
  std::vector<std::optional<Polynomial>> image(ring->nvars());
  Polynomial out(ring);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!image[v]) image[v] = polarize_variable(ring, v, factor, i, j);
      if (image[v]->is_zero()) continue;
      Monomial base = m;
      base[v] -= 1;
      for (const auto& [vm, vc] : image[v]->terms()) {
        Monomial prod = base;
        for (std::size_t k = 0; k < prod.size(); ++k) prod[k] += vm[k];
        out.add_term(prod, c * vc * m[v]);
      }
    }
  }
  return out;
}

// Sparse span of homogeneous polynomials (Gaussian elimination keyed by
// grevlex-leading monomials).  Used for polarization closure and for
// degree-by-degree minimal-generator pruning.
class PolySpan {
 public:
  bool add(Polynomial p) {
    reduce(p);
    if (p.is_zero()) return false;
    auto [lm, lc] = p.leading();
    p = p * (1 / lc);
    for (auto& b : basis_) {
      auto it = b.poly.terms().find(lm);
      if (it != b.poly.terms().end()) b.poly -= p * it->second;
    }
    basis_.push_back({lm, std::move(p)});
    return true;
  }

  bool contains(Polynomial p) const {
    reduce(p);
    return p.is_zero();
  }

  std::size_t dim() const { return basis_.size(); }
  std::vector<Polynomial> elements() const {
    std::vector<Polynomial> out;
    for (const auto& b : basis_) out.push_back(b.poly);
    return out;
  }

 private:
  struct Row {
    Monomial lead;
    Polynomial poly;
  };
  void reduce(Polynomial& p) const {
    for (const auto& b : basis_) {
      auto it = p.terms().find(b.lead);
      if (it != p.terms().end()) p -= b.poly * it->second;
    }
  }
  std::vector<Row> basis_;
};

// Smallest subspace containing `seeds` and closed under every polarization
// operator of the listed factors.
inline std::vector<Polynomial> polarize_span(
    const std::vector<Polynomial>& seeds,
    const std::vector<std::string>& factors) {
  if (seeds.empty()) return {};
  const RingPtr& ring = seeds.front().ring();
  int deg = seeds.front().degree();
  for (const auto& s : seeds)
    if (s.degree() != deg)
      throw std::invalid_argument("polarize_span: seeds must share a degree");
  PolySpan span;
  std::vector<Polynomial> queue;
  for (const auto& s : seeds)
    if (span.add(s)) queue.push_back(s);
  while (!queue.empty()) {
    Polynomial p = std::move(queue.back());
    queue.pop_back();
    for (const auto& fid : factors) {
      const auto& f = ring->factor(fid);
      for (int i = 1; i <= f.dim; ++i)
        for (int j = 1; j <= f.dim; ++j) {
          if (i == j) continue;
          Polynomial img = apply_polarization(p, fid, i, j);
          if (!img.is_zero() && span.add(img)) queue.push_back(img);
        }
    }
  }
  return span.elements();
}

// Jacobian as a bare grid (rows = generators, cols = variables); the graded
// wrapper lives in module.hpp.
inline std::vector<std::vector<Polynomial>> jacobian_grid(
    const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("jacobian of empty list");
  const RingPtr& ring = gens.front().ring();
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      row.push_back(g.derivative(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// A small expression parser for data files: sums of terms, where a term is
// rational and variable factors joined by '*', powers with '^'.
// ---------------------------------------------------------------------------
inline Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Polynomial out(ring);
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
  skip_ws();
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[pos] == '+') { ++pos; }
    else if (text[pos] == '-') { sign = -1; ++pos; }
    else if (!first)
      throw std::invalid_argument("parse_polynomial: expected +/- in '" + text + "'");
    first = false;
    Q coeff = sign;
    Monomial mono(ring->nvars(), 0);
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos >= text.size())
        throw std::invalid_argument("parse_polynomial: dangling term in '" + text + "'");
      std::size_t start = pos;
      if (std::isdigit((unsigned char)text[pos])) {
        while (pos < text.size() &&
               (std::isdigit((unsigned char)text[pos]) || text[pos] == '/'))
          ++pos;
        coeff *= parse_rational(text.substr(start, pos - start));
      } else {
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_' ||
                text[pos] == ';'))
          ++pos;
        std::string name = text.substr(start, pos - start);
        int e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          std::size_t es = pos;
          while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
          e = std::stoi(text.substr(es, pos - es));
        }
        mono[ring->var_index(name)] += e;
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') { ++pos; continue; }
      expect_factor = false;
    }
    out.add_term(mono, coeff);
    skip_ws();
  }
  return out;
}

}  // namespace gres

#endif  // GRES_POLYRING_HPP
