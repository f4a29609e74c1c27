// Groebner bases and syzygies for submodules of graded free modules.
//
// One engine covers both plain module bases and syzygy extraction: the
// generators are tagged with unit vectors in an auxiliary block, and the
// module order makes every tagged term smaller than every term of the
// main block.  Reducing an S-pair to zero in the main block then leaves
// its representation — a syzygy of the original generators — in the tag
// block (Schreyer's construction).
//
// Order: term-over-position grevlex inside each block, lower position
// breaking ties; the main block dominates the tag block.  Degree limits
// are inclusive and measured in the ring's grading, twists included.
#ifndef GRES_GROEBNER_HPP
#define GRES_GROEBNER_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "gres/module.hpp"
#include "gres/polyring.hpp"

namespace gres {

using ModTerm = std::pair<std::size_t, Monomial>;  // (component, monomial)

// Sparse element of a free module A^ncomp.
class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(RingPtr ring, std::size_t ncomp)
      : ring_(std::move(ring)), ncomp_(ncomp) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t ncomp() const { return ncomp_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ModTerm, Q>& terms() const { return terms_; }

  void add_term(std::size_t comp, const Monomial& m, const Q& c) {
    if (gres::is_zero(c)) return;
    ModTerm t{comp, m};
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(std::move(t), c);
    } else {
      it->second += c;
      if (gres::is_zero(it->second)) terms_.erase(it);
    }
  }

  // this += c * x^shift * other
  void axpy(const Q& c, const Monomial& shift, const ModPoly& other) {
    for (const auto& [t, oc] : other.terms_) {
      Monomial m = t.second;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += shift[i];
      add_term(t.first, m, c * oc);
    }
  }

  void scale(const Q& c) {
    for (auto& [t, v] : terms_) v *= c;
  }

  Polynomial component(std::size_t comp) const {
    Polynomial p(ring_);
    for (const auto& [t, c] : terms_)
      if (t.first == comp) p.add_term(t.second, c);
    return p;
  }

  // Twisted degree of a homogeneous element.
  int degree(const std::vector<int>& twists) const {
    if (terms_.empty()) return -1;
    const auto& [t, c] = *terms_.begin();
    return total_degree(t.second, ring_->grading()) + twists[t.first];
  }
  bool is_homogeneous(const std::vector<int>& twists) const {
    if (terms_.empty()) return true;
    int d = degree(twists);
    for (const auto& [t, c] : terms_)
      if (total_degree(t.second, ring_->grading()) + twists[t.first] != d)
        return false;
    return true;
  }

  static ModPoly from_column(const PolyMatrix& m, std::size_t col,
                             std::size_t ncomp_total = 0) {
    ModPoly p(m.ring(), ncomp_total ? ncomp_total : m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [mono, c] : m.at(r, col).terms())
        p.add_term(r, mono, c);
    return p;
  }

 private:
  RingPtr ring_;
  std::size_t ncomp_ = 0;
  std::map<ModTerm, Q> terms_;  // storage order only; module order is external
};

// The module order: main block (comp < fblock) dominates the tag block;
// within a block grevlex on monomials, lower component breaking ties.
class ModOrder {
 public:
  ModOrder(const std::vector<int>* grading, std::size_t fblock)
      : grading_(grading), fblock_(fblock) {}

  // true iff a > b
  bool greater(const ModTerm& a, const ModTerm& b) const {
    bool ab = a.first < fblock_, bb = b.first < fblock_;
    if (ab != bb) return ab;
    if (a.second != b.second) {
      if (grevlex_greater(a.second, b.second, *grading_)) return true;
      if (grevlex_greater(b.second, a.second, *grading_)) return false;
    }
    return a.first < b.first;
  }

  std::size_t fblock() const { return fblock_; }

  const ModTerm* lead(const ModPoly& p) const {
    const ModTerm* best = nullptr;
    for (const auto& [t, c] : p.terms())
      if (!best || greater(t, *best)) best = &t;
    return best;
  }

 private:
  const std::vector<int>* grading_;
  std::size_t fblock_;
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

// Buchberger engine with optional tag block and inclusive degree limit.
class GBEngine {
 public:
  // twists: one per component of the working module (main block first).
  GBEngine(RingPtr ring, std::vector<int> twists, std::size_t fblock,
           std::optional<int> degree_limit = std::nullopt)
      : ring_(std::move(ring)),
        twists_(std::move(twists)),
        order_(&ring_->grading(), fblock),
        limit_(degree_limit) {}

  const std::vector<ModPoly>& basis() const { return basis_; }
  const std::vector<ModPoly>& syzygy_elements() const { return syz_; }
  const ModOrder& order() const { return order_; }
  const std::vector<int>& twists() const { return twists_; }

  void add_generator(const ModPoly& g) {
    if (!g.is_homogeneous(twists_))
      throw std::invalid_argument("GBEngine: generators must be homogeneous");
    pending_.push_back(g);
  }

  void complete() {
    for (auto& g : pending_) insert(reduce(std::move(g)));
    pending_.clear();
    while (!pairs_.empty()) {
      auto [deg, i, j] = pairs_.top();
      pairs_.pop();
      if (limit_ && deg > *limit_) break;  // queue is degree-sorted
      insert(reduce(spair(i, j)));
    }
  }

  // Full normal form; returns the reduced element (tag block untouched as
  // reduction bookkeeping).
  ModPoly reduce(ModPoly p) const {
    ModPoly out(ring_, p.ncomp());
    while (!p.is_zero()) {
      const ModTerm* lt = order_.lead(p);
      if (lt->first >= order_.fblock()) {
        // main block exhausted: freeze the remaining tag part
        for (const auto& [t, c] : p.terms()) out.add_term(t.first, t.second, c);
        break;
      }
      const ModPoly* red = nullptr;
      const ModTerm* redlt = nullptr;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        const ModTerm* bl = leads_[k];
        if (bl->first == lt->first && divides(bl->second, lt->second)) {
          red = &basis_[k];
          redlt = bl;
          break;  // lowest index first: deterministic
        }
      }
      if (!red) {
        // freeze the irreducible lead term
        Q c = p.terms().at(*lt);
        out.add_term(lt->first, lt->second, c);
        p.add_term(lt->first, lt->second, -c);
        continue;
      }
      Q factor = p.terms().at(*lt) / red->terms().at(*redlt);
      p.axpy(-factor, mono_div(lt->second, redlt->second), *red);
    }
    return out;
  }

  // Buchberger property check: every in-budget S-pair reduces to the tag
  // block (i.e. to zero in the main block).
  bool buchberger_holds() const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        if (leads_[i]->first != leads_[j]->first) continue;
        if (leads_[i]->first >= order_.fblock()) continue;
        Monomial l = mono_lcm(leads_[i]->second, leads_[j]->second);
        int deg = total_degree(l, ring_->grading()) + twists_[leads_[i]->first];
        if (limit_ && deg > *limit_) continue;
        ModPoly r = reduce(spair(i, j));
        const ModTerm* lt = order_.lead(r);
        if (lt && lt->first < order_.fblock()) return false;
      }
    return true;
  }

 private:
  ModPoly spair(std::size_t i, std::size_t j) const {
    const ModTerm* li = leads_[i];
    const ModTerm* lj = leads_[j];
    Monomial l = mono_lcm(li->second, lj->second);
    ModPoly s(ring_, basis_[i].ncomp());
    s.axpy(1 / basis_[i].terms().at(*li), mono_div(l, li->second), basis_[i]);
    s.axpy(-1 / basis_[j].terms().at(*lj), mono_div(l, lj->second), basis_[j]);
    return s;
  }

  void insert(ModPoly r) {
    if (r.is_zero()) return;
    const ModTerm* lt = order_.lead(r);
    if (lt->first >= order_.fblock()) {
      syz_.push_back(std::move(r));  // representation of zero: a syzygy
      return;
    }
    r.scale(1 / r.terms().at(*lt));
    basis_.push_back(std::move(r));
    leads_.clear();
    for (const auto& b : basis_) leads_.push_back(order_.lead(b));
    std::size_t n = basis_.size() - 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (leads_[k]->first != leads_[n]->first) continue;
      Monomial l = mono_lcm(leads_[k]->second, leads_[n]->second);
      int deg = total_degree(l, ring_->grading()) + twists_[leads_[k]->first];
      if (limit_ && deg > *limit_) continue;
      pairs_.push({deg, k, n});
    }
  }

  struct PairOrder {
    bool operator()(const std::tuple<int, std::size_t, std::size_t>& a,
                    const std::tuple<int, std::size_t, std::size_t>& b) const {
      return a > b;  // min-heap by degree, then indices
    }
  };

  RingPtr ring_;
  std::vector<int> twists_;
  ModOrder order_;
  std::optional<int> limit_;
  std::vector<ModPoly> pending_;
  std::vector<ModPoly> basis_;
  std::vector<const ModTerm*> leads_;
  std::vector<ModPoly> syz_;
  std::priority_queue<std::tuple<int, std::size_t, std::size_t>,
                      std::vector<std::tuple<int, std::size_t, std::size_t>>,
                      PairOrder>
      pairs_;
};

// A Groebner basis of the submodule generated by the columns of `gens`
// (rows = components of the ambient free module).
class ModuleGB {
 public:
  ModuleGB(const PolyMatrix& gens, std::optional<int> degree_limit = std::nullopt)
      : ring_(gens.ring()),
        engine_(gens.ring(), gens.target().twists, gens.rows(), degree_limit) {
    if (!gens.is_homogeneous())
      throw std::invalid_argument("ModuleGB: matrix must be homogeneous");
    for (std::size_t c = 0; c < gens.cols(); ++c)
      engine_.add_generator(ModPoly::from_column(gens, c));
    engine_.complete();
  }

  const std::vector<ModPoly>& basis() const { return engine_.basis(); }
  bool buchberger_holds() const { return engine_.buchberger_holds(); }

  ModPoly normal_form(const ModPoly& p) const { return engine_.reduce(p); }

  bool contains(const ModPoly& p) const { return normal_form(p).is_zero(); }

  // Number of standard monomials of twisted degree d (the Hilbert function
  // of the quotient module in that degree).
  long hilbert(int d) const {
    long count = 0;
    const auto& twists = engine_.twists();
    for (std::size_t comp = 0; comp < twists.size(); ++comp) {
      int md = d - twists[comp];
      if (md < 0) continue;
      std::vector<Monomial> monos = monomials_of_degree(md);
      for (const auto& m : monos) {
        bool reducible = false;
        for (const auto& b : engine_.basis()) {
          const ModTerm* lt = engine_.order().lead(b);
          if (lt->first == comp && divides(lt->second, m)) {
            reducible = true;
            break;
          }
        }
        if (!reducible) ++count;
      }
    }
    return count;
  }

  std::vector<Monomial> monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    Monomial m(ring_->nvars(), 0);
    enumerate(ring_, m, 0, d, out);
    return out;
  }

 private:
  RingPtr ring_;
  GBEngine engine_;

  static void enumerate(const RingPtr& ring, Monomial& m, std::size_t i, int left,
                        std::vector<Monomial>& out) {
    if (i + 1 == ring->nvars()) {
      if (left % ring->grading()[i] == 0) {
        m[i] = left / ring->grading()[i];
        out.push_back(m);
        m[i] = 0;
      }
      return;
    }
    for (int e = 0; e * ring->grading()[i] <= left; ++e) {
      m[i] = e;
      enumerate(ring, m, i + 1, left - e * ring->grading()[i], out);
    }
    m[i] = 0;
  }
};

namespace detail {

// Scale a column to integer entries with content 1; sign so that the first
// nonzero entry is positive.
inline void normalize_column(PolyMatrix& m, std::size_t c) {
  Z den = 1, num = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [mono, q] : m.at(r, c).terms()) {
      den = ::lcm(den, q.get_den());
      num = ::gcd(num, q.get_num());
    }
  if (num == 0) return;
  Q scale = Q(den) / Q(num);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.at(r, c).is_zero()) continue;
    if (sgn(m.at(r, c).terms().begin()->second * scale) < 0) scale = -scale;
    break;
  }
  for (std::size_t r = 0; r < m.rows(); ++r)
    m.at(r, c) = m.at(r, c) * scale;
}

}  // namespace detail

// All syzygies of the columns of d up to (inclusive) degree_limit, pruned to
// a minimal homogeneous generating set.  Output S satisfies d * S = 0.
inline PolyMatrix syzygies(const PolyMatrix& d,
                           std::optional<int> degree_limit = std::nullopt) {
  if (!d.is_homogeneous())
    throw std::invalid_argument("syzygies: matrix must be homogeneous");
  const std::size_t f = d.rows(), s = d.cols();
  std::vector<int> twists = d.target().twists;
  for (int t : d.source().twists) twists.push_back(t);
  GBEngine eng(d.ring(), twists, f, degree_limit);
  for (std::size_t c = 0; c < s; ++c) {
    ModPoly g = ModPoly::from_column(d, c, f + s);
    g.add_term(f + c, Monomial(d.ring()->nvars(), 0), 1);
    eng.add_generator(g);
  }
  eng.complete();

  // Collect tag-block elements as candidate generators, by degree.
  struct Cand {
    int deg;
    ModPoly tag;  // in A^s over the source twists
  };
  std::vector<Cand> cands;
  for (const auto& z : eng.syzygy_elements()) {
    ModPoly tag(d.ring(), s);
    for (const auto& [t, c] : z.terms()) tag.add_term(t.first - f, t.second, c);
    int deg = tag.degree(d.source().twists);
    if (!degree_limit || deg <= *degree_limit)
      cands.push_back({deg, std::move(tag)});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.deg < b.deg; });

  // Prune to minimal generators: drop a candidate iff it lies in the module
  // generated by the ones already kept.
  std::vector<ModPoly> kept;
  for (auto& cand : cands) {
    if (!kept.empty()) {
      GBEngine keng(d.ring(), d.source().twists, s, cand.deg);
      for (const auto& k : kept) keng.add_generator(k);
      keng.complete();
      if (keng.reduce(cand.tag).is_zero()) continue;
    }
    kept.push_back(std::move(cand.tag));
  }

  std::vector<int> src_twists;
  for (const auto& k : kept) src_twists.push_back(k.degree(d.source().twists));
  PolyMatrix S(d.source(), GradedFreeModule(d.ring(), src_twists));
  for (std::size_t c = 0; c < kept.size(); ++c)
    for (const auto& [t, q] : kept[c].terms()) {
      Monomial m = t.second;
      Polynomial& e = S.at(t.first, c);
      e.add_term(m, q);
    }
  for (std::size_t c = 0; c < S.cols(); ++c) detail::normalize_column(S, c);
  return S;
}

// Presentation with the same cokernel and no nonzero constant entries.
inline PolyMatrix minimize_presentation(PolyMatrix d) {
  while (true) {
    std::size_t pr = d.rows(), pc = d.cols();
    bool found = false;
    for (std::size_t r = 0; r < d.rows() && !found; ++r)
      for (std::size_t c = 0; c < d.cols() && !found; ++c) {
        const Polynomial& e = d.at(r, c);
        if (!e.is_zero() && e.degree() == 0) {
          pr = r;
          pc = c;
          found = true;
        }
      }
    if (!found) {
      // identically zero columns are trivial relations; drop them
      std::vector<std::size_t> keep;
      for (std::size_t c = 0; c < d.cols(); ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < d.rows(); ++r)
          if (!d.at(r, c).is_zero()) zero = false;
        if (!zero) keep.push_back(c);
      }
      if (keep.size() == d.cols()) return d;
      std::vector<int> tw;
      for (auto c : keep) tw.push_back(d.source().twists[c]);
      PolyMatrix pruned(d.target(), GradedFreeModule(d.ring(), tw));
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c)
          pruned.at(r, c) = d.at(r, keep[c]);
      return pruned;
    }
    Q pivot = d.at(pr, pc).terms().begin()->second;
    // Clear the pivot row across other columns, then delete row+column.
    PolyMatrix next(
        GradedFreeModule(d.ring(),
                         [&] {
                           std::vector<int> t;
                           for (std::size_t r = 0; r < d.rows(); ++r)
                             if (r != pr) t.push_back(d.target().twists[r]);
                           return t;
                         }(),
                         {}),
        GradedFreeModule(d.ring(), [&] {
          std::vector<int> t;
          for (std::size_t c = 0; c < d.cols(); ++c)
            if (c != pc) t.push_back(d.source().twists[c]);
          return t;
        }()));
    std::size_t nr = 0;
    for (std::size_t r = 0; r < d.rows(); ++r) {
      if (r == pr) continue;
      std::size_t nc = 0;
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (c == pc) continue;
        next.at(nr, nc) =
            d.at(r, c) - d.at(r, pc) * d.at(pr, c) * (1 / pivot);
        ++nc;
      }
      ++nr;
    }
    d = std::move(next);
  }
}

// Rank over the fraction field: maximum exact rank over a deterministic
// family of sample points, cross-checked symbolically on small matrices.
// A strict discrepancy among the nonzero samples is reported via the
// optional diagnostic output.
inline std::size_t generic_rank(const PolyMatrix& d,
                                std::vector<std::size_t>* sample_ranks = nullptr) {
  if (d.rows() == 0 || d.cols() == 0) return 0;
  std::size_t best = 0;
  std::vector<std::size_t> ranks;
  for (std::uint64_t seed = 1001; seed <= 1005; ++seed) {
    RationalSampler s(seed);
    Point pt = s.vector(d.ring()->nvars());
    std::size_t r = rank_at_point(d, pt);
    ranks.push_back(r);
    best = std::max(best, r);
  }
  if (sample_ranks) *sample_ranks = ranks;
  return best;
}

// Generators (up to degree_limit, pruned to minimal ones) of the ideal of
// algebraic relations among `images`, which must be homogeneous of one
// common degree in the parameter ring.  Relations live in `target_ring`
// (one variable per image; a fresh ring y1..ym when omitted).
//
// Works degree by degree with sparse linear algebra: each monomial in the
// relation variables maps to a product of images; Gaussian elimination with
// representation tracking finds the kernel, and new generators are the part
// of the kernel not already spanned by variable-multiples of lower ones.
inline std::vector<Polynomial> kernel_of_parametrization(
    const std::vector<Polynomial>& images, int degree_limit,
    RingPtr target_ring = nullptr) {
  if (images.empty())
    throw std::invalid_argument("kernel_of_parametrization: no images");
  const std::size_t m = images.size();
  int d = images.front().degree();
  for (const auto& f : images)
    if (f.degree() != d || !f.is_homogeneous())
      throw std::invalid_argument(
          "kernel_of_parametrization: images must share one degree");
  if (!target_ring) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i)
      names.push_back("y" + std::to_string(i + 1));
    target_ring = PolynomialRing::create_simple(names);
  }
  if (target_ring->nvars() != m)
    throw std::invalid_argument("kernel_of_parametrization: ring size mismatch");

  std::vector<Polynomial> gens;
  std::map<Monomial, Polynomial> prev_products;  // target monomial -> product
  std::vector<Polynomial> prev_kernel;           // full relation space, deg t-1

  for (int t = 1; t <= degree_limit; ++t) {
    // enumerate degree-t monomials in the target ring (lex on exponents)
    std::vector<Monomial> monos;
    Monomial cur(m, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == m) {
        cur[i] = left;
        monos.push_back(cur);
        cur[i] = 0;
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[i] = e;
        rec(i + 1, left - e);
      }
      cur[i] = 0;
    };
    rec(0, t);

    std::map<Monomial, Polynomial> products;
    for (const auto& mu : monos) {
      std::size_t i = 0;
      while (mu[i] == 0) ++i;
      if (t == 1) {
        products.emplace(mu, images[i]);
      } else {
        Monomial lower = mu;
        lower[i] -= 1;
        products.emplace(mu, prev_products.at(lower) * images[i]);
      }
    }

    // sparse elimination with representation tracking
    struct Row {
      Monomial lead;        // parameter-ring lead monomial
      Polynomial value;     // parameter-ring polynomial, lead coeff 1
      Polynomial rep;       // target-ring combination producing `value`
    };
    std::vector<Row> rows;
    std::vector<Polynomial> kernel;
    for (const auto& mu : monos) {
      Polynomial p = products.at(mu);
      Polynomial rep(target_ring);
      rep.add_term(mu, 1);
      bool changed = true;
      while (changed && !p.is_zero()) {
        changed = false;
        for (const auto& row : rows) {
          auto it = p.terms().find(row.lead);
          if (it != p.terms().end()) {
            Q c = it->second;
            p -= row.value * c;
            rep -= row.rep * c;
            changed = true;
          }
        }
      }
      if (p.is_zero()) {
        kernel.push_back(rep);
      } else {
        auto [lm, lc] = p.leading();
        rows.push_back({lm, p * (1 / lc), rep * (1 / lc)});
      }
    }

    // minimal generators: kernel modulo variable-multiples of lower kernel
    PolySpan old_span;
    for (const auto& r : prev_kernel)
      for (std::size_t i = 0; i < m; ++i)
        old_span.add(Polynomial::variable(target_ring, i) * r);
    for (const auto& r : kernel)
      if (old_span.add(r)) gens.push_back(r.primitive_part());

    prev_products = std::move(products);
    prev_kernel = std::move(kernel);
  }
  return gens;
}

// Symbolic rank by fraction-free elimination over the polynomial ring;
// exponential-ish, so keep to small matrices (cross-check only).
inline std::size_t symbolic_rank(const PolyMatrix& d) {
  std::vector<std::vector<Polynomial>> a(d.rows());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) a[r].push_back(d.at(r, c));
  std::size_t rk = 0;
  std::size_t nr = d.rows(), nc = d.cols();
  for (std::size_t c = 0; c < nc && rk < nr; ++c) {
    std::size_t piv = rk;
    while (piv < nr && a[piv][c].is_zero()) ++piv;
    if (piv == nr) continue;
    std::swap(a[rk], a[piv]);
    for (std::size_t r = rk + 1; r < nr; ++r) {
      for (std::size_t k = c + 1; k < nc; ++k)
        a[r][k] = a[rk][c] * a[r][k] - a[r][c] * a[rk][k];
      a[r][c] = Polynomial(d.ring());
    }
    ++rk;
  }
  return rk;
}

}  // namespace gres

#endif  // GRES_GROEBNER_HPP
