// Finite complexes of graded free modules: Betti tables, duals, the
// interactive resolution method (bounded syzygies for the tail, dualized
// syzygies of the transpose for the head), chain-map lifting, mapping
// cones, and the (truncated) cone procedure for non-normal orbit closures.
#ifndef GRES_COMPLEXES_HPP
#define GRES_COMPLEXES_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gres/groebner.hpp"
#include "gres/module.hpp"

namespace gres {

struct FreeComplex {
  // modules[0..n]; diffs[k] : modules[k+1] -> modules[k]
  std::vector<GradedFreeModule> modules;
  std::vector<PolyMatrix> diffs;

  std::size_t length() const { return diffs.size(); }
  const PolyMatrix& d(std::size_t i) const { return diffs.at(i - 1); }

  static FreeComplex single(const GradedFreeModule& m) {
    FreeComplex c;
    c.modules.push_back(m);
    return c;
  }
  static FreeComplex from_differentials(std::vector<PolyMatrix> ds) {
    FreeComplex c;
    c.diffs = std::move(ds);
    c.modules.push_back(c.diffs.front().target());
    for (const auto& d : c.diffs) c.modules.push_back(d.source());
    return c;
  }
};

// true with -1, or false with the first index i such that d_i * d_{i+1} != 0.
inline std::pair<bool, int> is_complex(const FreeComplex& c) {
  for (std::size_t i = 0; i + 1 < c.diffs.size(); ++i) {
    if (!(c.diffs[i].source() == c.diffs[i + 1].target()))
      return {false, static_cast<int>(i + 1)};
    if (!(c.diffs[i] * c.diffs[i + 1]).is_zero())
      return {false, static_cast<int>(i + 1)};
  }
  return {true, -1};
}

inline bool is_minimal(const FreeComplex& c) {
  for (const auto& d : c.diffs)
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t s = 0; s < d.cols(); ++s)
        if (!d.at(r, s).is_zero() && d.at(r, s).degree() == 0) return false;
  return true;
}

struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (homological i, degree j)

  static BettiTable of(const FreeComplex& c) {
    if (!is_minimal(c))
      throw std::runtime_error("betti: complex is not minimal");
    BettiTable t;
    for (std::size_t i = 0; i < c.modules.size(); ++i)
      for (int w : c.modules[i].twists)
        t.entries[{static_cast<int>(i), w}] += 1;
    return t;
  }

  std::vector<long> totals() const {
    std::vector<long> tot;
    for (const auto& [ij, b] : entries) {
      if (ij.first >= static_cast<int>(tot.size())) tot.resize(ij.first + 1, 0);
      tot[ij.first] += b;
    }
    return tot;
  }

  bool operator==(const BettiTable& o) const { return entries == o.entries; }

  // Text layout with rows indexed by j - i and dots for zeros.
  std::string render_paper() const {
    if (entries.empty()) return "(empty)\n";
    int maxi = 0, minr = 1 << 30, maxr = -(1 << 30);
    for (const auto& [ij, b] : entries) {
      maxi = std::max(maxi, ij.first);
      minr = std::min(minr, ij.second - ij.first);
      maxr = std::max(maxr, ij.second - ij.first);
    }
    std::vector<long> tot = totals();
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{""};
    for (int i = 0; i <= maxi; ++i) head.push_back(std::to_string(i));
    grid.push_back(head);
    std::vector<std::string> trow{"total:"};
    for (int i = 0; i <= maxi; ++i)
      trow.push_back(std::to_string(i < (int)tot.size() ? tot[i] : 0));
    grid.push_back(trow);
    for (int r = minr; r <= maxr; ++r) {
      std::vector<std::string> row{std::to_string(r) + ":"};
      for (int i = 0; i <= maxi; ++i) {
        auto it = entries.find({i, i + r});
        row.push_back(it == entries.end() ? "." : std::to_string(it->second));
      }
      grid.push_back(row);
    }
    std::vector<std::size_t> width(maxi + 2, 0);
    for (const auto& row : grid)
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : grid) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) os << " ";
        os << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
      os << "\n";
    }
    return os.str();
  }

  std::string render_triples() const {
    std::ostringstream os;
    for (const auto& [ij, b] : entries)
      os << ij.first << " " << ij.second << " " << b << "\n";
    return os.str();
  }
};

inline FreeComplex dualize(const FreeComplex& c) {
  FreeComplex d;
  const std::size_t n = c.modules.size();
  for (std::size_t i = 0; i < n; ++i)
    d.modules.push_back(c.modules[n - 1 - i].dual());
  for (std::size_t i = 0; i + 1 < n; ++i)
    d.diffs.push_back(c.diffs[n - 2 - i].transpose());
  return d;
}

// Tail = iterated bounded syzygies of d; head = iterated bounded syzygies
// of the transpose, dualized back; spliced around d itself.
inline FreeComplex resolve_interactive(const PolyMatrix& d,
                                       const std::vector<int>& tail_bounds,
                                       const std::vector<int>& head_bounds,
                                       std::size_t length_limit) {
  if (!d.is_homogeneous())
    throw std::invalid_argument("resolve_interactive: d must be homogeneous");
  std::vector<PolyMatrix> tail;
  {
    const PolyMatrix* prev = &d;
    for (int b : tail_bounds) {
      PolyMatrix s = syzygies(*prev, b);
      if (s.cols() == 0) break;
      tail.push_back(std::move(s));
      prev = &tail.back();
    }
  }
  std::vector<PolyMatrix> head;  // syzygy chain on the dual side
  {
    PolyMatrix t = d.transpose();
    const PolyMatrix* prev = &t;
    for (int b : head_bounds) {
      PolyMatrix s = syzygies(*prev, b);
      if (s.cols() == 0) break;
      head.push_back(std::move(s));
      prev = &head.back();
    }
  }
  std::vector<PolyMatrix> diffs;
  for (std::size_t i = head.size(); i-- > 0;)
    diffs.push_back(head[i].transpose());
  diffs.push_back(d);
  for (auto& t : tail) diffs.push_back(std::move(t));
  if (diffs.size() > length_limit) diffs.resize(length_limit);
  FreeComplex out = FreeComplex::from_differentials(std::move(diffs));
  auto [ok, idx] = is_complex(out);
  if (!ok)
    throw std::runtime_error("resolve_interactive: splice failed at index " +
                             std::to_string(idx));
  return out;
}

// Express each column of `rhs` as a module combination of the columns of
// `gens`: returns X with gens * X = rhs, or nullopt if some column is not
// in the column module.
inline std::optional<PolyMatrix> module_lift(const PolyMatrix& gens,
                                             const PolyMatrix& rhs) {
  const std::size_t f = gens.rows(), s = gens.cols();
  int limit = 0;
  for (int w : rhs.source().twists) limit = std::max(limit, w);
  for (int w : gens.source().twists) limit = std::max(limit, w);
  std::vector<int> twists = gens.target().twists;
  for (int t : gens.source().twists) twists.push_back(t);
  GBEngine eng(gens.ring(), twists, f, limit);
  for (std::size_t c = 0; c < s; ++c) {
    ModPoly g = ModPoly::from_column(gens, c, f + s);
    g.add_term(f + c, Monomial(gens.ring()->nvars(), 0), 1);
    eng.add_generator(g);
  }
  eng.complete();
  PolyMatrix X(gens.source(), rhs.source());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    ModPoly v = ModPoly::from_column(rhs, c, f + s);
    ModPoly r = eng.reduce(v);
    for (const auto& [t, q] : r.terms()) {
      if (t.first < f) return std::nullopt;  // not in the module
      X.at(t.first - f, c).add_term(t.second, -q);
    }
  }
  return X;
}

struct ChainMap {
  FreeComplex from, to;
  std::vector<PolyMatrix> blocks;  // blocks[i] : from.modules[i] -> to.modules[i]
};

inline ChainMap lift_chain_map(const FreeComplex& F, const FreeComplex& Fp,
                               const PolyMatrix& pi0) {
  if (!(pi0.source() == F.modules.at(0)) || !(pi0.target() == Fp.modules.at(0)))
    throw std::invalid_argument("lift_chain_map: pi0 endpoints mismatch");
  ChainMap m{F, Fp, {pi0}};
  std::size_t levels = std::min(F.length(), Fp.length());
  for (std::size_t i = 1; i <= levels; ++i) {
    PolyMatrix rhs = m.blocks[i - 1] * F.d(i);
    auto x = module_lift(Fp.d(i), rhs);
    if (!x)
      throw std::runtime_error(
          "lift_chain_map: factorization failed at level " + std::to_string(i));
    m.blocks.push_back(std::move(*x));
  }
  // verify the commutation squares exactly
  for (std::size_t i = 1; i < m.blocks.size(); ++i) {
    PolyMatrix lhs = Fp.d(i) * m.blocks[i];
    PolyMatrix rhs = m.blocks[i - 1] * F.d(i);
    for (std::size_t r = 0; r < lhs.rows(); ++r)
      for (std::size_t c = 0; c < lhs.cols(); ++c)
        if (!(lhs.at(r, c) - rhs.at(r, c)).is_zero())
          throw std::runtime_error("lift_chain_map: square " +
                                   std::to_string(i) + " does not commute");
  }
  return m;
}

// Cone of m : F -> G.  C_i = G_i (+) F_{i-1}, differential
// (x_F, y_G) -> (d^G y + (-1)^i m_{i-1} x, d^F x).
inline FreeComplex mapping_cone(const ChainMap& m) {
  const FreeComplex& F = m.from;
  const FreeComplex& G = m.to;
  const RingPtr& ring = F.modules[0].ring;
  std::size_t n = std::max(F.modules.size() + 1, G.modules.size());
  FreeComplex cone;
  auto module_at = [&](std::size_t i) {
    std::vector<int> tw;
    std::vector<std::string> lb;
    if (i < G.modules.size()) {
      for (int w : G.modules[i].twists) tw.push_back(w);
    }
    if (i >= 1 && i - 1 < F.modules.size()) {
      for (int w : F.modules[i - 1].twists) tw.push_back(w);
    }
    return GradedFreeModule(ring, tw, lb);
  };
  for (std::size_t i = 0; i < n; ++i) cone.modules.push_back(module_at(i));
  for (std::size_t i = 1; i < n; ++i) {
    PolyMatrix d(cone.modules[i - 1], cone.modules[i]);
    std::size_t grows = i - 1 < G.modules.size() ? G.modules[i - 1].rank() : 0;
    std::size_t gcols = i < G.modules.size() ? G.modules[i].rank() : 0;
    if (i < G.modules.size() && i >= 1 && !(gcols == 0))
      if (i <= G.length()) {
        const PolyMatrix& dg = G.d(i);
        for (std::size_t r = 0; r < dg.rows(); ++r)
          for (std::size_t c = 0; c < dg.cols(); ++c) d.at(r, c) = dg.at(r, c);
      }
    if (i - 1 < F.modules.size() && i - 1 < m.blocks.size()) {
      const PolyMatrix& blk = m.blocks[i - 1];  // F_{i-1} -> G_{i-1}
      Q sign = (i % 2 == 0) ? 1 : -1;
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c)
          d.at(r, gcols + c) = blk.at(r, c) * sign;
    }
    if (i >= 2 && i - 1 <= F.length()) {
      const PolyMatrix& df = F.d(i - 1);
      for (std::size_t r = 0; r < df.rows(); ++r)
        for (std::size_t c = 0; c < df.cols(); ++c)
          d.at(grows + r, gcols + c) = df.at(r, c);
    }
    cone.diffs.push_back(std::move(d));
  }
  auto [ok, idx] = is_complex(cone);
  if (!ok)
    throw std::logic_error("mapping_cone: composition nonzero at " +
                           std::to_string(idx));
  return cone;
}

inline PolyMatrix concat_columns(const PolyMatrix& a, const PolyMatrix& b) {
  if (!(a.target() == b.target()))
    throw std::invalid_argument("concat_columns: target mismatch");
  std::vector<int> tw = a.source().twists;
  for (int w : b.source().twists) tw.push_back(w);
  PolyMatrix out(a.target(), GradedFreeModule(a.ring(), tw));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      out.at(r, a.cols() + c) = b.at(r, c);
  }
  return out;
}

// Minimal presentation of ker(d1)/im(d2), with inclusive degree bounds for
// the kernel generators and for the relations.
inline PolyMatrix homology_presentation(const PolyMatrix& d1,
                                        const PolyMatrix& d2, int ker_bound,
                                        int rel_bound) {
  PolyMatrix K = syzygies(d1, ker_bound);
  PolyMatrix KD = concat_columns(K, d2);
  PolyMatrix S = syzygies(KD, rel_bound);
  // restrict to the K block of rows
  PolyMatrix rel(K.source(), S.source());
  for (std::size_t r = 0; r < K.cols(); ++r)
    for (std::size_t c = 0; c < S.cols(); ++c) rel.at(r, c) = S.at(r, c);
  return minimize_presentation(rel);
}

// The cone procedure for a non-normal orbit closure.  F resolves the
// normalization coordinate ring (at least to homological degree 2);
// dropping `dropped_rows` / `dropped_cols` from d1 presents the cokernel C.
// Returns a minimal presentation of the coordinate ring of the orbit
// closure, the degree-one homology of the (truncated) cone.
struct ConeBounds {
  int cprime_syzygy_bound;  // bound for F'_2 = syz(d'_1)
  int kernel_bound;         // bound for ker(d^C_1) generators
  int relation_bound;       // bound for the relations of the homology
};

inline PolyMatrix cone_procedure(const FreeComplex& F,
                                 const std::vector<std::size_t>& dropped_rows,
                                 const std::vector<std::size_t>& dropped_cols,
                                 const ConeBounds& bounds,
                                 bool truncated = true) {
  const PolyMatrix& d1 = F.d(1);
  const RingPtr& ring = d1.ring();
  std::vector<std::size_t> rows, cols;
  auto dropped = [](const std::vector<std::size_t>& v, std::size_t x) {
    for (auto d : v)
      if (d == x) return true;
    return false;
  };
  for (std::size_t r = 0; r < d1.rows(); ++r)
    if (!dropped(dropped_rows, r)) rows.push_back(r);
  for (std::size_t c = 0; c < d1.cols(); ++c)
    if (!dropped(dropped_cols, c)) cols.push_back(c);

  std::vector<int> ptw, stw;
  for (auto r : rows) ptw.push_back(d1.target().twists[r]);
  for (auto c : cols) stw.push_back(d1.source().twists[c]);
  PolyMatrix dp1(GradedFreeModule(ring, ptw), GradedFreeModule(ring, stw));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      dp1.at(r, c) = d1.at(rows[r], cols[c]);

  // projection pi0 : F_0 -> F'_0 keeping the surviving rows
  PolyMatrix pi0(dp1.target(), d1.target());
  for (std::size_t r = 0; r < rows.size(); ++r)
    pi0.at(r, rows[r]) = Polynomial::constant(ring, 1);

  // resolution of C up to homological degree 2
  PolyMatrix dp2 = syzygies(dp1, bounds.cprime_syzygy_bound);
  FreeComplex Fp = FreeComplex::from_differentials(
      dp2.cols() ? std::vector<PolyMatrix>{dp1, dp2}
                 : std::vector<PolyMatrix>{dp1});
  // The cone is only consumed through homological degree 2, and F may not
  // be truncated deeper than F' extends (the commuting squares stop there).
  std::size_t depth = truncated ? std::min<std::size_t>(2, Fp.length())
                                : std::min(F.length(), Fp.length());
  FreeComplex Ftrunc;
  Ftrunc.modules.assign(F.modules.begin(),
                        F.modules.begin() + std::min(F.modules.size(), depth + 1));
  Ftrunc.diffs.assign(F.diffs.begin(),
                      F.diffs.begin() + std::min(F.diffs.size(), depth));
  ChainMap pi = lift_chain_map(Ftrunc, Fp, pi0);
  FreeComplex cone = mapping_cone(pi);
  if (cone.length() < 2)
    throw std::runtime_error("cone_procedure: cone too short for homology");
  return homology_presentation(cone.d(1), cone.d(2), bounds.kernel_bound,
                               bounds.relation_bound);
}

}  // namespace gres

#endif  // GRES_COMPLEXES_HPP
