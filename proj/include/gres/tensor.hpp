// Based multilinear algebra for GL-equivariant maps between tensor
// products of symmetric and exterior powers.
//
// Bases are deterministic: symmetric powers are indexed by nondecreasing
// index tuples, exterior powers by increasing tuples, tensor products
// row-major in factor order.  Maps are stored column-sparse because the
// interesting ones (diagonals, multiplications, traces) have only a few
// entries per column, while intermediate spaces can get large.
#ifndef GRES_TENSOR_HPP
#define GRES_TENSOR_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gres/linalg.hpp"
#include "gres/rational.hpp"

namespace gres {

enum class PowerKind { Sym, Ext };

struct TensorFactor {
  std::string space;  // "E", "F", "V", ...
  bool dual = false;
  PowerKind kind = PowerKind::Sym;
  int power = 1;

  bool operator==(const TensorFactor& o) const {
    if (space != o.space || dual != o.dual || power != o.power) return false;
    // a first power is both symmetric and exterior
    return kind == o.kind || power <= 1;
  }
  std::string str() const {
    std::string s = (kind == PowerKind::Ext ? "Ext" : "Sym") +
                    std::to_string(power) + "(" + space + (dual ? "*" : "") + ")";
    return s;
  }
};

inline TensorFactor Vec(const std::string& space, bool dual = false) {
  return {space, dual, PowerKind::Sym, 1};
}
inline TensorFactor Sym(int r, const std::string& space, bool dual = false) {
  return {space, dual, PowerKind::Sym, r};
}
inline TensorFactor Ext(int r, const std::string& space, bool dual = false) {
  return {space, dual, PowerKind::Ext, r};
}

using IndexTuple = std::vector<int>;  // 1-based space indices

// All nondecreasing (Sym) or increasing (Ext) r-tuples from 1..n.
inline std::vector<IndexTuple> power_basis(int n, int r, PowerKind kind) {
  if (r < 0 || (kind == PowerKind::Ext && r > n))
    throw std::invalid_argument("power_basis: power out of range");
  std::vector<IndexTuple> out;
  IndexTuple cur;
  std::function<void(int)> rec = [&](int lo) {
    if ((int)cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (int i = lo; i <= n; ++i) {
      cur.push_back(i);
      rec(kind == PowerKind::Ext ? i + 1 : i);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

class TensorSpace {
 public:
  TensorSpace() = default;
  TensorSpace(std::vector<TensorFactor> factors, std::map<std::string, int> dims)
      : factors_(std::move(factors)), dims_(std::move(dims)) {
    for (const auto& f : factors_) {
      auto it = dims_.find(f.space);
      if (it == dims_.end())
        throw std::invalid_argument("TensorSpace: unknown space " + f.space);
      bases_.push_back(power_basis(it->second, f.power, f.kind));
    }
  }

  const std::vector<TensorFactor>& factors() const { return factors_; }
  const std::map<std::string, int>& dims() const { return dims_; }
  int space_dim(const std::string& id) const { return dims_.at(id); }
  const std::vector<std::vector<IndexTuple>>& bases() const { return bases_; }

  std::size_t dim() const {
    std::size_t d = 1;
    for (const auto& b : bases_) d *= b.size();
    return d;
  }

  // row-major index of a tuple of per-factor basis positions
  std::size_t flatten(const std::vector<std::size_t>& pos) const {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < bases_.size(); ++f)
      idx = idx * bases_[f].size() + pos[f];
    return idx;
  }
  std::vector<std::size_t> unflatten(std::size_t idx) const {
    std::vector<std::size_t> pos(bases_.size());
    for (std::size_t f = bases_.size(); f-- > 0;) {
      pos[f] = idx % bases_[f].size();
      idx /= bases_[f].size();
    }
    return pos;
  }

  // position of an index tuple in a factor's basis (tuple must be canonical)
  std::size_t factor_index(std::size_t f, const IndexTuple& t) const {
    const auto& b = bases_[f];
    auto it = std::lower_bound(b.begin(), b.end(), t);
    if (it == b.end() || *it != t)
      throw std::logic_error("TensorSpace: tuple not in basis");
    return static_cast<std::size_t>(it - b.begin());
  }

  bool operator==(const TensorSpace& o) const {
    if (factors_.size() != o.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (!(factors_[i] == o.factors_[i])) return false;
      if (space_dim(factors_[i].space) != o.space_dim(factors_[i].space))
        return false;
    }
    return true;
  }

  std::string str() const {
    if (factors_.empty()) return "Q";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += " (x) ";
      s += factors_[i].str();
    }
    return s;
  }

 private:
  std::vector<TensorFactor> factors_;
  std::map<std::string, int> dims_;
  std::vector<std::vector<IndexTuple>> bases_;
};

// Column-sparse exact-rational matrix.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0) {}
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols, std::map<std::size_t, Q>()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const std::map<std::size_t, Q>& column(std::size_t c) const { return cols_[c]; }

  void add(std::size_t r, std::size_t c, const Q& v) {
    if (gres::is_zero(v)) return;
    auto& col = cols_[c];
    auto it = col.find(r);
    if (it == col.end()) {
      col.emplace(r, v);
    } else {
      it->second += v;
      if (gres::is_zero(it->second)) col.erase(it);
    }
  }
  Q get(std::size_t r, std::size_t c) const {
    auto it = cols_[c].find(r);
    return it == cols_[c].end() ? Q(0) : it->second;
  }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.add(i, i, 1);
    return m;
  }

  // this (*) o  (Kronecker / tensor product, row-major blocks)
  SparseMatrix kron(const SparseMatrix& o) const {
    SparseMatrix out(rows_ * o.rows_, cols() * o.cols());
    for (std::size_t c1 = 0; c1 < cols(); ++c1)
      for (const auto& [r1, v1] : cols_[c1])
        for (std::size_t c2 = 0; c2 < o.cols(); ++c2)
          for (const auto& [r2, v2] : o.cols_[c2])
            out.add(r1 * o.rows_ + r2, c1 * o.cols() + c2, v1 * v2);
    return out;
  }

  // matrix product this * o
  SparseMatrix times(const SparseMatrix& o) const {
    if (cols() != o.rows())
      throw std::invalid_argument("SparseMatrix: product shape mismatch");
    SparseMatrix out(rows_, o.cols());
    for (std::size_t c = 0; c < o.cols(); ++c)
      for (const auto& [k, v] : o.cols_[c])
        for (const auto& [r, w] : cols_[k]) out.add(r, c, v * w);
    return out;
  }

  SparseMatrix scaled(const Q& s) const {
    SparseMatrix out = *this;
    for (auto& col : out.cols_)
      for (auto& [r, v] : col) v *= s;
    return out;
  }

  bool is_zero() const {
    for (const auto& col : cols_)
      if (!col.empty()) return false;
    return true;
  }
  bool equals(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols() != o.cols()) return false;
    for (std::size_t c = 0; c < cols(); ++c)
      if (cols_[c] != o.cols_[c]) return false;
    return true;
  }

  QMatrix dense() const {
    QMatrix m(rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : cols_[c]) m(r, c) = v;
    return m;
  }
  static SparseMatrix from_dense(const QMatrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) s.add(r, c, m(r, c));
    return s;
  }

 private:
  std::size_t rows_;
  std::vector<std::map<std::size_t, Q>> cols_;
};

struct EquivariantMap {
  TensorSpace domain;
  TensorSpace codomain;
  SparseMatrix matrix;  // rows = codomain basis, cols = domain basis

  EquivariantMap() = default;
  EquivariantMap(TensorSpace dom, TensorSpace cod)
      : domain(std::move(dom)),
        codomain(std::move(cod)),
        matrix(codomain.dim(), domain.dim()) {}

  static EquivariantMap identity(const TensorSpace& s) {
    EquivariantMap m(s, s);
    m.matrix = SparseMatrix::identity(s.dim());
    return m;
  }

  EquivariantMap tensor(const EquivariantMap& o) const {
    std::vector<TensorFactor> df = domain.factors(), cf = codomain.factors();
    for (const auto& f : o.domain.factors()) df.push_back(f);
    for (const auto& f : o.codomain.factors()) cf.push_back(f);
    std::map<std::string, int> dims = domain.dims();
    for (const auto& [k, v] : o.domain.dims()) dims[k] = v;
    for (const auto& [k, v] : o.codomain.dims()) dims[k] = v;
    EquivariantMap out(TensorSpace(df, dims), TensorSpace(cf, dims));
    out.matrix = matrix.kron(o.matrix);
    return out;
  }

  EquivariantMap scaled(const Q& s) const {
    EquivariantMap out = *this;
    out.matrix = matrix.scaled(s);
    return out;
  }
};

// maps[k-1] ∘ ... ∘ maps[0] applied in listed (left-to-right) order.
inline EquivariantMap compose(const std::vector<EquivariantMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("compose: empty chain");
  EquivariantMap out = maps.front();
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (!(maps[i].domain == out.codomain))
      throw std::invalid_argument(
          "compose: space mismatch at junction " + std::to_string(i) + ": " +
          out.codomain.str() + " vs " + maps[i].domain.str());
    out.matrix = maps[i].matrix.times(out.matrix);
    out.codomain = maps[i].codomain;
  }
  return out;
}

namespace tensor_detail {

inline int merge_sign_and_sort(IndexTuple& t, PowerKind kind) {
  // insertion sort counting inversions; repeated exterior letters kill
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) {
        if (kind == PowerKind::Ext) return 0;
        break;
      }
      std::swap(t[j - 1], t[j]);
      if (kind == PowerKind::Ext) sign = -sign;
    }
  return sign;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace tensor_detail

// Diagonal at one factor: split P_{r+s} into P_r (x) P_s at `pos`.
inline EquivariantMap diagonal_at(const TensorSpace& sp, std::size_t pos, int r,
                                  int s) {
  const TensorFactor& f = sp.factors().at(pos);
  if (f.power != r + s) throw std::invalid_argument("diagonal_at: power mismatch");
  std::vector<TensorFactor> cf;
  for (std::size_t i = 0; i < sp.factors().size(); ++i) {
    if (i == pos) {
      TensorFactor a = f, b = f;
      a.power = r;
      b.power = s;
      cf.push_back(a);
      cf.push_back(b);
    } else {
      cf.push_back(sp.factors()[i]);
    }
  }
  TensorSpace cod(cf, sp.dims());
  EquivariantMap m(sp, cod);
  for (std::size_t col = 0; col < sp.dim(); ++col) {
    std::vector<std::size_t> dpos = sp.unflatten(col);
    const IndexTuple& t = sp.bases()[pos][dpos[pos]];
    // choose which r of the r+s letters go left
    std::vector<int> sel(r + s, 0);
    std::fill(sel.begin(), sel.begin() + r, 1);
    std::sort(sel.begin(), sel.end(), std::greater<int>());
    // iterate over all position subsets of size r
    std::vector<std::size_t> subset(r);
    std::function<void(int, int)> rec_sel = [&](int start, int chosen) {
      if (chosen == r) {
        IndexTuple left, right;
        int sign = 1;
        std::size_t si = 0;
        for (int i = 0; i < r + s; ++i) {
          if (si < subset.size() && subset[si] == (std::size_t)i) {
            if (f.kind == PowerKind::Ext) {
              // sign: move letter i left past the earlier non-chosen letters
              int skipped = i - (int)si;
              if (skipped % 2 == 1) sign = -sign;
            }
            left.push_back(t[i]);
            ++si;
          } else {
            right.push_back(t[i]);
          }
        }
        // symmetric powers: identical splits coincide; each distinct
        // (left,right) pair accumulates its shuffle multiplicity
        std::vector<std::size_t> cpos;
        for (std::size_t i = 0; i < cod.factors().size(); ++i) {
          if (i < pos) cpos.push_back(dpos[i]);
        }
        cpos.push_back(cod.factor_index(pos, left));
        cpos.push_back(cod.factor_index(pos + 1, right));
        for (std::size_t i = pos + 1; i < sp.factors().size(); ++i)
          cpos.push_back(dpos[i]);
        m.matrix.add(cod.flatten(cpos), col, Q(sign));
        return;
      }
      for (int i = start; i <= r + s - (r - chosen); ++i) {
        subset[chosen] = i;
        rec_sel(i + 1, chosen + 1);
      }
    };
    if (r == 0 || s == 0) {
      // trivial split
      std::vector<std::size_t> cpos;
      for (std::size_t i = 0; i < pos; ++i) cpos.push_back(dpos[i]);
      cpos.push_back(r == 0 ? 0 : dpos[pos]);
      // left factor has one basis element when r == 0
      if (r == 0) {
        cpos.back() = 0;
        cpos.push_back(dpos[pos]);
      } else {
        cpos.push_back(0);
      }
      for (std::size_t i = pos + 1; i < sp.factors().size(); ++i)
        cpos.push_back(dpos[i]);
      m.matrix.add(cod.flatten(cpos), col, 1);
    } else {
      rec_sel(0, 0);
    }
  }
  return m;
}

// Multiplication of the factors at `positions` (all the same space/kind/
// duality); the product lands at the position of the first listed factor,
// the other factors disappear.  Exterior merges carry the shuffle sign.
inline EquivariantMap multiply_at(const TensorSpace& sp,
                                  std::vector<std::size_t> positions,
                                  std::optional<PowerKind> result_kind = {}) {
  if (positions.size() < 2)
    throw std::invalid_argument("multiply_at: need at least two factors");
  std::sort(positions.begin(), positions.end());
  const TensorFactor& f0 = sp.factors().at(positions[0]);
  TensorFactor prod = f0;
  for (std::size_t k = 1; k < positions.size(); ++k) {
    const TensorFactor& fk = sp.factors().at(positions[k]);
    if (fk.space != f0.space || fk.dual != f0.dual ||
        (fk.kind != f0.kind && fk.power > 1 && f0.power > 1))
      throw std::invalid_argument("multiply_at: incompatible factors");
    prod.power += fk.power;
    if (fk.power > 1) prod.kind = fk.kind;
  }
  if (f0.power > 1) prod.kind = f0.kind;
  if (result_kind) {
    // an explicit kind must agree with any factor that already fixes it
    for (auto p : positions)
      if (sp.factors()[p].power > 1 && sp.factors()[p].kind != *result_kind)
        throw std::invalid_argument("multiply_at: kind conflicts with factor");
    prod.kind = *result_kind;
  }
  std::vector<TensorFactor> cf;
  for (std::size_t i = 0; i < sp.factors().size(); ++i) {
    if (i == positions[0]) {
      cf.push_back(prod);
    } else if (std::find(positions.begin(), positions.end(), i) !=
               positions.end()) {
      continue;
    } else {
      cf.push_back(sp.factors()[i]);
    }
  }
  TensorSpace cod(cf, sp.dims());
  EquivariantMap m(sp, cod);
  for (std::size_t col = 0; col < sp.dim(); ++col) {
    std::vector<std::size_t> dpos = sp.unflatten(col);
    IndexTuple merged;
    for (auto p : positions)
      for (int x : sp.bases()[p][dpos[p]]) merged.push_back(x);
    int sign = tensor_detail::merge_sign_and_sort(merged, prod.kind);
    if (sign == 0) continue;
    std::vector<std::size_t> cpos;
    for (std::size_t i = 0; i < sp.factors().size(); ++i) {
      if (i == positions[0]) {
        cpos.push_back(cod.factor_index(cpos.size(), merged));
      } else if (std::find(positions.begin(), positions.end(), i) !=
                 positions.end()) {
        continue;
      } else {
        cpos.push_back(dpos[i]);
      }
    }
    m.matrix.add(cod.flatten(cpos), col, Q(sign));
  }
  return m;
}

// Several multiplications at once, with every group written in the
// positions of the ORIGINAL space.  Groups must be pairwise disjoint; each
// product lands at its group's smallest original position (relative order
// of survivors is preserved).  kinds[g], when present, fixes the g-th
// product's power kind.
inline EquivariantMap multiply_many(
    const TensorSpace& sp, const std::vector<std::vector<std::size_t>>& groups,
    const std::vector<std::optional<PowerKind>>& kinds = {}) {
  if (!kinds.empty() && kinds.size() != groups.size())
    throw std::invalid_argument("multiply_many: kinds size mismatch");
  // current position of each original factor; merged factors alias their
  // product, so later groups may extend an earlier one
  std::vector<std::size_t> cur(sp.factors().size());
  for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = i;
  EquivariantMap out = EquivariantMap::identity(sp);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<std::size_t> pos;
    for (auto orig : groups[g]) {
      if (orig >= cur.size())
        throw std::invalid_argument("multiply_many: bad position");
      pos.push_back(cur[orig]);
    }
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    if (pos.size() < 2)
      throw std::invalid_argument("multiply_many: group already merged");
    auto m = multiply_at(out.codomain, pos,
                         kinds.empty() ? std::nullopt : kinds[g]);
    out = compose({out, m});
    // the product stays at pos[0]; the others disappear
    for (auto& c : cur) {
      if (std::find(pos.begin() + 1, pos.end(), c) != pos.end()) {
        c = pos[0];
      } else if (c > pos[0]) {
        std::size_t drop = 0;
        for (std::size_t k = 1; k < pos.size(); ++k)
          if (pos[k] < c) ++drop;
        c -= drop;
      }
    }
  }
  return out;
}

// Permute tensor factors: codomain factor i is domain factor perm[i].
inline EquivariantMap permute_factors(const TensorSpace& sp,
                                      const std::vector<std::size_t>& perm) {
  std::vector<TensorFactor> cf;
  for (auto p : perm) cf.push_back(sp.factors().at(p));
  TensorSpace cod(cf, sp.dims());
  EquivariantMap m(sp, cod);
  for (std::size_t col = 0; col < sp.dim(); ++col) {
    std::vector<std::size_t> dpos = sp.unflatten(col);
    std::vector<std::size_t> cpos;
    for (auto p : perm) cpos.push_back(dpos[p]);
    m.matrix.add(cod.flatten(cpos), col, 1);
  }
  return m;
}

// Free-standing single-space conveniences used by tests and chains.
inline TensorSpace single_space(const TensorFactor& f, int dim) {
  return TensorSpace({f}, {{f.space, dim}});
}

inline EquivariantMap exterior_diagonal(int n, int r, int s,
                                        const std::string& space = "E",
                                        bool dual = false) {
  return diagonal_at(single_space(Ext(r + s, space, dual), n), 0, r, s);
}
inline EquivariantMap symmetric_diagonal(int n, int r, int s,
                                         const std::string& space = "E",
                                         bool dual = false) {
  return diagonal_at(single_space(Sym(r + s, space, dual), n), 0, r, s);
}
inline EquivariantMap exterior_mult(int n, int r, int s,
                                    const std::string& space = "E",
                                    bool dual = false) {
  TensorSpace sp({Ext(r, space, dual), Ext(s, space, dual)}, {{space, n}});
  return multiply_at(sp, {0, 1}, PowerKind::Ext);
}
inline EquivariantMap symmetric_mult(int n, int r, int s,
                                     const std::string& space = "E",
                                     bool dual = false) {
  TensorSpace sp({Sym(r, space, dual), Sym(s, space, dual)}, {{space, n}});
  return multiply_at(sp, {0, 1}, PowerKind::Sym);
}

// tr^(r): Q -> P_r(E) (x) P_r(E*), the sum of the biorthogonal basis.
inline EquivariantMap trace_map(int n, int r, PowerKind kind,
                                const std::string& space = "E") {
  TensorSpace dom({}, {{space, n}});
  TensorFactor up{space, false, kind, r}, down{space, true, kind, r};
  TensorSpace cod({up, down}, {{space, n}});
  EquivariantMap m(dom, cod);
  std::size_t k = power_basis(n, r, kind).size();
  for (std::size_t i = 0; i < k; ++i) m.matrix.add(i * k + i, 0, 1);
  return m;
}

// Dual-basis evaluation P_r(E) (x) P_r(E*) -> Q (or E* first).
inline EquivariantMap evaluation_map(int n, int r, PowerKind kind,
                                     const std::string& space = "E",
                                     bool dual_first = false) {
  TensorFactor up{space, false, kind, r}, down{space, true, kind, r};
  TensorSpace dom(dual_first ? std::vector<TensorFactor>{down, up}
                             : std::vector<TensorFactor>{up, down},
                  {{space, n}});
  TensorSpace cod({}, {{space, n}});
  EquivariantMap m(dom, cod);
  std::size_t k = power_basis(n, r, kind).size();
  for (std::size_t i = 0; i < k; ++i) m.matrix.add(0, i * k + i, 1);
  return m;
}

// Exterior duality *: Ext^r(E) -> Ext^{n-r}(E*) with the complementary-
// subset permutation sign (and the E* -> E variant).
inline EquivariantMap hodge_star(int n, int r, bool from_dual = false,
                                 const std::string& space = "E") {
  TensorSpace dom = single_space(Ext(r, space, from_dual), n);
  TensorSpace cod = single_space(Ext(n - r, space, !from_dual), n);
  EquivariantMap m(dom, cod);
  const auto& basis = dom.bases()[0];
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const IndexTuple& t = basis[col];
    IndexTuple comp;
    std::vector<bool> used(n + 1, false);
    for (int x : t) used[x] = true;
    for (int x = 1; x <= n; ++x)
      if (!used[x]) comp.push_back(x);
    // sign of the permutation (t, comp) of (1..n)
    IndexTuple whole = t;
    for (int x : comp) whole.push_back(x);
    int sign = tensor_detail::merge_sign_and_sort(whole, PowerKind::Ext);
    m.matrix.add(cod.factor_index(0, comp), col, Q(sign));
  }
  return m;
}

// Canonical generator of a one-dimensional factor (a top exterior power),
// as a map from the empty tensor space; combine with apply_at to insert a
// determinant factor into a chain.
inline EquivariantMap unit_insert(const TensorFactor& f,
                                  const std::map<std::string, int>& dims) {
  TensorSpace cod({f}, dims);
  if (cod.dim() != 1)
    throw std::invalid_argument("unit_insert: factor is not one-dimensional");
  EquivariantMap m(TensorSpace({}, dims), cod);
  m.matrix.add(0, 0, 1);
  return m;
}

// Arbitrary linear map between two single-factor spaces, given by a dense
// matrix in the deterministic bases.
inline EquivariantMap linear_map(const TensorFactor& domf,
                                 const TensorFactor& codf,
                                 const std::map<std::string, int>& dims,
                                 const QMatrix& mat) {
  EquivariantMap m(TensorSpace({domf}, dims), TensorSpace({codf}, dims));
  if (mat.rows() != m.codomain.dim() || mat.cols() != m.domain.dim())
    throw std::invalid_argument("linear_map: matrix shape mismatch");
  m.matrix = SparseMatrix::from_dense(mat);
  return m;
}

// Apply `local` to the consecutive run of factors starting at `pos`,
// identity elsewhere.  The local map's domain must equal that run (it may
// be empty, in which case the codomain factors are inserted at `pos`); its
// codomain may have any number of factors, which replace the run in order.
inline EquivariantMap apply_at(const TensorSpace& sp, std::size_t pos,
                               const EquivariantMap& local) {
  std::size_t run = local.domain.factors().size();
  if (pos + run > sp.factors().size())
    throw std::invalid_argument("apply_at: run exceeds factor count");
  for (std::size_t k = 0; k < run; ++k)
    if (!(local.domain.factors()[k] == sp.factors()[pos + k]))
      throw std::invalid_argument("apply_at: local domain mismatch");
  std::map<std::string, int> dims = sp.dims();
  for (const auto& [k, v] : local.codomain.dims()) dims[k] = v;
  std::vector<TensorFactor> before(sp.factors().begin(),
                                   sp.factors().begin() + pos);
  std::vector<TensorFactor> after(sp.factors().begin() + pos + run,
                                  sp.factors().end());
  EquivariantMap out = EquivariantMap::identity(TensorSpace(before, dims));
  out = out.tensor(local);
  out = out.tensor(EquivariantMap::identity(TensorSpace(after, dims)));
  return out;
}

// The functorial map P_r(L) : P_r(X) -> P_r(Y) induced on a symmetric or
// exterior power by a linear map L : X -> Y.
inline EquivariantMap induced_power_map(const QMatrix& L,
                                        const TensorFactor& domf,
                                        const TensorFactor& codf,
                                        const std::map<std::string, int>& dims) {
  if (domf.power != codf.power || (domf.kind != codf.kind && domf.power > 1))
    throw std::invalid_argument("induced_power_map: incompatible powers");
  TensorSpace dom({domf}, dims), cod({codf}, dims);
  EquivariantMap m(dom, cod);
  int r = domf.power;
  const auto& dbasis = dom.bases()[0];
  int ncod = dims.at(codf.space);
  for (std::size_t col = 0; col < dbasis.size(); ++col) {
    const IndexTuple& src = dbasis[col];
    // all assignments of a codomain index to each letter
    std::vector<int> pick(r, 1);
    std::function<void(int, Q)> rec = [&](int k, Q coeff) {
      if (gres::is_zero(coeff)) return;
      if (k == r) {
        IndexTuple t(pick.begin(), pick.end());
        int sign = tensor_detail::merge_sign_and_sort(t, codf.kind);
        if (sign == 0) return;
        m.matrix.add(cod.factor_index(0, t), col, coeff * sign);
        return;
      }
      for (int j = 1; j <= ncod; ++j) {
        pick[k] = j;
        rec(k + 1, coeff * L(j - 1, src[k] - 1));
      }
    };
    rec(0, Q(1));
  }
  return m;
}

// Inclusion of the kernel of `contraction` as a map V -> X, where V is a
// fresh abstract space of the kernel's dimension.
inline EquivariantMap kernel_inclusion(const EquivariantMap& contraction,
                                       const std::string& kernel_space_name) {
  QMatrix k = kernel_basis(contraction.matrix.dense());
  std::map<std::string, int> dims = contraction.domain.dims();
  dims[kernel_space_name] = static_cast<int>(k.cols());
  TensorSpace v({Vec(kernel_space_name)}, dims);
  EquivariantMap inc(v, contraction.domain);
  inc.matrix = SparseMatrix::from_dense(k);
  return inc;
}

// Projection X -> X/im(incl) onto a fresh abstract quotient space.
inline EquivariantMap quotient_projection(const EquivariantMap& incl,
                                          const std::string& quot_space_name) {
  QMatrix w = incl.matrix.dense();
  QMatrix p = kernel_basis(w.transpose()).transpose();
  std::map<std::string, int> dims = incl.codomain.dims();
  dims[quot_space_name] = static_cast<int>(p.rows());
  TensorSpace v({Vec(quot_space_name)}, dims);
  EquivariantMap proj(incl.codomain, v);
  proj.matrix = SparseMatrix::from_dense(p);
  return proj;
}

}  // namespace gres

#endif  // GRES_TENSOR_HPP
