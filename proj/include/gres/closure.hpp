// Defining ideals of orbit closures by exact elimination.  The closure of
// G . p, where G is the product of the general linear groups of the tensor
// factors, equals the closure of the image of the polynomial map sending a
// tuple of (not necessarily invertible) matrices to its action on the
// representative p.  The graded piece I_d of the ideal is the kernel of
// "evaluate each degree-d monomial at the generically transformed
// representative".  Because the torus of G preserves the ideal, the kernel
// splits along weight classes of monomials; each class is a small exact
// linear-algebra problem.
//
// Each class kernel is found with a deterministic two-phase scheme: a
// structural elimination modulo a fixed Mersenne prime locates the pivot
// rows, then the candidate relations are reconstructed by exact rational
// elimination on the pivot columns and verified against every column.  An
// unlucky prime raises an exception; it can never yield a wrong generator.
#ifndef GRES_CLOSURE_HPP
#define GRES_CLOSURE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gres/linalg.hpp"
#include "gres/polyring.hpp"

namespace gres {

namespace closure_detail {

// Exponent vector over the group parameters (matrix entries of one generic
// matrix per tensor factor), packed 4 bits per parameter.
struct ParamKey {
  std::array<std::uint64_t, 2> w{0, 0};
  bool operator==(const ParamKey& o) const { return w == o.w; }
  bool operator<(const ParamKey& o) const { return w < o.w; }
  ParamKey operator+(const ParamKey& o) const {
    ParamKey r;
    r.w[0] = w[0] + o.w[0];
    r.w[1] = w[1] + o.w[1];
    return r;
  }
  void bump(std::size_t param) {
    w[param / 16] += std::uint64_t(1) << (4 * (param % 16));
  }
};

struct ParamKeyHash {
  std::size_t operator()(const ParamKey& k) const {
    return std::size_t(k.w[0] * 0x9e3779b97f4a7c15ULL ^
                       (k.w[1] + 0x85ebca6bULL));
  }
};

using ParamPoly = std::vector<std::pair<ParamKey, long long>>;  // sorted keys

inline void sort_combine(ParamPoly& p) {
  std::sort(p.begin(), p.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < p.size();) {
    ParamKey k = p[i].first;
    long long c = 0;
    while (i < p.size() && p[i].first == k) c += p[i++].second;
    if (c != 0) p[out++] = {k, c};
  }
  p.resize(out);
}

inline ParamPoly multiply(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  r.reserve(a.size() * b.size());
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) r.emplace_back(ka + kb, ca * cb);
  sort_combine(r);
  return r;
}

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return std::uint64_t((unsigned __int128)a * b % kPrime);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t to_mod(long long v) {
  long long m = v % (long long)kPrime;
  if (m < 0) m += (long long)kPrime;
  return (std::uint64_t)m;
}

}  // namespace closure_detail

// Generators, up to degree_limit and pruned to a minimal generating set, of
// the ideal of the closure of the orbit of `rep` under the product of the
// general linear groups of the ring's tensor factors.  The representative
// must have integer coordinates.
inline std::vector<Polynomial> closure_ideal(const RingPtr& ring,
                                             const Point& rep,
                                             int degree_limit) {
  using namespace closure_detail;
  const auto& factors = ring->factors();
  if (factors.empty())
    throw std::invalid_argument("closure_ideal: ring has no tensor factors");
  auto factor_dim = [&](const std::string& fid) -> int {
    for (const auto& f : factors)
      if (f.id == fid) return f.dim;
    throw std::invalid_argument("closure_ideal: unknown factor " + fid);
  };
  // parameter layout: one generic dim x dim matrix per factor
  std::map<std::string, std::size_t> param_offset;
  std::size_t nparams = 0;
  for (const auto& f : factors) {
    param_offset[f.id] = nparams;
    nparams += std::size_t(f.dim) * f.dim;
  }
  if (nparams > 32)
    throw std::invalid_argument("closure_ideal: too many group parameters");
  auto param_index = [&](const std::string& fid, int row, int col) {
    return param_offset.at(fid) + std::size_t(row - 1) * factor_dim(fid) +
           std::size_t(col - 1);
  };

  // images of the variables at the generically transformed representative
  const std::size_t n = ring->nvars();
  std::vector<ParamPoly> var_image(n);
  for (std::size_t c = 0; c < rep.size(); ++c) {
    if (rep[c] == 0) continue;
    if (rep[c].get_den() != 1)
      throw std::invalid_argument("closure_ideal: representative not integral");
    long long val = rep[c].get_num().get_si();
    const auto& slots = ring->variables()[c].slots;
    std::vector<int> dims;
    for (const auto& s : slots) dims.push_back(factor_dim(s.factor));
    std::vector<int> pos(slots.size(), 1);
    bool more = !slots.empty();
    while (more) {
      std::vector<Slot> target;
      ParamKey key;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        target.push_back({slots[s].factor, pos[s]});
        key.bump(param_index(slots[s].factor, pos[s], slots[s].index));
      }
      if (auto hit = ring->variable_for_slots(target))
        var_image[hit->first].emplace_back(key, val * hit->second);
      std::size_t s = slots.size();
      more = false;
      while (s-- > 0) {
        if (++pos[s] <= dims[s]) {
          more = true;
          break;
        }
        pos[s] = 1;
      }
    }
  }
  for (auto& img : var_image) sort_combine(img);

  // per-variable slot-count weights
  std::size_t wlen = 0;
  std::map<std::string, std::size_t> wt_offset;
  for (const auto& f : factors) {
    wt_offset[f.id] = wlen;
    wlen += (std::size_t)f.dim;
  }
  std::vector<std::vector<int>> var_weights(n, std::vector<int>(wlen, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& s : ring->variables()[v].slots)
      var_weights[v][wt_offset.at(s.factor) + (std::size_t)s.index - 1] += 1;

  // all exponent vectors of the given degree whose combined weight is target
  auto monomials_of_weight = [&](int degree, const std::vector<int>& target) {
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    auto rec = [&](auto&& self, std::size_t v, int deg,
                   std::vector<int> left) -> void {
      if (v == n) {
        if (deg == 0 &&
            std::all_of(left.begin(), left.end(), [](int x) { return x == 0; }))
          out.push_back(cur);
        return;
      }
      for (int e = 0; e <= deg; ++e) {
        std::vector<int> next = left;
        bool ok = true;
        for (std::size_t s = 0; s < wlen && ok; ++s) {
          next[s] -= e * var_weights[v][s];
          if (next[s] < 0) ok = false;
        }
        if (!ok) break;
        cur[v] = e;
        self(self, v + 1, deg - e, std::move(next));
      }
      cur[v] = 0;
    };
    rec(rec, 0, degree, target);
    return out;
  };

  struct Kept {
    Polynomial poly;
    int degree;
    std::vector<int> weight;
  };
  std::vector<Kept> kept;

  for (int d = 1; d <= degree_limit; ++d) {
    // bucket the degree-d monomials by weight
    std::map<std::vector<int>, std::vector<Monomial>> classes;
    {
      Monomial cur(n, 0);
      std::vector<int> w(wlen, 0);
      auto rec = [&](auto&& self, std::size_t v, int deg) -> void {
        if (v == n) {
          if (deg == 0) classes[w].push_back(cur);
          return;
        }
        for (int e = 0; e <= deg; ++e) {
          cur[v] = e;
          for (std::size_t s = 0; s < wlen; ++s)
            w[s] += e * var_weights[v][s];
          self(self, v + 1, deg - e);
          for (std::size_t s = 0; s < wlen; ++s)
            w[s] -= e * var_weights[v][s];
        }
        cur[v] = 0;
      };
      rec(rec, 0, d);
    }
    for (const auto& [weight, monos] : classes) {
      // images of the class monomials
      std::vector<ParamPoly> rows(monos.size());
      for (std::size_t i = 0; i < monos.size(); ++i) {
        ParamPoly img{{ParamKey{}, 1}};
        for (std::size_t v = 0; v < n && !img.empty(); ++v)
          for (int e = 0; e < monos[i][v] && !img.empty(); ++e)
            img = multiply(img, var_image[v]);
        rows[i] = std::move(img);
      }
      // column indexing of the param monomials occurring in this class
      std::unordered_map<ParamKey, std::size_t, ParamKeyHash> colid;
      for (const auto& r : rows)
        for (const auto& [k, c] : r) colid.emplace(k, colid.size());
      std::size_t ncols = colid.size();
      // structural elimination mod p
      std::vector<std::vector<std::uint64_t>> red;  // pivot rows, monic
      std::vector<std::size_t> pivot_col, pivot_row;
      std::vector<std::size_t> null_rows;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::uint64_t> v(ncols, 0);
        for (const auto& [k, c] : rows[i]) v[colid.at(k)] = to_mod(c);
        for (std::size_t t = 0; t < red.size(); ++t) {
          std::uint64_t x = v[pivot_col[t]];
          if (!x) continue;
          for (std::size_t j = 0; j < ncols; ++j)
            if (red[t][j])
              v[j] = (v[j] + kPrime - mulmod(x, red[t][j])) % kPrime;
        }
        std::size_t pc = ncols;
        for (std::size_t j = 0; j < ncols; ++j)
          if (v[j]) {
            pc = j;
            break;
          }
        if (pc == ncols) {
          null_rows.push_back(i);
        } else {
          std::uint64_t inv = powmod(v[pc], kPrime - 2);
          for (auto& x : v) x = mulmod(x, inv);
          red.push_back(std::move(v));
          pivot_col.push_back(pc);
          pivot_row.push_back(i);
        }
      }
      red.clear();
      if (null_rows.empty()) continue;
      // exact reconstruction: row_i = sum_t c_t row_{pivot_row[t]}, solved on
      // the pivot columns alone, then verified against every column
      std::size_t r = pivot_row.size();
      std::unordered_map<std::size_t, std::size_t> pivot_of_col;
      for (std::size_t t = 0; t < r; ++t) pivot_of_col[pivot_col[t]] = t;
      QMatrix A(r, r + null_rows.size());
      auto fill_column = [&](std::size_t rowidx, std::size_t matcol) {
        for (const auto& [k, c] : rows[rowidx]) {
          auto it = pivot_of_col.find(colid.at(k));
          if (it != pivot_of_col.end()) A(it->second, matcol) = Q((long)c);
        }
      };
      for (std::size_t t = 0; t < r; ++t) fill_column(pivot_row[t], t);
      for (std::size_t k = 0; k < null_rows.size(); ++k)
        fill_column(null_rows[k], r + k);
      rref(A);
      std::vector<Polynomial> found;
      for (std::size_t k = 0; k < null_rows.size(); ++k) {
        std::unordered_map<ParamKey, Q, ParamKeyHash> acc;
        Polynomial cand(ring);
        cand.add_term(monos[null_rows[k]], Q(1));
        for (const auto& [key, c] : rows[null_rows[k]]) acc[key] += Q((long)c);
        for (std::size_t t = 0; t < r; ++t) {
          const Q& ct = A(t, r + k);
          if (ct == 0) continue;
          cand.add_term(monos[pivot_row[t]], -ct);
          for (const auto& [key, c] : rows[pivot_row[t]])
            acc[key] -= ct * Q((long)c);
        }
        for (const auto& [key, val] : acc)
          if (val != 0)
            throw std::runtime_error("closure_ideal: modular kernel mismatch");
        found.push_back(std::move(cand));
      }
      // prune against multiples of kept lower generators within this class
      PolySpan span;
      for (const auto& g : kept) {
        if (g.degree > d) continue;
        std::vector<int> need(wlen);
        bool feasible = true;
        for (std::size_t s = 0; s < wlen; ++s) {
          need[s] = weight[s] - g.weight[s];
          if (need[s] < 0) feasible = false;
        }
        if (!feasible) continue;
        if (g.degree == d) {
          if (std::all_of(need.begin(), need.end(),
                          [](int x) { return x == 0; }))
            span.add(g.poly);
          continue;
        }
        for (const auto& m : monomials_of_weight(d - g.degree, need)) {
          Polynomial mp(ring);
          mp.add_term(m, Q(1));
          span.add(mp * g.poly);
        }
      }
      for (auto& q : found) {
        if (span.contains(q)) continue;
        span.add(q);
        // primitive integral normalization, positive leading coefficient
        auto [lm, lc] = q.leading();
        Polynomial monic = q * (1 / lc);
        mpz_class l(1), g(0);
        for (const auto& [m, c] : monic.terms()) l = ::lcm(l, c.get_den());
        for (const auto& [m, c] : monic.terms())
          g = ::gcd(g, c.get_num() * (l / c.get_den()));
        Polynomial integral = monic * Q(l);
        if (g != 0 && g != 1) integral = integral * (1 / Q(g));
        kept.push_back({std::move(integral), d, weight});
      }
    }
  }
  std::vector<Polynomial> out;
  for (auto& g : kept) out.push_back(std::move(g.poly));
  return out;
}

}  // namespace gres

#endif  // GRES_CLOSURE_HPP
