// Certification layer: the equivariant exactness criterion, detection of the
// Cohen-Macaulay property via simultaneous rank drops, reducedness checks
// (S1 via depth of minor ideals, R0 via the Jacobian criterion), and the
// containment / singularity tables -- all by exact rank evaluation at orbit
// representatives.
#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gres/complexes.hpp"
#include "gres/linalg.hpp"

namespace gres {

struct OrbitDatum {
  int id = 0;
  int dimension = 0;      // dimension of the orbit closure
  Point representative;   // one point on the orbit, exact coordinates
  std::string label;
};

// Exact rank of a polynomial matrix evaluated at a point.
inline std::size_t rank_at(const PolyMatrix& m, const Point& p) {
  QMatrix e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m.at(r, c).evaluate(p);
  return rank(e);
}

struct DifferentialCertificate {
  std::size_t genericRank = 0;         // rank at the dense representative
  std::vector<int> dropOrbits;         // orbit ids where the rank drops
  int minDropCodim = 0;                // min codim over the drop orbits
};

struct ExactnessCertificate {
  std::vector<DifferentialCertificate> perDifferential;  // index k-1 <-> d_k
  std::vector<bool> condition1;  // rank F_k = rank d_k + rank d_{k+1} at p
  std::vector<bool> condition2;  // min codim over drops of d_k >= k
  bool exact = false;
  std::optional<int> simultaneousDropOrbit;
};

namespace verify_detail {

inline const OrbitDatum& dense_orbit(const std::vector<OrbitDatum>& orbits,
                                     int ambient_dim) {
  for (const auto& o : orbits)
    if (o.dimension == ambient_dim) return o;
  throw std::invalid_argument("orbit list has no dense orbit");
}

}  // namespace verify_detail

// Evaluate both conditions of the rank-based exactness criterion for a
// minimal complex C with differentials d_1..d_n: at the dense point the
// ranks must split every module, and for each k the locus where d_k drops
// rank must have codimension at least k.
inline ExactnessCertificate exactness_certificate(
    const FreeComplex& C, const std::vector<OrbitDatum>& orbits,
    int ambient_dim) {
  const OrbitDatum& dense = verify_detail::dense_orbit(orbits, ambient_dim);
  ExactnessCertificate cert;
  std::size_t n = C.diffs.size();
  for (std::size_t k = 0; k < n; ++k) {
    DifferentialCertificate dc;
    dc.genericRank = rank_at(C.diffs[k], dense.representative);
    int min_codim = std::numeric_limits<int>::max();
    for (const auto& o : orbits) {
      if (rank_at(C.diffs[k], o.representative) < dc.genericRank) {
        dc.dropOrbits.push_back(o.id);
        min_codim = std::min(min_codim, ambient_dim - o.dimension);
      }
    }
    dc.minDropCodim = dc.dropOrbits.empty() ? ambient_dim : min_codim;
    cert.perDifferential.push_back(std::move(dc));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t rank_fk = C.diffs[k].source().rank();
    std::size_t next = k + 1 < n
                           ? cert.perDifferential[k + 1].genericRank
                           : 0;
    cert.condition1.push_back(cert.perDifferential[k].genericRank + next ==
                              rank_fk);
    cert.condition2.push_back(cert.perDifferential[k].minDropCodim >=
                              (int)k + 1);
  }
  cert.exact = true;
  for (std::size_t k = 0; k < n; ++k)
    if (!cert.condition1[k] || !cert.condition2[k]) cert.exact = false;
  // an orbit on which every differential drops rank, of minimal codimension
  // among all drop orbits
  if (!cert.perDifferential.empty()) {
    std::set<int> common(cert.perDifferential[0].dropOrbits.begin(),
                         cert.perDifferential[0].dropOrbits.end());
    int global_min = cert.perDifferential[0].minDropCodim;
    for (const auto& dc : cert.perDifferential) {
      std::set<int> keep;
      for (int id : dc.dropOrbits)
        if (common.count(id)) keep.insert(id);
      common = std::move(keep);
      global_min = std::min(global_min, dc.minDropCodim);
    }
    for (const auto& o : orbits)
      if (common.count(o.id) && ambient_dim - o.dimension == global_min)
        cert.simultaneousDropOrbit = o.id;
  }
  return cert;
}

struct CmResult {
  bool isCM = false;
  std::optional<int> witnessOrbit;
};

// Cohen-Macaulay detection: the ranks of all differentials drop
// simultaneously on one orbit of minimal codimension among the drops.
inline CmResult cm_check(const ExactnessCertificate& cert) {
  CmResult r;
  r.witnessOrbit = cert.simultaneousDropOrbit;
  r.isCM = cert.exact && cert.simultaneousDropOrbit.has_value();
  return r;
}

// S1: for every k > codim, the codimension of the rank-drop locus of d_k
// (measured as min codim over drop orbits) must strictly exceed k.  Ties
// are reported as failures, never waved through.
inline bool s1_check(const FreeComplex& C, int codim,
                     const std::vector<OrbitDatum>& orbits, int ambient_dim) {
  ExactnessCertificate cert = exactness_certificate(C, orbits, ambient_dim);
  for (std::size_t k = 0; k < cert.perDifferential.size(); ++k) {
    int kk = (int)k + 1;
    if (kk <= codim) continue;
    if (cert.perDifferential[k].minDropCodim <= kk) return false;
  }
  return true;
}

// R0: the Jacobian of a generating set has rank equal to the codimension at
// a point of the orbit (then the local ring at the generic point is regular).
inline bool r0_check(const std::vector<Polynomial>& gens, const Point& rep,
                     int codim) {
  if (gens.empty()) return codim == 0;
  auto grid = jacobian_grid(gens);
  QMatrix e(grid.size(), grid[0].size());
  for (std::size_t r = 0; r < grid.size(); ++r)
    for (std::size_t c = 0; c < grid[r].size(); ++c)
      e(r, c) = grid[r][c].evaluate(rep);
  return rank(e) == (std::size_t)codim;
}

// One cell of a containment/singularity table.
enum class CellState { Empty, NonSingular, Singular };

// Row p_i, column closure(O_j): empty when some generator of the column
// ideal is nonzero at the representative p_i; otherwise ns/s according to
// whether the Jacobian rank at p_i equals the column codimension.
inline std::vector<std::vector<CellState>> containment_singularity_table(
    const std::vector<OrbitDatum>& orbits,
    const std::vector<std::vector<Polynomial>>& ideals,
    const std::vector<int>& codims) {
  if (ideals.size() != orbits.size() || codims.size() != orbits.size())
    throw std::invalid_argument("table: one ideal and codim per orbit");
  std::vector<std::vector<CellState>> table(
      orbits.size(), std::vector<CellState>(orbits.size(), CellState::Empty));
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    const auto& gens = ideals[j];
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const Point& p = orbits[i].representative;
      bool contained = true;
      for (const auto& g : gens)
        if (g.evaluate(p) != 0) {
          contained = false;
          break;
        }
      if (!contained) continue;
      // the zero ideal (dense column) cuts the smooth ambient space
      bool smooth = gens.empty() ? true : r0_check(gens, p, codims[j]);
      table[i][j] = smooth ? CellState::NonSingular : CellState::Singular;
    }
  }
  return table;
}

// Table rendering: rows O_i top-down from the origin, columns closure(O_j)
// left-to-right in the same order; blank / ns / s cells.
inline std::string render_table(
    const std::vector<OrbitDatum>& orbits,
    const std::vector<std::vector<CellState>>& table) {
  std::string out;
  std::size_t n = orbits.size();
  out += "        ";
  for (std::size_t j = 0; j < n; ++j) {
    std::string head = "O" + std::to_string(orbits[j].id) + "-";
    head.resize(6, ' ');
    out += head;
  }
  out += "\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::string row = "O" + std::to_string(orbits[i].id);
    row.resize(8, ' ');
    for (std::size_t j = 0; j < n; ++j) {
      std::string cell;
      switch (table[i][j]) {
        case CellState::Empty: cell = ""; break;
        case CellState::NonSingular: cell = "ns"; break;
        case CellState::Singular: cell = "s"; break;
      }
      cell.resize(6, ' ');
      row += cell;
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  return out;
}

}  // namespace gres
