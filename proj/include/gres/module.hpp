// Graded free modules over a polynomial ring and matrices between them.
//
// A GradedFreeModule is determined by its list of twists: basis element k
// generates A(-twists[k]).  A PolyMatrix between two such modules is
// homogeneous when entry (r,c) has degree source.twists[c] - target.twists[r].
#ifndef GRES_MODULE_HPP
#define GRES_MODULE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gres/linalg.hpp"
#include "gres/polyring.hpp"

namespace gres {

struct GradedFreeModule {
  RingPtr ring;
  std::vector<int> twists;
  std::vector<std::string> labels;  // optional Schur-module annotations

  GradedFreeModule() = default;
  GradedFreeModule(RingPtr r, std::vector<int> t, std::vector<std::string> l = {})
      : ring(std::move(r)), twists(std::move(t)), labels(std::move(l)) {}

  std::size_t rank() const { return twists.size(); }

  GradedFreeModule dual() const {
    std::vector<int> t;
    for (int w : twists) t.push_back(-w);
    return GradedFreeModule(ring, std::move(t), labels);
  }

  bool operator==(const GradedFreeModule& o) const {
    return ring == o.ring && twists == o.twists;
  }
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(GradedFreeModule target, GradedFreeModule source)
      : target_(std::move(target)),
        source_(std::move(source)),
        entries_(target_.rank() * source_.rank(),
                 Polynomial(target_.ring)) {}

  const GradedFreeModule& target() const { return target_; }
  const GradedFreeModule& source() const { return source_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  const RingPtr& ring() const { return target_.ring; }

  Polynomial& at(std::size_t r, std::size_t c) {
    return entries_[r * cols() + c];
  }
  const Polynomial& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols() + c];
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  // Every nonzero entry homogeneous of degree source.twists[c]-target.twists[r].
  bool is_homogeneous() const {
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c) {
        const Polynomial& e = at(r, c);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous()) return false;
        if (e.degree() != source_.twists[c] - target_.twists[r]) return false;
      }
    return true;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(source_.dual(), target_.dual());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c) t.at(c, r) = at(r, c);
    return t;
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    if (cols() != o.rows())
      throw std::invalid_argument("PolyMatrix: composition shape mismatch");
    PolyMatrix p(target_, o.source());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t k = 0; k < cols(); ++k) {
        if (at(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < o.cols(); ++c) {
          if (o.at(k, c).is_zero()) continue;
          p.at(r, c) += at(r, k) * o.at(k, c);
        }
      }
    return p;
  }

  QMatrix evaluate(const Point& pt) const {
    QMatrix m(rows(), cols());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c)
        if (!at(r, c).is_zero()) m(r, c) = at(r, c).evaluate(pt);
    return m;
  }

  // Columns as module elements (vectors of polynomials).
  std::vector<Polynomial> column(std::size_t c) const {
    std::vector<Polynomial> v;
    for (std::size_t r = 0; r < rows(); ++r) v.push_back(at(r, c));
    return v;
  }

  // Single-row presentation of an ideal: A <- A(-d_i), one column per gen.
  static PolyMatrix ideal_presentation(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("ideal_presentation: no gens");
    const RingPtr& ring = gens.front().ring();
    std::vector<int> src;
    for (const auto& g : gens) {
      if (g.is_zero() || !g.is_homogeneous())
        throw std::invalid_argument("ideal_presentation: gens must be nonzero homogeneous");
      src.push_back(g.degree());
    }
    PolyMatrix m(GradedFreeModule(ring, {0}), GradedFreeModule(ring, src));
    for (std::size_t c = 0; c < gens.size(); ++c) m.at(0, c) = gens[c];
    return m;
  }

 private:
  GradedFreeModule target_, source_;
  std::vector<Polynomial> entries_;
};

// Jacobian with the graded bookkeeping of a matrix of first partials.
inline PolyMatrix jacobian(const std::vector<Polynomial>& gens) {
  auto grid = jacobian_grid(gens);
  const RingPtr& ring = gens.front().ring();
  std::vector<int> tgt(gens.size(), 0);
  std::vector<int> src(ring->nvars(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    tgt[i] = gens[i].is_zero() ? 0 : 1 - gens[i].degree();
  PolyMatrix j(GradedFreeModule(ring, tgt), GradedFreeModule(ring, src));
  for (std::size_t r = 0; r < grid.size(); ++r)
    for (std::size_t c = 0; c < grid[r].size(); ++c) j.at(r, c) = grid[r][c];
  return j;
}

inline std::size_t rank_at_point(const PolyMatrix& d, const Point& pt) {
  return rank(d.evaluate(pt));
}

}  // namespace gres

#endif  // GRES_MODULE_HPP
