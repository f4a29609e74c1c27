// Exact rational scalars for the resolution engine.
//
// Thin layer over GMP's mpq_class: everything downstream (polynomials,
// matrices, equivariant maps) works over Q with arbitrary-precision
// integers, so ranks and Betti numbers are certified, never numerical.
#ifndef GRES_RATIONAL_HPP
#define GRES_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gres {

using Q = mpq_class;
using Z = mpz_class;

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

inline std::string to_string(const Q& q) { return q.get_str(); }

// Parse "a", "-a", "a/b".  Throws std::invalid_argument on junk.
inline Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Q q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

// Deterministic stream of small nonzero rationals, used for generic-rank
// sampling.  Fixed seed => byte-identical runs.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Q next() {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 12);
    int n = 0;
    while (n == 0) n = num(rng_);
    Q q(n, den(rng_));
    q.canonicalize();
    return q;
  }

  std::vector<Q> vector(std::size_t n) {
    std::vector<Q> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(next());
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gres

#endif  // GRES_RATIONAL_HPP
