// Deterministic random generation for property sweeps.  splitmix64 keeps the
// streams identical across platforms and standard library versions.
#ifndef JBV_RNG_HPP
#define JBV_RNG_HPP

#include <cstdint>

#include "core/exppoly.hpp"
#include "core/tensor.hpp"

namespace jbv {

class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  /// Small integer in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }

  /// Small nonzero rational with numerator in [-4,4], denominator in {1,2,3}.
  Rational rational() {
    int num = 0;
    while (num == 0) num = range(-4, 4);
    return Rational(num, range(1, 3));
  }

  Rational rational_or_zero() { return (below(4) == 0) ? Rational(0) : rational(); }

  /// Random ExpPoly: up to max_terms monomials of total degree <= max_deg;
  /// with_freq additionally allows one +-1/0 frequency per coordinate.
  ExpPoly exppoly(const Chart& c, int max_deg, int max_terms, bool with_freq) {
    ExpPoly p(c);
    int terms = range(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      ExpKey k;
      k.exps.assign(static_cast<size_t>(c.dim()), 0);
      k.freqs.assign(static_cast<size_t>(c.dim()), Rational(0));
      int deg = range(0, max_deg);
      for (int d = 0; d < deg; ++d) k.exps[below(static_cast<uint64_t>(c.dim()))] += 1;
      if (with_freq && below(3) == 0) {
        int i = static_cast<int>(below(static_cast<uint64_t>(c.dim())));
        k.freqs[static_cast<size_t>(i)] = Rational(range(0, 1) ? 1 : -1);
      }
      p.add_term(k, rational());
    }
    return p;
  }

  /// Random graded tensor with up to max_terms nonzero components.
  Tensor tensor(const Chart& c, Kind kind, int degree, int max_deg, int max_terms, bool with_freq) {
    Tensor t(c, kind, degree);
    if (degree > c.dim()) return t;
    int terms = range(1, max_terms);
    for (int n = 0; n < terms; ++n) {
      IdxTuple idx;
      while (static_cast<int>(idx.size()) < degree) {
        auto i = static_cast<uint8_t>(below(static_cast<uint64_t>(c.dim())));
        bool dup = false;
        for (auto j : idx) dup = dup || (i == j);
        if (!dup) idx.push_back(i);
      }
      t.add_term(idx, exppoly(c, max_deg, 2, with_freq));
    }
    return t;
  }

private:
  uint64_t state_;
};

} // namespace jbv

#endif
