#pragma once

#include <cstdint>
#include <vector>

#include "kspf/area.hpp"
#include "kspf/braid.hpp"
#include "kspf/word.hpp"

namespace kspf {

/// splitmix64: tiny, deterministic across platforms. Good enough for
/// generating test inputs; not for cryptography.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform-ish value in [0, n); deterministic, bias negligible for small n.
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (next() & 1) != 0; }

 private:
  uint64_t state_;
};

/// Random freely reduced word of exactly `length` letters.
inline Word random_reduced_word(const Alphabet& a, int length, SplitMix64& rng) {
  std::vector<Letter> out;
  out.reserve(length);
  while (static_cast<int>(out.size()) < length) {
    Letter l{static_cast<int>(rng.below(a.size())), rng.coin() ? 1 : -1};
    if (!out.empty() && out.back() == l.inverse()) continue;
    out.push_back(l);
  }
  return Word::from_reduced(a, std::move(out));
}

/// Random product of `steps` conjugated relators, returned with its
/// certificate. Trivial in the presented group by construction.
inline FillingCertificate random_certified_word(const Presentation& p, int steps,
                                                int max_conjugator_length, SplitMix64& rng) {
  FillingCertificate cert{Word(p.generators), {}};
  Word w(p.generators);
  for (int k = 0; k < steps; ++k) {
    const int relator_index = static_cast<int>(rng.below(p.relators.size()));
    const int orientation = rng.coin() ? 1 : -1;
    Word conjugator = random_reduced_word(
        p.generators, static_cast<int>(rng.below(max_conjugator_length + 1)), rng);
    Word r = p.relators[relator_index];
    if (orientation < 0) r = invert(r);
    w = multiply(w, conjugate(r, conjugator));
    cert.steps.push_back(CertificateStep{std::move(conjugator), relator_index, orientation});
  }
  cert.target = std::move(w);
  return cert;
}

inline Braid3Word random_braid_word(int length, SplitMix64& rng) {
  Braid3Word b;
  b.gens.reserve(length);
  for (int i = 0; i < length; ++i)
    b.gens.push_back({static_cast<int>(rng.below(2)) + 1, rng.coin() ? 1 : -1});
  return b;
}

}  // namespace kspf
