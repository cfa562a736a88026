#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kspf/exact_int.hpp"
#include "kspf/laurent.hpp"
#include "kspf/word.hpp"

namespace kspf {

/// One Artin generator sigma_index^sign of B_3.
struct BraidGen {
  int index = 1;  // 1 or 2
  int sign = 1;   // +1 or -1
  bool operator==(const BraidGen&) const = default;
};

/// Physical-strand bookkeeping alongside a braid word: which strand sits at
/// which position initially, and which pair of strands swaps at each
/// crossing. Strand ids are caller-defined small integers.
struct StrandTrace {
  std::array<int, 3> initial_order{};          // strand id at positions 1,2,3
  std::vector<std::array<int, 2>> swaps;       // one entry per crossing
  bool operator==(const StrandTrace&) const = default;
};

struct Braid3Word {
  std::vector<BraidGen> gens;
  std::optional<StrandTrace> trace;

  int size() const { return static_cast<int>(gens.size()); }
};

inline long long exponent_sum(const Braid3Word& b) {
  long long s = 0;
  for (BraidGen g : b.gens) s += g.sign;
  return s;
}

/// Checks index ranges and, when a trace is present, that the recorded swap
/// pairs are consistent with the crossing sequence.
inline void validate(const Braid3Word& b) {
  for (BraidGen g : b.gens) {
    if (g.index != 1 && g.index != 2) throw DomainError("braid: generator index must be 1 or 2");
    if (g.sign != 1 && g.sign != -1) throw DomainError("braid: generator sign must be +-1");
  }
  if (!b.trace) return;
  if (b.trace->swaps.size() != b.gens.size())
    throw DomainError("braid: strand trace length differs from generator count");
  std::array<int, 3> pos = b.trace->initial_order;
  for (size_t k = 0; k < b.gens.size(); ++k) {
    int i = b.gens[k].index - 1;
    int u = pos[i], v = pos[i + 1];
    const auto& rec = b.trace->swaps[k];
    bool match = (rec[0] == u && rec[1] == v) || (rec[0] == v && rec[1] == u);
    if (!match) throw DomainError("braid: strand trace inconsistent at crossing " +
                                  std::to_string(k));
    std::swap(pos[i], pos[i + 1]);
  }
}

/// Flip every crossing. Drops the strand trace.
inline Braid3Word mirror(const Braid3Word& b) {
  Braid3Word out;
  out.gens.reserve(b.gens.size());
  for (BraidGen g : b.gens) out.gens.push_back({g.index, -g.sign});
  return out;
}

/// Group inverse: reversed word with flipped signs. Drops the strand trace.
inline Braid3Word inverse(const Braid3Word& b) {
  Braid3Word out;
  out.gens.reserve(b.gens.size());
  for (auto it = b.gens.rbegin(); it != b.gens.rend(); ++it)
    out.gens.push_back({it->index, -it->sign});
  return out;
}

inline Braid3Word concat(const Braid3Word& a, const Braid3Word& b) {
  Braid3Word out;
  out.gens = a.gens;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return out;
}

/// Cancel adjacent sigma sigma^-1 pairs. Cheap preprocessing before matrix
/// evaluation; does not change the braid group element.
inline Braid3Word free_reduce(const Braid3Word& b) {
  Braid3Word out;
  out.gens.reserve(b.gens.size());
  for (BraidGen g : b.gens) {
    if (!out.gens.empty() && out.gens.back().index == g.index &&
        out.gens.back().sign == -g.sign) {
      out.gens.pop_back();
    } else {
      out.gens.push_back(g);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reduced Burau representation of B_3 (faithful for three strands):
//   sigma_1 -> [[-t, 1], [0, 1]]      sigma_2 -> [[1, 0], [t, -t]]
// over Laurent polynomials with exact integer coefficients.
// ---------------------------------------------------------------------------

template <class C>
Mat2<LaurentPoly<C>> burau_generator(BraidGen g) {
  using P = LaurentPoly<C>;
  const P one = P::one(), zero = P::zero();
  if (g.index == 1) {
    if (g.sign > 0) return {P::monomial(1, C(-1)), one, zero, one};
    return {P::monomial(-1, C(-1)), P::monomial(-1, C(1)), zero, one};
  }
  if (g.sign > 0) return {one, zero, P::monomial(1, C(1)), P::monomial(1, C(-1))};
  return {one, zero, P::monomial(0, C(1)), P::monomial(-1, C(-1))};
}

template <class C>
Mat2<LaurentPoly<C>> burau_matrix(const Braid3Word& b) {
  auto m = Mat2<LaurentPoly<C>>::identity();
  for (BraidGen g : b.gens) m = m * burau_generator<C>(g);
  return m;
}

/// Burau matrix with machine-word coefficients, re-evaluated over
/// arbitrary-precision integers if anything overflows.
inline Mat2<LaurentPoly<BigInt>> burau(const Braid3Word& b) {
  const Braid3Word r = free_reduce(b);
  try {
    auto m = burau_matrix<CheckedI64>(r);
    auto widen = [](const LaurentPoly<CheckedI64>& p) {
      LaurentPoly<BigInt> q;
      for (const auto& [e, c] : p.terms()) q = q + LaurentPoly<BigInt>::monomial(e, BigInt(c.v));
      return q;
    };
    return {widen(m.a), widen(m.b), widen(m.c), widen(m.d)};
  } catch (const OverflowError&) {
    return burau_matrix<BigInt>(r);
  }
}

/// Identity test in B_3 via the faithful reduced Burau representation.
inline bool is_trivial_braid(const Braid3Word& b) {
  const Braid3Word r = free_reduce(b);
  try {
    return burau_matrix<CheckedI64>(r) == Mat2<LaurentPoly<CheckedI64>>::identity();
  } catch (const OverflowError&) {
    return burau_matrix<BigInt>(r) == Mat2<LaurentPoly<BigInt>>::identity();
  }
}

/// Equality in B_3, decided by comparing Burau matrices.
inline bool burau_equal(const Braid3Word& a, const Braid3Word& b) {
  return is_trivial_braid(concat(a, inverse(b)));
}

// ---------------------------------------------------------------------------
// Independent triviality oracle: B_3 maps onto PSL(2,Z) via
//   sigma_1 -> [[1, 1], [0, 1]]      sigma_2 -> [[1, 0], [-1, 1]]
// with kernel the center (generated by the full twist, exponent sum 6).
// So b = 1 iff its PSL(2,Z) image is trivial AND its exponent sum is 0.
// ---------------------------------------------------------------------------

/// Whether the image in PSL(2,Z) is trivial. True for the whole center of
/// B_3 (powers of the full twist), so this alone does not decide triviality.
inline bool psl2z_trivial(const Braid3Word& b) {
  auto m = Mat2<BigInt>::identity();
  for (BraidGen g : free_reduce(b).gens) {
    Mat2<BigInt> s;
    if (g.index == 1) {
      s = g.sign > 0 ? Mat2<BigInt>{1, 1, 0, 1} : Mat2<BigInt>{1, -1, 0, 1};
    } else {
      s = g.sign > 0 ? Mat2<BigInt>{1, 0, -1, 1} : Mat2<BigInt>{1, 0, 1, 1};
    }
    m = m * s;
  }
  const auto id = Mat2<BigInt>::identity();
  return m == id || m == -id;
}

inline bool is_trivial_oracle(const Braid3Word& b) {
  return exponent_sum(b) == 0 && psl2z_trivial(b);
}

/// Forget one strand and report the resulting 2-braid as a signed crossing
/// count between the remaining pair (B_2 is infinite cyclic). Requires a
/// strand trace.
inline long long forget_strand(const Braid3Word& b, int strand_id) {
  if (!b.trace) throw PreconditionError("forget_strand: braid carries no strand trace");
  validate(b);
  bool known = false;
  for (int s : b.trace->initial_order) known = known || s == strand_id;
  if (!known) throw DomainError("forget_strand: unknown strand id");
  long long count = 0;
  for (size_t k = 0; k < b.gens.size(); ++k) {
    const auto& pair = b.trace->swaps[k];
    if (pair[0] != strand_id && pair[1] != strand_id) count += b.gens[k].sign;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Textual form: tokens `s1`/`s2` (generators) and `S1`/`S2` (inverses),
// separated by ' ' or '.', with optional `^k` run exponents.
// ---------------------------------------------------------------------------

inline Braid3Word parse_braid(std::string_view text) {
  Braid3Word out;
  size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '.'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    char c = text[i];
    if (c != 's' && c != 'S')
      throw ParseError("braid: expected 's' or 'S' at position " + std::to_string(i));
    int sign = c == 's' ? 1 : -1;
    ++i;
    if (i >= text.size() || (text[i] != '1' && text[i] != '2'))
      throw ParseError("braid: generator index must be 1 or 2");
    int index = text[i] - '0';
    ++i;
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t estart = i;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == estart) throw ParseError("braid: malformed exponent");
      exp = std::stoll(std::string(text.substr(estart, i - estart)));
    }
    if (i < text.size() && !is_sep(text[i]))
      throw ParseError("braid: unexpected character at position " + std::to_string(i));
    int s = exp < 0 ? -sign : sign;
    long long count = exp < 0 ? -exp : exp;
    for (long long k = 0; k < count; ++k) out.gens.push_back({index, s});
  }
  return out;
}

inline std::string format_braid(const Braid3Word& b) {
  std::string out;
  const auto& gs = b.gens;
  for (size_t i = 0; i < gs.size();) {
    size_t j = i;
    while (j < gs.size() && gs[j] == gs[i]) ++j;
    if (!out.empty()) out += ' ';
    out += gs[i].sign > 0 ? 's' : 'S';
    out += static_cast<char>('0' + gs[i].index);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace kspf
