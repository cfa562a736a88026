#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "kspf/braid.hpp"
#include "kspf/word.hpp"

namespace kspf {

struct GaussianInt {
  long long re = 0;
  long long im = 0;

  bool operator==(const GaussianInt&) const = default;
  friend GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(GaussianInt a, GaussianInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  /// max-norm: max(|Re|, |Im|)
  long long norm() const { return std::max(std::llabs(re), std::llabs(im)); }
};

/// The two free choices in reading a planar crossing diagram: which depth
/// (imaginary part) counts as the front strand, and which relative motion of
/// the front strand makes a crossing positive. Triviality verdicts are the
/// same under all four settings; the frozen one below reproduces the
/// reference braid word letter for letter (see the calibration tests).
struct Convention {
  bool over_is_larger_im = false;
  bool positive_is_front_moves_right = true;

  bool operator==(const Convention&) const = default;
};

inline constexpr Convention frozen_convention{false, true};

inline std::vector<Convention> all_conventions() {
  return {{false, false}, {false, true}, {true, false}, {true, true}};
}

/// One unit command for a moving point.
struct Move {
  int mover = 0;  // 0 = point x, 1 = point y
  int axis = 0;   // 0 = real, 1 = imaginary
  int dir = 1;    // +1 or -1 (one unit; applied as +-3 in scaled coordinates)
  bool operator==(const Move&) const = default;
};

/// Two loops in the punctured plane encoded as integer data. All geometry is
/// scaled by 3: base points are 3*p_x - (1,1) and 3*p_y + (1,1), every move
/// is +-3 along an axis, and the origin strand sits at (0,0). The three
/// strands then occupy distinct residues mod 3 in each axis, so they can
/// never collide and crossing detection needs only strict integer
/// comparisons.
struct TracedPaths {
  GaussianInt base_x;  // scaled start of the x point
  GaussianInt base_y;  // scaled start of the y point
  std::vector<Move> moves;
};

inline const Alphabet& xy_alphabet() {
  static const Alphabet a(std::vector<std::string>{"x1", "x2", "y1", "y2"});
  return a;
}

/// Letter-by-letter movement rule: x1^d moves the x point by (d,0), x2^d by
/// (0,d); y1^d moves the y point by (-d,0), y2^d by (0,-d).
inline Move move_of_letter(Letter l) {
  switch (l.symbol) {
    case 0: return {0, 0, l.sign};    // x1
    case 1: return {0, 1, l.sign};    // x2
    case 2: return {1, 0, -l.sign};   // y1
    default: return {1, 1, -l.sign};  // y2
  }
}

/// Trace the two moving points of `w` starting from base points p_x, p_y.
/// Requires w over {x1,x2,y1,y2} and balanced in every generator (so both
/// loops close up). Verifies the residue separation invariant at every step.
inline TracedPaths trace(const Word& w, GaussianInt px, GaussianInt py) {
  if (!(w.alphabet() == xy_alphabet()))
    throw DomainError("trace: word must be over the alphabet {x1,x2,y1,y2}");
  for (int s = 0; s < 4; ++s)
    if (exponent_sum(w, s) != 0)
      throw PreconditionError("trace: word is not balanced in generator " +
                              w.alphabet().name(s));

  TracedPaths t;
  t.base_x = {3 * px.re - 1, 3 * px.im - 1};
  t.base_y = {3 * py.re + 1, 3 * py.im + 1};
  t.moves.reserve(w.size());

  auto mod3 = [](long long v) { return static_cast<int>(((v % 3) + 3) % 3); };
  GaussianInt x = t.base_x, y = t.base_y;
  auto check_separation = [&]() {
    // strand residues: origin 0, y 1, x 2 (both axes)
    if (mod3(x.re) != 2 || mod3(x.im) != 2 || mod3(y.re) != 1 || mod3(y.im) != 1)
      throw std::logic_error("trace: residue separation violated");
  };
  check_separation();
  for (Letter l : w.letters()) {
    Move m = move_of_letter(l);
    t.moves.push_back(m);
    GaussianInt& p = m.mover == 0 ? x : y;
    (m.axis == 0 ? p.re : p.im) += 3 * m.dir;
    check_separation();
  }
  if (!(x == t.base_x) || !(y == t.base_y))
    throw std::logic_error("trace: balanced word produced an open path");
  return t;
}

namespace detail {

/// Crossing sweep shared by extract_braid and the grid enumerator. Appends
/// the crossings of one horizontal unit move of `mover` (scaled +-3) against
/// the two stationary strands. Strand ids: 0 = origin, 1 = x, 2 = y.
struct StrandState {
  // positions indexed by strand id
  long long re[3];
  long long im[3];
};

inline void sweep_horizontal(StrandState& st, int mover, int dir, const Convention& conv,
                             std::vector<BraidGen>& gens,
                             std::vector<std::array<int, 2>>* swaps) {
  const long long from = st.re[mover];
  const long long to = from + 3 * dir;
  const long long lo = std::min(from, to), hi = std::max(from, to);
  int other[2], cnt = 0;
  for (int s = 0; s < 3; ++s)
    if (s != mover) other[cnt++] = s;
  // strands strictly inside the swept interval, ordered along the sweep
  int hit[2], hits = 0;
  for (int k = 0; k < 2; ++k)
    if (lo < st.re[other[k]] && st.re[other[k]] < hi) hit[hits++] = other[k];
  if (hits == 2 && ((dir > 0) != (st.re[hit[0]] < st.re[hit[1]]))) std::swap(hit[0], hit[1]);

  for (int k = 0; k < hits; ++k) {
    const int s = hit[k];
    const int third = other[0] == s ? other[1] : other[0];
    // generator index: 1 if the swapping pair is leftmost, 2 if rightmost
    const int index = st.re[third] < st.re[s] ? 2 : 1;
    const bool front_is_mover =
        conv.over_is_larger_im ? st.im[mover] > st.im[s] : st.im[mover] < st.im[s];
    const bool front_moves_right = front_is_mover ? dir > 0 : dir < 0;
    const int sign = front_moves_right == conv.positive_is_front_moves_right ? 1 : -1;
    gens.push_back({index, sign});
    if (swaps) swaps->push_back({mover, s});
  }
  st.re[mover] = to;
}

inline StrandState initial_state(const TracedPaths& t) {
  StrandState st;
  st.re[0] = 0;
  st.im[0] = 0;
  st.re[1] = t.base_x.re;
  st.im[1] = t.base_x.im;
  st.re[2] = t.base_y.re;
  st.im[2] = t.base_y.im;
  return st;
}

inline void run_moves(StrandState& st, const std::vector<Move>& moves, const Convention& conv,
                      std::vector<BraidGen>& gens,
                      std::vector<std::array<int, 2>>* swaps) {
  for (const Move& m : moves) {
    const int strand = m.mover + 1;  // 1 = x, 2 = y
    if (m.axis == 0) {
      sweep_horizontal(st, strand, m.dir, conv, gens, swaps);
    } else {
      st.im[strand] += 3 * m.dir;
    }
  }
}

}  // namespace detail

inline constexpr int kStrandOrigin = 0;
inline constexpr int kStrandX = 1;
inline constexpr int kStrandY = 2;

/// Read the braid of a pair of closed traced paths (plus the constant origin
/// strand) by projecting to the real axis. Crossings happen only during
/// horizontal moves; vertical moves never change real parts. The resulting
/// braid is pure and carries a strand trace with ids kStrandOrigin/X/Y.
inline Braid3Word extract_braid(const TracedPaths& t, const Convention& conv) {
  auto st = detail::initial_state(t);
  Braid3Word b;
  StrandTrace trace;
  // initial left-to-right order by real part
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int a, int c) { return st.re[a] < st.re[c]; });
  trace.initial_order = order;
  detail::run_moves(st, t.moves, conv, b.gens, &trace.swaps);
  if (st.re[1] != t.base_x.re || st.im[1] != t.base_x.im || st.re[2] != t.base_y.re ||
      st.im[2] != t.base_y.im)
    throw PreconditionError("extract_braid: paths do not close up");
  b.trace = std::move(trace);
  validate(b);
  return b;
}

/// The braid of w at base points (p_x, p_y): trace then extract.
inline Braid3Word braid_at(const Word& w, GaussianInt px, GaussianInt py,
                           const Convention& conv = frozen_convention) {
  return extract_braid(trace(w, px, py), conv);
}

/// The reference braid word s1 s2^2 S1 s2 S1^2 S2 (its closure is the
/// Borromean rings; nontrivial in B_3).
inline Braid3Word borromean_braid() {
  return parse_braid("s1 s2^2 S1 s2 S1^2 S2");
}

}  // namespace kspf
