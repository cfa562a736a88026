#pragma once

#include <atomic>
#include <optional>
#include <thread>
#include <vector>

#include "kspf/spf.hpp"
#include "kspf/trace.hpp"

namespace kspf {

/// One base-point choice (p_x, p_y) in unscaled Gaussian integers.
struct GridPoint {
  GaussianInt px, py;
  bool operator==(const GridPoint&) const = default;
};

struct InvariantOptions {
  bool pruning = true;
  int threads = 1;
  /// Override for the enumeration bound; defaults to |w|. Base points with
  /// either norm beyond |w| always give split, hence trivial, braids.
  std::optional<long long> grid_bound;
  Convention convention = frozen_convention;
};

struct InvariantResult {
  long long grid_bound = 0;
  bool pruning = true;
  long long count = 0;
  /// Nontrivial points in lexicographic (Re px, Im px, Re py, Im py) order,
  /// independent of threading and pruning.
  std::vector<GridPoint> nontrivial_points;
};

/// w_n = [x1^n, y2^n][x2^n, y1^n]; length 8n, trivial in the kernel.
inline Word wn_family(long long n) {
  if (n < 1) throw DomainError("wn_family: n must be >= 1");
  const Alphabet& a = xy_alphabet();
  Word x1 = generator(a, "x1"), x2 = generator(a, "x2");
  Word y1 = generator(a, "y1"), y2 = generator(a, "y2");
  return multiply(commutator(power(x1, n), power(y2, n)),
                  commutator(power(x2, n), power(y1, n)));
}

/// Region of base points where the traced braid of w_n is guaranteed to be
/// the Borromean one: 0 <= Re(py-px), Im(py-px) < n, px <= 0 <= py
/// componentwise.
inline bool wn_nontriviality_region(long long n, GaussianInt px, GaussianInt py) {
  GaussianInt d = py - px;
  return 0 <= d.re && d.re < n && 0 <= d.im && d.im < n && px.re <= 0 && px.im <= 0 &&
         py.re >= 0 && py.im >= 0;
}

namespace detail {

struct AxisRange {
  long long lo = 0, hi = 0;  // inclusive
};

struct PathBox {
  AxisRange re, im;
};

/// Bounding box of the partial-sum displacement path of one moving point
/// (includes the start, displacement 0).
inline PathBox displacement_box(const std::vector<Move>& moves, int mover) {
  PathBox box{{0, 0}, {0, 0}};
  long long re = 0, im = 0;
  for (const Move& m : moves) {
    if (m.mover != mover) continue;
    (m.axis == 0 ? re : im) += 3 * m.dir;
    box.re.lo = std::min(box.re.lo, re);
    box.re.hi = std::max(box.re.hi, re);
    box.im.lo = std::min(box.im.lo, im);
    box.im.hi = std::max(box.im.hi, im);
  }
  return box;
}

inline bool separated(AxisRange a, AxisRange b, AxisRange c) {
  // is some axis-parallel line strictly between `a` and both `b` and `c`?
  return (a.hi < b.lo && a.hi < c.lo) || (a.lo > b.hi && a.lo > c.hi);
}

/// Sound triviality shortcut for words that are trivial in the kernel: if a
/// line strictly separates one strand's whole trajectory from the other two,
/// the braid splits, and the remaining 2-braid is trivial because every
/// forgetting of one strand of such a braid is trivial.
inline bool prunable(const PathBox& xbox, const PathBox& ybox) {
  const AxisRange o{0, 0};
  return separated(xbox.re, ybox.re, o) || separated(ybox.re, xbox.re, o) ||
         separated(o, xbox.re, ybox.re) || separated(xbox.im, ybox.im, o) ||
         separated(ybox.im, xbox.im, o) || separated(o, xbox.im, ybox.im);
}

}  // namespace detail

/// The counting invariant: the number of base-point pairs (p_x, p_y) with
/// both norms at most the grid bound whose traced braid is nontrivial.
/// Requires w trivial in the kernel. Deterministic: count and point list do
/// not depend on pruning or thread count.
inline InvariantResult braid_invariant(const Word& w, const InvariantOptions& opts = {}) {
  static const SpfGroup g32(3, 2);
  if (!(w.alphabet() == xy_alphabet()))
    throw DomainError("braid_invariant: word must be over {x1,x2,y1,y2}");
  if (!is_trivial(g32, w))
    throw PreconditionError("braid_invariant: word is not trivial in the kernel");

  InvariantResult result;
  result.grid_bound = opts.grid_bound.value_or(w.size());
  result.pruning = opts.pruning;
  const long long L = result.grid_bound;

  // The move list does not depend on the base points; trace once at (0,0).
  const TracedPaths proto = trace(w, {0, 0}, {0, 0});
  const auto relx = detail::displacement_box(proto.moves, 0);
  const auto rely = detail::displacement_box(proto.moves, 1);

  const long long side = 2 * L + 1;
  const int threads = std::max(1, opts.threads);

  struct Slice {
    long long count = 0;
    std::vector<GridPoint> points;
  };
  std::vector<Slice> slices(static_cast<size_t>(side));
  std::atomic<long long> next{0};

  auto worker = [&]() {
    std::vector<BraidGen> gens;
    for (;;) {
      const long long idx = next.fetch_add(1);
      if (idx >= side) return;
      const long long pxre = idx - L;
      Slice& slice = slices[static_cast<size_t>(idx)];
      for (long long pxim = -L; pxim <= L; ++pxim) {
        const detail::PathBox xbox{
            {3 * pxre - 1 + relx.re.lo, 3 * pxre - 1 + relx.re.hi},
            {3 * pxim - 1 + relx.im.lo, 3 * pxim - 1 + relx.im.hi}};
        for (long long pyre = -L; pyre <= L; ++pyre) {
          for (long long pyim = -L; pyim <= L; ++pyim) {
            const detail::PathBox ybox{
                {3 * pyre + 1 + rely.re.lo, 3 * pyre + 1 + rely.re.hi},
                {3 * pyim + 1 + rely.im.lo, 3 * pyim + 1 + rely.im.hi}};
            if (opts.pruning && detail::prunable(xbox, ybox)) continue;
            detail::StrandState st;
            st.re[0] = 0;
            st.im[0] = 0;
            st.re[1] = 3 * pxre - 1;
            st.im[1] = 3 * pxim - 1;
            st.re[2] = 3 * pyre + 1;
            st.im[2] = 3 * pyim + 1;
            gens.clear();
            detail::run_moves(st, proto.moves, opts.convention, gens, nullptr);
            Braid3Word b;
            b.gens = gens;
            if (!is_trivial_braid(b))
              slice.points.push_back({{pxre, pxim}, {pyre, pyim}});
          }
        }
      }
      slice.count = static_cast<long long>(slice.points.size());
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (Slice& s : slices) {
    result.count += s.count;
    result.nontrivial_points.insert(result.nontrivial_points.end(), s.points.begin(),
                                    s.points.end());
  }
  return result;
}

}  // namespace kspf
