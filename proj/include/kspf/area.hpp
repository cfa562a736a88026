#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kspf/invariant.hpp"
#include "kspf/spf.hpp"
#include "kspf/word.hpp"

namespace kspf {

/// One factor u^-1 R^orientation u of a filling.
struct CertificateStep {
  Word conjugator;
  int relator_index = 0;
  int orientation = 1;  // +1 or -1
};

/// Explicit witness that `target` equals a product of conjugated relators;
/// its area is the number of steps.
struct FillingCertificate {
  Word target;
  std::vector<CertificateStep> steps;

  int area() const { return static_cast<int>(steps.size()); }
};

/// The free-group product the certificate claims to equal.
inline Word certificate_product(const FillingCertificate& c, const Presentation& p) {
  Word out(p.generators);
  for (const auto& step : c.steps) {
    if (step.relator_index < 0 ||
        step.relator_index >= static_cast<int>(p.relators.size()))
      throw DomainError("certificate: relator index out of range");
    if (step.orientation != 1 && step.orientation != -1)
      throw DomainError("certificate: orientation must be +-1");
    if (!(step.conjugator.alphabet() == p.generators))
      throw DomainError("certificate: conjugator over wrong alphabet");
    Word r = p.relators[step.relator_index];
    if (step.orientation < 0) r = invert(r);
    out = multiply(out, conjugate(r, step.conjugator));
  }
  return out;
}

inline bool verify_certificate(const FillingCertificate& c, const Presentation& p) {
  if (!(c.target.alphabet() == p.generators))
    throw DomainError("certificate: target over wrong alphabet");
  return certificate_product(c, p) == c.target;
}

struct AreaSearchLimits {
  int max_word_length = 40;       // cap on intermediate reduced words
  int max_conjugator_length = 2;  // conjugators enumerated up to this length
  // total search budget: every examined candidate product counts;
  // exceeded => "not found"
  long long max_states = 200000;
};

struct AreaEstimate {
  Word target;
  std::optional<int> area;  // empty: not found within limits
  AreaSearchLimits limits;
  std::optional<FillingCertificate> witness;
};

namespace detail {

inline std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.letters().size() * 5);
  for (Letter l : w.letters()) {
    key += l.sign > 0 ? '+' : '-';
    key += std::to_string(l.symbol);
    key += '.';
  }
  return key;
}

/// Reduced words over `a` in length-lexicographic order ((symbol, sign) with
/// positive before negative), materialized lazily one length layer at a
/// time. Index 0 is the empty word.
class ConjugatorTable {
 public:
  ConjugatorTable(Alphabet a, int max_len) : alphabet_(std::move(a)), max_len_(max_len) {
    words_.push_back(Word(alphabet_));
    layer_begin_ = 0;
  }

  /// Word at position `ci`, or nullptr once the table is exhausted.
  const Word* get(size_t ci) {
    while (ci >= words_.size()) {
      if (!grow()) return nullptr;
    }
    return &words_[ci];
  }

 private:
  bool grow() {
    if (current_len_ >= max_len_) return false;
    const size_t begin = layer_begin_, end = words_.size();
    layer_begin_ = end;
    ++current_len_;
    for (size_t i = begin; i < end; ++i) {
      for (int s = 0; s < alphabet_.size(); ++s) {
        for (int sign : {1, -1}) {
          Letter l{s, sign};
          if (!words_[i].empty() && words_[i].letters().back() == l.inverse()) continue;
          std::vector<Letter> ext = words_[i].letters();
          ext.push_back(l);
          words_.push_back(Word::from_reduced(alphabet_, std::move(ext)));
        }
      }
    }
    return words_.size() > end;
  }

  Alphabet alphabet_;
  int max_len_;
  int current_len_ = 0;
  size_t layer_begin_;
  std::vector<Word> words_;
};

}  // namespace detail

/// Breadth-first search for an area upper bound: states are reduced words,
/// one step multiplies on the right by a conjugated relator (conjugators up
/// to the length limit), intermediate words stay within the length cap, and
/// the goal is the empty word. Returns the minimal step count reachable
/// within the limits together with a verified witness, or "not found".
inline AreaEstimate area_search(const Word& w, const Presentation& p,
                                const AreaSearchLimits& limits = {}) {
  if (!(w.alphabet() == p.generators))
    throw DomainError("area_search: word over wrong alphabet");

  AreaEstimate est{w, std::nullopt, limits, std::nullopt};

  struct Edge {
    long long parent;
    int relator_index;
    int orientation;
    size_t conjugator;  // index into the conjugator table
  };
  detail::ConjugatorTable conjugators(p.generators, limits.max_conjugator_length);

  std::vector<Word> states{w};
  std::vector<Edge> edges{{-1, 0, 0, 0}};
  std::unordered_map<std::string, long long> seen{{detail::word_key(w), 0}};
  std::deque<long long> queue{0};

  std::optional<long long> goal;
  bool exhausted = false;
  long long examined = 0;
  if (w.empty()) goal = 0;

  // Expands one state, short conjugators first across all relators; returns
  // false once the goal is found or the budget is exhausted.
  auto expand = [&](long long cur) {
    const Word current = states[cur];  // copy: states may reallocate below
    for (size_t ci = 0;; ++ci) {
      const Word* conj = conjugators.get(ci);
      if (!conj) break;
      for (int ri = 0; ri < static_cast<int>(p.relators.size()); ++ri) {
        for (int o : {1, -1}) {
          if (++examined > limits.max_states) {
            exhausted = true;
            return false;
          }
          const Word r = o > 0 ? p.relators[ri] : invert(p.relators[ri]);
          Word next = multiply(current, conjugate(r, *conj));
          if (next.size() > limits.max_word_length) continue;
          std::string key = detail::word_key(next);
          if (seen.count(key)) continue;
          const long long id = static_cast<long long>(states.size());
          seen.emplace(std::move(key), id);
          states.push_back(std::move(next));
          edges.push_back({cur, ri, o, ci});
          if (states[id].empty()) {
            goal = id;
            return false;
          }
          queue.push_back(id);
        }
      }
    }
    return true;
  };

  while (!goal && !exhausted && !queue.empty()) {
    const long long cur = queue.front();
    queue.pop_front();
    if (!expand(cur)) break;
  }

  if (!goal) return est;

  // Path w -> ... -> 1 multiplying by c^-1 R^o c at each step means
  // w = product over the path, reversed, of c^-1 R^-o c.
  std::vector<CertificateStep> steps;
  for (long long id = *goal; edges[id].parent >= 0; id = edges[id].parent)
    steps.push_back({*conjugators.get(edges[id].conjugator), edges[id].relator_index,
                     -edges[id].orientation});
  FillingCertificate cert{w, std::move(steps)};
  est.area = cert.area();
  est.witness = std::move(cert);
  return est;
}

struct DehnBraidRow {
  Word word;
  long long invariant = 0;
  long long area = 0;
  bool within_bound = false;
};

struct DehnBraidReport {
  long long relator_invariant_max = 0;  // max of the counting invariant over relators
  std::vector<long long> relator_invariants;
  std::vector<DehnBraidRow> rows;
  bool all_within_bound = true;
};

/// Consistency check between filling area and the counting invariant: with
/// C' the maximum of the invariant over the six defining relators (computed
/// by full grid enumeration), every certified word must satisfy
/// I(w) <= C' * area(certificate).
inline DehnBraidReport dehn_braid_consistency(const std::vector<FillingCertificate>& samples,
                                              const InvariantOptions& opts = {}) {
  static const SpfGroup g32(3, 2);
  const Presentation pres = presentation(g32);
  DehnBraidReport report;
  for (const Word& r : pres.relators) {
    long long c = braid_invariant(r, opts).count;
    report.relator_invariants.push_back(c);
    report.relator_invariant_max = std::max(report.relator_invariant_max, c);
  }
  for (const FillingCertificate& cert : samples) {
    if (!verify_certificate(cert, pres))
      throw PreconditionError("dehn_braid_consistency: certificate does not verify");
    const long long inv = braid_invariant(cert.target, opts).count;
    const long long area = cert.area();
    const bool ok = inv <= report.relator_invariant_max * area;
    report.all_within_bound = report.all_within_bound && ok;
    report.rows.push_back(DehnBraidRow{cert.target, inv, area, ok});
  }
  return report;
}

}  // namespace kspf
