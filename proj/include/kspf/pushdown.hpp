#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kspf/invariant.hpp"
#include "kspf/spf.hpp"
#include "kspf/word.hpp"

namespace kspf {

/// Section-like map from words over an ambient alphabet B into kernel words,
/// driven by a height homomorphism h: F(B) -> Z and a per-(offset, letter)
/// image rule. It satisfies the cocycle identity
///   push_q(u v) = push_q(u) push_{q + h(u)}(v)
/// and push_0 fixes the letters of height zero whose rule says so. The image
/// of an inverse letter is forced: push_q(a^-1) = push_{q - h(a)}(a)^-1.
class PushDownMap {
 public:
  /// `rule(q, symbol)` is the kernel image of the positive letter `symbol`
  /// pushed at offset q.
  using Rule = std::function<Word(long long q, int symbol)>;

  PushDownMap(Alphabet source, Alphabet target, std::vector<long long> heights, Rule rule)
      : source_(std::move(source)),
        target_(std::move(target)),
        heights_(std::move(heights)),
        rule_(std::move(rule)) {
    if (static_cast<int>(heights_.size()) != source_.size())
      throw DomainError("push-down: one height per source generator required");
  }

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }

  long long height(const Word& w) const {
    if (!(w.alphabet() == source_)) throw DomainError("height: word not over the source");
    long long h = 0;
    for (Letter l : w.letters()) h += l.sign * heights_[l.symbol];
    return h;
  }

  Word push(long long q, const Word& w) const {
    if (!(w.alphabet() == source_)) throw DomainError("push: word not over the source");
    Word out(target_);
    long long cur = q;
    for (Letter l : w.letters()) {
      if (l.sign > 0) {
        out = multiply(out, rule_(cur, l.symbol));
        cur += heights_[l.symbol];
      } else {
        cur -= heights_[l.symbol];
        out = multiply(out, invert(rule_(cur, l.symbol)));
      }
    }
    return out;
  }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<long long> heights_;
  Rule rule_;
};

/// Generators and defining relators of the rank-1 kernel of the total
/// exponent map on a product of three free groups of rank two, written over
/// {x1, x2, y1, y2, s}. The chain of equal conjugates is expanded into three
/// pairwise relators.
struct SbPresentation {
  Alphabet generators;
  std::vector<std::pair<std::string, Word>> relators;  // (label, relator)
};

inline const Alphabet& sb_alphabet() {
  static const Alphabet a(std::vector<std::string>{"x1", "x2", "y1", "y2", "s"});
  return a;
}

inline SbPresentation sb_presentation() {
  const Alphabet& B = sb_alphabet();
  Word x1 = generator(B, "x1"), x2 = generator(B, "x2");
  Word y1 = generator(B, "y1"), y2 = generator(B, "y2");
  Word s = generator(B, "s");
  auto twist = [&](const Word& u) { return multiply(multiply(invert(u), s), u); };
  SbPresentation p{B, {}};
  p.relators.emplace_back("[x1,s y2]", commutator(x1, multiply(s, y2)));
  p.relators.emplace_back("[y1,s x2]", commutator(y1, multiply(s, x2)));
  p.relators.emplace_back("[x1,y1]", commutator(x1, y1));
  p.relators.emplace_back("[x2,y2]", commutator(x2, y2));
  p.relators.emplace_back("x1~s=x2~s", multiply(twist(x1), invert(twist(x2))));
  p.relators.emplace_back("x2~s=y1~s", multiply(twist(x2), invert(twist(y1))));
  p.relators.emplace_back("y1~s=y2~s", multiply(twist(y1), invert(twist(y2))));
  return p;
}

/// Projections of an SB word into the three ambient free factors, via
/// x_i -> a_i c_i^-1, y_i -> b_i c_i^-1, s -> c1^-1 c2. A word lies in the
/// ambient product trivially iff all three projections vanish.
inline Word sb_project(const Word& w, int alpha) {
  static const SpfGroup g32(3, 2);
  const Alphabet& B = sb_alphabet();
  if (!(w.alphabet() == B)) throw DomainError("sb_project: word not over {x1,x2,y1,y2,s}");
  if (alpha < 1 || alpha > 3) throw DomainError("sb_project: factor index out of range");
  const Alphabet& target = g32.factor_alphabet(alpha);
  std::vector<Word> images;
  auto letter = [&](int i, int sign) {
    return Word::from_reduced(target, {Letter{i, sign}});
  };
  if (alpha == 1) {
    images = {letter(0, 1), letter(1, 1), Word(target), Word(target), Word(target)};
  } else if (alpha == 2) {
    images = {Word(target), Word(target), letter(0, 1), letter(1, 1), Word(target)};
  } else {
    Word s_img = multiply(letter(0, -1), letter(1, 1));
    images = {letter(0, -1), letter(1, -1), letter(0, -1), letter(1, -1), s_img};
  }
  return substitute(Substitution(B, target, std::move(images)), w);
}

inline bool sb_trivial_in_ambient(const Word& w) {
  for (int alpha = 1; alpha <= 3; ++alpha)
    if (!sb_project(w, alpha).empty()) return false;
  return true;
}

/// The bundled push-down instance for the height map h(s) = 1, h(x_i) =
/// h(y_i) = 0:
///   push_k(s)   = 1
///   push_k(x_i) = (y1 y2^-1)^k x_i (y2 y1^-1)^k
///   push_k(y_i) = (x1 x2^-1)^k y_i (x2 x1^-1)^k
inline const PushDownMap& sb_push_down() {
  static const PushDownMap map = [] {
    const Alphabet& B = sb_alphabet();
    const Alphabet& X = xy_alphabet();
    auto rule = [X](long long q, int symbol) -> Word {
      if (symbol == 4) return Word(X);  // s
      Word x1 = generator(X, "x1"), x2 = generator(X, "x2");
      Word y1 = generator(X, "y1"), y2 = generator(X, "y2");
      Word wrap = symbol < 2 ? multiply(y1, invert(y2)) : multiply(x1, invert(x2));
      Word mid = Word::from_reduced(X, {Letter{symbol, 1}});
      return multiply(multiply(power(wrap, q), mid), power(invert(wrap), q));
    };
    return PushDownMap(B, X, {0, 0, 0, 0, 1}, rule);
  }();
  return map;
}

inline long long height(const Word& w) { return sb_push_down().height(w); }
inline Word push(long long q, const Word& w) { return sb_push_down().push(q, w); }

struct PushReport {
  std::string relator;
  long long q = 0;
  int length = 0;
  bool trivial = false;
};

/// Push every SB relator at every offset in [q_min, q_max] and test
/// triviality in the kernel. Failures become report rows, not errors.
inline std::vector<PushReport> verify_pushed_relators(long long q_min, long long q_max) {
  static const SpfGroup g32(3, 2);
  std::vector<PushReport> rows;
  const SbPresentation p = sb_presentation();
  for (const auto& [label, relator] : p.relators) {
    for (long long q = q_min; q <= q_max; ++q) {
      Word image = push(q, relator);
      rows.push_back({label, q, image.size(), is_trivial(g32, image)});
    }
  }
  return rows;
}

inline std::string push_report_csv(const std::vector<PushReport>& rows) {
  std::ostringstream os;
  os << "relator,q,length_of_push,trivial\n";
  for (const auto& r : rows)
    os << r.relator << "," << r.q << "," << r.length << "," << (r.trivial ? "true" : "false")
       << "\n";
  return os.str();
}

/// For 2-letter words v, w: the commutator [v(y1,y2), w(x1,x2)^N] differs
/// from [v(x1,x2), w(y1,y2)^N] by an element trivial in the kernel. Returns
/// whether that difference really is trivial (it always should be).
inline bool balanced_commutator_check(const Word& v, const Word& w, long long N) {
  static const SpfGroup g32(3, 2);
  if (N < 1) throw DomainError("balanced_commutator_check: N must be >= 1");
  if (v.alphabet().size() != 2 || !(v.alphabet() == w.alphabet()))
    throw DomainError("balanced_commutator_check: v, w must share a 2-letter alphabet");
  const Alphabet& X = xy_alphabet();
  auto subst_into = [&](const Word& u, const char* g1, const char* g2) {
    std::vector<Word> images{generator(X, g1), generator(X, g2)};
    return substitute(Substitution(u.alphabet(), X, std::move(images)), u);
  };
  Word lhs = commutator(subst_into(v, "y1", "y2"), power(subst_into(w, "x1", "x2"), N));
  Word rhs = commutator(subst_into(v, "x1", "x2"), power(subst_into(w, "y1", "y2"), N));
  return is_trivial(g32, multiply(lhs, invert(rhs)));
}

}  // namespace kspf
