#pragma once

#include <string>
#include <vector>

#include "kspf/word.hpp"

namespace kspf {

/// The kernel K of the homomorphism F_r x ... x F_r (n factors) -> Z^r that
/// sends the i-th generator of every factor to the i-th basis vector.
///
/// Kernel generators are x_i^(alpha) = a_i^(alpha) (a_i^(n))^-1 for
/// i in [1,r], alpha in [1,n-1], ordered alpha-major. For (n,r) = (3,2) the
/// classical names are used instead: x_i = x_i^(1), y_i = x_i^(2), and the
/// three factor alphabets are {a1,a2}, {b1,b2}, {c1,c2}.
class SpfGroup {
 public:
  SpfGroup(int n, int r) : n_(n), r_(r), kernel_(make_kernel_names(n, r)) {
    if (n < 3 || r < 2) throw DomainError("SpfGroup: need n >= 3 and r >= 2");
    factors_.reserve(n);
    for (int alpha = 1; alpha <= n; ++alpha)
      factors_.push_back(Alphabet(make_factor_names(n, r, alpha)));
  }

  int factor_count() const { return n_; }
  int rank() const { return r_; }
  bool classical_names() const { return n_ == 3 && r_ == 2; }

  const Alphabet& kernel_alphabet() const { return kernel_; }
  /// Alphabet of the ambient factor F^(alpha), alpha in [1, n].
  const Alphabet& factor_alphabet(int alpha) const {
    check_factor(alpha, n_);
    return factors_[alpha - 1];
  }

  /// Symbol index of x_i^(alpha) in the kernel alphabet.
  int kernel_symbol(int i, int alpha) const {
    if (i < 1 || i > r_ || alpha < 1 || alpha > n_ - 1)
      throw DomainError("SpfGroup: generator index out of range");
    return (alpha - 1) * r_ + (i - 1);
  }

  Word kernel_generator(int i, int alpha, int sign = 1) const {
    return Word::from_reduced(kernel_, {Letter{kernel_symbol(i, alpha), sign}});
  }

 private:
  static void check_factor(int alpha, int n) {
    if (alpha < 1 || alpha > n) throw DomainError("SpfGroup: factor index out of range");
  }
  static std::vector<std::string> make_kernel_names(int n, int r) {
    std::vector<std::string> names;
    if (n == 3 && r == 2) return {"x1", "x2", "y1", "y2"};
    for (int alpha = 1; alpha <= n - 1; ++alpha)
      for (int i = 1; i <= r; ++i)
        names.push_back("x" + std::to_string(i) + "_" + std::to_string(alpha));
    return names;
  }
  static std::vector<std::string> make_factor_names(int n, int r, int alpha) {
    std::vector<std::string> names;
    if (n == 3 && r == 2) {
      const char* stem = alpha == 1 ? "a" : alpha == 2 ? "b" : "c";
      return {std::string(stem) + "1", std::string(stem) + "2"};
    }
    for (int i = 1; i <= r; ++i)
      names.push_back("a" + std::to_string(i) + "_" + std::to_string(alpha));
    return names;
  }

  int n_, r_;
  Alphabet kernel_;
  std::vector<Alphabet> factors_;
};

/// Projection of a kernel word onto the ambient factor F^(alpha): for
/// alpha < n, x_i^(alpha) maps to a_i^(alpha) and every other generator
/// dies; for alpha = n, every x_i^(beta) maps to (a_i^(n))^-1.
inline Word project(const SpfGroup& g, const Word& w, int alpha) {
  if (!(w.alphabet() == g.kernel_alphabet()))
    throw DomainError("project: word not over the kernel alphabet");
  if (alpha < 1 || alpha > g.factor_count())
    throw DomainError("project: factor index out of range");
  const Alphabet& target = g.factor_alphabet(alpha);
  const int n = g.factor_count(), r = g.rank();
  std::vector<Word> images;
  images.reserve(g.kernel_alphabet().size());
  for (int beta = 1; beta <= n - 1; ++beta) {
    for (int i = 1; i <= r; ++i) {
      if (alpha == n) {
        images.push_back(Word::from_reduced(target, {Letter{i - 1, -1}}));
      } else if (beta == alpha) {
        images.push_back(Word::from_reduced(target, {Letter{i - 1, 1}}));
      } else {
        images.push_back(Word(target));
      }
    }
  }
  return substitute(Substitution(g.kernel_alphabet(), target, std::move(images)), w);
}

/// A kernel word is trivial iff all n factor projections vanish.
inline bool is_trivial(const SpfGroup& g, const Word& w) {
  for (int alpha = 1; alpha <= g.factor_count(); ++alpha)
    if (!project(g, w, alpha).empty()) return false;
  return true;
}

inline bool equal_in_kernel(const SpfGroup& g, const Word& u, const Word& v) {
  return is_trivial(g, multiply(u, invert(v)));
}

struct Presentation {
  Alphabet generators;
  std::vector<Word> relators;
};

/// Finite presentation of the kernel: the classical six relators for
/// (n,r) = (3,2), and the commutator families for n >= r+2 >= 4. Other
/// parameter ranges are unsupported.
inline Presentation presentation(const SpfGroup& g) {
  const Alphabet& X = g.kernel_alphabet();
  const int n = g.factor_count(), r = g.rank();
  std::vector<Word> relators;
  if (g.classical_names()) {
    Word x1 = generator(X, "x1"), x2 = generator(X, "x2");
    Word y1 = generator(X, "y1"), y2 = generator(X, "y2");
    relators.push_back(commutator(x1, y1));
    relators.push_back(commutator(x2, y2));
    for (int e1 : {1, -1})
      for (int e2 : {1, -1})
        relators.push_back(multiply(commutator(power(x1, e1), power(y2, e2)),
                                    commutator(power(x2, e2), power(y1, e1))));
  } else if (n >= r + 2) {
    // [x_i^(alpha), x_i^(beta)] for alpha < beta
    for (int i = 1; i <= r; ++i)
      for (int alpha = 1; alpha <= n - 1; ++alpha)
        for (int beta = alpha + 1; beta <= n - 1; ++beta)
          relators.push_back(
              commutator(g.kernel_generator(i, alpha), g.kernel_generator(i, beta)));
    // [x_i^(alpha), x_j^(beta) (x_j^(gamma))^-1] for i != j, alpha, beta,
    // gamma pairwise distinct
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        if (i == j) continue;
        for (int alpha = 1; alpha <= n - 1; ++alpha)
          for (int beta = 1; beta <= n - 1; ++beta) {
            if (beta == alpha) continue;
            for (int gamma = 1; gamma <= n - 1; ++gamma) {
              if (gamma == alpha || gamma == beta) continue;
              relators.push_back(commutator(
                  g.kernel_generator(i, alpha),
                  multiply(g.kernel_generator(j, beta), g.kernel_generator(j, gamma, -1))));
            }
          }
      }
  } else {
    throw DomainError("presentation: only (n,r) = (3,2) or n >= r+2 are supported");
  }
  return Presentation{X, std::move(relators)};
}

/// Canonical factorization of a kernel element: a diagonal part over
/// Delta = (x_1^(1), ..., x_r^(r)) that is balanced in every Delta letter,
/// followed by one part per ambient factor, the i-th written over X^(i).
/// All parts are words over the kernel alphabet.
struct NormalForm {
  Word delta_part;
  std::vector<Word> factor_parts;

  bool operator==(const NormalForm&) const = default;
};

inline Word concat(const NormalForm& nf) {
  Word out = nf.delta_part;
  for (const Word& p : nf.factor_parts) out = multiply(out, p);
  return out;
}

namespace detail {
/// Substitution sending a_j^(alpha) to the kernel word image(j).
inline Word rename_factor_word(const SpfGroup& g, const Word& w, int alpha,
                               const std::vector<Word>& images) {
  return substitute(Substitution(g.factor_alphabet(alpha), g.kernel_alphabet(), images), w);
}
}  // namespace detail

/// Requires n >= r+2. Deterministic: depends only on the element of K that
/// `w` represents (two words equal in K yield identical normal forms).
inline NormalForm normal_form(const SpfGroup& g, const Word& w) {
  const int n = g.factor_count(), r = g.rank();
  if (n < r + 2) throw DomainError("normal_form: requires n >= r+2");
  if (!(w.alphabet() == g.kernel_alphabet()))
    throw DomainError("normal_form: word not over the kernel alphabet");

  // Projections g_alpha of w to each factor.
  std::vector<Word> proj;
  proj.reserve(n);
  for (int alpha = 1; alpha <= n; ++alpha) proj.push_back(project(g, w, alpha));

  // Factor parts: rewrite g_alpha over X^(alpha) by renaming a_j -> x_j^(alpha).
  std::vector<Word> factor_parts;
  factor_parts.reserve(n - 1);
  for (int alpha = 1; alpha <= n - 1; ++alpha) {
    std::vector<Word> images;
    for (int j = 1; j <= r; ++j) images.push_back(g.kernel_generator(j, alpha));
    factor_parts.push_back(detail::rename_factor_word(g, proj[alpha - 1], alpha, images));
  }

  // Diagonal part: g_n written over inverse Delta, times the inverse of the
  // product of the g_alpha written over Delta.
  std::vector<Word> inv_delta_images, delta_images;
  for (int j = 1; j <= r; ++j) {
    inv_delta_images.push_back(g.kernel_generator(j, j, -1));
    delta_images.push_back(g.kernel_generator(j, j));
  }
  Word delta = detail::rename_factor_word(g, proj[n - 1], n, inv_delta_images);
  Word tail(g.kernel_alphabet());
  for (int alpha = 1; alpha <= n - 1; ++alpha)
    tail = multiply(tail, detail::rename_factor_word(g, proj[alpha - 1], alpha, delta_images));
  delta = multiply(delta, invert(tail));

  return NormalForm{std::move(delta), std::move(factor_parts)};
}

/// Selector for the free subgroups generated by a standard factor alphabet
/// X^(i) or by the diagonal alphabet Delta.
struct SubAlphabet {
  enum class Kind { Factor, Diagonal };
  Kind kind = Kind::Factor;
  int factor = 1;

  static SubAlphabet factor_alphabet(int i) { return {Kind::Factor, i}; }
  static SubAlphabet diagonal() { return {Kind::Diagonal, 0}; }
};

/// Words over X^(i) (or Delta) represent equal elements of K iff they are
/// equal as reduced words: these subgroups are free on the chosen letters.
inline bool free_subgroup_check(const SpfGroup& g, const SubAlphabet& sub, const Word& u,
                                const Word& v) {
  const int n = g.factor_count(), r = g.rank();
  std::vector<bool> allowed(g.kernel_alphabet().size(), false);
  if (sub.kind == SubAlphabet::Kind::Factor) {
    if (sub.factor < 1 || sub.factor > n - 1)
      throw DomainError("free_subgroup_check: factor index out of range");
    for (int i = 1; i <= r; ++i) allowed[g.kernel_symbol(i, sub.factor)] = true;
  } else {
    if (r > n - 1)
      throw DomainError("free_subgroup_check: diagonal alphabet needs r <= n-1");
    for (int i = 1; i <= r; ++i) allowed[g.kernel_symbol(i, i)] = true;
  }
  for (const Word* w : {&u, &v}) {
    if (!(w->alphabet() == g.kernel_alphabet()))
      throw DomainError("free_subgroup_check: word not over the kernel alphabet");
    for (Letter l : w->letters())
      if (!allowed[l.symbol])
        throw DomainError("free_subgroup_check: word uses letters outside the sub-alphabet");
  }
  return u == v;
}

}  // namespace kspf
