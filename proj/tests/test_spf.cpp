#include <doctest.h>

#include <set>

#include "kspf/invariant.hpp"
#include "kspf/random.hpp"
#include "kspf/spf.hpp"

using namespace kspf;

namespace {

const SpfGroup& g32() {
  static const SpfGroup g(3, 2);
  return g;
}

Word W(const char* text) { return parse_word(text, g32().kernel_alphabet()); }

Word random_kernel_trivial(const Presentation& p, int max_steps, int max_conj,
                           SplitMix64& rng) {
  return random_certified_word(p, 1 + static_cast<int>(rng.below(max_steps)), max_conj, rng)
      .target;
}

}  // namespace

TEST_SUITE("spf") {

TEST_CASE("construction and naming") {
  CHECK(g32().kernel_alphabet().names() ==
        std::vector<std::string>{"x1", "x2", "y1", "y2"});
  CHECK(g32().factor_alphabet(1).names() == std::vector<std::string>{"a1", "a2"});
  CHECK(g32().factor_alphabet(2).names() == std::vector<std::string>{"b1", "b2"});
  CHECK(g32().factor_alphabet(3).names() == std::vector<std::string>{"c1", "c2"});
  SpfGroup g42(4, 2);
  CHECK(g42.kernel_alphabet().names() ==
        std::vector<std::string>{"x1_1", "x2_1", "x1_2", "x2_2", "x1_3", "x2_3"});
  CHECK(g42.factor_alphabet(4).names() == std::vector<std::string>{"a1_4", "a2_4"});
  CHECK(g42.kernel_symbol(2, 3) == 5);
  CHECK_THROWS_AS(SpfGroup(2, 2), DomainError);
  CHECK_THROWS_AS(SpfGroup(3, 1), DomainError);
  CHECK_THROWS_AS(g42.kernel_symbol(1, 4), DomainError);
}

TEST_CASE("projections") {
  CHECK(project(g32(), W("x1 y1 x1^-1 y1^-1"), 1).empty());
  CHECK(project(g32(), W("x1 y1^-1"), 1) ==
        parse_word("a1", g32().factor_alphabet(1)));
  CHECK(project(g32(), W("x1 y1^-1"), 3).empty());
  CHECK(project(g32(), W("x1 y1^-1"), 2) ==
        parse_word("b1^-1", g32().factor_alphabet(2)));
  CHECK_THROWS_AS(project(g32(), W("x1"), 0), DomainError);
  CHECK_THROWS_AS(project(g32(), W("x1"), 4), DomainError);
}

TEST_CASE("triviality") {
  CHECK(is_trivial(g32(), W("x1 y1 x1^-1 y1^-1")));
  CHECK_FALSE(is_trivial(g32(), W("x1")));
  CHECK(is_trivial(g32(), wn_family(3)));
  CHECK(is_trivial(g32(), Word(g32().kernel_alphabet())));
}

TEST_CASE("equality in the kernel") {
  Word u = W("x1 y2 x2^-1");
  CHECK(equal_in_kernel(g32(), u, u));
  CHECK(equal_in_kernel(g32(), W("x1 y1 x1^-1 y1^-1"), Word(g32().kernel_alphabet())));
  CHECK_FALSE(equal_in_kernel(g32(), W("x1"), W("x2")));
}

TEST_CASE("presentation for (3,2)") {
  Presentation p = presentation(g32());
  CHECK(p.relators.size() == 6);
  for (const Word& r : p.relators) {
    CHECK_FALSE(r.empty());
    CHECK(is_trivial(g32(), r));
  }
  // w_1 is among the relators
  CHECK(std::count(p.relators.begin(), p.relators.end(), wn_family(1)) == 1);
}

TEST_CASE("presentation for (4,2): enumerated against a direct oracle") {
  SpfGroup g(4, 2);
  Presentation p = presentation(g);
  // oracle: rebuild both relator families with independent loops
  std::vector<Word> expected;
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 3; ++a)
      for (int b = a + 1; b <= 3; ++b)
        expected.push_back(commutator(g.kernel_generator(i, a), g.kernel_generator(i, b)));
  int pair_count = static_cast<int>(expected.size());
  CHECK(pair_count == 2 * 3 * 2 / 2);  // r * (n-1)(n-2)/2
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      if (i != j)
        for (int a = 1; a <= 3; ++a)
          for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
              if (a != b && b != c && a != c)
                expected.push_back(commutator(
                    g.kernel_generator(i, a),
                    multiply(g.kernel_generator(j, b), g.kernel_generator(j, c, -1))));
  REQUIRE(p.relators.size() == expected.size());
  auto key = [](const Word& w) { return format_word(w); };
  std::multiset<std::string> got, want;
  for (const Word& r : p.relators) got.insert(key(r));
  for (const Word& r : expected) want.insert(key(r));
  CHECK(got == want);
  for (const Word& r : p.relators) CHECK(is_trivial(g, r));
}

TEST_CASE("presentation for (5,3): relators balanced and trivial") {
  SpfGroup g(5, 3);
  Presentation p = presentation(g);
  CHECK(p.relators.size() == 18 + 144);
  for (const Word& r : p.relators) {
    for (int s = 0; s < g.kernel_alphabet().size(); ++s) CHECK(exponent_sum(r, s) == 0);
    CHECK(is_trivial(g, r));
  }
}

TEST_CASE("unsupported presentations") {
  CHECK_THROWS_AS(presentation(SpfGroup(3, 3)), DomainError);
  CHECK_THROWS_AS(presentation(SpfGroup(4, 3)), DomainError);
}

TEST_CASE("normal form examples") {
  SpfGroup g(4, 2);
  SUBCASE("trivial word: all parts empty") {
    Word w = multiply(commutator(g.kernel_generator(1, 1), g.kernel_generator(1, 2)),
                      Word(g.kernel_alphabet()));
    REQUIRE(is_trivial(g, w));
    NormalForm nf = normal_form(g, w);
    CHECK(nf.delta_part.empty());
    for (const Word& part : nf.factor_parts) CHECK(part.empty());
  }
  SUBCASE("single generator") {
    NormalForm nf = normal_form(g, parse_word("x1_1", g.kernel_alphabet()));
    CHECK(nf.delta_part.empty());
    CHECK(nf.factor_parts[0] == parse_word("x1_1", g.kernel_alphabet()));
    CHECK(nf.factor_parts[1].empty());
    CHECK(nf.factor_parts[2].empty());
  }
  SUBCASE("normal form not defined for (3,2)") {
    CHECK_THROWS_AS(normal_form(g32(), W("x1")), DomainError);
  }
}

TEST_CASE("normal form: defining properties on random words") {
  SplitMix64 rng(53);
  for (auto [n, r] : {std::pair{4, 2}, std::pair{5, 3}}) {
    SpfGroup g(n, r);
    Presentation p = presentation(g);
    for (int i = 0; i < 1000; ++i) {
      Word w = random_reduced_word(g.kernel_alphabet(), static_cast<int>(rng.below(21)), rng);
      NormalForm nf = normal_form(g, w);
      Word cat = concat(nf);
      // represents the same element
      CHECK(equal_in_kernel(g, cat, w));
      // total length at most 3 |w|
      long long total = nf.delta_part.size();
      for (const Word& part : nf.factor_parts) total += part.size();
      CHECK(total <= 3 * w.size());
      // delta part balanced in every diagonal letter
      for (int j = 1; j <= r; ++j)
        CHECK(exponent_sum(nf.delta_part, g.kernel_symbol(j, j)) == 0);
      // factor part i matches the i-th projection, renamed
      for (int alpha = 1; alpha <= n - 1; ++alpha)
        CHECK(project(g, nf.factor_parts[alpha - 1], alpha) == project(g, w, alpha));
      // idempotence
      CHECK(normal_form(g, cat) == nf);
      // uniqueness: appending a conjugated relator does not change it
      Word rel = p.relators[rng.below(p.relators.size())];
      Word conj = conjugate(rel, random_reduced_word(g.kernel_alphabet(), 3, rng));
      CHECK(normal_form(g, multiply(w, conj)) == nf);
    }
  }
}

TEST_CASE("property: random relator products are trivial") {
  SplitMix64 rng(59);
  Presentation p = presentation(g32());
  for (int i = 0; i < 10000; ++i) {
    Word w = random_kernel_trivial(p, 4, 4, rng);
    CHECK(is_trivial(g32(), w));
  }
}

TEST_CASE("free subgroup membership tests") {
  SpfGroup g(4, 2);
  const Alphabet& X = g.kernel_alphabet();
  Word u = parse_word("x1_1 x2_1", X), v = parse_word("x2_1 x1_1", X);
  CHECK(free_subgroup_check(g, SubAlphabet::factor_alphabet(1), u, u));
  CHECK_FALSE(free_subgroup_check(g, SubAlphabet::factor_alphabet(1), u, v));
  CHECK_THROWS_AS(free_subgroup_check(g, SubAlphabet::factor_alphabet(1),
                                      parse_word("x1_2", X), parse_word("x1_2", X)),
                  DomainError);
  CHECK_THROWS_AS(free_subgroup_check(g, SubAlphabet::factor_alphabet(9), u, u), DomainError);

  // cross-check against the projection test on random diagonal pairs
  SplitMix64 rng(61);
  std::vector<Letter> diag_letters;
  for (int j = 1; j <= 2; ++j) diag_letters.push_back({g.kernel_symbol(j, j), 1});
  auto random_diag = [&](int len) {
    std::vector<Letter> ls;
    while (static_cast<int>(ls.size()) < len) {
      Letter l{diag_letters[rng.below(2)].symbol, rng.coin() ? 1 : -1};
      if (!ls.empty() && ls.back() == l.inverse()) continue;
      ls.push_back(l);
    }
    return Word::from_reduced(X, std::move(ls));
  };
  for (int i = 0; i < 500; ++i) {
    Word a = random_diag(static_cast<int>(rng.below(10)));
    Word b = random_diag(static_cast<int>(rng.below(10)));
    CHECK(free_subgroup_check(g, SubAlphabet::diagonal(), a, b) == equal_in_kernel(g, a, b));
  }
}

}  // TEST_SUITE
