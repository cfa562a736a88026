#include <doctest.h>

#include "kspf/pushdown.hpp"
#include "kspf/random.hpp"

using namespace kspf;

namespace {

Word SB(const char* text) { return parse_word(text, sb_alphabet()); }
Word XY(const char* text) { return parse_word(text, xy_alphabet()); }

}  // namespace

TEST_SUITE("pushdown") {

TEST_CASE("height") {
  CHECK(height(SB("s")) == 1);
  CHECK(height(SB("x1 s y2 y2^-1 s^-1 x1^-1")) == 0);
  CHECK(height(commutator(SB("x1"), SB("s y2"))) == 0);
  CHECK(height(SB("s^-3 x1")) == -3);
}

TEST_CASE("push of single letters") {
  CHECK(push(0, SB("x1")) == XY("x1"));
  CHECK(push(0, SB("x2")) == XY("x2"));
  CHECK(push(0, SB("y1")) == XY("y1"));
  CHECK(push(0, SB("y2")) == XY("y2"));
  CHECK(push(1, SB("x1")) == XY("y1 y2^-1 x1 y2 y1^-1"));
  CHECK(push(1, SB("y2")) == XY("x1 x2^-1 y2 x2 x1^-1"));
  CHECK(push(-2, SB("x2")) == XY("y2 y1^-1 y2 y1^-1 x2 y1 y2^-1 y1 y2^-1"));
  for (long long q : {-7LL, 0LL, 3LL, 11LL}) CHECK(push(q, SB("s")).empty());
  CHECK(push(5, SB("s^-1")).empty());
}

TEST_CASE("sb presentation embeds trivially into the ambient product") {
  SbPresentation p = sb_presentation();
  CHECK(p.relators.size() == 7);
  for (const auto& [label, relator] : p.relators) {
    CAPTURE(label);
    CHECK_FALSE(relator.empty());
    CHECK(sb_trivial_in_ambient(relator));
  }
  // sanity for the projections themselves
  CHECK(sb_project(SB("s"), 3) ==
        parse_word("c1^-1 c2", SpfGroup(3, 2).factor_alphabet(3)));
  CHECK(sb_project(SB("s"), 1).empty());
  CHECK_FALSE(sb_trivial_in_ambient(SB("x1")));
}

TEST_CASE("property: cocycle identity") {
  SplitMix64 rng(107);
  for (int i = 0; i < 1000; ++i) {
    long long q = rng.range(-6, 6);
    Word u = random_reduced_word(sb_alphabet(), static_cast<int>(rng.below(12)), rng);
    Word v = random_reduced_word(sb_alphabet(), static_cast<int>(rng.below(12)), rng);
    CHECK(push(q, multiply(u, v)) == multiply(push(q, u), push(q + height(u), v)));
  }
}

TEST_CASE("pushed relators are trivial in the kernel") {
  auto rows = verify_pushed_relators(-10, 10);
  CHECK(rows.size() == 7 * 21);
  for (const auto& row : rows) {
    CAPTURE(row.relator);
    CAPTURE(row.q);
    CHECK(row.trivial);
  }
}

TEST_CASE("push report: specific rows") {
  static const SpfGroup g32(3, 2);
  SUBCASE("commutator relator at offset zero is itself") {
    Word image = push(0, commutator(SB("x1"), SB("y1")));
    CHECK(is_trivial(g32, image));
    CHECK(image == XY("x1 y1 x1^-1 y1^-1"));
    CHECK(image.size() == 4);
  }
  SUBCASE("conjugate-equality relator: conjugate of a fixed commutator") {
    Word r = SB("x1^-1 s x1 x2^-1 s^-1 x2");
    for (long long q = -10; q <= 10; ++q) {
      Word image = push(q, r);
      CHECK(is_trivial(g32, image));
      // (y1 y2^-1)^q x1^-1 (y1 y2^-1) x1 x2^-1 (y2 y1^-1) x2 (y2 y1^-1)^q
      long long expect = q == 0 ? 8 : 4 * std::llabs(q) + 8;
      CHECK(image.size() == expect);
    }
    Word core = commutator(XY("y1 y2^-1"), XY("x1 x2^-1"));
    CHECK(equal_in_kernel(g32, push(3, r),
                          conjugate(core, XY("x1 y2 y1^-1 y2 y1^-1 y2 y1^-1"))));
  }
  SUBCASE("mixed relator grows linearly with the offset") {
    Word r = commutator(SB("x1"), SB("s y2"));
    std::vector<int> len;
    for (long long q = 0; q <= 8; ++q) {
      Word image = push(q, r);
      CHECK(is_trivial(g32, image));
      len.push_back(image.size());
    }
    for (size_t k = 0; k + 2 < len.size(); ++k)
      CHECK(len[k + 2] - len[k + 1] == len[k + 1] - len[k]);
    CHECK(len.back() > len.front());
  }
}

TEST_CASE("kernel fidelity on constructed height-zero words") {
  static const SpfGroup g32(3, 2);
  SplitMix64 rng(109);
  SbPresentation p = sb_presentation();
  auto embed = [&](const Word& w) {  // kernel word -> same letters over the sb alphabet
    std::vector<Letter> ls = w.letters();
    return Word::from_reduced(sb_alphabet(), std::move(ls));
  };
  for (int i = 0; i < 100; ++i) {
    Word k1 = random_reduced_word(xy_alphabet(), static_cast<int>(rng.below(8)), rng);
    Word k2 = random_reduced_word(xy_alphabet(), static_cast<int>(rng.below(8)), rng);
    const Word& relator = p.relators[rng.below(p.relators.size())].second;
    Word w = multiply(multiply(embed(k1), relator), embed(k2));
    REQUIRE(height(w) == 0);
    CHECK(equal_in_kernel(g32, push(0, w), multiply(k1, k2)));
  }
}

TEST_CASE("balanced commutator comparison") {
  Alphabet two({"a1", "a2"});
  CHECK(balanced_commutator_check(parse_word("a1", two), parse_word("a2", two), 3));
  CHECK(balanced_commutator_check(parse_word("a1", two), parse_word("a1", two), 4));
  SplitMix64 rng(113);
  for (int i = 0; i < 100; ++i) {
    Word v = random_reduced_word(two, 1 + static_cast<int>(rng.below(4)), rng);
    Word w = random_reduced_word(two, 1 + static_cast<int>(rng.below(4)), rng);
    long long N = 1 + static_cast<long long>(rng.below(5));
    CHECK(balanced_commutator_check(v, w, N));
  }
  CHECK_THROWS_AS(balanced_commutator_check(parse_word("a1", two), parse_word("a2", two), 0),
                  DomainError);
}

TEST_CASE("csv report shape") {
  auto rows = verify_pushed_relators(0, 1);
  std::string csv = push_report_csv(rows);
  CHECK(csv.rfind("relator,q,length_of_push,trivial\n", 0) == 0);
  CHECK(csv.find("[x1,y1],0,4,true") != std::string::npos);
}

TEST_CASE("custom push-down tables") {
  // a toy instance: B = {a, t} with h(t) = 1, kernel generated by {a};
  // push_q(a) = a conjugated q times by nothing (identity rule) still
  // satisfies the cocycle identity by construction
  Alphabet B({"a", "t"});
  Alphabet X({"a"});
  PushDownMap map(B, X, {0, 1}, [X](long long, int symbol) {
    return symbol == 0 ? generator(X, "a") : Word(X);
  });
  CHECK(map.height(parse_word("t a t^-1", B)) == 0);
  CHECK(map.push(0, parse_word("t a t^-1 a", B)) == parse_word("a a", X));
  SplitMix64 rng(127);
  for (int i = 0; i < 200; ++i) {
    long long q = rng.range(-4, 4);
    Word u = random_reduced_word(B, static_cast<int>(rng.below(8)), rng);
    Word v = random_reduced_word(B, static_cast<int>(rng.below(8)), rng);
    CHECK(map.push(q, multiply(u, v)) ==
          multiply(map.push(q, u), map.push(q + map.height(u), v)));
  }
}

}  // TEST_SUITE
