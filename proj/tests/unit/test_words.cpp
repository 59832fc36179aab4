#include <doctest.h>

#include <numeric>

#include "ptorus/error.hpp"
#include "ptorus/words.hpp"

using namespace ptorus;

TEST_SUITE("words") {

TEST_CASE("f_{m,n} letter selector") {
  CHECK(oz_letter(2, 1, 5) == 1);
  CHECK(oz_letter(1, 2, 3) == 2);
  CHECK(oz_letter(1, 1, 1) == 1);
  CHECK(oz_letter(1, 1, 2) == 2);
}

TEST_CASE("W_{m,n} examples") {
  CHECK(oz_word(1, 1) == Word::parse("s t"));
  CHECK(oz_word(2, 1) == Word::parse("s t s"));
  CHECK(oz_word(-1, 1) == Word::parse("s^-1 t"));
  CHECK(oz_word(1, 0) == Word::parse("s"));
  CHECK(oz_word(0, 1) == Word::parse("t"));
  CHECK(oz_word(2, 1).to_string() == "s t s");
  CHECK_THROWS_AS(oz_word(2, 2), Error);
}

TEST_CASE("reduction") {
  CHECK(Word::parse("s s^-1").empty());
  CHECK(Word::parse("t s s^-1 t^-1").empty());
  CHECK(Word::parse("").empty());
  CHECK(cyclic_reduce(Word::parse("s t s^-1")) == Word::parse("t"));
  CHECK(cyclic_reduce(Word{}).empty());
  CHECK(Word::parse("s t").inverse() == Word::parse("t^-1 s^-1"));
  CHECK(Word::parse("s t") * Word::parse("t^-1 s") == Word::parse("s s"));
  CHECK(Word::parse("s t s").rotated(1) == Word::parse("t s s"));
  CHECK_THROWS_AS(Word::parse("u"), Error);
}

TEST_CASE("abelianization") {
  CHECK(abelianize(Word::parse("s t s")) == HomologyClass{2, 1});
  CHECK(abelianize(Word{}) == HomologyClass{0, 0});
  int tested = 0;
  for (std::int64_t m = -50; m <= 50; ++m) {
    for (std::int64_t n = -50; n <= 50; ++n) {
      if (std::abs(m) + std::abs(n) > 50 || std::gcd(m, n) != 1) continue;
      const Word w = oz_word(m, n);
      CHECK(abelianize(w) == HomologyClass{m, n});
      CHECK(w.size() == static_cast<std::size_t>(std::abs(m) + std::abs(n)));
      CHECK(w.is_cyclically_reduced());
      CHECK(cyclic_reduce(w) == w);
      ++tested;
    }
  }
  CHECK(tested > 1000);
}

TEST_CASE("slope canonicalization") {
  CHECK(Slope(-2, -1) == Slope(2, 1));
  CHECK(Slope(1, -1) == Slope(-1, 1));
  CHECK(Slope(-1, 0) == Slope(1, 0));
  CHECK(Slope(0, -1) == Slope(0, 1));
  CHECK_THROWS_AS(Slope(2, 4), Error);
  CHECK_THROWS_AS(Slope(0, 0), Error);
  CHECK(Slope(-3, 2).word_length() == 5);
}

TEST_CASE("slopes_up_to") {
  const auto s = slopes_up_to(2);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == Slope(0, 1));
  CHECK(s[1] == Slope(1, 0));
  // Oracle: coprime (m, n) with |m|+|n| <= W, counted once per +-pair.
  for (std::int64_t w : {1, 5, 12}) {
    std::size_t expected = 0;
    for (std::int64_t m = -w; m <= w; ++m) {
      for (std::int64_t n = -w; n <= w; ++n) {
        if (std::abs(m) + std::abs(n) <= w && std::gcd(m, n) == 1) ++expected;
      }
    }
    CHECK(slopes_up_to(w).size() == expected / 2);
  }
}

TEST_CASE("evaluation") {
  const IntRepresentation witness = modular_integer_representation();
  CHECK(evaluate(witness, Word{}) == IntMat2::identity());
  CHECK(evaluate(witness, oz_word(3, 1)).trace() == 15);
  CHECK(evaluate(witness, oz_word(1, 1)).trace() == 3);

  const Representation rep = build_representation(kModularTriple);
  CHECK(evaluate(rep, oz_word(3, 1)).trace() == doctest::Approx(15));
  CHECK(evaluate(rep, Word::parse("s s^-1 t")).trace() == doctest::Approx(3));
  CHECK_THROWS_AS(evaluate(witness, oz_word(1, 4000), 10), Error);
}

}  // TEST_SUITE
