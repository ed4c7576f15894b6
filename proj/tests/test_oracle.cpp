#include <doctest.h>

#include <set>

#include "curvature/dehn.hpp"
#include "curvature/oracle.hpp"
#include "oracles.hpp"

using namespace curv;

namespace {

Word w(std::string_view s, std::size_t gens = 4) { return parse_word(s, gens); }

std::vector<Word> words_up_to(std::size_t gens, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len)
    for_each_reduced_word(gens, len, [&](const Word& x) {
      out.push_back(x);
      return true;
    });
  return out;
}

}  // namespace

TEST_CASE("words_equal examples") {
  const auto zz = standard_presentation(Family::zz);
  CHECK(words_equal(zz, w("aaabb", 2), w("ababa", 2)) == Tristate::equal);
  CHECK(words_equal(zz, w("a", 2), w("b", 2)) == Tristate::not_equal);
  CHECK(words_equal(standard_presentation(Family::free, 2), w("a", 2), w("b", 2)) == Tristate::not_equal);
  CHECK(words_equal(zz.as_generic(), w("aabbAABB", 2), Word{}, OracleBudget{0, 0}) == Tristate::unknown);
  CHECK(words_equal(zz.as_generic(), w("aabbAABB", 2), Word{}) == Tristate::equal);
  CHECK_THROWS_AS(words_equal(zz, w("c", 3), Word{}), std::invalid_argument);
  CHECK(to_string(Tristate::not_equal) == "NOT-EQUAL");
}

TEST_CASE("generic presentations with torsion use the relator lattice") {
  const Presentation s3({"a", "b"}, {w("aaa", 2), w("bb", 2), w("abab", 2)});
  CHECK(words_equal(s3, w("b", 2), Word{}) == Tristate::not_equal);
  CHECK(words_equal(s3, w("ab", 2), w("BA", 2)) == Tristate::equal);
  CHECK(words_equal(s3, w("aa", 2), w("A", 2)) == Tristate::equal);

  const Presentation c5({"a"}, {w("aaaaa", 1)});
  CHECK(words_equal(c5, w("aa", 1), w("aaaaaaa", 1)) == Tristate::equal);
  CHECK(words_equal(c5, w("a", 1), w("aa", 1)) == Tristate::not_equal);

  const AbelianInvariant ab(s3);
  CHECK(ab.residue(w("a", 2)) == std::vector<std::int64_t>{0, 0});
  CHECK(ab.residue(w("b", 2)) != std::vector<std::int64_t>{0, 0});
}

TEST_CASE("canonical forms") {
  const auto zz = standard_presentation(Family::zz);
  CHECK(to_string(canonical_form(zz, w("ababa", 2))) == "aaabb");
  CHECK(to_string(canonical_form(zz, w("BAab", 2))) == "1");
  CHECK(to_string(canonical_form(standard_presentation(Family::free, 2), w("abB", 2))) == "a");

  const auto s2 = standard_presentation(Family::surface, 2);
  CHECK(to_string(canonical_form(s2, w("abABc"))) == "dcD");
  CHECK(to_string(canonical_form(s2, w("abABcdCD"))) == "1");

  for (const Word& x : words_up_to(4, 3)) {
    const Word c = canonical_form(s2, x);
    CHECK(canonical_form(s2, c) == c);
    CHECK(words_equal(s2, x, c) == Tristate::equal);
    CHECK(c.size() <= x.size());
  }
  for (const Word& x : words_up_to(2, 5)) {
    const Word c = canonical_form(zz, x);
    CHECK(canonical_form(zz, c) == c);
    CHECK(words_equal(zz, x, c) == Tristate::equal);
  }

  const Presentation s3({"a", "b"}, {w("aaa", 2), w("bb", 2), w("abab", 2)});
  CHECK(to_string(canonical_form(s3, w("B", 2))) == "b");
  CHECK(to_string(canonical_form(s3, w("bb", 2))) == "1");
  CHECK_THROWS_AS(canonical_form(s3, w("aa", 2)), InsufficientBudget);
  CHECK_THROWS_AS(canonical_form(zz.as_generic(), w("aaaaab", 2), 2), InsufficientBudget);
}

TEST_CASE("null-homotopic generation") {
  const auto zz = standard_presentation(Family::zz);
  const auto one = generate_null_homotopic(zz, 1, 4);
  std::set<std::string> got;
  for (const Word& x : one) got.insert(spell(x));
  CHECK(got == std::set<std::string>{"", "abAB", "bABa", "ABab", "BabA", "baBA", "aBAb", "BAba", "AbaB"});

  const auto four = generate_null_homotopic(zz, 4, 8);
  std::set<std::string> four_set;
  for (const Word& x : four) four_set.insert(spell(x));
  CHECK(four_set.count("aabbAABB") == 1);

  const auto f2 = generate_null_homotopic(standard_presentation(Family::free, 2), 5, 20);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].empty());

  const auto s2 = standard_presentation(Family::surface, 2);
  const auto words = generate_null_homotopic(s2, 2, 12);
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(is_freely_reduced(words[i]));
    CHECK(words[i].size() <= 12);
    CHECK(words_equal(s2, words[i], Word{}) == Tristate::equal);
    if (i > 0) CHECK(shortlex_less(words[i - 1], words[i]));
  }
  for (const Word& x : four) CHECK(ref::zz_trivial(spell(x)));
}

TEST_CASE("soundness: definite answers respect abelianization and the generated closure") {
  const auto s2 = standard_presentation(Family::surface, 2);
  const auto ws = words_up_to(4, 3);
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i; j < ws.size(); ++j) {
      const Tristate t = words_equal(s2, ws[i], ws[j]);
      if (exponent_sums(ws[i], 4) != exponent_sums(ws[j], 4)) CHECK(t == Tristate::not_equal);
      CHECK(t != Tristate::unknown);
    }

  // Splitting a null-homotopic word g = u v^-1 gives an equal pair (u, v).
  for (const auto& p : {standard_presentation(Family::zz), s2}) {
    for (const Word& g : generate_null_homotopic(p, 2, 10)) {
      for (std::size_t k = 0; k <= g.size(); ++k) {
        const Word u = g.subword(0, k), v = invert(g.subword(k, g.size() - k));
        CHECK(words_equal(p, u, v) == Tristate::equal);
        CHECK(words_equal(p.as_generic(), u, v) == Tristate::equal);
      }
    }
  }
}

TEST_CASE("zz: normal-form and generic strategies agree on short pairs") {
  const auto zz = standard_presentation(Family::zz);
  const auto generic = zz.as_generic();
  const auto ws = words_up_to(2, 5);
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i; j < ws.size(); ++j) {
      const Tristate exact = words_equal(zz, ws[i], ws[j]);
      CHECK(exact == (ref::lattice(spell(ws[i])) == ref::lattice(spell(ws[j])) ? Tristate::equal : Tristate::not_equal));
      CHECK(words_equal(generic, ws[i], ws[j]) == exact);
    }
}

TEST_CASE("reduced word enumeration") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Word> got;
    for_each_reduced_word(2, n, [&](const Word& x) {
      got.push_back(x);
      return true;
    });
    std::size_t expected = 4;
    for (std::size_t i = 1; i < n; ++i) expected *= 3;
    CHECK(got.size() == expected);
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(shortlex_less(got[i - 1], got[i]));
    for (const Word& x : got) CHECK(is_freely_reduced(x));
  }
  std::size_t seen = 0;
  CHECK_FALSE(for_each_reduced_word(2, 3, [&](const Word&) { return ++seen < 5; }));
  CHECK(seen == 5);
}
