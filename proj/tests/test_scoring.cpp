#include <doctest.h>

#include "slpedit/scoring.hpp"
#include "support.hpp"

using namespace slpedit;

TEST_CASE("levenshtein scheme has unit costs and free matches") {
  const auto s = levenshtein_scheme("ab");
  CHECK(s.sub('a', 'a') == 0);
  CHECK(s.sub('a', 'b') == 1);
  CHECK(s.del('a') == 1);
  CHECK(s.ins('b') == 1);
  CHECK(s.scale() == 1);
}

TEST_CASE("single-symbol alphabet is valid") {
  const auto s = levenshtein_scheme("x");
  CHECK(s.ins('x') == 1);
  CHECK(s.size() == 1);
}

TEST_CASE("levenshtein rejects empty and duplicate alphabets") {
  CHECK_THROWS_AS(levenshtein_scheme(""), InputError);
  CHECK_THROWS_AS(levenshtein_scheme("aba"), InputError);
}

TEST_CASE("scheme constructor validates shape and signs") {
  CHECK_THROWS_AS(ScoringScheme("ab", {1}, {1, 1}, {0, 1, 1, 0}), InputError);
  CHECK_THROWS_AS(ScoringScheme("ab", {1, 1}, {1, 1}, {0, 1, 1}), InputError);
  CHECK_THROWS_AS(ScoringScheme("ab", {1, -1}, {1, 1}, {0, 1, 1, 0}), InputError);
  CHECK_THROWS_AS(ScoringScheme("ab", {1, 1}, {1, 1}, {0, 1, 1, 0}, 0), InputError);
}

TEST_CASE("defaults in a scoring file reproduce levenshtein") {
  const auto s = parse_scoring("alphabet ab\ndefault_indel 1\ndefault_sub 1\n");
  CHECK(s == levenshtein_scheme("ab"));
}

TEST_CASE("sub override is directional") {
  const auto s = parse_scoring("# comment\nalphabet ab\nsub a b 3\n");
  CHECK(s.sub('a', 'b') == 3);
  CHECK(s.sub('b', 'a') == 1);
  CHECK(parse_scoring(serialize_scoring(s)) == s);
}

TEST_CASE("scoring file errors") {
  CHECK_THROWS_AS(parse_scoring("alphabet ab\nsub a Z 1\n"), InputError);
  CHECK_THROWS_AS(parse_scoring("del a 1\n"), InputError);
  CHECK_THROWS_AS(parse_scoring("alphabet ab\ndel a -2\n"), InputError);
  CHECK_THROWS_AS(parse_scoring("alphabet ab\nfrobnicate\n"), InputError);
  CHECK_THROWS_AS(parse_scoring("alphabet ab\nscale 0\n"), InputError);
  CHECK_THROWS_AS(parse_scoring(""), InputError);
}

TEST_CASE("scoring errors carry the line number") {
  try {
    parse_scoring("alphabet ab\n\n# x\nins q 4\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("scale and explicit identity substitution survive a round trip") {
  const auto s = parse_scoring("alphabet xyz\nscale 4\ndefault_indel 3\ndefault_sub 5\nsub x x 2\ndel z 7\n");
  CHECK(s.scale() == 4);
  CHECK(s.sub('x', 'x') == 2);
  CHECK(s.sub('y', 'y') == 0);
  CHECK(s.sub('y', 'z') == 5);
  CHECK(s.del('z') == 7);
  CHECK(s.ins('z') == 3);
  CHECK(parse_scoring(serialize_scoring(s)) == s);
}

TEST_CASE("cost lookup") {
  const auto lev = levenshtein_scheme("ab");
  CHECK(cost(lev, EditOp::Substitute, 'a', 'a') == 0);
  CHECK(cost(lev, EditOp::Delete, 'b') == 1);
  const auto custom = parse_scoring("alphabet abc\ndel c 7\n");
  CHECK(cost(custom, EditOp::Delete, 'c') == 7);
  CHECK(cost(custom, EditOp::Delete, 'c') == cost(custom, EditOp::Delete, 'c'));
  CHECK_THROWS_AS(cost(lev, EditOp::Substitute, 'a'), InputError);
  CHECK_THROWS_AS(cost(lev, EditOp::Delete, 'a', 'b'), InputError);
  CHECK_THROWS_AS(cost(lev, EditOp::Insert, 'q'), InputError);
}

TEST_CASE("serialize then parse is the identity on random schemes") {
  auto rng = testing_support::make_rng(11);
  const std::string pools[] = {"a", "ab", "ACGT", "abcdefghijklmnopqrst", "#'\\ x"};
  for (int iter = 0; iter < 200; ++iter) {
    const std::string& alpha = pools[iter % 5];
    auto s = testing_support::random_scheme(rng, alpha, 1000);
    CHECK(parse_scoring(serialize_scoring(s)) == s);
    std::vector<Cost> sub(alpha.size() * alpha.size());
    for (std::size_t i = 0; i < sub.size(); ++i) sub[i] = s.sub_at(i / alpha.size(), i % alpha.size());
    const ScoringScheme scaled(alpha, std::vector<Cost>(alpha.size(), 3), std::vector<Cost>(alpha.size(), 2), sub,
                               1 + iter % 7);
    CHECK(parse_scoring(serialize_scoring(scaled)) == scaled);
  }
}
