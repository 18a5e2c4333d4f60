#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "slpedit/slp.hpp"
#include "support.hpp"

using namespace slpedit;
using testing_support::make_rng;

namespace {

std::uint64_t ceil_lg(std::uint64_t n) {
  std::uint64_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

bool has_issue(const std::vector<SlpIssue>& issues, SlpIssue::Kind kind) {
  for (const auto& i : issues)
    if (i.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("two-rule SLP") {
  const Slp s({Rule::make_terminal('a'), Rule::make_concat(1, 1)}, 2);
  CHECK(s.length() == 2);
  CHECK(s.size() == 2);
  CHECK(s.depth() == 2);
  CHECK(s.expand() == "aa");
}

TEST_CASE("validation issues") {
  const std::vector<Rule> forward{Rule::make_concat(2, 2), Rule::make_terminal('a')};
  CHECK(has_issue(validate(forward, 1), SlpIssue::Kind::ForwardReference));
  CHECK_THROWS_AS(Slp(forward, 1), InputError);

  const std::vector<Rule> self{Rule::make_terminal('a'), Rule::make_concat(2, 1)};
  CHECK(has_issue(validate(self, 2), SlpIssue::Kind::ForwardReference));

  const std::vector<Rule> dangling{Rule::make_terminal('a'), Rule::make_concat(1, 0)};
  CHECK(has_issue(validate(dangling, 2), SlpIssue::Kind::DanglingId));

  CHECK(has_issue(validate({}, 1), SlpIssue::Kind::EmptyRules));
  const std::vector<Rule> one{Rule::make_terminal('a')};
  CHECK(has_issue(validate(one, 2), SlpIssue::Kind::BadStart));
  CHECK(validate(one, 1).empty());
}

TEST_CASE("expansion guard") {
  std::vector<Rule> rules{Rule::make_terminal('a')};
  for (VarId i = 1; i <= 50; ++i) rules.push_back(Rule::make_concat(i, i));
  CHECK(has_issue(validate(rules, 51), SlpIssue::Kind::ExpansionGuard));
  CHECK_THROWS_AS(Slp(rules, 51), GuardError);
  // Every rule is checked, not only those reachable from the start.
  CHECK_THROWS_AS(Slp(rules, 40), GuardError);
  rules.resize(41);
  CHECK(Slp(rules, 41).length() == (std::uint64_t{1} << 40));
  CHECK_THROWS_AS(Slp(rules, 30, 1000), GuardError);
}

TEST_CASE("fibonacci SLP lengths match expansion") {
  const Slp f25 = gen::fibonacci(25);
  CHECK(f25.size() == 25);
  CHECK(f25.length() == 75025);
  CHECK(f25.expand().size() == 75025);
  std::uint64_t a = 1, b = 1;
  for (std::uint32_t k = 3; k <= 20; ++k) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
    const Slp f = gen::fibonacci(k);
    CHECK(f.length() == c);
    CHECK(f.expand().size() == c);
    CHECK(f.depth() <= f.size());
  }
}

TEST_CASE("nine-block example SLP expands to ABCABCAB") {
  CHECK(testing_support::nine_block_a().expand() == "ABCABCAB");
  CHECK(testing_support::nine_block_b().expand() == "BBCBBBCB");
}

TEST_CASE("range extraction equals slicing") {
  auto rng = make_rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    const Slp s = testing_support::random_slp(rng, 4 + rng() % 30, "abc");
    const std::string full = s.expand();
    REQUIRE(full.size() == s.length());
    for (int k = 0; k < 5; ++k) {
      const std::uint64_t off = 1 + rng() % full.size();
      const std::uint64_t len = rng() % (full.size() - off + 2);
      CHECK(s.expand(s.start(), off, len) == full.substr(off - 1, len));
    }
    CHECK_THROWS_AS(s.expand(s.start(), full.size(), 2), InputError);
    CHECK_THROWS_AS(s.expand(s.start(), 0, 1), InputError);
  }
}

TEST_CASE("balanced encoder") {
  const Slp abcd = slp_from_text("abcd");
  CHECK(abcd.size() == 7);
  CHECK(abcd.depth() == 3);
  const Slp abc = slp_from_text("abc");
  CHECK(abc.size() == 5);
  CHECK(abc.expand() == "abc");
  CHECK(slp_from_text("a").size() == 1);
  CHECK_THROWS_AS(slp_from_text(""), InputError);
}

TEST_CASE("lz78 encoder") {
  CHECK(slp_from_lz78("aaaa").expand() == "aaaa");
  CHECK(slp_from_lz78("abracadabra").expand() == "abracadabra");
  const Slp z = slp_from_lz78("z");
  CHECK(z.expand() == "z");
  CHECK(z.size() == 1);
  CHECK_THROWS_AS(slp_from_lz78(""), InputError);
}

TEST_CASE("rle encoder") {
  const Slp a4 = slp_from_rle("aaaa");
  CHECK(a4.size() == 3);
  CHECK(a4.expand() == "aaaa");
  const Slp mixed = slp_from_rle("aabbb");
  CHECK(mixed.expand() == "aabbb");
  CHECK(mixed.size() <= 2 * (1 + 2) + 3);
  CHECK(slp_from_rle("a").size() == 1);
  for (std::uint64_t n : {1u, 2u, 3u, 7u, 100u, 1000u, 4097u}) {
    const Slp s = slp_from_rle(std::string(n, 'q'));
    CHECK(s.length() == n);
    CHECK(s.size() <= 2 * ceil_lg(n) + 2);
  }
}

TEST_CASE("encoders round-trip random text") {
  auto rng = make_rng(17);
  const std::string alphabets[] = {"a", "ab", "ACGT", "abcdefghijklmnopqrst", std::string("\0\n #'\\\x7f\xff", 8)};
  for (int iter = 0; iter < 300; ++iter) {
    const std::string& alpha = alphabets[iter % 5];
    const std::string text = gen::repetitive_text(rng, 1 + rng() % 500, alpha);
    for (auto e : {gen::Encoder::Naive, gen::Encoder::Lz78, gen::Encoder::Rle}) {
      const Slp s = gen::encode(e, text);
      CHECK(s.expand() == text);
      CHECK(s.length() == text.size());
      CHECK(s.depth() <= s.size());
      if (e == gen::Encoder::Naive) CHECK(s.depth() <= ceil_lg(text.size()) + 1);
      CHECK(parse_slp(serialize_slp(s)) == s);
    }
  }
}

TEST_CASE("builder shares identical rules") {
  SlpBuilder b;
  const VarId a1 = b.terminal('a');
  CHECK(b.terminal('a') == a1);
  const VarId aa = b.concat(a1, a1);
  CHECK(b.concat(a1, a1) == aa);
  const Slp s = std::move(b).finish(aa);
  CHECK(s.size() == 2);
}

TEST_CASE("SLP file format") {
  const Slp s = parse_slp("1 = 'a'\n2 = 1 1\nstart 2\n");
  CHECK(s.expand() == "aa");
  CHECK(parse_slp("# header\n1 = 'a'   # leaf\n\n2 = 1 1\nstart 2").expand() == "aa");
  CHECK(parse_slp("1 = '\\x23'\nstart 1\n").expand() == "#");
  CHECK_THROWS_AS(parse_slp("1 = 'a'\n2 = 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_slp("1 = 'a'\n3 = 1 1\nstart 3\n"), InputError);
  CHECK_THROWS_AS(parse_slp("1 = 'a'\n2 = 1 5\nstart 2\n"), InputError);
  CHECK_THROWS_AS(parse_slp("1 = 'ab'\nstart 1\n"), InputError);
  CHECK_THROWS_AS(parse_slp("1 = 'a'\nstart 1\n2 = 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_slp("1 'a'\nstart 1\n"), InputError);
  try {
    parse_slp("1 = 'a'\n2 = 1 x\nstart 2\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("serialize then parse on random grammars") {
  auto rng = make_rng(23);
  for (int iter = 0; iter < 100; ++iter) {
    const Slp s = testing_support::random_slp(rng, 2 + rng() % 40, "xyz");
    CHECK(parse_slp(serialize_slp(s)) == s);
  }
}

TEST_CASE("generators") {
  const Slp f10 = gen::fibonacci(10);
  CHECK(f10.length() == 55);
  CHECK(f10.size() == 10);
  const Slp p = gen::power(1024);
  CHECK(p.size() == 11);
  CHECK(p.expand() == std::string(1024, 'a'));
  CHECK(gen::power(1000).expand() == std::string(1000, 'a'));
  CHECK(gen::motif("abc", 5).expand() == "abcabcabcabcabc");
  CHECK(gen::random_text(100, "ACGT", 3) == gen::random_text(100, "ACGT", 3));
  CHECK_THROWS_AS(gen::fibonacci(0), InputError);
  CHECK_THROWS_AS(gen::power(0), InputError);
}
