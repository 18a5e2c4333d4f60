#include <doctest.h>

#include "generators.hpp"
#include "slpedit/partition.hpp"
#include "support.hpp"

using namespace slpedit;
using testing_support::make_rng;

namespace {

/// Checks every structural guarantee of a cover; returns the number of violations.
int cover_violations(const Slp& slp, std::uint64_t x, const std::vector<CoverPiece>& cover) {
  int bad = 0;
  std::string joined;
  std::uint64_t next = 1;
  for (const auto& p : cover) {
    if (p.start != next) ++bad;
    if (p.len != slp.length(p.var) || p.len == 0) ++bad;
    if (p.key ? !(p.len > x && p.len < 2 * x) : !(p.len >= 1 && p.len <= x)) ++bad;
    joined += slp.expand(p.var);
    next += p.len;
  }
  if (joined != slp.expand()) ++bad;
  const std::uint64_t bound = (2 * std::uint64_t{slp.depth()} + 2) * (slp.length() / x + 1);
  if (cover.size() > bound) ++bad;
  return bad;
}

}  // namespace

TEST_CASE("nine-block example covers") {
  const Slp a = testing_support::nine_block_a();
  const auto ca = cover_string(a, 3);
  REQUIRE(ca.size() == 3);
  CHECK(ca[0].var == 5);
  CHECK(ca[1].var == 5);
  CHECK(ca[2].var == 4);
  CHECK(a.expand(ca[0].var) + a.expand(ca[1].var) + a.expand(ca[2].var) == "ABCABCAB");

  const Slp b = testing_support::nine_block_b();
  const auto cb = cover_string(b, 3);
  REQUIRE(cb.size() == 3);
  CHECK(b.expand(cb[0].var) == "BBC");
  CHECK(b.expand(cb[1].var) == "BB");
  CHECK(b.expand(cb[2].var) == "BCB");

  const PartitionPlan plan = make_partition_plan(a, b, 3);
  CHECK(plan.blocks() == 9);
  CHECK(plan.distinct_pairs() == 6);
}

TEST_CASE("degenerate widths") {
  const Slp a = testing_support::nine_block_a();
  const auto whole = cover_string(a, a.length());
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].var == a.start());
  CHECK(cover_string(a, 1000).size() == 1);
  const auto ones = cover_string(a, 1);
  CHECK(ones.size() == a.length());
  for (const auto& p : ones) CHECK(a.rule(p.var).terminal);
  CHECK_THROWS_AS(cover_string(a, 0), InputError);
  const PartitionPlan plan = make_partition_plan(a, a, a.length());
  CHECK(plan.blocks() == 1);
}

TEST_CASE("cover invariants over random grammars and widths") {
  auto rng = make_rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const Slp s = iter % 3 == 0   ? testing_support::random_slp(rng, 3 + rng() % 40, "ab", 2000)
                  : iter % 3 == 1 ? gen::encode(static_cast<gen::Encoder>(rng() % 3),
                                                gen::repetitive_text(rng, 1 + rng() % 600, "abcd"))
                                  : gen::fibonacci(3 + rng() % 15);
    for (std::uint64_t x = 1; x <= 2 * s.length(); x *= 2) CHECK(cover_violations(s, x, cover_string(s, x)) == 0);
    CHECK(cover_string(s, 3) == cover_string(s, 3));
  }
}

TEST_CASE("plan csv") {
  const PartitionPlan plan = make_partition_plan(testing_support::nine_block_a(), testing_support::nine_block_b(), 3);
  const std::string csv = plan_to_csv(plan);
  CHECK(csv.rfind("string,piece,var,start,len\n", 0) == 0);
  CHECK(csv.find("A,1,5,1,3\n") != std::string::npos);
  CHECK(csv.find("B,3,6,6,3\n") != std::string::npos);
}
