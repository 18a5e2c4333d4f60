#include "slpedit/partition.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace slpedit {

std::vector<CoverPiece> cover_string(const Slp& slp, std::uint64_t x) {
  if (x == 0) throw InputError("x out of range: must be at least 1");
  std::vector<CoverPiece> pieces;
  struct Frame {
    VarId var;
    std::uint64_t start;
  };
  std::vector<Frame> stack{{slp.start(), 1}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const std::uint64_t len = slp.length(f.var);
    if (len <= x) {
      pieces.push_back({f.var, f.start, len, false});
      continue;
    }
    const Rule& r = slp.rule(f.var);  // len > x >= 1, so this is a concatenation
    const std::uint64_t left = slp.length(r.left);
    if (left < x && slp.length(r.right) < x) {
      pieces.push_back({f.var, f.start, len, true});
      continue;
    }
    stack.push_back({r.right, f.start + left});
    stack.push_back({r.left, f.start});
  }
  return pieces;
}

std::size_t PartitionPlan::keys_a() const {
  return static_cast<std::size_t>(std::count_if(cover_a.begin(), cover_a.end(), [](auto& p) { return p.key; }));
}

std::size_t PartitionPlan::keys_b() const {
  return static_cast<std::size_t>(std::count_if(cover_b.begin(), cover_b.end(), [](auto& p) { return p.key; }));
}

std::size_t PartitionPlan::distinct_pairs() const {
  std::unordered_set<VarId> va, vb;
  for (const auto& p : cover_a) va.insert(p.var);
  for (const auto& p : cover_b) vb.insert(p.var);
  return va.size() * vb.size();
}

PartitionPlan make_partition_plan(const Slp& a, const Slp& b, std::uint64_t x) {
  PartitionPlan plan;
  plan.x = x;
  plan.cover_a = cover_string(a, x);
  plan.cover_b = cover_string(b, x);
  plan.depth_a = a.depth();
  plan.depth_b = b.depth();
  return plan;
}

std::string plan_to_csv(const PartitionPlan& plan) {
  std::ostringstream out;
  out << "string,piece,var,start,len\n";
  auto emit = [&](char name, const std::vector<CoverPiece>& cover) {
    for (std::size_t i = 0; i < cover.size(); ++i)
      out << name << ',' << i + 1 << ',' << cover[i].var << ',' << cover[i].start << ',' << cover[i].len << '\n';
  };
  emit('A', plan.cover_a);
  emit('B', plan.cover_b);
  return out.str();
}

}  // namespace slpedit
