#include "slpedit/dist.hpp"

namespace slpedit {

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase = 1000003;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(prod & kMersenne61) + static_cast<std::uint64_t>(prod >> 61);
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace

StringKey StringKey::of(std::span<const SymbolIndex> symbols) {
  std::uint64_t h = 0;
  for (SymbolIndex s : symbols) {
    h = mul_mod(h, kBase) + s + 1;
    if (h >= kMersenne61) h -= kMersenne61;
  }
  return {h, symbols.size()};
}

StringKey StringKey::concat(const StringKey& a, const StringKey& b) {
  std::uint64_t h = mul_mod(a.hash, pow_mod(kBase, b.length)) + b.hash;
  if (h >= kMersenne61) h -= kMersenne61;
  return {h, a.length + b.length};
}

DistTable build_dist_direct(std::string_view row, std::string_view col, const ScoringScheme& scheme) {
  const auto r = scheme.encode(row);
  const auto c = scheme.encode(col);
  return build_dist_direct<Cost>(r, c, scheme);
}

}  // namespace slpedit
