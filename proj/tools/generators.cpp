#include "generators.hpp"

#include <random>

namespace slpedit::gen {

Slp fibonacci(std::uint32_t order, char first, char second) {
  if (order == 0) throw InputError("fibonacci order must be at least 1");
  if (order > 90) throw InputError("fibonacci order must be at most 90");
  std::vector<Rule> rules;
  rules.push_back(Rule::make_terminal(first));
  if (order >= 2) rules.push_back(Rule::make_terminal(second));
  for (std::uint32_t k = 3; k <= order; ++k) rules.push_back(Rule::make_concat(k - 1, k - 2));
  return Slp(std::move(rules), order);
}

Slp power(std::uint64_t N, char symbol) {
  if (N == 0) throw InputError("power length must be at least 1");
  SlpBuilder b;
  VarId base = b.terminal(symbol);
  VarId acc = 0;
  for (std::uint64_t rest = N; rest != 0; rest >>= 1) {
    if (rest & 1) acc = acc == 0 ? base : b.concat(base, acc);
    if (rest > 1) base = b.concat(base, base);
  }
  return std::move(b).finish(acc);
}

Slp motif(const std::string& motif, std::uint64_t repeats) {
  if (motif.empty() || repeats == 0) throw InputError("motif and repeat count must be non-empty");
  std::string text;
  text.reserve(motif.size() * repeats);
  for (std::uint64_t i = 0; i < repeats; ++i) text += motif;
  return slp_from_lz78(text);
}

std::string random_text(std::uint64_t length, const std::string& alphabet, std::uint64_t seed) {
  if (alphabet.empty()) throw InputError("alphabet must be non-empty");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string out(length, '\0');
  for (auto& c : out) c = alphabet[pick(rng)];
  return out;
}

}  // namespace slpedit::gen

namespace slpedit::gen {

Encoder parse_encoder(std::string_view name) {
  if (name == "naive") return Encoder::Naive;
  if (name == "lz78") return Encoder::Lz78;
  if (name == "rle") return Encoder::Rle;
  throw InputError("unknown encoder '" + std::string(name) + "' (expected naive, lz78 or rle)");
}

std::string_view encoder_name(Encoder e) {
  switch (e) {
    case Encoder::Naive: return "naive";
    case Encoder::Lz78: return "lz78";
    case Encoder::Rle: return "rle";
  }
  return "?";
}

Slp encode(Encoder e, std::string_view text) {
  switch (e) {
    case Encoder::Naive: return slp_from_text(text);
    case Encoder::Lz78: return slp_from_lz78(text);
    case Encoder::Rle: return slp_from_rle(text);
  }
  throw InputError("unknown encoder");
}

std::string alphabet_of_size(std::size_t size) {
  static const std::string pool = "ACGTBDEFHIJKLMNOPQRSUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
  if (size == 0 || size > pool.size()) throw InputError("alphabet size out of range");
  return pool.substr(0, size);
}

std::string repetitive_text(std::mt19937_64& rng, std::size_t length, const std::string& alphabet) {
  std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
  std::string out;
  while (out.size() < length) {
    switch (rng() % 3) {
      case 0: {
        const std::size_t n = 1 + rng() % 6;
        for (std::size_t i = 0; i < n; ++i) out += alphabet[sym(rng)];
        break;
      }
      case 1:
        out.append(1 + rng() % 8, alphabet[sym(rng)]);
        break;
      default: {
        std::string m;
        for (std::size_t i = 0, n = 1 + rng() % 6; i < n; ++i) m += alphabet[sym(rng)];
        for (std::size_t r = 0, reps = 1 + rng() % 6; r < reps; ++r) {
          std::string copy = m;
          if (rng() % 4 == 0) copy[rng() % copy.size()] = alphabet[sym(rng)];
          out += copy;
        }
      }
    }
  }
  out.resize(length);
  return out;
}

ScoringScheme random_scheme(std::mt19937_64& rng, const std::string& alphabet, Cost max_cost) {
  const std::size_t s = alphabet.size();
  std::uniform_int_distribution<Cost> c(0, max_cost);
  std::vector<Cost> del(s), ins(s), sub(s * s);
  for (auto& v : del) v = c(rng);
  for (auto& v : ins) v = c(rng);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) sub[i * s + j] = i == j ? 0 : c(rng);
  return ScoringScheme(alphabet, std::move(del), std::move(ins), std::move(sub));
}

}  // namespace slpedit::gen
