#include "slpedit/scoring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "slpedit/text_format.hpp"

namespace slpedit {

namespace {

using text_format::line_error;

Cost parse_cost(std::string_view token, std::size_t line) {
  Cost value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw InputError(line_error(line, "expected an integer, got '" + std::string(token) + "'"));
  if (value < 0) throw InputError(line_error(line, "negative cost"));
  return value;
}

char parse_one_symbol(std::string_view token, std::size_t line) {
  std::size_t pos = 0;
  const char c = text_format::read_symbol(token, pos, line);
  if (pos != token.size())
    throw InputError(line_error(line, "expected a single symbol, got '" + std::string(token) + "'"));
  return c;
}

}  // namespace

ScoringScheme::ScoringScheme(std::string alphabet, std::vector<Cost> del, std::vector<Cost> ins,
                             std::vector<Cost> sub, Cost scale)
    : alphabet_(std::move(alphabet)),
      del_(std::move(del)),
      ins_(std::move(ins)),
      sub_(std::move(sub)),
      scale_(scale) {
  if (alphabet_.empty()) throw InputError("empty alphabet");
  index_.fill(-1);
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    auto& slot = index_[static_cast<unsigned char>(alphabet_[i])];
    if (slot >= 0)
      throw InputError("duplicate symbol '" + text_format::escape_symbol(alphabet_[i]) + "'");
    slot = static_cast<int>(i);
  }
  const std::size_t s = alphabet_.size();
  if (del_.size() != s || ins_.size() != s || sub_.size() != s * s)
    throw InputError("cost tables do not match the alphabet size");
  if (scale_ < 1) throw InputError("scale must be a positive integer");
  for (const auto* table : {&del_, &ins_, &sub_}) {
    for (Cost c : *table) {
      if (c < 0) throw InputError("negative cost");
      if (c == kUnreachable) throw InputError("cost out of range");
      max_cost_ = std::max(max_cost_, c);
    }
  }
}

SymbolIndex ScoringScheme::index_of(char c) const {
  const int i = index_[static_cast<unsigned char>(c)];
  if (i < 0)
    throw InputError("symbol '" + text_format::escape_symbol(c) + "' is not in the alphabet");
  return static_cast<SymbolIndex>(i);
}

std::vector<SymbolIndex> ScoringScheme::encode(std::string_view text) const {
  std::vector<SymbolIndex> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(index_of(c));
  return out;
}

ScoringScheme levenshtein_scheme(std::string_view alphabet) {
  const std::size_t s = alphabet.size();
  std::vector<Cost> sub(s * s, 1);
  for (std::size_t i = 0; i < s; ++i) sub[i * s + i] = 0;
  return ScoringScheme(std::string(alphabet), std::vector<Cost>(s, 1), std::vector<Cost>(s, 1),
                       std::move(sub), 1);
}

ScoringScheme parse_scoring(std::string_view text) {
  std::optional<std::string> alphabet;
  Cost scale = 1;
  Cost default_indel = 1;
  Cost default_sub = 1;
  struct Override {
    std::size_t line;
    EditOp op;
    char a;
    char b;
    Cost value;
  };
  std::vector<Override> overrides;

  for (auto [line, content] : text_format::split_lines(text)) {
    const auto tokens = text_format::tokenize(content);
    if (tokens.empty()) continue;
    const std::string_view key = tokens[0];
    auto expect = [&](std::size_t n) {
      if (tokens.size() != n)
        throw InputError(line_error(line, "'" + std::string(key) + "' takes " +
                                              std::to_string(n - 1) + " argument(s)"));
    };
    if (!alphabet && key != "alphabet")
      throw InputError(line_error(line, "missing alphabet declaration"));
    if (key == "alphabet") {
      if (alphabet) throw InputError(line_error(line, "duplicate alphabet declaration"));
      expect(2);
      std::string symbols;
      std::size_t pos = 0;
      while (pos < tokens[1].size()) symbols.push_back(text_format::read_symbol(tokens[1], pos, line));
      alphabet = std::move(symbols);
    } else if (key == "scale") {
      expect(2);
      scale = parse_cost(tokens[1], line);
      if (scale < 1) throw InputError(line_error(line, "scale must be positive"));
    } else if (key == "default_indel") {
      expect(2);
      default_indel = parse_cost(tokens[1], line);
    } else if (key == "default_sub") {
      expect(2);
      default_sub = parse_cost(tokens[1], line);
    } else if (key == "del" || key == "ins") {
      expect(3);
      overrides.push_back({line, key == "del" ? EditOp::Delete : EditOp::Insert,
                           parse_one_symbol(tokens[1], line), 0, parse_cost(tokens[2], line)});
    } else if (key == "sub") {
      expect(4);
      overrides.push_back({line, EditOp::Substitute, parse_one_symbol(tokens[1], line),
                           parse_one_symbol(tokens[2], line), parse_cost(tokens[3], line)});
    } else {
      throw InputError(line_error(line, "unknown directive '" + std::string(key) + "'"));
    }
  }
  if (!alphabet) throw InputError("missing alphabet declaration");

  // Build once with defaults to validate the alphabet and get the index map.
  const std::size_t s = alphabet->size();
  std::vector<Cost> del(s, default_indel), ins(s, default_indel), sub(s * s, default_sub);
  for (std::size_t i = 0; i < s; ++i) sub[i * s + i] = 0;
  const ScoringScheme base(*alphabet, del, ins, sub, scale);

  for (const auto& o : overrides) {
    auto lookup = [&](char c) -> std::size_t {
      if (!base.contains(c))
        throw InputError(line_error(o.line, "symbol '" + text_format::escape_symbol(c) +
                                                "' is not in the alphabet"));
      return base.index_of(c);
    };
    switch (o.op) {
      case EditOp::Delete: del[lookup(o.a)] = o.value; break;
      case EditOp::Insert: ins[lookup(o.a)] = o.value; break;
      case EditOp::Substitute: sub[lookup(o.a) * s + lookup(o.b)] = o.value; break;
    }
  }
  return ScoringScheme(*alphabet, std::move(del), std::move(ins), std::move(sub), scale);
}

std::string serialize_scoring(const ScoringScheme& scheme) {
  std::ostringstream out;
  out << "alphabet ";
  for (char c : scheme.alphabet()) out << text_format::escape_symbol(c);
  out << "\nscale " << scheme.scale() << '\n';
  const std::string& a = scheme.alphabet();
  for (std::size_t i = 0; i < a.size(); ++i)
    out << "del " << text_format::escape_symbol(a[i]) << ' ' << scheme.del_at(i) << '\n';
  for (std::size_t i = 0; i < a.size(); ++i)
    out << "ins " << text_format::escape_symbol(a[i]) << ' ' << scheme.ins_at(i) << '\n';
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      out << "sub " << text_format::escape_symbol(a[i]) << ' ' << text_format::escape_symbol(a[j])
          << ' ' << scheme.sub_at(i, j) << '\n';
  return out.str();
}

Cost cost(const ScoringScheme& scheme, EditOp op, char a, std::optional<char> b) {
  switch (op) {
    case EditOp::Delete:
    case EditOp::Insert:
      if (b) throw InputError("only substitutions take a second symbol");
      return op == EditOp::Delete ? scheme.del(a) : scheme.ins(a);
    case EditOp::Substitute:
      if (!b) throw InputError("substitution requires a second symbol");
      return scheme.sub(a, *b);
  }
  return kUnreachable;
}

}  // namespace slpedit
