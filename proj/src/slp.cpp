#include "slpedit/slp.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "slpedit/text_format.hpp"

namespace slpedit {

std::vector<SlpIssue> validate(std::span<const Rule> rules, VarId start, std::uint64_t guard) {
  using Kind = SlpIssue::Kind;
  std::vector<SlpIssue> issues;
  if (rules.empty()) {
    issues.push_back({Kind::EmptyRules, "empty rule list"});
    return issues;
  }
  std::vector<std::uint64_t> length(rules.size(), 0);
  bool lengths_known = true;
  for (std::size_t k = 0; k < rules.size(); ++k) {
    const VarId id = static_cast<VarId>(k + 1);
    const Rule& r = rules[k];
    if (r.terminal) {
      length[k] = 1;
      continue;
    }
    bool ok = true;
    for (VarId child : {r.left, r.right}) {
      if (child == 0 || child > rules.size()) {
        issues.push_back({Kind::DanglingId, "rule " + std::to_string(id) + " references unknown id " +
                                                std::to_string(child)});
        ok = false;
      } else if (child >= id) {
        issues.push_back({Kind::ForwardReference, "rule " + std::to_string(id) +
                                                      " has a forward reference to " +
                                                      std::to_string(child)});
        ok = false;
      }
    }
    if (!ok || !lengths_known) {
      lengths_known = false;
      continue;
    }
    // Both children are <= guard, so the sum cannot overflow 64 bits.
    length[k] = length[r.left - 1] + length[r.right - 1];
    if (length[k] > guard) {
      issues.push_back({Kind::ExpansionGuard, "rule " + std::to_string(id) + " expands to more than " +
                                                  std::to_string(guard) + " symbols"});
      lengths_known = false;
    }
  }
  if (start == 0 || start > rules.size())
    issues.push_back({Kind::BadStart, "start id " + std::to_string(start) + " is not a rule"});
  return issues;
}

Slp::Slp(std::vector<Rule> rules, VarId start, std::uint64_t guard)
    : rules_(std::move(rules)), start_(start) {
  const auto issues = validate(rules_, start_, guard);
  if (!issues.empty()) {
    std::string message = issues.front().message;
    for (std::size_t i = 1; i < issues.size(); ++i) message += "; " + issues[i].message;
    const bool guard_tripped = std::any_of(issues.begin(), issues.end(), [](const SlpIssue& i) {
      return i.kind == SlpIssue::Kind::ExpansionGuard;
    });
    if (guard_tripped) throw GuardError(message);
    throw InputError(message);
  }
  length_.resize(rules_.size());
  depth_.resize(rules_.size());
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const Rule& r = rules_[k];
    if (r.terminal) {
      length_[k] = 1;
      depth_[k] = 1;
    } else {
      length_[k] = length_[r.left - 1] + length_[r.right - 1];
      depth_[k] = 1 + std::max(depth_[r.left - 1], depth_[r.right - 1]);
    }
  }
}

std::string Slp::expand(VarId v) const { return expand(v, 1, length(v)); }

std::string Slp::expand(VarId v, std::uint64_t offset, std::uint64_t len) const {
  if (v == 0 || v > rules_.size()) throw InputError("unknown variable " + std::to_string(v));
  if (offset < 1 || offset - 1 > length(v) || len > length(v) - (offset - 1))
    throw InputError("range out of bounds");
  std::string out;
  out.reserve(len);
  if (len == 0) return out;
  // Each frame emits expand(var)[lo, hi) with 0-based half-open bounds.
  struct Frame {
    VarId var;
    std::uint64_t lo, hi;
  };
  std::vector<Frame> stack{{v, offset - 1, offset - 1 + len}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const Rule& r = rule(f.var);
    if (r.terminal) {
      out.push_back(r.symbol);
      continue;
    }
    const std::uint64_t split = length(r.left);
    if (f.hi > split) stack.push_back({r.right, f.lo > split ? f.lo - split : 0, f.hi - split});
    if (f.lo < split) stack.push_back({r.left, f.lo, std::min(f.hi, split)});
  }
  return out;
}

VarId SlpBuilder::terminal(char c) {
  auto [it, inserted] = terminals_.try_emplace(static_cast<unsigned char>(c), 0);
  if (inserted) {
    rules_.push_back(Rule::make_terminal(c));
    it->second = static_cast<VarId>(rules_.size());
  }
  return it->second;
}

VarId SlpBuilder::concat(VarId left, VarId right) {
  const std::uint64_t key = (std::uint64_t{left} << 32) | right;
  auto [it, inserted] = pairs_.try_emplace(key, 0);
  if (inserted) {
    rules_.push_back(Rule::make_concat(left, right));
    it->second = static_cast<VarId>(rules_.size());
  }
  return it->second;
}

VarId SlpBuilder::balanced(std::span<const VarId> sequence) {
  if (sequence.empty()) throw InputError("empty input");
  std::vector<VarId> level(sequence.begin(), sequence.end());
  while (level.size() > 1) {
    std::vector<VarId> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(concat(level[i], level[i + 1]));
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

Slp SlpBuilder::finish(VarId start) && { return Slp(std::move(rules_), start); }

Slp slp_from_text(std::string_view text) {
  if (text.empty()) throw InputError("empty input");
  SlpBuilder builder;
  std::vector<VarId> leaves;
  leaves.reserve(text.size());
  for (char c : text) leaves.push_back(builder.terminal(c));
  const VarId root = builder.balanced(leaves);
  return std::move(builder).finish(root);
}

Slp slp_from_lz78(std::string_view text) {
  if (text.empty()) throw InputError("empty input");
  SlpBuilder builder;
  // Trie of phrases: (phrase index, next symbol) -> phrase index. Index 0 is
  // the empty phrase.
  std::unordered_map<std::uint64_t, std::uint32_t> trie;
  std::vector<VarId> phrase_var{0};
  std::vector<VarId> sequence;
  std::uint32_t current = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    const std::uint64_t key = (std::uint64_t{current} << 8) | c;
    if (auto it = trie.find(key); it != trie.end()) {
      current = it->second;
      continue;
    }
    const VarId sym = builder.terminal(static_cast<char>(c));
    const VarId var = current == 0 ? sym : builder.concat(phrase_var[current], sym);
    const auto id = static_cast<std::uint32_t>(phrase_var.size());
    phrase_var.push_back(var);
    trie.emplace(key, id);
    sequence.push_back(var);
    current = 0;
  }
  // A trailing incomplete phrase is an existing dictionary entry.
  if (current != 0) sequence.push_back(phrase_var[current]);
  const VarId root = builder.balanced(sequence);
  return std::move(builder).finish(root);
}

Slp slp_from_rle(std::string_view text) {
  if (text.empty()) throw InputError("empty input");
  SlpBuilder builder;
  std::vector<VarId> sequence;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && text[j] == text[i]) ++j;
    std::uint64_t run = j - i;
    // powers[b] generates the symbol repeated 2^b times.
    VarId power = builder.terminal(text[i]);
    VarId acc = 0;
    for (;;) {
      if (run & 1) acc = acc == 0 ? power : builder.concat(power, acc);
      run >>= 1;
      if (run == 0) break;
      power = builder.concat(power, power);
    }
    sequence.push_back(acc);
    i = j;
  }
  const VarId root = builder.balanced(sequence);
  return std::move(builder).finish(root);
}

namespace {

using text_format::line_error;

VarId parse_id(std::string_view token, std::size_t line) {
  VarId value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value == 0)
    throw InputError(line_error(line, "expected a positive variable id, got '" + std::string(token) + "'"));
  return value;
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Slp parse_slp(std::string_view text, std::uint64_t guard) {
  std::vector<Rule> rules;
  std::optional<VarId> start;
  for (auto [line, raw] : text_format::split_lines(text)) {
    std::string_view content = trim_left(raw);
    if (content.empty() || content.front() == '#') continue;
    if (start) throw InputError(line_error(line, "content after the start line"));
    const std::size_t eq = content.find('=');
    if (eq == std::string_view::npos) {
      const auto tokens = text_format::tokenize(content);
      if (tokens.size() != 2 || tokens[0] != "start")
        throw InputError(line_error(line, "expected a rule or 'start <id>'"));
      start = parse_id(tokens[1], line);
      continue;
    }
    const auto lhs = text_format::tokenize(content.substr(0, eq));
    if (lhs.size() != 1) throw InputError(line_error(line, "expected '<id> = ...'"));
    const VarId id = parse_id(lhs[0], line);
    if (id != rules.size() + 1)
      throw InputError(line_error(line, "rule ids must be consecutive starting at 1; expected " +
                                            std::to_string(rules.size() + 1)));
    std::string_view rhs = trim_left(content.substr(eq + 1));
    if (!rhs.empty() && rhs.front() == '\'') {
      std::size_t pos = 1;
      const char symbol = text_format::read_symbol(rhs, pos, line);
      if (pos >= rhs.size() || rhs[pos] != '\'')
        throw InputError(line_error(line, "unterminated symbol literal"));
      if (!text_format::tokenize(rhs.substr(pos + 1)).empty())
        throw InputError(line_error(line, "trailing characters after symbol"));
      rules.push_back(Rule::make_terminal(symbol));
    } else {
      const auto tokens = text_format::tokenize(rhs);
      if (tokens.size() != 2) throw InputError(line_error(line, "expected '<id> <id>' or a quoted symbol"));
      rules.push_back(Rule::make_concat(parse_id(tokens[0], line), parse_id(tokens[1], line)));
    }
  }
  if (!start) throw InputError("missing 'start' line");
  return Slp(std::move(rules), *start, guard);
}

std::string serialize_slp(const Slp& slp) {
  std::ostringstream out;
  VarId id = 1;
  for (const Rule& r : slp.rules()) {
    out << id++ << " = ";
    if (r.terminal)
      out << '\'' << text_format::escape_symbol(r.symbol) << "'\n";
    else
      out << r.left << ' ' << r.right << '\n';
  }
  out << "start " << slp.start() << '\n';
  return out.str();
}

}  // namespace slpedit
