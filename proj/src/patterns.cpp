#include "comppat/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace comppat {

std::string_view to_string(PatternId p) {
  switch (p) {
    case PatternId::P111: return "111";
    case PatternId::P112: return "112";
    case PatternId::P221: return "221";
    case PatternId::P123: return "123";
    case PatternId::Peak: return "peak";
    case PatternId::Valley: return "valley";
  }
  return "?";
}

std::optional<PatternId> parse_pattern(std::string_view text) {
  for (PatternId p : kAllPatterns) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

std::string_view to_string(RawTriple t) {
  switch (t) {
    case RawTriple::T111: return "111";
    case RawTriple::T112: return "112";
    case RawTriple::T221: return "221";
    case RawTriple::T123: return "123";
    case RawTriple::T121: return "121";
    case RawTriple::T132: return "132";
    case RawTriple::T231: return "231";
    case RawTriple::T212: return "212";
    case RawTriple::T213: return "213";
    case RawTriple::T312: return "312";
    case RawTriple::Other: return "other";
  }
  return "?";
}

bool matches(PatternId p, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  switch (p) {
    case PatternId::P111: return a == b && b == c;
    case PatternId::P112: return a == b && b < c;
    case PatternId::P221: return a == b && b > c;
    case PatternId::P123: return a < b && b < c;
    case PatternId::Peak: return a < b && b > c;
    case PatternId::Valley: return a > b && b < c;
  }
  return false;
}

TripleClass classify_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  TripleClass out;
  // Standardize: rank among the distinct values.
  std::vector<std::uint32_t> distinct{a, b, c};
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::uint32_t v : {a, b, c}) {
    const auto rank = std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin();
    out.order_type.push_back(static_cast<char>('1' + rank));
  }

  static const std::pair<std::string_view, RawTriple> kLabels[] = {
      {"111", RawTriple::T111}, {"112", RawTriple::T112}, {"221", RawTriple::T221},
      {"123", RawTriple::T123}, {"121", RawTriple::T121}, {"132", RawTriple::T132},
      {"231", RawTriple::T231}, {"212", RawTriple::T212}, {"213", RawTriple::T213},
      {"312", RawTriple::T312}};
  out.raw = RawTriple::Other;
  for (const auto& [label, raw] : kLabels) {
    if (out.order_type == label) out.raw = raw;
  }
  for (PatternId p : kAllPatterns) {
    if (matches(p, a, b, c)) out.statistics.push_back(p);
  }
  return out;
}

PartSet PartSet::of(std::vector<std::uint32_t> parts) {
  if (parts.empty()) throw UsageError("part set must be nonempty");
  if (parts.front() == 0) throw UsageError("parts must be positive");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] <= parts[i - 1]) throw UsageError("parts must be strictly increasing");
  }
  PartSet s;
  s.is_nat_ = false;
  s.parts_ = std::move(parts);
  return s;
}

PartSet PartSet::parse(std::string_view text) {
  if (text == "nat") return nat();
  std::vector<std::uint32_t> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    std::uint32_t value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw UsageError("invalid part '" + std::string(item) + "' in set '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return of(std::move(parts));
}

std::vector<std::uint32_t> PartSet::materialize(unsigned order) const {
  if (!is_nat_) return parts_;
  std::vector<std::uint32_t> out(order);
  std::iota(out.begin(), out.end(), 1u);
  return out;
}

bool PartSet::contains(std::uint32_t a) const {
  if (is_nat_) return a >= 1;
  return std::binary_search(parts_.begin(), parts_.end(), a);
}

std::string PartSet::to_string() const {
  if (is_nat_) return "nat";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::uint32_t sum_of(std::span<const std::uint32_t> parts) {
  return std::accumulate(parts.begin(), parts.end(), std::uint32_t{0});
}

unsigned count_occurrences(std::span<const std::uint32_t> parts, PatternId p) {
  unsigned count = 0;
  for (std::size_t i = 0; i + 2 < parts.size(); ++i) {
    if (matches(p, parts[i], parts[i + 1], parts[i + 2])) ++count;
  }
  return count;
}

unsigned count_raw(std::span<const std::uint32_t> parts, RawTriple t) {
  unsigned count = 0;
  for (std::size_t i = 0; i + 2 < parts.size(); ++i) {
    if (classify_triple(parts[i], parts[i + 1], parts[i + 2]).raw == t) ++count;
  }
  return count;
}

namespace {

void compositions_rec(unsigned remaining, const std::vector<std::uint32_t>& allowed,
                      Composition& prefix,
                      const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (std::uint32_t a : allowed) {
    if (a > remaining) break;
    prefix.push_back(a);
    compositions_rec(remaining - a, allowed, prefix, visit);
    prefix.pop_back();
  }
}

void words_rec(unsigned k, unsigned m, Composition& prefix,
               const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (prefix.size() == m) {
    visit(prefix);
    return;
  }
  for (std::uint32_t a = 1; a <= k; ++a) {
    prefix.push_back(a);
    words_rec(k, m, prefix, visit);
    prefix.pop_back();
  }
}

// Depth-first walk over all sequences with the given letters, bounded by
// `fits`; every prefix is itself counted.  The occurrence count is carried
// incrementally so each node costs O(1).
template <typename Fits, typename Tally>
void walk_prefixes(PatternId p, const std::vector<std::uint32_t>& letters, Composition& prefix,
                   std::uint32_t total, unsigned occurrences, const Fits& fits, const Tally& tally) {
  tally(total, static_cast<unsigned>(prefix.size()), occurrences);
  for (std::uint32_t a : letters) {
    if (!fits(total, a, prefix.size())) continue;
    unsigned next = occurrences;
    const std::size_t len = prefix.size();
    if (len >= 2 && matches(p, prefix[len - 2], prefix[len - 1], a)) ++next;
    prefix.push_back(a);
    walk_prefixes(p, letters, prefix, total + a, next, fits, tally);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_composition(unsigned n, const PartSet& parts,
                          const std::function<void(std::span<const std::uint32_t>)>& visit) {
  Composition prefix;
  compositions_rec(n, parts.materialize(n), prefix, visit);
}

std::vector<Composition> enumerate_compositions(unsigned n, const PartSet& parts) {
  std::vector<Composition> out;
  for_each_composition(n, parts, [&](std::span<const std::uint32_t> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

void for_each_word(unsigned k, unsigned m,
                   const std::function<void(std::span<const std::uint32_t>)>& visit) {
  Composition prefix;
  words_rec(k, m, prefix, visit);
}

std::vector<Composition> enumerate_words(unsigned k, unsigned m) {
  std::vector<Composition> out;
  for_each_word(k, m, [&](std::span<const std::uint32_t> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

BigInt OccurrenceTable::at(unsigned n, unsigned m, unsigned r) const {
  auto it = counts.find({n, m, r});
  return it == counts.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> OccurrenceTable::avoiders() const {
  std::vector<BigInt> out(max_index + 1);
  for (const auto& [mono, c] : counts) {
    if (mono.r != 0) continue;
    const unsigned idx = words ? mono.m : mono.n;
    if (idx <= max_index) out[idx] += c;
  }
  return out;
}

OccurrenceTable brute_force_table(PatternId p, const PartSet& parts, unsigned max_n) {
  OccurrenceTable table{p, false, "", max_n, {}};
  std::vector<std::uint32_t> letters;
  for (std::uint32_t a : parts.materialize(max_n)) {
    if (a <= max_n) letters.push_back(a);
    table.set += (table.set.empty() ? "" : ",") + std::to_string(a);
  }
  Composition prefix;
  walk_prefixes(
      p, letters, prefix, 0, 0,
      [&](std::uint32_t total, std::uint32_t a, std::size_t) { return total + a <= max_n; },
      [&](std::uint32_t total, unsigned len, unsigned occ) { table.counts[{total, len, occ}] += 1; });
  return table;
}

OccurrenceTable brute_force_word_table(PatternId p, unsigned k, unsigned max_m) {
  OccurrenceTable table{p, true, "[" + std::to_string(k) + "]", max_m, {}};
  std::vector<std::uint32_t> letters(k);
  std::iota(letters.begin(), letters.end(), 1u);
  Composition prefix;
  walk_prefixes(
      p, letters, prefix, 0, 0,
      [&](std::uint32_t, std::uint32_t, std::size_t len) { return len < max_m; },
      [&](std::uint32_t, unsigned len, unsigned occ) { table.counts[{0, len, occ}] += 1; });
  return table;
}

OccurrenceTable table_from_series(PatternId p, const TruncatedSeries& s, std::string set_label) {
  OccurrenceTable table{p, s.grading() == GradingVar::Z, std::move(set_label), s.order(), {}};
  for (const auto& [mono, c] : s.terms()) table.counts.emplace(mono, c);
  return table;
}

}  // namespace comppat
