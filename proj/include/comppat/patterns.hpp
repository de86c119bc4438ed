#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "comppat/series.hpp"

namespace comppat {

// The six adjacent-triple statistics.
enum class PatternId { P111, P112, P221, P123, Peak, Valley };

inline constexpr PatternId kAllPatterns[] = {PatternId::P111, PatternId::P112, PatternId::P221,
                                             PatternId::P123, PatternId::Peak, PatternId::Valley};

// "111", "112", "221", "123", "peak", "valley".
std::string_view to_string(PatternId p);
std::optional<PatternId> parse_pattern(std::string_view text);

// Order types of an adjacent triple.  The first ten are the ones that make
// up the six statistics; everything else (122, 321, 211, ...) is Other.
enum class RawTriple { T111, T112, T221, T123, T121, T132, T231, T212, T213, T312, Other };

std::string_view to_string(RawTriple t);

struct TripleClass {
  std::string order_type;  // standardized form, e.g. "122" for (1,4,4)
  RawTriple raw;
  std::vector<PatternId> statistics;
};

TripleClass classify_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c);
bool matches(PatternId p, std::uint32_t a, std::uint32_t b, std::uint32_t c);

/// Allowed part values: a strictly increasing list of positive integers,
/// or "all of N".  The latter materializes to {1, ..., order}.
class PartSet {
 public:
  static PartSet nat() { return PartSet(); }
  // Throws UsageError unless `parts` is nonempty, positive and strictly increasing.
  static PartSet of(std::vector<std::uint32_t> parts);
  // "nat" or a comma-separated list such as "1,3,4".
  static PartSet parse(std::string_view text);

  bool is_nat() const { return is_nat_; }
  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::vector<std::uint32_t> materialize(unsigned order) const;
  bool contains(std::uint32_t a) const;
  std::string to_string() const;

 private:
  PartSet() = default;
  bool is_nat_ = true;
  std::vector<std::uint32_t> parts_;
};

using Composition = std::vector<std::uint32_t>;

std::uint32_t sum_of(std::span<const std::uint32_t> parts);
unsigned count_occurrences(std::span<const std::uint32_t> parts, PatternId p);
unsigned count_raw(std::span<const std::uint32_t> parts, RawTriple t);

// Visits every composition of n with parts in A, in lexicographic order.
// n = 0 visits only the empty composition.
void for_each_composition(unsigned n, const PartSet& parts,
                          const std::function<void(std::span<const std::uint32_t>)>& visit);
std::vector<Composition> enumerate_compositions(unsigned n, const PartSet& parts);

// All k^m words of length m over {1..k}, in lexicographic order.
void for_each_word(unsigned k, unsigned m,
                   const std::function<void(std::span<const std::uint32_t>)>& visit);
std::vector<Composition> enumerate_words(unsigned k, unsigned m);

/// Exact counts indexed by (n, m, r).  Word tables use n = 0 and index by
/// (m, r), so they line up with Z-graded word series.
struct OccurrenceTable {
  PatternId pattern;
  bool words = false;
  std::string set;  // materialized part set, or "[k]" for words
  unsigned max_index = 0;
  std::map<Monomial, BigInt> counts;

  BigInt at(unsigned n, unsigned m, unsigned r) const;
  // Sum over m of the r = 0 slice; the avoiders sequence.
  std::vector<BigInt> avoiders() const;
};

OccurrenceTable brute_force_table(PatternId p, const PartSet& parts, unsigned max_n);
OccurrenceTable brute_force_word_table(PatternId p, unsigned k, unsigned max_m);

// Occurrence table read off a generating function (every term with grading
// exponent <= max, as far as the series order allows).
OccurrenceTable table_from_series(PatternId p, const TruncatedSeries& s, std::string set_label);

}  // namespace comppat
