// analysis.hpp - draft-vs-gold error analysis: minimum-mismatch alignment,
// per-record error classes, and stage-1 -> stage-2 migration statistics.
//
// Alignment is an exact minimum-cost one-to-one assignment under
// mismatch_cost, not a greedy match: greedy misclassifies crossed
// aspect-opinion mispairings, which are exactly the near-miss cases this
// analysis must get right. A matched pair sharing no element (cost 4)
// carries no information and is dissolved into spurious + missing.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asqp/eval.hpp"
#include "asqp/quad.hpp"

namespace asqp {

struct MismatchVector {
  bool aspect = false;
  bool category = false;
  bool opinion = false;
  bool sentiment = false;
  int count() const {
    return int(aspect) + int(category) + int(opinion) + int(sentiment);
  }
};

MismatchVector mismatch_vector(const Quad& pred, const Quad& gold);

// Number of the four elements that differ, 0..4. Same canonicalized
// comparison as quad_equal.
int mismatch_cost(const Quad& pred, const Quad& gold);

struct MatchedPair {
  std::size_t pred_index = 0;
  std::size_t gold_index = 0;
  int cost = 0;
};

struct Alignment {
  std::vector<MatchedPair> matched;   // sorted by pred_index
  std::vector<std::size_t> spurious;  // unmatched pred indices
  std::vector<std::size_t> missing;   // unmatched gold indices
  // Minimum total mismatch over complete matchings of the smaller side,
  // before cost-4 pairs are dissolved.
  long long total_cost = 0;
};

inline constexpr std::size_t kDefaultAlignBound = 64;

// Exact optimal assignment; among equal-cost assignments the one whose
// (pred index, gold index) pair list is lexicographically smallest is
// returned, so results are deterministic everywhere. Throws
// std::invalid_argument when either side exceeds max_side.
Alignment align_quads(std::span<const Quad> pred, std::span<const Quad> gold,
                      std::size_t max_side = kDefaultAlignBound);

enum class ErrorClass {
  Exact,
  SingleAspect,
  SingleCategory,
  SingleOpinion,
  SingleSentiment,
  MultiElement,
  Spurious,
  Missing,
};

inline constexpr std::size_t kErrorClassCount = 8;
std::string_view to_string(ErrorClass c);

struct ErrorRecord {
  std::size_t example = 0;
  std::optional<std::size_t> pred_index;
  std::optional<std::size_t> gold_index;
  MismatchVector mismatch;
  ErrorClass cls = ErrorClass::Exact;
};

struct ClassCounts {
  std::array<std::size_t, kErrorClassCount> counts{};
  std::size_t& operator[](ErrorClass c) {
    return counts[static_cast<std::size_t>(c)];
  }
  std::size_t operator[](ErrorClass c) const {
    return counts[static_cast<std::size_t>(c)];
  }
  std::size_t total_errors() const;  // everything except Exact
};

struct ErrorReport {
  ClassCounts counts;
  std::vector<ErrorRecord> records;
};

ErrorReport classify_errors(std::span<const ExamplePair> pairs,
                            std::size_t max_side = kDefaultAlignBound);

// Gold-anchored per-quad status: Spurious has no gold slot, so transitions
// run over the remaining seven classes. A gold quad left unmatched (or in a
// dissolved cost-4 pair) is Missing.
inline constexpr std::size_t kGoldClassCount = 7;

struct MigrationReport {
  // transitions[s1][s2] over gold-anchored slots; indices are ErrorClass
  // values below Spurious.
  std::array<std::array<std::size_t, kGoldClassCount>, kGoldClassCount>
      transitions{};
  ClassCounts stage1;  // full classify_errors counts, spurious included
  ClassCounts stage2;
  std::size_t compression = 0;  // multi-element -> single-element
  std::size_t regression = 0;   // exact -> any error
};

// stage1 and stage2 must cover the same examples with quad-equal gold lists;
// throws std::invalid_argument otherwise.
MigrationReport migration_matrix(std::span<const ExamplePair> stage1,
                                 std::span<const ExamplePair> stage2,
                                 std::size_t max_side = kDefaultAlignBound);

// Plain class,count lines for charting; no UI here.
std::string chart_data(const ClassCounts& counts);

}  // namespace asqp
