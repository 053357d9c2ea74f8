// eval.hpp - quad-level exact-match scoring. A predicted quad counts only
// when all four elements match a gold quad; corpus scores are micro-averaged
// from summed counts.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "asqp/quad.hpp"

namespace asqp {

// One scored unit: a prediction list against its gold list.
struct ExamplePair {
  std::vector<Quad> pred;
  std::vector<Quad> gold;
};

struct EvalCounts {
  std::size_t tp = 0;
  std::size_t n_pred = 0;
  std::size_t n_gold = 0;
};

struct EvalReport {
  std::size_t tp = 0;
  std::size_t n_pred = 0;
  std::size_t n_gold = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Default semantics deduplicate each side under quad_equal before counting:
// the template can emit repeated quads and double-counting would inflate tp.
// multiset = true keeps repeats and matches copies pairwise, for comparison
// studies.
EvalCounts score_example(std::span<const Quad> pred, std::span<const Quad> gold,
                         bool multiset = false);

EvalReport make_report(const EvalCounts& counts);

EvalReport score_corpus(std::span<const ExamplePair> pairs,
                        bool multiset = false);

// Human table, percentages with two decimals.
std::string format_report(const EvalReport& report);

}  // namespace asqp
