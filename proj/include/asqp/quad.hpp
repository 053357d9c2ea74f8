// quad.hpp - core ASQP domain types: sentiment polarity, category taxonomy,
// quads and annotated sentences, plus the canonical term form and the exact
// equality used by every other component.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asqp {

// Separator tokens of the text formats. They are banned from quad fields and
// sentences so every serialization stays unambiguous.
inline constexpr std::string_view kQuadSep = "[SSEP]";
inline constexpr std::string_view kSentenceSep = "[SENTSEP]";
inline constexpr std::string_view kGoldSep = "####";

enum class Sentiment { Positive, Negative, Neutral };

inline constexpr Sentiment kAllSentiments[] = {Sentiment::Positive,
                                               Sentiment::Negative,
                                               Sentiment::Neutral};

// Internal word: "positive" / "negative" / "neutral".
std::string_view sentiment_word(Sentiment s);
// Template surface token: "great" / "bad" / "ok".
std::string_view sentiment_surface(Sentiment s);
std::optional<Sentiment> sentiment_from_word(std::string_view w);
std::optional<Sentiment> sentiment_from_surface(std::string_view w);
// Accepts either vocabulary; dataset releases disagree on which they store.
std::optional<Sentiment> sentiment_from_any(std::string_view w);

// Strips leading/trailing whitespace and collapses internal runs to single
// spaces. No case folding: the benchmark files are pre-lowercased and folding
// here would mask data defects.
std::string canonicalize_term(std::string_view text);

bool contains_reserved(std::string_view text);

// Closed, ordered category label set. Labels are canonicalized on
// construction and must be unique and non-empty.
class Taxonomy {
 public:
  explicit Taxonomy(std::vector<std::string> labels);

  // The 13 restaurant-domain labels.
  static const Taxonomy& restaurant();

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool contains(std::string_view label) const;

  // First whitespace-delimited token of a label ("food prices" -> "food").
  // Labels sharing a head group count as semantically related.
  static std::string_view head_group(std::string_view label);

 private:
  std::vector<std::string> labels_;
};

// One (aspect, category, opinion, sentiment) tuple. A disengaged aspect is
// the implicit-aspect marker; the literal string "NULL" never appears here,
// surface handling lives in the codec and importers.
struct Quad {
  std::optional<std::string> aspect;
  std::string category;
  std::string opinion;
  Sentiment sentiment = Sentiment::Positive;
};

// Copy with canonicalize_term applied to every text field.
Quad canonical(const Quad& q);

// Exact match: all four fields equal after canonicalization. Implicit aspect
// equals only implicit aspect.
bool quad_equal(const Quad& a, const Quad& b);

// Canonical string key; equal under quad_equal iff keys are equal.
std::string quad_key(const Quad& q);

enum class ViolationCode {
  UnknownCategory,
  EmptyAspect,
  EmptyOpinion,
  ReservedSubstring,
};

std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string field;
  std::string detail;
};

// Violations are data, not faults: empty report iff all Quad invariants hold
// under taxonomy t.
std::vector<Violation> validate_quad(const Quad& q, const Taxonomy& t);

struct AnnotatedSentence {
  std::string text;
  std::vector<Quad> quads;
};

// Thrown when an operation is handed a quad that fails validate_quad.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string message, std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace asqp
