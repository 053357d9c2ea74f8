// codec.hpp - bidirectional conversion between quad sets and the
// linearization template
//
//   <category> is <sentiment-token> because <aspect> is <opinion>
//
// with quads joined by " [SSEP] ", plus corrector-input construction
// ("<prefix><sentence> [SENTSEP] <draft>").
//
// Parsing is lenient by design: the input is arbitrary model output, so a
// segment either yields a quad or a diagnosed rejection, never a fault.
//
// Grammar notes, fixed here once for every caller:
//  - The category is matched as the longest taxonomy label that prefixes the
//    segment and is followed by " is ". Labels contain spaces, so prefix
//    matching against the closed taxonomy is what keeps the grammar
//    unambiguous at the category boundary.
//  - Aspect and opinion split at the FIRST " is " after " because ". An
//    opinion containing " is " therefore round-trips; an aspect containing
//    " is " does not and is excluded from the round-trip guarantee.
//  - The literal aspect "it" always parses to the implicit marker, mirroring
//    the rendering rule in reverse.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asqp/quad.hpp"

namespace asqp {

enum class ParseReject {
  UnknownCategory,
  BadSentimentToken,
  MissingDelimiter,
  EmptyField,
};

std::string_view to_string(ParseReject reason);

// One "[SSEP]"-separated segment: either a parsed quad or a rejection.
struct SegmentOutcome {
  std::size_t index = 0;
  std::string raw;
  std::optional<Quad> quad;
  std::optional<ParseReject> reject;
};

struct ParseDiagnostics {
  std::vector<SegmentOutcome> segments;
  std::size_t parsed_count() const;
  std::size_t rejected_count() const;
};

struct ParseResult {
  std::vector<Quad> quads;
  ParseDiagnostics diagnostics;
};

// Renders one quad through the template; implicit aspect becomes "it".
// Performs no validation.
std::string serialize_quad(const Quad& q);

// Joins rendered quads with " [SSEP] "; empty list yields the empty string.
// Throws ValidationError if any quad fails validate_quad under t.
std::string serialize_quads(std::span<const Quad> quads, const Taxonomy& t);

// Splits on "[SSEP]" and parses each segment. Whitespace-only input yields
// no segments. Never throws on any input.
ParseResult parse_quads(std::string_view text, const Taxonomy& t);

// "<prefix><sentence> [SENTSEP] <draft>". The prefix is a pass-through
// instruction literal. Throws std::invalid_argument if the sentence contains
// a reserved separator token.
std::string build_corrector_input(std::string_view sentence,
                                  std::string_view draft,
                                  std::string_view prefix = "");

}  // namespace asqp
