// corpus_io.hpp - readers and writers for every corpus format the toolkit
// touches:
//
//  legacy gold files    "<sentence>####[['a', 'c', 's', 'o'], ...]"
//  canonical records    one JSON object per line, explicit fields
//  corrector lines      "<sentence> [SENTSEP] <draft> #### <gold>"
//  sidecar metadata     per-line weight/provenance records (the corrector
//                       interchange line cannot carry them)
//
// Readers are line-lenient: a malformed line is reported and skipped, the
// rest of the file still loads.
#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asqp/quad.hpp"

namespace asqp {

enum class Provenance {
  Identity,
  CategoryError,
  AspectError,
  SentimentError,
  OpinionError,
  RandomError,
  ModelDraft,
};

std::string_view to_string(Provenance p);
std::optional<Provenance> provenance_from_string(std::string_view s);

// One corrector training example. provenance == Identity implies draft and
// gold are element-wise quad_equal; weight is w_cor for identity pairs and
// w_err for error drafts.
struct CorrectorExample {
  std::string sentence;
  std::vector<Quad> draft;
  std::vector<Quad> gold;
  double weight = 1.0;
  Provenance provenance = Provenance::ModelDraft;
};

struct LineReject {
  std::size_t line_no = 0;  // 1-based
  std::string reason;
};

// Element order of legacy 4-tuples as a permutation of "acso"
// (aspect, category, sentiment, opinion). Public releases disagree, so the
// order is a flag; "acso" is the common layout.
struct ImportOptions {
  std::string order = "acso";
  bool lowercase = false;
};

struct ImportResult {
  std::vector<AnnotatedSentence> corpus;
  std::vector<LineReject> rejects;
  std::size_t lines_read = 0;  // non-empty lines
};

// Parses one legacy line. The aspect string "NULL" imports as the implicit
// marker; sentiment accepts either vocabulary. On failure returns nullopt
// and stores the reason in *error.
std::optional<AnnotatedSentence> import_legacy_line(std::string_view line,
                                                    const ImportOptions& opts,
                                                    const Taxonomy& taxonomy,
                                                    std::string* error);

ImportResult import_legacy(std::istream& in, const ImportOptions& opts,
                           const Taxonomy& taxonomy);

// Inverse of import_legacy_line (implicit aspect exports as 'NULL').
std::string export_legacy_line(const AnnotatedSentence& ex,
                               const ImportOptions& opts);

// Interchange line "<sentence> [SENTSEP] <draft> #### <gold>", separators
// written with single surrounding spaces. Weight and provenance travel in
// the sidecar, keyed by line number.
std::string write_corrector_line(const CorrectorExample& ex,
                                 const Taxonomy& taxonomy);

// Reads sentence/draft/gold back. "####" is accepted with or without
// surrounding spaces; weight and provenance take their defaults here and are
// merged from the sidecar by the caller.
std::optional<CorrectorExample> read_corrector_line(std::string_view line,
                                                    const Taxonomy& taxonomy,
                                                    std::string* error);

// Canonical JSONL records.
std::string corpus_record(const AnnotatedSentence& ex);
std::optional<AnnotatedSentence> parse_corpus_record(std::string_view line,
                                                     const Taxonomy& taxonomy,
                                                     std::string* error);

std::string corrector_record(const CorrectorExample& ex);
std::optional<CorrectorExample> parse_corrector_record(std::string_view line,
                                                       const Taxonomy& taxonomy,
                                                       std::string* error);

// Sidecar metadata record for interchange line `line_no` (1-based).
std::string sidecar_record(std::size_t line_no, double weight, Provenance p);
struct SidecarEntry {
  std::size_t line_no = 0;
  double weight = 1.0;
  Provenance provenance = Provenance::ModelDraft;
};
std::optional<SidecarEntry> parse_sidecar_record(std::string_view line,
                                                 std::string* error);

struct ReadCorpusResult {
  std::vector<AnnotatedSentence> corpus;
  std::vector<LineReject> rejects;
  std::size_t lines_read = 0;
};
ReadCorpusResult read_corpus_records(std::istream& in,
                                     const Taxonomy& taxonomy);

struct ReadCorrectorResult {
  std::vector<CorrectorExample> examples;
  std::vector<LineReject> rejects;
  std::size_t lines_read = 0;
};
ReadCorrectorResult read_corrector_records(std::istream& in,
                                           const Taxonomy& taxonomy);

struct SplitStats {
  std::string name;
  std::size_t examples = 0;
  std::size_t quads = 0;
  std::size_t implicit_aspects = 0;
  std::map<std::string, std::size_t> per_category;
};

SplitStats dataset_stats(std::span<const AnnotatedSentence> corpus,
                         std::string name);

}  // namespace asqp
