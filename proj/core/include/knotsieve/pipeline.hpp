#ifndef KNOTSIEVE_PIPELINE_HPP
#define KNOTSIEVE_PIPELINE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotsieve/bracket.hpp"
#include "knotsieve/checkpoint.hpp"
#include "knotsieve/embedding.hpp"
#include "knotsieve/generation.hpp"
#include "knotsieve/polynomial.hpp"
#include "knotsieve/reduction.hpp"

namespace knotsieve {

enum class Stage { kReducedAway, kDetFiltered, kBracketComputed, kUnresolved };

std::string_view to_string(Stage s);
Stage parse_stage(std::string_view text);

/// One line of a record file:
///   pd=<PD>\tsrc=<class:budget:position>\tstage=<stage>\tdet=<n|->\tf=<poly|->\tflag=<0|1>
struct VerificationRecord {
  std::string pd;
  GenerationCursor source;
  Stage stage = Stage::kReducedAway;
  std::optional<mpz_class> determinant;
  std::optional<LaurentPolynomial> f;
  bool flagged = false;

  std::string to_string() const;
  static VerificationRecord parse(std::string_view line);
  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct PipelineOptions {
  int max_bridge = kUnboundedBridge;
  int width_cap = kDefaultWidthCap;
};

/// Runs reduce, det filter and bracket on one knot diagram.
VerificationRecord process_candidate(const Embedding& e, const GenerationCursor& source,
                                     const PipelineOptions& options = {});

struct VerifyConfig {
  int min_crossings = 1;
  int max_crossings = 12;
  bool algebraic = true;
  bool polyhedral = false;
  int shard_index = 0;
  int shard_count = 1;
  int jobs = 1;
  std::string catalog;     // required for the polyhedral class
  std::string checkpoint;  // empty: no checkpointing
  std::string out;         // merged record file
  TrivializabilityMode trivializability = TrivializabilityMode::kClosure;
  PipelineOptions options;
  std::uint64_t progress_every = 0;     // 0: silent
  std::uint64_t checkpoint_every = 4096;
  /// Testing aid: terminate abruptly (exit status 2, no flush) after this
  /// many processed candidates; 0 disables.
  std::uint64_t halt_after = 0;
};

struct RunReport {
  RunCounters counters;
  double wall_seconds = 0;
  int shard_index = 0;
  int shard_count = 1;
  int jobs = 1;
  int min_crossings = 1;
  int max_crossings = 0;
  /// Closures of raw expression trees before normal-form deduplication
  /// (algebraic class only).
  mpz_class raw_closures = 0;
  bool resumed = false;

  std::string to_string() const;
};

/// 0 when nothing was flagged or unresolved, 1 otherwise.
int exit_status(const RunReport& report);

/// Generates, processes and records every candidate of the configured
/// streams. Each job writes `<out>.part<j>`; the parts are merged into `out`
/// in (budget, class, position) order and removed. With a checkpoint path the
/// run resumes from an existing checkpoint of the same configuration; the
/// checkpoint is removed after a successful merge.
RunReport run_verification(const VerifyConfig& config);

std::string config_fingerprint(const VerifyConfig& config);

std::vector<VerificationRecord> read_records(const std::string& path);

enum class ExportFormat { kPD, kDT };
ExportFormat parse_export_format(std::string_view text);

/// Writes flagged records one per line; returns the number written.
std::size_t export_flagged(const std::vector<VerificationRecord>& records, ExportFormat format,
                           const std::string& path);

}  // namespace knotsieve

#endif  // KNOTSIEVE_PIPELINE_HPP
