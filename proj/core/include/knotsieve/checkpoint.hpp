#ifndef KNOTSIEVE_CHECKPOINT_HPP
#define KNOTSIEVE_CHECKPOINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotsieve/generation.hpp"

namespace knotsieve {

/// Per-stage pipeline counters. generated = skipped_multicomponent +
/// eliminated + det_filtered + bracket_computed + unresolved; flagged counts
/// the bracket-computed records with a unit monomial f.
struct RunCounters {
  std::uint64_t generated = 0;
  std::uint64_t skipped_multicomponent = 0;
  std::uint64_t eliminated = 0;
  std::uint64_t det_filtered = 0;
  std::uint64_t bracket_computed = 0;
  std::uint64_t unresolved = 0;
  std::uint64_t flagged = 0;

  bool telescopes() const noexcept {
    return generated == skipped_multicomponent + eliminated + det_filtered + bracket_computed + unresolved;
  }
  RunCounters& operator+=(const RunCounters& o);
  /// `generated=.. skipped-multicomponent=.. eliminated-by-pass-move=.. det-filtered=..
  /// bracket-computed=.. unresolved=.. flagged=..`
  std::string to_string() const;
  static RunCounters parse(std::string_view text);
  friend bool operator==(const RunCounters&, const RunCounters&) = default;
};

struct JobState {
  GenerationCursor cursor;  // next position to examine
  bool done = false;
  RunCounters counters;
  std::uint64_t record_bytes = 0;  // valid prefix of the job's part file
  friend bool operator==(const JobState&, const JobState&) = default;
};

struct CheckpointState {
  std::string config;  // fingerprint of the run configuration
  std::vector<JobState> jobs;
  friend bool operator==(const CheckpointState&, const CheckpointState&) = default;
};

/// Writes atomically (temporary file, then rename) with a trailing CRC-32.
void checkpoint_save(const std::string& path, const CheckpointState& state);
/// Throws CorruptCheckpointError on a checksum or format mismatch and
/// std::runtime_error when the file cannot be read.
CheckpointState checkpoint_load(const std::string& path);

std::string checkpoint_serialize(const CheckpointState& state);
CheckpointState checkpoint_deserialize(std::string_view text);

}  // namespace knotsieve

#endif  // KNOTSIEVE_CHECKPOINT_HPP
