#include "knotsieve/checkpoint.hpp"

#include <boost/crc.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "knotsieve/errors.hpp"

namespace knotsieve {

namespace {

constexpr std::string_view kMagic = "knotsieve-checkpoint 1";

std::uint32_t crc_of(std::string_view text) {
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  return crc.checksum();
}

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw ParseError("bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

RunCounters& RunCounters::operator+=(const RunCounters& o) {
  generated += o.generated;
  skipped_multicomponent += o.skipped_multicomponent;
  eliminated += o.eliminated;
  det_filtered += o.det_filtered;
  bracket_computed += o.bracket_computed;
  unresolved += o.unresolved;
  flagged += o.flagged;
  return *this;
}

std::string RunCounters::to_string() const {
  std::ostringstream os;
  os << "generated=" << generated << " skipped-multicomponent=" << skipped_multicomponent
     << " eliminated-by-pass-move=" << eliminated << " det-filtered=" << det_filtered
     << " bracket-computed=" << bracket_computed << " unresolved=" << unresolved
     << " flagged=" << flagged;
  return os.str();
}

RunCounters RunCounters::parse(std::string_view text) {
  RunCounters c;
  std::istringstream is{std::string(text)};
  std::string tok;
  int seen = 0;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("bad counter '" + tok + "'");
    std::string key = tok.substr(0, eq);
    std::uint64_t v = to_u64(std::string_view(tok).substr(eq + 1));
    if (key == "generated") c.generated = v;
    else if (key == "skipped-multicomponent") c.skipped_multicomponent = v;
    else if (key == "eliminated-by-pass-move") c.eliminated = v;
    else if (key == "det-filtered") c.det_filtered = v;
    else if (key == "bracket-computed") c.bracket_computed = v;
    else if (key == "unresolved") c.unresolved = v;
    else if (key == "flagged") c.flagged = v;
    else throw ParseError("unknown counter '" + key + "'");
    ++seen;
  }
  if (seen != 7) throw ParseError("expected 7 counters");
  return c;
}

std::string checkpoint_serialize(const CheckpointState& state) {
  std::ostringstream os;
  os << kMagic << "\n";
  os << "config " << state.config << "\n";
  os << "jobs " << state.jobs.size() << "\n";
  for (std::size_t j = 0; j < state.jobs.size(); ++j) {
    const JobState& js = state.jobs[j];
    os << "job " << j << " cursor=" << js.cursor.to_string() << " done=" << (js.done ? 1 : 0)
       << " bytes=" << js.record_bytes << " " << js.counters.to_string() << "\n";
  }
  std::string body = os.str();
  char crc[16];
  std::snprintf(crc, sizeof crc, "%08x", crc_of(body));
  return body + "crc32 " + crc + "\n";
}

CheckpointState checkpoint_deserialize(std::string_view text) {
  auto crc_pos = text.rfind("crc32 ");
  if (crc_pos == std::string_view::npos || (crc_pos > 0 && text[crc_pos - 1] != '\n'))
    throw CorruptCheckpointError("missing checksum");
  std::string_view body = text.substr(0, crc_pos);
  std::string_view tail = text.substr(crc_pos + 6);
  while (!tail.empty() && (tail.back() == '\n' || tail.back() == '\r')) tail.remove_suffix(1);
  std::uint32_t stored = 0;
  auto r = std::from_chars(tail.data(), tail.data() + tail.size(), stored, 16);
  if (r.ec != std::errc() || r.ptr != tail.data() + tail.size() || tail.size() != 8)
    throw CorruptCheckpointError("malformed checksum");
  if (stored != crc_of(body)) throw CorruptCheckpointError("checksum mismatch");

  std::istringstream is{std::string(body)};
  std::string line;
  CheckpointState st;
  try {
    if (!std::getline(is, line) || line != kMagic) throw CorruptCheckpointError("bad header");
    if (!std::getline(is, line) || line.rfind("config ", 0) != 0) throw CorruptCheckpointError("missing config");
    st.config = line.substr(7);
    if (!std::getline(is, line) || line.rfind("jobs ", 0) != 0) throw CorruptCheckpointError("missing job count");
    std::uint64_t jobs = to_u64(std::string_view(line).substr(5));
    for (std::uint64_t j = 0; j < jobs; ++j) {
      if (!std::getline(is, line)) throw CorruptCheckpointError("missing job line");
      std::istringstream ls(line);
      std::string word, idx, cursor, done, bytes;
      ls >> word >> idx >> cursor >> done >> bytes;
      if (word != "job" || to_u64(idx) != j || cursor.rfind("cursor=", 0) != 0 ||
          done.rfind("done=", 0) != 0 || bytes.rfind("bytes=", 0) != 0)
        throw CorruptCheckpointError("malformed job line");
      JobState js;
      js.cursor = GenerationCursor::parse(std::string_view(cursor).substr(7));
      js.done = to_u64(std::string_view(done).substr(5)) != 0;
      js.record_bytes = to_u64(std::string_view(bytes).substr(6));
      std::string rest;
      std::getline(ls, rest);
      js.counters = RunCounters::parse(rest);
      st.jobs.push_back(js);
    }
  } catch (const CorruptCheckpointError&) {
    throw;
  } catch (const Error& e) {
    throw CorruptCheckpointError(e.what());
  }
  return st;
}

void checkpoint_save(const std::string& path, const CheckpointState& state) {
  const std::string text = checkpoint_serialize(state);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

CheckpointState checkpoint_load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return checkpoint_deserialize(ss.str());
}

}  // namespace knotsieve
