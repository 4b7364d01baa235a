#include "knotsieve/pipeline.hpp"

#include <boost/crc.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <queue>
#include <sstream>
#include <thread>

#include "knotsieve/determinant.hpp"
#include "knotsieve/dt_code.hpp"
#include "knotsieve/errors.hpp"
#include "knotsieve/polyhedron.hpp"

namespace knotsieve {

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::kReducedAway:
      return "reduced-away";
    case Stage::kDetFiltered:
      return "det-filtered";
    case Stage::kBracketComputed:
      return "bracket-computed";
    case Stage::kUnresolved:
      return "unresolved";
  }
  return {};
}

Stage parse_stage(std::string_view text) {
  for (Stage s : {Stage::kReducedAway, Stage::kDetFiltered, Stage::kBracketComputed, Stage::kUnresolved})
    if (to_string(s) == text) return s;
  throw ParseError("unknown stage '" + std::string(text) + "'");
}

std::string VerificationRecord::to_string() const {
  std::string out = "pd=" + pd + "\tsrc=" + source.to_string() + "\tstage=" +
                    std::string(knotsieve::to_string(stage)) + "\tdet=";
  out += determinant ? determinant->get_str() : "-";
  out += "\tf=";
  out += f ? f->to_string("A") : "-";
  out += flagged ? "\tflag=1" : "\tflag=0";
  return out;
}

VerificationRecord VerificationRecord::parse(std::string_view line) {
  static constexpr std::string_view keys[] = {"pd=", "src=", "stage=", "det=", "f=", "flag="};
  std::string_view vals[6];
  std::size_t pos = 0;
  for (int i = 0; i < 6; ++i) {
    std::size_t tab = i < 5 ? line.find('\t', pos) : line.size();
    if (tab == std::string_view::npos) throw ParseError("record has too few fields");
    std::string_view tok = line.substr(pos, tab - pos);
    if (tok.substr(0, keys[i].size()) != keys[i])
      throw ParseError("record field " + std::to_string(i + 1) + " should start with " + std::string(keys[i]));
    vals[i] = tok.substr(keys[i].size());
    pos = tab + 1;
  }
  VerificationRecord r;
  r.pd = std::string(vals[0]);
  r.source = GenerationCursor::parse(vals[1]);
  r.stage = parse_stage(vals[2]);
  if (vals[3] != "-") r.determinant = mpz_class(std::string(vals[3]));
  if (vals[4] != "-") r.f = LaurentPolynomial::parse(vals[4], "A");
  if (vals[5] != "0" && vals[5] != "1") throw ParseError("bad flag field");
  r.flagged = vals[5] == "1";
  return r;
}

VerificationRecord process_candidate(const Embedding& e, const GenerationCursor& source,
                                     const PipelineOptions& options) {
  VerificationRecord r;
  r.pd = e.to_diagram().to_string();
  r.source = source;
  if (find_pass_move(e, options.max_bridge)) {
    r.stage = Stage::kReducedAway;
    return r;
  }
  mpz_class det = determinant_goeritz(e);
  r.determinant = det;
  if (det != 1) {
    r.stage = Stage::kDetFiltered;
    return r;
  }
  try {
    LaurentPolynomial bracket = bracket_dc(e, plan_cut_order(e), options.width_cap);
    r.f = normalize_bracket(bracket, e.writhe());
    r.flagged = is_unit_monomial(*r.f);
    r.stage = Stage::kBracketComputed;
  } catch (const ResourceError&) {
    r.stage = Stage::kUnresolved;
  }
  return r;
}

std::string RunReport::to_string() const {
  std::ostringstream os;
  os << "budgets=" << min_crossings << ".." << max_crossings << " shard=" << shard_index << "/"
     << shard_count << " jobs=" << jobs << (resumed ? " resumed" : "") << "\n";
  os << counters.to_string() << "\n";
  if (raw_closures > 0) os << "raw-tree-closures=" << raw_closures.get_str() << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", wall_seconds);
  os << "wall-seconds=" << buf << "\n";
  return os.str();
}

int exit_status(const RunReport& report) {
  return report.counters.flagged + report.counters.unresolved > 0 ? 1 : 0;
}

namespace {

std::uint32_t file_crc(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  boost::crc_32_type crc;
  crc.process_bytes(s.data(), s.size());
  return crc.checksum();
}

std::vector<DiagramClass> classes_of(const VerifyConfig& c) {
  std::vector<DiagramClass> v;
  if (c.algebraic) v.push_back(DiagramClass::kAlgebraic);
  if (c.polyhedral) v.push_back(DiagramClass::kPolyhedral);
  return v;
}

std::string part_path(const VerifyConfig& c, int job) { return c.out + ".part" + std::to_string(job); }

struct MergeKey {
  int budget;
  int cls;
  std::uint64_t position;
  std::size_t part;
  bool operator>(const MergeKey& o) const {
    if (budget != o.budget) return budget > o.budget;
    if (cls != o.cls) return cls > o.cls;
    if (position != o.position) return position > o.position;
    return part > o.part;
  }
};

MergeKey key_of(const std::string& line, std::size_t part) {
  auto a = line.find("\tsrc=");
  auto b = line.find('\t', a + 1);
  if (a == std::string::npos || b == std::string::npos) throw ParseError("record without source");
  GenerationCursor c = GenerationCursor::parse(std::string_view(line).substr(a + 5, b - a - 5));
  return {c.budget, c.diagram_class == DiagramClass::kAlgebraic ? 0 : 1, c.position, part};
}

void merge_parts(const std::vector<std::string>& parts, const std::string& out) {
  std::vector<std::ifstream> in;
  for (const auto& p : parts) {
    in.emplace_back(p, std::ios::binary);
    if (!in.back()) throw std::runtime_error("cannot read " + p);
  }
  const std::string tmp = out + ".tmp";
  std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
  if (!o) throw std::runtime_error("cannot write " + tmp);
  std::vector<std::string> head(parts.size());
  std::priority_queue<MergeKey, std::vector<MergeKey>, std::greater<>> q;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (std::getline(in[i], head[i])) q.push(key_of(head[i], i));
  while (!q.empty()) {
    MergeKey k = q.top();
    q.pop();
    o << head[k.part] << '\n';
    if (std::getline(in[k.part], head[k.part])) q.push(key_of(head[k.part], k.part));
  }
  o.flush();
  if (!o) throw std::runtime_error("cannot write " + tmp);
  o.close();
  std::filesystem::rename(tmp, out);
}

class Runner {
 public:
  explicit Runner(const VerifyConfig& c) : cfg_(c), classes_(classes_of(c)) {}

  RunReport run() {
    auto t0 = std::chrono::steady_clock::now();
    validate();
    if (cfg_.polyhedral) catalog_ = load_catalog(cfg_.catalog);
    RunReport report;
    report.shard_index = cfg_.shard_index;
    report.shard_count = cfg_.shard_count;
    report.jobs = cfg_.jobs;
    report.min_crossings = cfg_.min_crossings;
    report.max_crossings = cfg_.max_crossings;

    state_.config = config_fingerprint(cfg_);
    bool resumed = false;
    if (!cfg_.checkpoint.empty() && std::filesystem::exists(cfg_.checkpoint)) {
      CheckpointState loaded = checkpoint_load(cfg_.checkpoint);
      if (loaded.config != state_.config)
        throw Error("checkpoint " + cfg_.checkpoint + " was written by a different configuration");
      if (static_cast<int>(loaded.jobs.size()) != cfg_.jobs) throw CorruptCheckpointError("job count mismatch");
      state_ = std::move(loaded);
      resumed = true;
    } else {
      state_.jobs.assign(cfg_.jobs, JobState{});
      for (auto& js : state_.jobs) js.cursor = {classes_.front(), cfg_.min_crossings, 0};
    }
    report.resumed = resumed;
    for (int j = 0; j < cfg_.jobs; ++j) {
      const std::string p = part_path(cfg_, j);
      if (resumed) {
        if (!std::filesystem::exists(p) || std::filesystem::file_size(p) < state_.jobs[j].record_bytes)
          throw CorruptCheckpointError("part file " + p + " is shorter than the checkpoint records");
        std::filesystem::resize_file(p, state_.jobs[j].record_bytes);
      } else {
        std::ofstream(p, std::ios::binary | std::ios::trunc);
      }
    }

    if (cfg_.jobs == 1) {
      run_job(0);
    } else {
      std::vector<std::thread> threads;
      std::vector<std::exception_ptr> errors(cfg_.jobs);
      for (int j = 0; j < cfg_.jobs; ++j)
        threads.emplace_back([this, j, &errors] {
          try {
            run_job(j);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
      for (auto& t : threads) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }

    std::vector<std::string> parts;
    for (int j = 0; j < cfg_.jobs; ++j) parts.push_back(part_path(cfg_, j));
    merge_parts(parts, cfg_.out);
    for (const auto& p : parts) std::filesystem::remove(p);
    if (!cfg_.checkpoint.empty()) std::filesystem::remove(cfg_.checkpoint);

    for (const auto& js : state_.jobs) report.counters += js.counters;
    if (cfg_.algebraic)
      for (int b = cfg_.min_crossings; b <= cfg_.max_crossings; ++b) report.raw_closures += 2 * raw_tree_count(b);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }

 private:
  void validate() const {
    if (cfg_.min_crossings < 1 || cfg_.max_crossings < cfg_.min_crossings)
      throw std::invalid_argument("crossing budgets must satisfy 1 <= min <= max");
    if (cfg_.shard_count < 1 || cfg_.shard_index < 0 || cfg_.shard_index >= cfg_.shard_count)
      throw std::invalid_argument("shard index must lie in [0, count)");
    if (cfg_.jobs < 1) throw std::invalid_argument("jobs must be positive");
    if (classes_.empty()) throw std::invalid_argument("no diagram class selected");
    if (cfg_.polyhedral && cfg_.catalog.empty()) throw std::invalid_argument("polyhedral class needs a catalog");
    if (cfg_.out.empty()) throw std::invalid_argument("output path required");
  }

  void save(int job, const JobState& js) {
    std::lock_guard<std::mutex> lock(mutex_);
    state_.jobs[job] = js;
    if (!cfg_.checkpoint.empty()) checkpoint_save(cfg_.checkpoint, state_);
  }

  void run_job(int job) {
    JobState js;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      js = state_.jobs[job];
    }
    if (js.done) return;
    std::ofstream part(part_path(cfg_, job), std::ios::binary | std::ios::app);
    if (!part) throw std::runtime_error("cannot open " + part_path(cfg_, job));
    const std::uint64_t modulus = static_cast<std::uint64_t>(cfg_.shard_count) * cfg_.jobs;
    const std::uint64_t residue = static_cast<std::uint64_t>(cfg_.shard_index) +
                                  static_cast<std::uint64_t>(cfg_.shard_count) * job;
    auto accept = [&](std::uint64_t pos) { return pos % modulus == residue; };
    TangleEnumerator tangles;
    std::uint64_t since_save = 0;

    auto visit = [&](const Candidate& c) {
      GenerationCursor src{c.diagram_class, c.budget, c.position};
      ++js.counters.generated;
      if (c.components != 1) {
        ++js.counters.skipped_multicomponent;
      } else {
        VerificationRecord r = process_candidate(c.embedding, src, cfg_.options);
        switch (r.stage) {
          case Stage::kReducedAway:
            ++js.counters.eliminated;
            break;
          case Stage::kDetFiltered:
            ++js.counters.det_filtered;
            break;
          case Stage::kBracketComputed:
            ++js.counters.bracket_computed;
            if (r.flagged) ++js.counters.flagged;
            break;
          case Stage::kUnresolved:
            ++js.counters.unresolved;
            break;
        }
        std::string line = r.to_string();
        line += '\n';
        part << line;
        js.record_bytes += line.size();
      }
      js.cursor.position = c.position + 1;
      if (cfg_.halt_after > 0 && processed_.fetch_add(1) + 1 >= cfg_.halt_after) std::_Exit(2);
      if (cfg_.progress_every > 0 && js.counters.generated % cfg_.progress_every == 0) {
        std::lock_guard<std::mutex> lock(mutex_);
        std::cerr << "progress job=" << job << " at=" << js.cursor.to_string() << " "
                  << js.counters.to_string() << "\n";
      }
      if (++since_save >= cfg_.checkpoint_every && !cfg_.checkpoint.empty()) {
        part.flush();
        save(job, js);
        since_save = 0;
      }
      return true;
    };

    while (js.cursor.budget <= cfg_.max_crossings) {
      const GenerationCursor at = js.cursor;
      if (at.diagram_class == DiagramClass::kAlgebraic) {
        generate_closures(tangles, at.budget, at.position, accept, visit);
      } else {
        generate_polyhedral(tangles, at.budget, catalog_, cfg_.trivializability, at.position, accept, visit);
      }
      auto it = std::find(classes_.begin(), classes_.end(), at.diagram_class);
      if (++it != classes_.end()) {
        js.cursor = {*it, at.budget, 0};
      } else {
        js.cursor = {classes_.front(), at.budget + 1, 0};
      }
    }
    js.done = true;
    part.flush();
    if (!part) throw std::runtime_error("write failed on " + part_path(cfg_, job));
    save(job, js);
  }

  const VerifyConfig& cfg_;
  std::vector<DiagramClass> classes_;
  std::vector<ConwayPolyhedron> catalog_;
  CheckpointState state_;
  std::mutex mutex_;
  std::atomic<std::uint64_t> processed_{0};
};

}  // namespace

std::string config_fingerprint(const VerifyConfig& c) {
  std::ostringstream os;
  os << "budgets=" << c.min_crossings << ".." << c.max_crossings << " classes=";
  std::vector<DiagramClass> cls = classes_of(c);
  for (std::size_t i = 0; i < cls.size(); ++i) os << (i ? "," : "") << to_string(cls[i]);
  os << " shard=" << c.shard_index << "/" << c.shard_count << " jobs=" << c.jobs
     << " trivializability=" << to_string(c.trivializability) << " max-bridge=";
  if (c.options.max_bridge == kUnboundedBridge)
    os << "unbounded";
  else
    os << c.options.max_bridge;
  os << " width-cap=" << c.options.width_cap;
  if (c.polyhedral) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08x", file_crc(c.catalog));
    os << " catalog-crc32=" << buf;
  }
  return os.str();
}

RunReport run_verification(const VerifyConfig& config) { return Runner(config).run(); }

std::vector<VerificationRecord> read_records(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<VerificationRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(VerificationRecord::parse(line));
  }
  return out;
}

ExportFormat parse_export_format(std::string_view text) {
  if (text == "pd") return ExportFormat::kPD;
  if (text == "dt") return ExportFormat::kDT;
  throw ParseError("unknown export format '" + std::string(text) + "'");
}

std::size_t export_flagged(const std::vector<VerificationRecord>& records, ExportFormat format,
                           const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  std::size_t n = 0;
  for (const auto& r : records) {
    if (!r.flagged) continue;
    PlanarDiagram d = PlanarDiagram::parse(r.pd);
    if (format == ExportFormat::kPD) {
      out << d.to_string() << '\n';
    } else {
      out << dt_to_string(dt_code(d)) << '\n';
    }
    ++n;
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed on " + path);
  return n;
}

}  // namespace knotsieve
