#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "madbench/protocols.hpp"

namespace madbench {

struct SubsetSpec {
  std::optional<std::size_t> k;  // absent: whole dataset
  std::uint64_t seed = 0;
};

struct DatasetRef {
  std::filesystem::path path;
  Category category = Category::multiple_choice;
  SubsetSpec subset;
  std::string label;  // report column name; defaults to the file stem
};

struct RouterConfig {
  RouterWeights weights;
};

// One (method x model-config x benchmark) cell. Trials are sequential;
// questions within a trial fan out up to `parallelism` with deterministic
// commit order, so results are byte-stable regardless of thread count.
struct RunConfig {
  std::string run_id;
  DatasetRef dataset;
  ProtocolConfig protocol;
  std::vector<ModelEndpoint> endpoints;
  std::optional<RouterConfig> router;
  GenerationParams params;
  int trials = 3;
  std::uint64_t seed = 0;
  int parallelism = 1;
  std::optional<std::filesystem::path> mock_script;   // present: use MockBackend
  std::optional<std::filesystem::path> prompt_overrides;
  std::optional<std::string> program_judge_command;

  void validate() const;
  // Router in effect: configured weights, or uniform when several endpoints
  // are given without explicit weights. nullopt for a single endpoint.
  std::optional<RouterWeights> resolved_router() const;

  nlohmann::json to_json() const;  // resolved snapshot, defaults materialized
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig load(const std::filesystem::path& path);
};

struct QuestionRecord {
  std::string run_id;
  int trial = 0;
  std::string question_id;
  Answer final_answer;
  bool correct = false;
  bool errored = false;   // backend failure; counts as incorrect
  bool ungraded = false;  // programming result without a judge configured
  std::string error;
  Usage usage;
  std::string stop_reason;
  std::vector<std::string> model_ids;  // per call, in turn order

  nlohmann::json to_json() const;
  static QuestionRecord from_json(const nlohmann::json& j);
};

struct TrialSummary {
  int trial = 0;
  double accuracy = 0.0;
  Usage usage_total;
};

// Pass@1 for programming (judge verdict), label equality for multiple
// choice, semantic equality for math. Without a judge a programming answer
// is recorded ungraded and scored incorrect.
bool grade(const Question& q, const Answer& final_answer, ProgramJudge* judge, bool* ungraded);

// Mean and population standard deviation (divide by N).
std::pair<double, double> mean_std(const std::vector<double>& values);

// Append-only JSONL persistence with resume-by-(run_id, trial, question)
// keys. A partial trailing line left by a crash is ignored on load.
class ResultsSink {
 public:
  explicit ResultsSink(std::filesystem::path path);

  bool contains(const std::string& run_id, int trial, const std::string& question_id) const;
  const QuestionRecord* find(const std::string& run_id, int trial,
                             const std::string& question_id) const;
  void append(const QuestionRecord& rec);
  std::size_t size() const { return by_key_.size(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  using Key = std::tuple<std::string, int, std::string>;
  std::filesystem::path path_;
  std::map<Key, QuestionRecord> by_key_;
};

struct ExecuteResult {
  std::vector<QuestionRecord> records;  // (trial, question) order
  std::vector<TrialSummary> trials;
};

// Runs every (trial, question) pair not already present in the sink.
// Per-question backend failures become errored rows; only configuration
// errors abort. `sink` may be null for purely in-memory runs.
ExecuteResult execute(const RunConfig& cfg, const std::vector<Question>& questions,
                      ChatBackend& backend, const PromptLibrary& prompts,
                      ResultsSink* sink = nullptr, ProgramJudge* judge = nullptr);

nlohmann::json summary_json(const RunConfig& cfg, const ExecuteResult& result);

}  // namespace madbench
