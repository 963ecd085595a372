#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "madbench/aggregate.hpp"
#include "madbench/caller.hpp"
#include "madbench/dataset.hpp"

namespace madbench {

enum class ProtocolKind { SA, CoT, SC, SoM, MP, EoT, ChatEval, AgentVerse };

const char* to_string(ProtocolKind k);
ProtocolKind protocol_kind_from_string(const std::string& s);

// Knobs for the eight inference strategies. Defaults realize the shared
// six-call budget: SoM 3x2, ChatEval 3x2, SC 6 samples, EoT/MP capped at 5
// rounds, AgentVerse one 6-call cycle.
struct ProtocolConfig {
  ProtocolKind kind = ProtocolKind::SA;
  int num_agents = 1;   // debaters (SoM/EoT) or critics (AgentVerse)
  int num_rounds = 1;   // fixed-round protocols: SoM, ChatEval
  int max_rounds = 1;   // early-stopping caps: MP, EoT; AgentVerse cycles
  int sc_samples = 6;   // SC only
  bool cot_style = false;  // SoM/ChatEval only; others already reason stepwise
  bool eot_confidence_across_agents = false;  // default: per agent over rounds
  std::optional<std::string> judger_pinned_model;

  static ProtocolConfig defaults(ProtocolKind kind);
  void validate() const;  // throws ConfigError

  nlohmann::json to_json() const;
  static ProtocolConfig from_json(const nlohmann::json& j);

  bool operator==(const ProtocolConfig&) const = default;
};

// Task-prompt style once the cot_style flag is applied. Rejects the flag for
// protocols whose designs already elicit stepwise answers.
PromptStyle apply_cot_style(const ProtocolConfig& cfg);

enum class StopReason { fixed_rounds, consensus, judger_decision, evaluator_accept, max_rounds };

const char* to_string(StopReason r);
StopReason stop_reason_from_string(const std::string& s);

struct TurnRecord {
  int round = 0;  // 0-based round / cycle index
  std::string agent;
  std::string model_id;
  std::string request_digest;
  std::string completion;
  Answer answer;  // category-appropriate extraction of the completion
  Usage usage;
};

// Full audit record of one protocol execution on one question. The final
// answer is reproducible from the turns alone via reconstruct_final().
struct DebateRun {
  std::string question_id;
  ProtocolConfig config;
  std::vector<TurnRecord> turns;
  Answer final_answer;
  StopReason stop_reason = StopReason::fixed_rounds;
  Usage usage_total;

  nlohmann::json to_json() const;  // deterministic byte output
};

struct ProgramVerdict {
  bool pass = false;
  std::string log;
};

// Pluggable program execution check (Pass@1 grading, AgentVerse feedback).
class ProgramJudge {
 public:
  virtual ~ProgramJudge() = default;
  virtual ProgramVerdict submit(const std::string& program, const std::string& tests) = 0;
};

// Runs `command <program_path> <tests_path>` with the candidate program and
// reference tests written to temp files. Exit code 0 means pass; combined
// output becomes the log. No sandbox: the command is operator-supplied.
class CommandProgramJudge final : public ProgramJudge {
 public:
  explicit CommandProgramJudge(std::string command);
  ProgramVerdict submit(const std::string& program, const std::string& tests) override;

 private:
  std::string command_;
};

// Executes one debate sequentially. Agent naming, recorded per turn and used
// as the mock-script key:
//   SA/CoT: agent0 | SC: sample0..N-1 | SoM: agent0..N-1
//   MP: affirmative, negative, judge (judge_reask after malformed JSON)
//   EoT: Kitty, Ben, Peter (then Kitty-2, ...) | ChatEval: role names
//   AgentVerse: role_assigner, solver, critic0..N-1, evaluator
DebateRun run_protocol(const Question& q, const ProtocolConfig& cfg, Caller& caller,
                       const PromptLibrary& prompts, ProgramJudge* judge = nullptr);

// Re-runs only the aggregation step over the recorded turns.
Answer reconstruct_final(const DebateRun& run, Category category);

// True iff a critic turn ended in agreement with the solver.
bool critic_agreed(const TurnRecord& turn);

}  // namespace madbench
