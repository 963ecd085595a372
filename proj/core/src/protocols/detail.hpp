#pragma once

#include <optional>
#include <string>

#include "madbench/protocols.hpp"

namespace madbench::detail {

// Per-run scratch shared by the protocol state machines.
struct Ctx {
  const Question& q;
  const ProtocolConfig& cfg;
  Caller& caller;
  const PromptLibrary& prompts;
  ProgramJudge* judge = nullptr;
  DebateRun run;

  Ctx(const Question& question, const ProtocolConfig& config, Caller& c,
      const PromptLibrary& p, ProgramJudge* j)
      : q(question), cfg(config), caller(c), prompts(p), judge(j) {
    run.question_id = question.id;
    run.config = config;
  }

  // One generation: route, complete, extract, record.
  const TurnRecord& take_turn(int round, const std::string& agent, const Transcript& turns,
                              bool judger_role = false) {
    Caller::Reply reply = caller.generate(turns, CallMeta{q.id, agent, round}, judger_role);
    TurnRecord rec;
    rec.round = round;
    rec.agent = agent;
    rec.model_id = std::move(reply.model_id);
    rec.request_digest = std::move(reply.request_digest);
    rec.completion = std::move(reply.text);
    rec.answer = extract_answer(rec.completion, q.category);
    rec.usage = reply.usage;
    run.turns.push_back(std::move(rec));
    return run.turns.back();
  }

  DebateRun finish(Answer final_answer, StopReason reason) {
    run.final_answer = std::move(final_answer);
    run.stop_reason = reason;
    run.usage_total = Usage{};
    for (const auto& t : run.turns) run.usage_total = merge_usage(run.usage_total, t.usage);
    return std::move(run);
  }
};

// Judge verdict as parsed from the moderator JSON.
struct JudgeVerdict {
  bool preference = false;           // "Whether there is a preference" == Yes
  std::string supported_side;        // lowercase prefix: affirmative/negative
  std::string debate_answer;         // raw string as emitted
};

// Extracts the first {...} object from free text and reads the verdict
// fields. nullopt when there is no parseable object or the preference field
// is missing.
std::optional<JudgeVerdict> parse_judge_json(const std::string& text);

// Interprets a short answer field (e.g. MP's debate_answer) by category.
Answer answer_from_short_string(const std::string& s, Category category);

// Parses "Correctness: (0 or 1)" style evaluator output. nullopt if absent.
std::optional<int> parse_correctness(const std::string& text);

DebateRun run_sa(Ctx& ctx);
DebateRun run_cot(Ctx& ctx);
DebateRun run_sc(Ctx& ctx);
DebateRun run_som(Ctx& ctx);
DebateRun run_mp(Ctx& ctx);
DebateRun run_eot(Ctx& ctx);
DebateRun run_chateval(Ctx& ctx);
DebateRun run_agentverse(Ctx& ctx);

}  // namespace madbench::detail
