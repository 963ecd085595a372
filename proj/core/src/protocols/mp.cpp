#include "detail.hpp"

namespace madbench::detail {
namespace {

// The running debate transcript every side sees in full.
std::string with_history(const std::string& task, const std::string& history,
                         const std::string& role_prompt) {
  std::string out = task;
  if (!history.empty()) out += "\n\n" + history;
  out += "\n\n" + role_prompt;
  return out;
}

}  // namespace

// Affirmative states, negative rebuts, the judge either picks a side (ending
// the debate) or sends it to the next round, up to max_rounds.
DebateRun run_mp(Ctx& ctx) {
  const std::string task = render_prompt(ctx.q, PromptStyle::direct, ctx.prompts);
  const std::string& affirmative_prompt = ctx.prompts.get("mp_affirmative");
  const std::string& negative_prompt = ctx.prompts.get("mp_negative");
  const std::string& judge_prompt = ctx.prompts.get("mp_judge");

  std::string history;
  Answer last_affirmative = Answer::none();
  Answer last_negative = Answer::none();
  Answer last_judge_answer = Answer::none();

  for (int round = 0; round < ctx.cfg.max_rounds; ++round) {
    Transcript aff{{Role::user, with_history(task, history, affirmative_prompt)}};
    const TurnRecord& aff_turn = ctx.take_turn(round, "affirmative", aff);
    last_affirmative = aff_turn.answer;
    history += (history.empty() ? "" : "\n\n");
    history += "Affirmative: " + aff_turn.completion;

    Transcript neg{{Role::user, with_history(task, history, negative_prompt)}};
    const TurnRecord& neg_turn = ctx.take_turn(round, "negative", neg);
    last_negative = neg_turn.answer;
    history += "\n\nNegative: " + neg_turn.completion;

    const std::string judge_request = with_history(task, history, judge_prompt);
    Transcript jt{{Role::user, judge_request}};
    const TurnRecord& judge_turn = ctx.take_turn(round, "judge", jt, /*judger_role=*/true);
    auto verdict = parse_judge_json(judge_turn.completion);
    if (!verdict) {
      // One re-ask with the identical prompt; a second failure counts as "No".
      const TurnRecord& retry = ctx.take_turn(round, "judge_reask", jt, /*judger_role=*/true);
      verdict = parse_judge_json(retry.completion);
    }
    if (verdict) {
      Answer candidate = answer_from_short_string(verdict->debate_answer, ctx.q.category);
      if (verdict->preference) {
        if (candidate.is_none()) {
          candidate = verdict->supported_side.rfind("negative", 0) == 0 ? last_negative
                                                                        : last_affirmative;
        }
        return ctx.finish(candidate, StopReason::judger_decision);
      }
      if (!candidate.is_none()) last_judge_answer = candidate;
    }
  }
  Answer final = last_judge_answer.is_none() ? last_affirmative : last_judge_answer;
  return ctx.finish(final, StopReason::max_rounds);
}

}  // namespace madbench::detail
