#include "detail.hpp"

namespace madbench::detail {

// Fixed referee roles speak strictly one-by-one over a shared transcript;
// each sees everything said so far. Majority over each role's last answer.
DebateRun run_chateval(Ctx& ctx) {
  static constexpr struct {
    const char* name;
    const char* template_name;
  } kRoles[3] = {{"General Public", "chateval_general_public"},
                 {"Critic", "chateval_critic"},
                 {"Scientist", "chateval_scientist"}};

  const PromptStyle style = apply_cot_style(ctx.cfg);
  const std::string task = render_prompt(ctx.q, style, ctx.prompts);

  std::string shared;  // everything said, in speaking order
  Answer last_answer[3];

  for (int round = 0; round < ctx.cfg.num_rounds; ++round) {
    for (int r = 0; r < 3; ++r) {
      std::string content = task;
      if (!shared.empty()) content += "\n\n" + shared;
      content += "\n\n" + ctx.prompts.get(kRoles[r].template_name);
      Transcript t{{Role::user, content}};
      const TurnRecord& turn = ctx.take_turn(round, kRoles[r].name, t);
      last_answer[r] = turn.answer;
      shared += (shared.empty() ? "" : "\n\n");
      shared += std::string(kRoles[r].name) + ": " + turn.completion;
    }
  }
  Ballot ballot;
  for (int r = 0; r < 3; ++r) ballot.votes.emplace_back(kRoles[r].name, last_answer[r]);
  return ctx.finish(majority_vote(ballot).winner, StopReason::fixed_rounds);
}

}  // namespace madbench::detail
