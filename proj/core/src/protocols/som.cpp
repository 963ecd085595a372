#include "detail.hpp"

namespace madbench::detail {

// Parallel initial answers, then fixed debate rounds in which every agent
// sees all previous-round solutions (its own included, in agent order) and
// updates. Majority vote over the last round.
DebateRun run_som(Ctx& ctx) {
  const int agents = ctx.cfg.num_agents;
  const int rounds = ctx.cfg.num_rounds;
  const PromptStyle style = apply_cot_style(ctx.cfg);
  const std::string task = render_prompt(ctx.q, style, ctx.prompts);

  std::vector<Transcript> histories(agents, Transcript{{Role::user, task}});
  std::vector<std::string> latest_text(agents);

  auto agent_name = [](int i) { return "agent" + std::to_string(i); };

  Ballot last_ballot;
  for (int round = 0; round < rounds; ++round) {
    if (round > 0) {
      std::string solutions;
      for (int j = 0; j < agents; ++j) {
        if (j > 0) solutions += "\n\n";
        solutions += PromptLibrary::render(ctx.prompts.get("som_solution_slot"),
                                           {{"solution", latest_text[j]}});
      }
      const std::string debate =
          PromptLibrary::render(ctx.prompts.get("som_debate"), {{"solutions", solutions}});
      for (int i = 0; i < agents; ++i) histories[i].push_back({Role::user, debate});
    }
    last_ballot.votes.clear();
    std::vector<std::string> round_text(agents);
    for (int i = 0; i < agents; ++i) {
      const TurnRecord& turn = ctx.take_turn(round, agent_name(i), histories[i]);
      histories[i].push_back({Role::assistant, turn.completion});
      round_text[i] = turn.completion;
      last_ballot.votes.emplace_back(turn.agent, turn.answer);
    }
    latest_text = std::move(round_text);
  }
  return ctx.finish(majority_vote(last_ballot).winner, StopReason::fixed_rounds);
}

}  // namespace madbench::detail
