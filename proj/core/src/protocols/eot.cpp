#include <cstdio>

#include "detail.hpp"

namespace madbench::detail {
namespace {

struct Persona {
  const char* name;
  const char* template_name;
};

constexpr Persona kPersonas[3] = {{"Kitty", "eot_persona_kitty"},
                                  {"Ben", "eot_persona_ben"},
                                  {"Peter", "eot_persona_peter"}};

std::string persona_display_name(int index) {
  const Persona& p = kPersonas[index % 3];
  if (index < 3) return p.name;
  return std::string(p.name) + "-" + std::to_string(index / 3 + 1);
}

std::string format_confidence(double c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.2f", c);
  return buf;
}

}  // namespace

// Persona agents exchange solutions annotated with answer-consistency
// confidence; the debate stops as soon as a round is unanimous.
DebateRun run_eot(Ctx& ctx) {
  const int agents = ctx.cfg.num_agents;
  const std::string task = render_prompt(ctx.q, PromptStyle::direct, ctx.prompts);

  std::vector<Transcript> histories;
  std::vector<std::string> names;
  for (int i = 0; i < agents; ++i) {
    names.push_back(persona_display_name(i));
    histories.push_back(Transcript{
        {Role::system, ctx.prompts.get(kPersonas[i % 3].template_name)},
        {Role::user, task}});
  }

  std::vector<std::vector<Answer>> answer_history(agents);  // per agent, over rounds
  std::vector<std::string> latest_text(agents);
  Ballot last_ballot;
  StopReason stop = StopReason::max_rounds;

  for (int round = 0; round < ctx.cfg.max_rounds; ++round) {
    if (round > 0) {
      std::vector<double> confidence(agents);
      for (int j = 0; j < agents; ++j) {
        if (ctx.cfg.eot_confidence_across_agents) {
          // Variant: consistency of agent j's latest answer within the round.
          int matches = 1;
          for (int k = 0; k < agents; ++k) {
            if (k != j && answers_equal(answer_history[j].back(), answer_history[k].back())) {
              ++matches;
            }
          }
          confidence[j] = static_cast<double>(matches) / agents;
        } else {
          confidence[j] = eot_confidence(answer_history[j]);
        }
      }
      std::string solutions;
      for (int j = 0; j < agents; ++j) {
        if (j > 0) solutions += "\n\n";
        solutions += PromptLibrary::render(ctx.prompts.get("eot_solution_slot"),
                                           {{"name", names[j]},
                                            {"solution", latest_text[j]},
                                            {"confidence", format_confidence(confidence[j])}});
      }
      const std::string debate =
          PromptLibrary::render(ctx.prompts.get("eot_debate"), {{"solutions", solutions}});
      for (int i = 0; i < agents; ++i) histories[i].push_back({Role::user, debate});
    }

    last_ballot.votes.clear();
    std::vector<std::string> round_text(agents);
    for (int i = 0; i < agents; ++i) {
      const TurnRecord& turn = ctx.take_turn(round, names[i], histories[i]);
      histories[i].push_back({Role::assistant, turn.completion});
      round_text[i] = turn.completion;
      answer_history[i].push_back(turn.answer);
      last_ballot.votes.emplace_back(turn.agent, turn.answer);
    }
    latest_text = std::move(round_text);

    if (consensus(last_ballot)) {
      stop = StopReason::consensus;
      break;
    }
  }
  return ctx.finish(majority_vote(last_ballot).winner, stop);
}

}  // namespace madbench::detail
