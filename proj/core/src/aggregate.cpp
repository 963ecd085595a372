#include "madbench/aggregate.hpp"

#include <algorithm>

#include "madbench/errors.hpp"

namespace madbench {

VoteOutcome majority_vote(const Ballot& ballot) {
  if (ballot.votes.empty()) throw Error("majority_vote: empty ballot");

  VoteOutcome out;
  for (const auto& [agent, answer] : ballot.votes) {
    (void)agent;
    if (answer.is_none()) continue;
    bool grouped = false;
    for (auto& [rep, count] : out.tally) {
      if (answers_equal(rep, answer)) {
        ++count;
        grouped = true;
        break;
      }
    }
    if (!grouped) out.tally.emplace_back(answer, 1);
  }
  if (out.tally.empty()) {
    out.winner = Answer::none();
    return out;
  }

  int best = 0;
  for (const auto& [rep, count] : out.tally) best = std::max(best, count);
  int at_best = 0;
  for (const auto& [rep, count] : out.tally) {
    if (count == best) {
      if (at_best == 0) out.winner = rep;  // groups are in first-seen order
      ++at_best;
    }
  }
  out.tied = at_best > 1;
  return out;
}

bool consensus(const Ballot& ballot) {
  if (ballot.votes.empty()) throw Error("consensus: empty ballot");
  const Answer& first = ballot.votes.front().second;
  if (first.is_none()) return false;
  for (size_t i = 1; i < ballot.votes.size(); ++i) {
    if (!answers_equal(first, ballot.votes[i].second)) return false;
  }
  return true;
}

double eot_confidence(const std::vector<Answer>& history) {
  if (history.empty()) throw Error("eot_confidence: empty history");
  int best = 1;
  for (size_t i = 0; i < history.size(); ++i) {
    int count = 1;
    for (size_t j = 0; j < history.size(); ++j) {
      if (j != i && answers_equal(history[i], history[j])) ++count;
    }
    best = std::max(best, count);
  }
  return static_cast<double>(best) / static_cast<double>(history.size());
}

}  // namespace madbench
