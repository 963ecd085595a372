#pragma once

#include <string>
#include <utility>
#include <vector>

#include "madbench/extract.hpp"

namespace madbench {

// Final-round votes in generation order.
struct Ballot {
  std::vector<std::pair<std::string, Answer>> votes;  // (agent, answer)
};

struct VoteOutcome {
  Answer winner;                               // none when every vote is none
  std::vector<std::pair<Answer, int>> tally;   // non-none groups, first-seen order
  bool tied = false;                           // >1 group at the max count
};

// Majority vote over non-none answers, grouped by answers_equal (so "0.5"
// and "1/2" pool together). Ties break toward the group whose first vote
// appears earliest in the ballot. Throws on an empty ballot.
VoteOutcome majority_vote(const Ballot& ballot);

// True iff all answers are pairwise answers_equal and none-free.
bool consensus(const Ballot& ballot);

// Frequency of the modal answer in one agent's history. A none never matches
// anything, so it always contributes a singleton. Throws on empty history.
double eot_confidence(const std::vector<Answer>& history);

}  // namespace madbench
