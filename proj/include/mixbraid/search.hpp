#pragma once

#include <optional>

#include "mixbraid/moves.hpp"
#include "mixbraid/word.hpp"

namespace mixbraid {

struct SearchBudget {
  int max_depth = 10;
  int max_n = 0;  // strand ceiling; 0 means max(u.n, v.n)
  long long max_states = 100000;
  bool use_stabilize = true;
  bool use_destabilize = true;
  bool use_conjugate = true;
  bool use_omega = true;
  bool use_l_moves = true;  // interior-position L-moves, emitted as relator+twist steps
};

struct SearchOutcome {
  enum class Status { Found, Exhausted, BudgetHit };
  Status status = Status::Exhausted;
  std::optional<MoveCertificate> certificate;
  long long states_explored = 0;
  int depth_reached = 0;

  std::string status_string() const {
    switch (status) {
      case Status::Found: return "found";
      case Status::Exhausted: return "exhausted";
      case Status::BudgetHit: return "budget-hit";
    }
    return "?";
  }
};

// Bounded search over the Markov move graph (stabilization, destabilization,
// sigma-conjugation, plus the derived maximal-loop commutation and, when
// enabled, L-moves).  States are group elements, deduplicated by the
// canonical form of the embedded word; a found outcome carries a replayable
// certificate and is never reported for inequivalent inputs.
SearchOutcome equivalence_search(const BraidWord& u, const BraidWord& v, const SearchBudget& budget);

// Replays every step and confirms the end word.
bool verify_certificate(const MoveCertificate& cert);

}  // namespace mixbraid
