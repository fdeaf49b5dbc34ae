#include <stdexcept>
#include "doctest.h"
#include "mixbraid/moves.hpp"
#include "mixbraid/normal_form.hpp"
#include "mixbraid/search.hpp"
#include "util.hpp"

using namespace mixbraid;

TEST_CASE("equal inputs need no moves") {
  BraidWord u = parse_word("g=1 n=2; a1 s1");
  BraidWord v = parse_word("g=1 n=2; s1^-1 s1 a1 s1");
  SearchBudget budget;
  SearchOutcome res = equivalence_search(u, v, budget);
  REQUIRE(res.status == SearchOutcome::Status::Found);
  CHECK(res.depth_reached == 0);
  CHECK(verify_certificate(*res.certificate));
}

TEST_CASE("conjugates are found at depth 1") {
  BraidWord u = parse_word("g=1 n=2; a1 s1^2");
  BraidWord v = sigma_conjugate(u, 1, 1);
  SearchBudget budget;
  budget.max_depth = 4;
  SearchOutcome res = equivalence_search(u, v, budget);
  REQUIRE(res.status == SearchOutcome::Status::Found);
  CHECK(res.depth_reached <= 2);
  CHECK(verify_certificate(*res.certificate));
}

TEST_CASE("loop commutation for a crossing word is immediate") {
  BraidWord omega = maximal_loop(2);
  omega.n = 2;
  BraidWord alpha = parse_word("g=2 n=2; s1");
  BraidWord uv = multiply(alpha, omega);
  BraidWord vu = multiply(omega, alpha);
  SearchBudget budget;
  budget.max_depth = 6;
  budget.use_omega = false;
  SearchOutcome res = equivalence_search(uv, vu, budget);
  REQUIRE(res.status == SearchOutcome::Status::Found);
  CHECK(verify_certificate(*res.certificate));
}

TEST_CASE("loop commutation certificate with primitive moves only") {
  BraidWord omega = maximal_loop(2);
  omega.n = 2;
  BraidWord alpha = parse_word("g=2 n=2; a1");
  BraidWord uv = multiply(alpha, omega);
  BraidWord vu = multiply(omega, alpha);
  SearchBudget budget;
  budget.max_depth = 16;
  budget.max_n = 3;
  budget.max_states = 100000;
  budget.use_omega = false;
  SearchOutcome res = equivalence_search(uv, vu, budget);
  REQUIRE(res.status == SearchOutcome::Status::Found);
  CHECK(verify_certificate(*res.certificate));
  for (const MoveStep& s : res.certificate->steps) {
    bool allowed = s.kind == MoveStep::Kind::Stabilize || s.kind == MoveStep::Kind::Destabilize ||
                   s.kind == MoveStep::Kind::SigmaConjugate || s.kind == MoveStep::Kind::Relator;
    CHECK(allowed);
  }
}

TEST_CASE("the counterexample pair admits no certificate in a small budget") {
  BraidWord u = parse_word("g=2 n=1; a1 a2");
  BraidWord v = parse_word("g=2 n=1; a2 a1");
  SearchBudget budget;
  budget.max_depth = 4;
  budget.max_n = 2;
  budget.max_states = 50000;
  SearchOutcome res = equivalence_search(u, v, budget);
  CHECK(res.status != SearchOutcome::Status::Found);
}

TEST_CASE("determinism") {
  BraidWord u = parse_word("g=2 n=1; a1 a2");
  BraidWord v = parse_word("g=2 n=1; a2 a1");
  SearchBudget budget;
  budget.max_depth = 4;
  budget.max_n = 2;
  SearchOutcome a = equivalence_search(u, v, budget);
  SearchOutcome b = equivalence_search(u, v, budget);
  CHECK(a.states_explored == b.states_explored);
  CHECK(a.status == b.status);
}

TEST_CASE("monotonicity: larger budgets keep finding") {
  BraidWord u = parse_word("g=1 n=1; a1");
  BraidWord v = sigma_conjugate(stabilize(u, 1, 1), 1, 1);
  for (int depth = 2; depth <= 6; ++depth) {
    SearchBudget budget;
    budget.max_depth = depth;
    budget.max_n = 3;
    SearchOutcome res = equivalence_search(u, v, budget);
    CHECK(res.status == SearchOutcome::Status::Found);
  }
}

TEST_CASE("verify rejects corrupted certificates") {
  BraidWord u = parse_word("g=1 n=1; a1");
  BraidWord v = sigma_conjugate(stabilize(u, 0, 1), 1, -1);
  SearchBudget budget;
  budget.max_depth = 6;
  budget.max_n = 2;
  SearchOutcome res = equivalence_search(u, v, budget);
  REQUIRE(res.status == SearchOutcome::Status::Found);
  REQUIRE(res.certificate->steps.size() >= 1);
  MoveCertificate broken = *res.certificate;
  broken.steps.pop_back();
  CHECK_FALSE(verify_certificate(broken));

  MoveCertificate empty_cert;
  empty_cert.start = u;
  empty_cert.end = u;
  CHECK(verify_certificate(empty_cert));
}
