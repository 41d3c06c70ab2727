#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commgraph/characters.hpp"

namespace commgraph {

enum class CheckStatus { Match, Mismatch, DefinitionalAmbiguity };

std::string to_string(CheckStatus status);

struct CheckRecord {
  std::string check_id;
  std::string location;  // the statement being checked
  CheckStatus status = CheckStatus::Mismatch;
  std::string expected;
  std::string observed;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  /// No check is a mismatch; definitional ambiguities do not fail the run.
  bool ok() const;
  int count(CheckStatus status) const;
  void append(const VerificationReport& other);
};

/// "realization", "complement", "groups", "structure", "mckay", "metrics".
const std::vector<std::string>& verification_sections();

/// Runs one section, or every section for "all". Throws InvalidArgument on
/// an unknown name. Deterministic for a fixed seed.
VerificationReport run_verification(const std::string& section,
                                    std::uint64_t seed = kDefaultBurnsideSeed);

/// Random simple graph with edge probability 1/2.
template <class Rng>
SimpleGraph random_graph(int n, Rng& rng) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1) g.add_edge(i, j);
  return g;
}

/// Random Coxeter matrix with off-diagonal entries in {2, 3, 4, 5, 6, inf}.
template <class Rng>
CoxeterMatrix random_coxeter_matrix(int n, Rng& rng) {
  CoxeterMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int pick = static_cast<int>(rng() % 6);
      m.set(i, j, pick == 5 ? CoxeterLabel::infinity() : CoxeterLabel(pick + 2));
    }
  return m;
}

/// The affine A5 matrix and the commuting-graph adjacency printed beside it.
CoxeterMatrix affine_a5_matrix();
SimpleGraph affine_a5_commuting_graph();

}  // namespace commgraph
