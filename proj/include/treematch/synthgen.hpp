#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "treematch/database.hpp"
#include "treematch/distance.hpp"
#include "treematch/rng.hpp"

namespace treematch {

// Synthetic database shape: every internal node above max_depth draws a
// child count uniformly in [1, max_children]; each child independently
// becomes a leaf with probability alp; nodes at max_depth are always leaves.
struct GenParams {
  std::uint64_t count = 1000;
  double alp = 1.0 / 3.0;  // average leaf probability per level
  std::uint32_t max_children = 8;
  std::uint32_t max_depth = 5;
  std::uint32_t alphabet = 26;
  std::uint64_t seed = 1;

  void validate() const;
};

// The alphabet label for index i: a..z, aa, ab, ...
std::string alphabet_label(std::uint32_t i);

Tree gen_tree(const GenParams& p, Rng& rng, LabelPool& pool);
TreeDatabase gen_database(const GenParams& p, LabelPool& pool);

struct PerturbWeights {
  double del = 1.0;
  double ins = 1.0;
  double relabel = 1.0;
};

// Exactly one of edit_count / cost_budget drives the perturbation:
// edit_count applies that many random edits (skipping infeasible picks up
// to a retry bound), cost_budget keeps drawing edits that still fit.
struct PerturbParams {
  std::optional<int> edit_count;
  std::optional<Cost> cost_budget;
  PerturbWeights mix;
  std::uint64_t seed = 1;

  void validate() const;
};

struct PerturbResult {
  Tree tree;
  Cost applied_cost = 0;
  int edits_applied = 0;
};

// Random leaf deletions, insertions and label changes, each keeping the
// tree valid. Deletions and insertions count costs.indel toward the applied
// cost, relabels costs.change; the distance from the original never exceeds
// the applied cost.
PerturbResult perturb(const Tree& t, const PerturbParams& p,
                      const CostParams& costs, LabelPool& pool);

}  // namespace treematch
