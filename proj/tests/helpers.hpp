#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "treematch/database.hpp"
#include "treematch/rng.hpp"
#include "treematch/synthgen.hpp"
#include "treematch/vls.hpp"

namespace testutil {

inline treematch::Tree mk(treematch::LabelPool& pool, const std::string& text) {
  return treematch::parse_tree(text, pool);
}

inline treematch::VertexList vl(treematch::LabelPool& pool,
                                std::initializer_list<const char*> labels) {
  treematch::VertexList v;
  for (const char* s : labels) v.vertices.push_back(pool.intern(s));
  return v;
}

// Builds the sequence struct directly, without invariant validation, so
// tests can probe error paths.
inline treematch::VertexListSequence raw_vls(
    treematch::LabelPool& pool,
    std::initializer_list<std::initializer_list<const char*>> lists) {
  treematch::VertexListSequence s;
  for (auto& list : lists) s.lists.push_back(vl(pool, list));
  return s;
}

// Small random trees for property tests.
inline treematch::Tree random_tree(treematch::Rng& rng,
                                   treematch::LabelPool& pool,
                                   std::uint32_t max_children = 4,
                                   std::uint32_t max_depth = 3,
                                   std::uint32_t alphabet = 6) {
  treematch::GenParams p;
  p.alp = 0.4;
  p.max_children = max_children;
  p.max_depth = max_depth;
  p.alphabet = alphabet;
  return treematch::gen_tree(p, rng, pool);
}

}  // namespace testutil
