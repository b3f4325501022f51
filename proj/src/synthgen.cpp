#include "treematch/synthgen.hpp"

#include <algorithm>
#include <stdexcept>

namespace treematch {

void GenParams::validate() const {
  if (!(alp > 0.0 && alp <= 1.0))
    throw std::invalid_argument("alp must be in (0, 1]");
  if (max_children < 1)
    throw std::invalid_argument("max-children must be >= 1");
  if (max_depth < 1) throw std::invalid_argument("max-depth must be >= 1");
  if (alphabet < max_children)
    throw std::invalid_argument("alphabet must be >= max-children");
}

void PerturbParams::validate() const {
  if (edit_count.has_value() == cost_budget.has_value())
    throw std::invalid_argument(
        "exactly one of edit count / cost budget must be set");
  if (edit_count && *edit_count < 0)
    throw std::invalid_argument("edit count must be >= 0");
  if (cost_budget && *cost_budget < 0)
    throw std::invalid_argument("cost budget must be >= 0");
  if (mix.del < 0 || mix.ins < 0 || mix.relabel < 0 ||
      mix.del + mix.ins + mix.relabel <= 0)
    throw std::invalid_argument(
        "edit weights must be non-negative and not all zero");
}

std::string alphabet_label(std::uint32_t i) {
  std::string s;
  std::int64_t v = i;
  for (;;) {
    s.insert(s.begin(), static_cast<char>('a' + v % 26));
    v = v / 26 - 1;
    if (v < 0) break;
  }
  return s;
}

namespace {

void grow(Tree& node, std::uint32_t depth, const GenParams& p, Rng& rng,
          LabelPool& pool, std::vector<std::uint32_t>& scratch) {
  std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(p.max_children));
  scratch.resize(p.alphabet);
  for (std::uint32_t i = 0; i < p.alphabet; ++i) scratch[i] = i;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::size_t j = i + rng.below(p.alphabet - i);
    std::swap(scratch[i], scratch[j]);
  }
  std::vector<std::string> labels(k);
  for (std::uint32_t i = 0; i < k; ++i) labels[i] = alphabet_label(scratch[i]);
  std::sort(labels.begin(), labels.end());
  node.children.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    Tree& child = node.children[i];
    child.label = pool.intern(labels[i]);
    bool leaf = depth + 1 >= p.max_depth || rng.chance(p.alp);
    if (!leaf) grow(child, depth + 1, p, rng, pool, scratch);
  }
}

}  // namespace

Tree gen_tree(const GenParams& p, Rng& rng, LabelPool& pool) {
  p.validate();
  Tree root;
  root.label = pool.intern(alphabet_label(
      static_cast<std::uint32_t>(rng.below(p.alphabet))));
  std::vector<std::uint32_t> scratch;
  grow(root, 0, p, rng, pool, scratch);
  return root;
}

TreeDatabase gen_database(const GenParams& p, LabelPool& pool) {
  p.validate();
  Rng rng(p.seed);
  TreeDatabase db;
  db.records.reserve(p.count);
  for (std::uint64_t i = 0; i < p.count; ++i)
    db.records.push_back(TreeRecord{i, gen_tree(p, rng, pool)});
  return db;
}

namespace {

using Path = std::vector<std::size_t>;  // child indices from the root

void collect_paths(const Tree& t, Path& path, std::vector<Path>& leaves,
                   std::vector<Path>& internals) {
  if (t.is_leaf()) {
    leaves.push_back(path);
  } else {
    internals.push_back(path);
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      path.push_back(i);
      collect_paths(t.children[i], path, leaves, internals);
      path.pop_back();
    }
  }
}

Tree* node_at(Tree& root, const Path& path) {
  Tree* t = &root;
  for (std::size_t i : path) t = &t->children[i];
  return t;
}

enum class EditOp { del, ins, relabel };

struct Editor {
  Tree& tree;
  const CostParams& costs;
  LabelPool& pool;
  Rng& rng;
  std::uint64_t fresh_counter = 0;

  Cost op_cost(EditOp op) const {
    return op == EditOp::relabel ? costs.change : costs.indel;
  }

  bool apply(EditOp op) {
    std::vector<Path> leaves, internals;
    Path scratch;
    collect_paths(tree, scratch, leaves, internals);
    switch (op) {
      case EditOp::del:
        return apply_delete(leaves);
      case EditOp::ins:
        return apply_insert(internals);
      case EditOp::relabel:
        return apply_relabel(leaves);
    }
    return false;
  }

  bool apply_delete(const std::vector<Path>& leaves) {
    std::vector<const Path*> eligible;
    for (const Path& p : leaves) {
      if (p.empty()) continue;  // cannot delete the root
      Path parent(p.begin(), p.end() - 1);
      if (node_at(tree, parent)->children.size() >= 2)
        eligible.push_back(&p);
    }
    if (eligible.empty()) return false;
    const Path& victim = *eligible[rng.below(eligible.size())];
    Path parent(victim.begin(), victim.end() - 1);
    Tree* parent_node = node_at(tree, parent);
    parent_node->children.erase(parent_node->children.begin() + victim.back());
    return true;
  }

  bool apply_insert(const std::vector<Path>& internals) {
    if (internals.empty()) return false;  // single-node tree
    Tree* target = node_at(tree, internals[rng.below(internals.size())]);
    std::string label;
    for (;;) {
      label = "u" + std::to_string(fresh_counter++);
      LabelId id = pool.intern(label);
      bool taken = std::any_of(
          target->children.begin(), target->children.end(),
          [id](const Tree& c) { return c.label == id; });
      if (!taken) break;
    }
    Tree leaf;
    leaf.label = pool.intern(label);
    insert_child(*target, std::move(leaf), pool);
    return true;
  }

  // Relabels a leaf to its old label plus "!". No valid label sorts strictly
  // between a label and that extension, so the changed vertex list keeps its
  // position relative to every other list and the edit costs exactly
  // `change` in distance. Infeasible only when a sibling already carries the
  // extended label.
  bool apply_relabel(const std::vector<Path>& leaves) {
    std::vector<const Path*> eligible;
    std::vector<LabelId> fresh;
    for (const Path& p : leaves) {
      Tree* leaf = node_at(tree, p);
      LabelId extended =
          pool.intern(std::string(pool.text(leaf->label)) + "!");
      bool taken = false;
      if (!p.empty()) {
        Path parent_path(p.begin(), p.end() - 1);
        Tree* parent = node_at(tree, parent_path);
        taken = std::any_of(
            parent->children.begin(), parent->children.end(),
            [extended](const Tree& c) { return c.label == extended; });
      }
      if (!taken) {
        eligible.push_back(&p);
        fresh.push_back(extended);
      }
    }
    if (eligible.empty()) return false;
    std::size_t pick = rng.below(eligible.size());
    const Path& victim = *eligible[pick];
    if (victim.empty()) {
      tree.label = fresh[pick];
      return true;
    }
    Path parent_path(victim.begin(), victim.end() - 1);
    Tree* parent = node_at(tree, parent_path);
    Tree detached = std::move(parent->children[victim.back()]);
    parent->children.erase(parent->children.begin() + victim.back());
    detached.label = fresh[pick];
    insert_child(*parent, std::move(detached), pool);
    return true;
  }
};

std::optional<EditOp> pick_op(const PerturbWeights& mix, Rng& rng,
                              const std::vector<EditOp>& allowed) {
  double total = 0;
  auto weight = [&mix](EditOp op) {
    switch (op) {
      case EditOp::del:
        return mix.del;
      case EditOp::ins:
        return mix.ins;
      case EditOp::relabel:
        return mix.relabel;
    }
    return 0.0;
  };
  for (EditOp op : allowed) total += weight(op);
  if (total <= 0) return std::nullopt;
  double r = rng.unit() * total;
  for (EditOp op : allowed) {
    r -= weight(op);
    if (r < 0) return op;
  }
  return allowed.back();
}

}  // namespace

PerturbResult perturb(const Tree& t, const PerturbParams& p,
                      const CostParams& costs, LabelPool& pool) {
  p.validate();
  costs.validate();
  Rng rng(p.seed);
  PerturbResult result;
  result.tree = t;
  Editor editor{result.tree, costs, pool, rng};
  const std::vector<EditOp> all_ops{EditOp::del, EditOp::ins, EditOp::relabel};

  if (p.edit_count) {
    int applied = 0;
    int attempts_left = 8 * (*p.edit_count) + 8;
    while (applied < *p.edit_count && attempts_left > 0) {
      --attempts_left;
      std::optional<EditOp> op = pick_op(p.mix, rng, all_ops);
      if (!op) break;
      if (editor.apply(*op)) {
        ++applied;
        result.applied_cost += editor.op_cost(*op);
      }
    }
    result.edits_applied = applied;  // may fall short of the request
    return result;
  }

  Cost remaining = *p.cost_budget;
  for (;;) {
    std::vector<EditOp> eligible;
    for (EditOp op : all_ops)
      if (editor.op_cost(op) <= remaining) eligible.push_back(op);
    bool applied_one = false;
    while (!eligible.empty()) {
      std::optional<EditOp> op = pick_op(p.mix, rng, eligible);
      if (!op) break;  // every eligible op has zero weight
      if (editor.apply(*op)) {
        ++result.edits_applied;
        result.applied_cost += editor.op_cost(*op);
        remaining -= editor.op_cost(*op);
        applied_one = true;
        break;
      }
      eligible.erase(std::find(eligible.begin(), eligible.end(), *op));
    }
    if (!applied_one) break;
  }
  return result;
}

}  // namespace treematch
