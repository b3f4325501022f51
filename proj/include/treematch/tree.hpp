#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treematch/labels.hpp"

namespace treematch {

// Rooted labeled tree in canonical form: children sorted by label text,
// sibling labels pairwise distinct. Input child order is not significant;
// parsing and construction normalize to this form.
struct Tree {
  LabelId label = 0;
  std::vector<Tree> children;

  bool is_leaf() const { return children.empty(); }
};

// Syntax error in tree or database text; position is a byte offset.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
  std::size_t position;
};

// Structural rule violation (duplicate sibling labels, inconsistent
// vertex list sequences, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses the parenthesized format: tree := '(' label (' ' (label | tree))* ')'.
// A bare label inside a tree denotes a leaf child. The result is canonical.
Tree parse_tree(std::string_view text, LabelPool& pool);

// Canonical text form; parse_tree(format_tree(t)) is structurally equal to t.
std::string format_tree(const Tree& t, const LabelPool& pool);

// Sorts children recursively by label and rejects duplicate sibling labels.
void canonicalize_tree(Tree& t, const LabelPool& pool);

// Inserts child keeping the sorted order; rejects a duplicate sibling label.
void insert_child(Tree& parent, Tree child, const LabelPool& pool);

std::size_t leaf_count(const Tree& t);
std::size_t node_count(const Tree& t);
std::size_t tree_depth(const Tree& t);  // edges on the longest root-to-leaf path

bool trees_equal(const Tree& a, const Tree& b);

}  // namespace treematch
