#include "treematch/tree.hpp"

#include <algorithm>

namespace treematch {

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
            text[pos] == '\n'))
      ++pos;
  }

  bool at_end() const { return pos >= text.size(); }

  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos), pos);
  }

  std::string_view read_label() {
    std::size_t start = pos;
    while (pos < text.size()) {
      unsigned char b = static_cast<unsigned char>(text[pos]);
      if (b <= 0x20 || b == 0x7F || b == '(' || b == ')' || b == '#') break;
      ++pos;
    }
    if (pos == start) fail("expected label");
    return text.substr(start, pos - start);
  }

  Tree read_tree(LabelPool& pool) {
    skip_ws();
    if (at_end() || peek() != '(') fail("expected '('");
    ++pos;
    skip_ws();
    Tree node;
    node.label = pool.intern(read_label());
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected ')'");
      char c = peek();
      if (c == ')') {
        ++pos;
        break;
      }
      if (c == '(') {
        node.children.push_back(read_tree(pool));
      } else if (c == '#') {
        fail("unexpected '#'");
      } else {
        Tree leaf;
        leaf.label = pool.intern(read_label());
        node.children.push_back(std::move(leaf));
      }
    }
    return node;
  }
};

void format_rec(const Tree& t, const LabelPool& pool, std::string& out) {
  out += '(';
  out += pool.text(t.label);
  for (const Tree& child : t.children) {
    out += ' ';
    if (child.is_leaf())
      out += pool.text(child.label);
    else
      format_rec(child, pool, out);
  }
  out += ')';
}

}  // namespace

Tree parse_tree(std::string_view text, LabelPool& pool) {
  Scanner sc{text};
  Tree t = sc.read_tree(pool);
  sc.skip_ws();
  if (!sc.at_end()) sc.fail("trailing input after tree");
  canonicalize_tree(t, pool);
  return t;
}

std::string format_tree(const Tree& t, const LabelPool& pool) {
  std::string out;
  format_rec(t, pool, out);
  return out;
}

void canonicalize_tree(Tree& t, const LabelPool& pool) {
  for (Tree& child : t.children) canonicalize_tree(child, pool);
  std::sort(t.children.begin(), t.children.end(),
            [&pool](const Tree& a, const Tree& b) {
              return pool.less(a.label, b.label);
            });
  for (std::size_t i = 1; i < t.children.size(); ++i) {
    if (t.children[i - 1].label == t.children[i].label)
      throw ValidationError("duplicate sibling label '" +
                            std::string(pool.text(t.children[i].label)) +
                            "' under '" + std::string(pool.text(t.label)) +
                            "'");
  }
}

void insert_child(Tree& parent, Tree child, const LabelPool& pool) {
  auto it = std::lower_bound(parent.children.begin(), parent.children.end(),
                             child, [&pool](const Tree& a, const Tree& b) {
                               return pool.less(a.label, b.label);
                             });
  if (it != parent.children.end() && it->label == child.label)
    throw ValidationError("duplicate sibling label '" +
                          std::string(pool.text(child.label)) + "' under '" +
                          std::string(pool.text(parent.label)) + "'");
  parent.children.insert(it, std::move(child));
}

std::size_t leaf_count(const Tree& t) {
  if (t.is_leaf()) return 1;
  std::size_t n = 0;
  for (const Tree& child : t.children) n += leaf_count(child);
  return n;
}

std::size_t node_count(const Tree& t) {
  std::size_t n = 1;
  for (const Tree& child : t.children) n += node_count(child);
  return n;
}

std::size_t tree_depth(const Tree& t) {
  std::size_t d = 0;
  for (const Tree& child : t.children) d = std::max(d, 1 + tree_depth(child));
  return d;
}

bool trees_equal(const Tree& a, const Tree& b) {
  if (a.label != b.label || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!trees_equal(a.children[i], b.children[i])) return false;
  return true;
}

}  // namespace treematch
