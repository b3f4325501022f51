#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "treematch/tree.hpp"
#include "treematch/vls.hpp"

using namespace treematch;
using testutil::mk;
using testutil::raw_vls;
using testutil::vl;

TEST_CASE("vertex list comparison") {
  LabelPool pool;
  CHECK(compare_vertex_lists(vl(pool, {"a", "b", "c"}),
                             vl(pool, {"a", "b", "k"}),
                             pool) == ListOrder::less);
  CHECK(compare_vertex_lists(vl(pool, {"a", "b", "k"}), vl(pool, {"a", "e"}),
                             pool) == ListOrder::less);
  // a proper prefix sorts first
  CHECK(compare_vertex_lists(vl(pool, {"a", "b"}), vl(pool, {"a", "b", "c"}),
                             pool) == ListOrder::less);
  VertexList v = vl(pool, {"a", "b", "k"});
  CHECK(compare_vertex_lists(v, v, pool) == ListOrder::equal);
  CHECK(compare_vertex_lists(vl(pool, {"a", "e"}), vl(pool, {"a", "b", "k"}),
                             pool) == ListOrder::greater);
}

TEST_CASE("vertex list order is total on random triples") {
  LabelPool pool;
  Rng rng(7);
  auto random_list = [&] {
    VertexList v;
    std::size_t len = 1 + rng.below(4);
    for (std::size_t i = 0; i < len; ++i)
      v.vertices.push_back(pool.intern(std::string(1, 'a' + rng.below(3))));
    return v;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    VertexList a = random_list(), b = random_list(), c = random_list();
    ListOrder ab = compare_vertex_lists(a, b, pool);
    ListOrder ba = compare_vertex_lists(b, a, pool);
    // antisymmetry
    if (ab == ListOrder::less) CHECK(ba == ListOrder::greater);
    if (ab == ListOrder::equal) CHECK(ba == ListOrder::equal);
    // transitivity
    if (ab != ListOrder::greater &&
        compare_vertex_lists(b, c, pool) != ListOrder::greater)
      CHECK(compare_vertex_lists(a, c, pool) != ListOrder::greater);
  }
}

TEST_CASE("pair classification") {
  LabelPool pool;
  CHECK(classify_pair(vl(pool, {"a", "b", "k"}), vl(pool, {"a", "b", "z"}),
                      pool) == PairRelation::label_diff);
  CHECK(classify_pair(vl(pool, {"a", "b", "a", "x"}), vl(pool, {"a", "b", "c"}),
                      pool) == PairRelation::x_less);
  CHECK(classify_pair(vl(pool, {"a", "e"}), vl(pool, {"a", "e"}), pool) ==
        PairRelation::equal);
  // label_diff wins over the lexicographic outcome
  CHECK(classify_pair(vl(pool, {"a", "z"}), vl(pool, {"a", "b"}), pool) ==
        PairRelation::label_diff);
  // same length, difference before the last label: plain lexicographic
  CHECK(classify_pair(vl(pool, {"a", "b", "x"}), vl(pool, {"a", "c", "x"}),
                      pool) == PairRelation::x_less);
}

TEST_CASE("pair classification symmetries") {
  LabelPool pool;
  Rng rng(11);
  auto random_list = [&] {
    VertexList v;
    std::size_t len = 1 + rng.below(3);
    for (std::size_t i = 0; i < len; ++i)
      v.vertices.push_back(pool.intern(std::string(1, 'a' + rng.below(3))));
    return v;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    VertexList x = random_list(), y = random_list();
    PairRelation xy = classify_pair(x, y, pool);
    PairRelation yx = classify_pair(y, x, pool);
    switch (xy) {
      case PairRelation::equal:
        CHECK(yx == PairRelation::equal);
        break;
      case PairRelation::label_diff:
        CHECK(yx == PairRelation::label_diff);
        break;
      case PairRelation::x_less:
        CHECK(yx == PairRelation::x_greater);
        break;
      case PairRelation::x_greater:
        CHECK(yx == PairRelation::x_less);
        break;
    }
  }
}

TEST_CASE("parse_tree builds the canonical tree") {
  LabelPool pool;
  Tree t = mk(pool, "(a (b (a x) c k) e)");
  CHECK(pool.text(t.label) == "a");
  REQUIRE(t.children.size() == 2);
  CHECK(pool.text(t.children[0].label) == "b");
  CHECK(pool.text(t.children[1].label) == "e");
  REQUIRE(t.children[0].children.size() == 3);
  CHECK(pool.text(t.children[0].children[0].label) == "a");
  CHECK(pool.text(t.children[0].children[1].label) == "c");
  CHECK(pool.text(t.children[0].children[2].label) == "k");
  CHECK(leaf_count(t) == 4);
  CHECK(node_count(t) == 7);
  CHECK(tree_depth(t) == 3);
}

TEST_CASE("parse_tree normalizes child order") {
  LabelPool pool;
  Tree a = mk(pool, "(a (b (a x) c k) e)");
  Tree b = mk(pool, "(a e (b k c (a x)))");
  CHECK(trees_equal(a, b));
}

TEST_CASE("parse_tree single node and errors") {
  LabelPool pool;
  Tree r = mk(pool, "(r)");
  CHECK(r.is_leaf());
  CHECK(leaf_count(r) == 1);

  CHECK_THROWS_AS(mk(pool, "(a (b x x))"), ValidationError);
  CHECK_THROWS_WITH_AS(mk(pool, "(a x (x y))"),
                       "duplicate sibling label 'x' under 'a'",
                       ValidationError);
  CHECK_THROWS_AS(mk(pool, ""), ParseError);
  CHECK_THROWS_AS(mk(pool, "r"), ParseError);
  CHECK_THROWS_AS(mk(pool, "(a"), ParseError);
  CHECK_THROWS_AS(mk(pool, "(a) b"), ParseError);
  CHECK_THROWS_AS(mk(pool, "()"), ParseError);
  try {
    mk(pool, "(a (b faulty");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 12);  // end of input, where ')' was expected
  }
}

TEST_CASE("format_tree canonical text") {
  LabelPool pool;
  CHECK(format_tree(mk(pool, "(r)"), pool) == "(r)");
  CHECK(format_tree(mk(pool, "(a e (b k c (a x)))"), pool) ==
        "(a (b (a x) c k) e)");
}

TEST_CASE("parse/format round trip on random trees") {
  LabelPool pool;
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    Tree t = testutil::random_tree(rng, pool);
    Tree back = parse_tree(format_tree(t, pool), pool);
    CHECK(trees_equal(t, back));
  }
}

TEST_CASE("linearize the parse-tree example") {
  LabelPool pool;
  Tree t = mk(pool,
              "(S (NP (Det a) (NP (Adj black) (N cat))) "
              "(VP (NP (Det the) (NP (Adj little) (N mouse))) (V chased)))");
  VertexListSequence s = linearize(t);
  VertexListSequence expected = raw_vls(
      pool, {{"S", "NP", "Det", "a"},
             {"S", "NP", "NP", "Adj", "black"},
             {"S", "NP", "NP", "N", "cat"},
             {"S", "VP", "NP", "Det", "the"},
             {"S", "VP", "NP", "NP", "Adj", "little"},
             {"S", "VP", "NP", "NP", "N", "mouse"},
             {"S", "VP", "V", "chased"}});
  REQUIRE(s.size() == expected.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    CHECK(s[i].vertices == expected[i].vertices);
}

TEST_CASE("linearize small trees") {
  LabelPool pool;
  VertexListSequence s = linearize(mk(pool, "(a (b (a x) c k) e)"));
  VertexListSequence expected =
      raw_vls(pool, {{"a", "b", "a", "x"}, {"a", "b", "c"}, {"a", "b", "k"},
                     {"a", "e"}});
  REQUIRE(s.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(s[i].vertices == expected[i].vertices);

  VertexListSequence single = linearize(mk(pool, "(r)"));
  REQUIRE(single.size() == 1);
  CHECK(single[0].vertices == vl(pool, {"r"}).vertices);
}

TEST_CASE("linearize output is strictly increasing") {
  LabelPool pool;
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    VertexListSequence s = linearize(testutil::random_tree(rng, pool));
    for (std::size_t j = 1; j < s.size(); ++j)
      CHECK(compare_vertex_lists(s[j - 1], s[j], pool) == ListOrder::less);
  }
}

TEST_CASE("delinearize round trip") {
  LabelPool pool;
  Tree small = mk(pool, "(a (b (a x) c k) e)");
  CHECK(trees_equal(delinearize(linearize(small), pool), small));

  VertexListSequence single = raw_vls(pool, {{"r"}});
  CHECK(trees_equal(delinearize(single, pool), mk(pool, "(r)")));

  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    Tree t = testutil::random_tree(rng, pool);
    CHECK(trees_equal(delinearize(linearize(t), pool), t));
  }
}

TEST_CASE("delinearize rejects inconsistent sequences") {
  LabelPool pool;
  CHECK_THROWS_AS(delinearize(raw_vls(pool, {{"a", "b"}, {"a", "b", "c"}}),
                              pool),
                  ValidationError);
  CHECK_THROWS_AS(delinearize(raw_vls(pool, {{"a", "b"}, {"r", "c"}}), pool),
                  ValidationError);
  CHECK_THROWS_AS(delinearize(raw_vls(pool, {{"a", "c"}, {"a", "b"}}), pool),
                  ValidationError);
  CHECK_THROWS_AS(delinearize(raw_vls(pool, {}), pool), ValidationError);
}

TEST_CASE("sequence invariant validation") {
  LabelPool pool;
  std::vector<VertexList> good{vl(pool, {"a", "b"}), vl(pool, {"a", "c"})};
  CHECK_NOTHROW(VertexListSequence::from_lists(good, pool));
  std::vector<VertexList> dup{vl(pool, {"a", "b"}), vl(pool, {"a", "b"})};
  CHECK_THROWS_AS(VertexListSequence::from_lists(dup, pool), ValidationError);
  std::vector<VertexList> roots{vl(pool, {"a", "b"}), vl(pool, {"b", "c"})};
  CHECK_THROWS_AS(VertexListSequence::from_lists(roots, pool),
                  ValidationError);
  std::vector<VertexList> prefix{vl(pool, {"a", "b"}),
                                 vl(pool, {"a", "b", "c"})};
  CHECK_THROWS_AS(VertexListSequence::from_lists(prefix, pool),
                  ValidationError);
}

TEST_CASE("labels reject forbidden characters") {
  CHECK(valid_label("NP"));
  CHECK(valid_label("x!"));
  CHECK_FALSE(valid_label(""));
  CHECK_FALSE(valid_label("a b"));
  CHECK_FALSE(valid_label("a(b"));
  CHECK_FALSE(valid_label("#x"));
  LabelPool pool;
  CHECK_THROWS_AS(pool.intern("bad label"), std::invalid_argument);
}

TEST_CASE("labels are 8-bit clean") {
  LabelPool pool;
  Tree t = mk(pool, "(caf\xC3\xA9 \xC3\xBC x)");
  CHECK(format_tree(t, pool) == "(caf\xC3\xA9 x \xC3\xBC)");  // 'x' < 0xC3
  CHECK(trees_equal(parse_tree(format_tree(t, pool), pool), t));
}
