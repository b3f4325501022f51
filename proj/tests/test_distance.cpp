#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "treematch/distance.hpp"

using namespace treematch;
using testutil::mk;
using testutil::raw_vls;

namespace {

std::vector<Cost> column_copy(const DistanceMatrix& h, std::size_t j) {
  auto col = h.column(j);
  return {col.begin(), col.end()};
}

VertexListSequence prefix(const VertexListSequence& s, std::size_t n) {
  VertexListSequence p;
  p.lists.assign(s.lists.begin(), s.lists.begin() + n);
  return p;
}

}  // namespace

TEST_CASE("dist on the worked triple") {
  LabelPool pool;
  CostParams costs{1, 2};
  VertexListSequence a = linearize(mk(pool, "(a (b (a x) c k) e)"));
  VertexListSequence b = linearize(mk(pool, "(a (b (a x) c k m) e)"));
  VertexListSequence c = linearize(mk(pool, "(a (b (a x) c z) e)"));

  CHECK(dist(a, a, costs, pool) == 0);
  CHECK(dist(a, b, costs, pool) == 2);  // one extra leaf, cost indel
  CHECK(dist(a, c, costs, pool) == 1);  // one leaf label change
  CHECK(dist_oracle(a, b, costs, pool) == 2);
  CHECK(dist_oracle(a, c, costs, pool) == 1);

  VertexListSequence empty;
  CHECK(dist(empty, a, costs, pool) == 8);  // n * indel boundary
  CHECK(dist(a, empty, costs, pool) == 8);
  CHECK(dist_oracle(a, empty, costs, pool) == 8);
}

TEST_CASE("dist equals the oracle on random pairs") {
  LabelPool pool;
  Rng rng(1234);
  CostParams settings[] = {{1, 2}, {1, 1}, {2, 2}, {2, 3}};
  for (int trial = 0; trial < 1000; ++trial) {
    VertexListSequence x = linearize(testutil::random_tree(rng, pool));
    VertexListSequence y = linearize(testutil::random_tree(rng, pool));
    const CostParams& costs = settings[trial % 4];
    Cost d = dist(x, y, costs, pool);
    CHECK(d == dist_oracle(x, y, costs, pool));
    // symmetry and bounds
    CHECK(d == dist(y, x, costs, pool));
    CHECK(d >= 0);
    CHECK(d <= static_cast<Cost>(x.size() + y.size()) * costs.indel);
  }
}

TEST_CASE("triangle inequality on sampled triples") {
  LabelPool pool;
  Rng rng(77);
  CostParams costs{1, 2};
  for (int trial = 0; trial < 300; ++trial) {
    VertexListSequence x = linearize(testutil::random_tree(rng, pool));
    VertexListSequence y = linearize(testutil::random_tree(rng, pool));
    VertexListSequence z = linearize(testutil::random_tree(rng, pool));
    CHECK(dist(x, z, costs, pool) <=
          dist(x, y, costs, pool) + dist(y, z, costs, pool));
  }
}

TEST_CASE("matrix boundary column") {
  LabelPool pool;
  VertexListSequence a = linearize(mk(pool, "(a (b (a x) c k) e)"));
  DistanceMatrix h(a, CostParams{1, 2}, pool);
  CHECK(h.depth() == 0);
  CHECK(column_copy(h, 0) == std::vector<Cost>{0, 2, 4, 6, 8});

  VertexListSequence none;
  DistanceMatrix empty(none, CostParams{1, 2}, pool);
  CHECK(column_copy(empty, 0) == std::vector<Cost>{0});
}

TEST_CASE("matrix push computes the documented column") {
  LabelPool pool;
  VertexListSequence a = linearize(mk(pool, "(a (b (a x) c k) e)"));
  CostParams costs{1, 2};
  DistanceMatrix h(a, costs, pool);
  h.push(a[0].view());
  CHECK(column_copy(h, 1) == std::vector<Cost>{2, 0, 2, 4, 6});
  // every cell against the from-scratch oracle
  for (std::size_t i = 0; i <= a.size(); ++i)
    CHECK(h.column(1)[i] ==
          dist_oracle(prefix(a, i), prefix(a, 1), costs, pool));

  h.push(a[1].view());
  h.push(a[2].view());
  h.push(a[3].view());
  CHECK(h.depth() == 4);
  CHECK(h.current_dist() == 0);
}

TEST_CASE("matrix pop restores prior state") {
  LabelPool pool;
  VertexListSequence a = linearize(mk(pool, "(a (b (a x) c k) e)"));
  DistanceMatrix h(a, CostParams{1, 2}, pool);
  std::vector<Cost> before = column_copy(h, 0);
  h.push(a[2].view());
  h.pop();
  CHECK(h.depth() == 0);
  CHECK(column_copy(h, 0) == before);
  CHECK_THROWS_AS(h.pop(), std::logic_error);
}

TEST_CASE("matrix columns stay coherent through push/pop traffic") {
  LabelPool pool;
  Rng rng(5150);
  CostParams costs{1, 2};
  for (int trial = 0; trial < 50; ++trial) {
    VertexListSequence x = linearize(testutil::random_tree(rng, pool));
    DistanceMatrix h(x, costs, pool);
    std::vector<VertexList> pushed;
    for (int step = 0; step < 40; ++step) {
      bool push = pushed.empty() || rng.chance(0.6);
      if (push) {
        VertexListSequence y = linearize(testutil::random_tree(rng, pool));
        const VertexList& list = y[rng.below(y.size())];
        pushed.push_back(list);
        h.push(list.view());
      } else {
        pushed.pop_back();
        h.pop();
      }
      REQUIRE(h.depth() == pushed.size());
      // a random retained column equals the from-scratch value
      std::size_t j = rng.below(pushed.size() + 1);
      DistanceMatrix fresh(x, costs, pool);
      for (std::size_t k = 0; k < j; ++k) fresh.push(pushed[k].view());
      CHECK(column_copy(h, j) == column_copy(fresh, j));
    }
  }
}

TEST_CASE("cutoff window bounds") {
  // threshold 2, indel 2: one row down, one row up
  CutoffWindow w = cutoff_window(1, 4, 2, 2);
  CHECK(w.lo == 0);
  CHECK(w.hi == 2);
  CHECK_FALSE(w.empty);

  w = cutoff_window(0, 4, 2, 2);
  CHECK(w.lo == 0);
  CHECK(w.hi == 1);

  w = cutoff_window(6, 4, 2, 2);  // candidate much longer than the query
  CHECK(w.empty);

  w = cutoff_window(2, 8, 5, 2);  // floor(5/2)=2 down, ceil(5/2)=3 up
  CHECK(w.lo == 0);
  CHECK(w.hi == 5);

  w = cutoff_window(3, 3, 0, 2);  // t=0 pins the window to the diagonal
  CHECK(w.lo == 3);
  CHECK(w.hi == 3);
}

TEST_CASE("cutdist over the window") {
  LabelPool pool;
  CostParams costs{1, 2};
  VertexListSequence a = linearize(mk(pool, "(a (b (a x) c k) e)"));

  DistanceMatrix h(a, costs, pool);
  for (const VertexList& v : a.lists) h.push(v.view());
  CHECK(h.cutoff(2) == 0);  // exact candidate

  DistanceMatrix h1(a, costs, pool);
  h1.push(a[0].view());
  CHECK(h1.cutoff(2) == 0);  // min(2,0,2) over rows 0..2

  VertexListSequence relabeled = linearize(mk(pool, "(a (b (a x) c z) e)"));
  DistanceMatrix h2(a, costs, pool);
  for (const VertexList& v : relabeled.lists) h2.push(v.view());
  CHECK(h2.cutoff(2) == 1);
  CHECK(h2.current_dist() == 1);

  VertexListSequence shorter = linearize(mk(pool, "(a (b (a x) c k))"));
  DistanceMatrix h3(a, costs, pool);
  for (const VertexList& v : shorter.lists) h3.push(v.view());
  CHECK(h3.current_dist() == 2);  // the (a,e) leaf is missing
  CHECK(h3.current_dist() == dist_oracle(a, shorter, costs, pool));
}

TEST_CASE("cutdist reports infinity past the window") {
  LabelPool pool;
  CostParams costs{1, 2};
  VertexListSequence a = linearize(mk(pool, "(a x)"));
  DistanceMatrix h(a, costs, pool);
  VertexListSequence big = linearize(mk(pool, "(a p q r s)"));
  for (const VertexList& v : big.lists) h.push(v.view());
  CHECK(h.depth() == 4);
  CHECK(h.cutoff(2) == kInfiniteCost);  // window empty: n > m + ceil(t/indel)
}

TEST_CASE("cost validation") {
  CHECK_THROWS_AS((CostParams{-1, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CostParams{1, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CostParams{5, 2}.validate()), std::invalid_argument);
  CHECK_NOTHROW((CostParams{4, 2}.validate()));
  CHECK_NOTHROW((CostParams{0, 1}.validate()));
}

TEST_CASE("dist boundary cases") {
  LabelPool pool;
  CostParams costs{1, 2};
  VertexListSequence empty;
  CHECK(dist(empty, empty, costs, pool) == 0);
  VertexListSequence one = raw_vls(pool, {{"q"}});
  CHECK(dist(one, empty, costs, pool) == 2);
  CHECK(dist_oracle(one, empty, costs, pool) == 2);
}
