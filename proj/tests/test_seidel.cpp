#include <doctest.h>

#include "qkgr/engine.hpp"
#include "qkgr/seidel.hpp"
#include "support.hpp"

using namespace qkgr;
using test::O;
using test::P;

TEST_SUITE("seidel") {
  TEST_CASE("operators on small rings") {
    const auto ctx = GrContext::make(2, 4);
    CHECK(seidel_T(ctx, O(ctx, "2,1")) == O(ctx, "1,0", 1));
    CHECK(seidel_H(ctx, O(ctx, "1,0")) == O(ctx, "2,1"));
    for (const auto& lambda : all_partitions(ctx)) {
      CHECK(seidel_H(ctx, seidel_T(ctx, QKElement::basis(lambda))) == QKElement::basis(lambda, 1));
    }
  }

  TEST_CASE("T agrees with multiplication by the column class") {
    const auto ctx = GrContext::make(3, 6);
    const QKEngine engine(ctx);
    for (const auto& lambda : engine.basis().partitions()) {
      CHECK(engine.product(column_partition(ctx), lambda) == seidel_T(ctx, QKElement::basis(lambda)));
    }
  }

  TEST_CASE("shift powers") {
    const auto ctx = GrContext::make(3, 7);
    for (const auto& lambda : all_partitions(ctx)) {
      const auto zero = qh_seidel_power(ctx, lambda, 0);
      CHECK(zero.degree == 0);
      CHECK(zero.partition == lambda);
      const auto full = qh_seidel_power(ctx, lambda, 7);
      CHECK(full.degree == 3);
      CHECK(full.partition == lambda);
      for (int r = 0; r <= 7; ++r) {
        CHECK(qh_seidel_power(ctx, lambda, r).degree == d_count(ctx, to_jump_sequence(ctx, lambda), r));
      }
    }
    CHECK_THROWS(qh_seidel_power(ctx, empty_partition(ctx), 8));
  }

  TEST_CASE("smallest q-power") {
    const auto ctx = GrContext::make(2, 4);
    const auto dm = d_min(ctx, P(ctx, "2,2"), P(ctx, "2,2"));
    CHECK(dm.d == 2);
    CHECK(dm.r == 2);
    for (const auto& lambda : all_partitions(ctx)) {
      const auto a = d_min(ctx, lambda, empty_partition(ctx));
      const auto b = d_min(ctx, empty_partition(ctx), lambda);
      CHECK(a.d == 0);
      CHECK(a.r == 0);
      CHECK(b.d == 0);
      CHECK(b.r == 0);
    }
  }

  TEST_CASE("single lifts") {
    const auto ctx = GrContext::make(3, 7);
    // Full first row on lambda, not on nu: the first variant applies.
    const IndexTuple t{P(ctx, "4,2,0"), P(ctx, "2,1,0"), P(ctx, "3,3,1"), 1};
    REQUIRE(reduce_lemred(ctx, t, 1).has_value());
    const IndexTuple same{P(ctx, "2,1,0"), P(ctx, "1,0,0"), P(ctx, "2,1,0"), 1};
    for (int i = 1; i < 7; ++i) {
      const auto r = reduce_lemred(ctx, same, 3, i);
      REQUIRE(r.has_value());
      CHECK(r->d == 1);
    }
    CHECK_THROWS_AS(reduce_lemred(ctx, t, 5), std::invalid_argument);
  }

  TEST_CASE("duality") {
    const auto ctx = GrContext::make(3, 6);
    const IndexTuple t{P(ctx, "2,1,0"), P(ctx, "3,1,1"), P(ctx, "2,2,0"), 1};
    const IndexTuple dt = duality(ctx, t);
    CHECK(dt.lambda == t.lambda);
    CHECK(dt.mu == dual(ctx, t.nu));
    CHECK(dt.nu == dual(ctx, t.mu));
    CHECK(duality(ctx, dt) == t);
  }

  TEST_CASE("closed-form shifts") {
    const auto ctx = GrContext::make(3, 7);
    const auto s = lemcom_shift(ctx, P(ctx, "3,2,1"), P(ctx, "2,2,0"), 1);
    CHECK(s.lambda == seidel_up(ctx, P(ctx, "3,2,1"), 2));
    CHECK(s.lambda == Partition({3, 2, 0}));
    CHECK(s.shift == 2);
    CHECK_THROWS_AS(lemcom_shift(ctx, P(ctx, "2,1,0"), P(ctx, "2,1,0"), 1), std::invalid_argument);
  }

  TEST_CASE("degree-one and higher reductions on the large example") {
    const auto ctx = GrContext::make(6, 17);
    const Partition lambda = P(ctx, "10,8,6,4,2,0");
    const auto higher = reduce_higher(ctx, {lambda, lambda, P(ctx, "3,3,2,1,0,0"), 3}, 3);
    REQUIRE(higher.has_value());
    CHECK(*higher == IndexTuple{seidel_up(ctx, lambda, 8), lambda, seidel_up(ctx, P(ctx, "3,3,2,1,0,0"), 8), 0});
    CHECK(higher->lambda == Partition({9, 7, 5, 4, 2, 0}));
    CHECK(higher->nu == Partition({11, 11, 10, 9, 8, 8}));

    std::optional<IndexTuple> t = IndexTuple{lambda, lambda, P(ctx, "3,3,2,1,0,0"), 3};
    for (int step = 0; step < 3 && t; ++step) t = reduce_deg_one(ctx, *t);
    CHECK(t == higher);

    const auto first = reduce_deg_one(ctx, {lambda, lambda, P(ctx, "6,2,2,1,0,0"), 3});
    REQUIRE(first.has_value());
    CHECK(*first == IndexTuple{P(ctx, "9,7,5,3,1,0"), lambda, P(ctx, "8,4,4,3,2,2"), 2});
    CHECK_FALSE(reduce_higher(ctx, {lambda, lambda, P(ctx, "6,2,2,1,0,0"), 3}, 3).has_value());
    CHECK_FALSE(reduce_deg_one(ctx, {lambda, lambda, lambda, 1}).has_value());
    CHECK_FALSE(reduce_higher(ctx, {lambda, lambda, full_rectangle(ctx), 3}, 2).has_value());
  }

  TEST_CASE("reductions preserve structure constants") {
    const auto ctx = GrContext::make(3, 6);
    const QKEngine engine(ctx);
    std::size_t applied = 0;
    for (const auto& a : engine.basis().partitions()) {
      for (const auto& b : engine.basis().partitions()) {
        for (const auto& c : engine.basis().partitions()) {
          const IndexTuple t{a, b, c, 1};
          const Coeff value = engine.structure_constant(t);
          for (const auto& r : {reduce_deg_one(ctx, t), reduce_dual_shift(ctx, t)}) {
            if (!r) continue;
            ++applied;
            CHECK(engine.structure_constant(*r) == value);
          }
        }
      }
    }
    CHECK(applied > 0);
  }
}
