#include <doctest.h>

#include <chrono>
#include <sstream>

#include "qkgr/engine.hpp"
#include "qkgr/gr3_path.hpp"
#include "support.hpp"

using namespace qkgr;
using test::O;
using test::P;

TEST_SUITE("engine") {
  TEST_CASE("worked example through the general engine") {
    const auto ctx = GrContext::make(4, 9);
    const auto start = std::chrono::steady_clock::now();
    const QKEngine engine(ctx);
    const QKElement p = engine.product(P(ctx, "4,0,0,0"), P(ctx, "4,3,2,1"));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(p == O(ctx, "5,4,3,2") + O(ctx, "2,2,1,0", 1) + O(ctx, "3,1,1,0", 1) + O(ctx, "3,2,0,0", 1) -
                   O(ctx, "3,2,1,0", 1, 3));
    CHECK(engine.structure_constant(P(ctx, "4,0,0,0"), P(ctx, "4,3,2,1"), P(ctx, "3,2,1,0"), 1) == -3);
    CHECK(seconds < 1.0);
  }

  TEST_CASE("small products") {
    const auto ctx = GrContext::make(2, 4);
    const QKEngine engine(ctx);
    CHECK(engine.product(P(ctx, "2,2"), P(ctx, "2,2")) == O(ctx, "0,0", 2));
    CHECK(engine.product(P(ctx, "1,0"), P(ctx, "1,0")) == O(ctx, "1,1") + O(ctx, "2,0") - O(ctx, "2,1"));
    CHECK(engine.product(P(ctx, "0,0"), P(ctx, "2,1")) == O(ctx, "2,1"));
    for (const auto& lambda : engine.basis().partitions()) {
      CHECK(engine.structure_constant(lambda, empty_partition(ctx), lambda, 0) == 1);
    }
  }

  TEST_CASE("Giambelli recursion covers the basis") {
    const Basis basis(GrContext::make(3, 7));
    const auto steps = giambelli_recursion(basis);
    REQUIRE(steps.size() == basis.size());
    std::vector<bool> seen(basis.size(), false);
    for (const auto& step : steps) {
      CHECK_FALSE(seen[step.target]);
      if (step.special > 0) CHECK(seen[step.parent]);
      for (const auto& [index, coeff] : step.corrections) CHECK(seen[index]);
      seen[step.target] = true;
    }
  }

  TEST_CASE("table rows for special classes are the Pieri operators") {
    const auto ctx = GrContext::make(2, 5);
    const QKEngine engine(ctx);
    for (int i = 1; i <= ctx.width(); ++i) {
      for (const auto& mu : engine.basis().partitions()) {
        CHECK(engine.product(special_partition(ctx, i), mu) ==
              engine.pieri().op(i).apply(engine.basis(), QKElement::basis(mu)));
      }
    }
    for (const auto& a : engine.basis().partitions()) {
      for (const auto& b : engine.basis().partitions()) CHECK(engine.product(a, b) == engine.product(b, a));
    }
  }

  TEST_CASE("three-row path agrees with the lifted table") {
    for (int n = 4; n <= 8; ++n) {
      const auto ctx = GrContext::make(3, n);
      const QKEngine engine(ctx);
      REQUIRE(engine.gr3_path() != nullptr);
      for (const auto& a : engine.basis().partitions()) {
        for (const auto& b : engine.basis().partitions()) {
          CHECK(engine.product(a, b, ProductRoute::lift) == engine.product(a, b, ProductRoute::third_row));
        }
      }
    }
    CHECK(QKEngine(GrContext::make(2, 5)).gr3_path() == nullptr);
  }

  TEST_CASE("Giambelli recipes for two-row classes") {
    for (int n = 5; n <= 8; ++n) {
      const PieriFamily family(GrContext::make(3, n));
      const auto& ctx = family.context();
      for (const auto& mu : family.basis().partitions()) {
        if (mu[2] != 0) {
          CHECK_THROWS_AS(giambelli_gr3(ctx, mu), std::invalid_argument);
          continue;
        }
        const auto recipe = giambelli_gr3(ctx, mu);
        if (mu[1] == 0) CHECK(recipe.size() == 1);
        CHECK(evaluate_recipe(family, recipe, empty_partition(ctx)) == QKElement::basis(mu));
      }
    }
  }

  TEST_CASE("third-row reduction") {
    const auto ctx = GrContext::make(3, 6);
    const IndexTuple plain{P(ctx, "2,1,0"), P(ctx, "2,2,0"), P(ctx, "3,2,1"), 1};
    CHECK(reduce_third_row(ctx, plain) == plain);
    const QKEngine engine(ctx);
    const IndexTuple t{P(ctx, "2,2,1"), P(ctx, "1,1,1"), P(ctx, "1,1,0"), 1};
    const auto r = reduce_third_row(ctx, t);
    if (r) {
      CHECK(r->lambda[2] == 0);
      CHECK(r->mu[2] == 0);
      CHECK(engine.structure_constant(*r) == engine.structure_constant(t));
    } else {
      CHECK(engine.structure_constant(t) == 0);
    }
  }

  TEST_CASE("element products and truncation") {
    const auto ctx = GrContext::make(2, 4);
    const QKEngine engine(ctx);
    const QKElement x = O(ctx, "1,0") + O(ctx, "2,2", 1, -2);
    const QKElement y = O(ctx, "1,1") - O(ctx, "0,0");
    CHECK(engine.product(x, y) == engine.product(y, x));
    const QKElement high = O(ctx, "2,2", 2);
    CHECK_THROWS_AS(engine.product(high, high), TruncationError);
    CHECK(engine.product_mod(high, high).is_zero());
  }

  TEST_CASE("euler characteristic") {
    const auto ctx = GrContext::make(2, 4);
    CHECK(euler_char(QKElement()).empty());
    for (const auto& lambda : all_partitions(ctx)) CHECK(euler_char(QKElement::basis(lambda)) == std::vector<Coeff>{1});
  }

  TEST_CASE("escalation keeps products exact") {
    EngineOptions fixed;
    fixed.escalate = false;
    const QKEngine wide(GrContext::make(3, 6, 8), fixed);
    const QKEngine small(GrContext::make(3, 6, 4));
    for (const auto& a : wide.basis().partitions()) {
      for (const auto& b : wide.basis().partitions()) CHECK(small.product(a, b) == wide.product(a, b));
    }
    CHECK(small.observed_max_degree() < small.context().D);
    CHECK_THROWS_AS(GrContext::make(3, 6, 3), std::invalid_argument);
  }

  TEST_CASE("parallel table equals serial table") {
    EngineOptions threaded;
    threaded.jobs = 3;
    const QKEngine serial(GrContext::make(3, 7));
    const QKEngine parallel(GrContext::make(3, 7), threaded);
    serial.build_table();
    parallel.build_table();
    std::ostringstream a, b;
    serial.write_jsonl(a);
    parallel.write_jsonl(b);
    CHECK(a.str() == b.str());
  }

  TEST_CASE("serialization") {
    const auto ctx = GrContext::make(2, 4);
    const QKElement x = O(ctx, "2,1") - O(ctx, "0,0", 2, 3);
    CHECK(x.to_json() == R"({"terms":[{"q":0,"partition":[2,1],"coeff":1},{"q":2,"partition":[0,0],"coeff":-3}]})");
    CHECK(QKElement::from_json(ctx, x.to_json()) == x);
    CHECK_THROWS(QKElement::from_json(ctx, R"({"terms":[{"q":0,"partition":[3,0],"coeff":1}]})"));

    const QKEngine engine(ctx);
    std::ostringstream csv;
    engine.write_csv(csv);
    CHECK(csv.str().rfind("lambda,mu,q,nu,coeff\n\"0,0\",\"0,0\",0,\"0,0\",1\n", 0) == 0);
  }

  TEST_CASE("checked arithmetic") {
    CHECK_THROWS_AS(checked_mul(Coeff{1} << 62, 4), OverflowError);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<Coeff>::max(), 1), OverflowError);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
  }
}
