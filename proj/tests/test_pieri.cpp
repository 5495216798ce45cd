#include <doctest.h>

#include "qkgr/pieri.hpp"
#include "qkgr/seidel.hpp"
#include "support.hpp"

using namespace qkgr;
using test::O;
using test::P;

namespace {

QKElement example_expansion(const GrContext& c) {
  return O(c, "5,4,3,2") + O(c, "2,2,1,0", 1) + O(c, "3,1,1,0", 1) + O(c, "3,2,0,0", 1) - O(c, "3,2,1,0", 1, 3);
}

}  // namespace

TEST_SUITE("pieri") {
  TEST_CASE("classical rule") {
    const auto ctx = GrContext::make(2, 4);
    CHECK(classical_pieri(ctx, P(ctx, "1,0"), 1) == O(ctx, "2,0") + O(ctx, "1,1") - O(ctx, "2,1"));
    CHECK(classical_pieri(ctx, P(ctx, "2,2"), 1).is_zero());
    const auto c37 = GrContext::make(3, 7);
    for (const auto& lambda : all_partitions(c37)) {
      for (int i = 1; i <= 4; ++i) {
        const QKElement product = classical_pieri(c37, lambda, i);
        for (const auto& [term, c] : product.terms()) {
          if (term.partition.boxes() == lambda.boxes() + i) CHECK(c == 1);
        }
      }
    }
  }

  TEST_CASE("quantum rule on the worked example") {
    const auto ctx = GrContext::make(4, 9);
    CHECK(quantum_pieri(ctx, P(ctx, "4,3,2,1"), 4) == example_expansion(ctx));
    CHECK(quantum_pieri_restated(ctx, P(ctx, "4,3,2,1"), 4) == example_expansion(ctx));
  }

  TEST_CASE("quantum rule on small rings") {
    const auto ctx = GrContext::make(2, 4);
    CHECK(quantum_pieri(ctx, P(ctx, "2,2"), 2) == O(ctx, "1,1", 1));
    CHECK(quantum_pieri(ctx, P(ctx, "2,2"), 2) == seidel_H(ctx, O(ctx, "2,2")));
    for (const auto& lambda : all_partitions(GrContext::make(3, 7))) {
      if (lambda[2] != 0) continue;
      for (int i = 1; i <= 4; ++i) {
        const auto c = GrContext::make(3, 7);
        CHECK(quantum_pieri(c, lambda, i) == classical_pieri(c, lambda, i));
        CHECK(quantum_pieri_restated(c, lambda, i) == classical_pieri(c, lambda, i));
      }
    }
  }

  TEST_CASE("both quantum forms agree") {
    for (int n = 3; n <= 8; ++n) {
      for (int k = 1; k < n; ++k) {
        const auto ctx = GrContext::make(k, n);
        for (const auto& lambda : all_partitions(ctx)) {
          for (int i = 1; i <= n - k; ++i) {
            CHECK(quantum_pieri(ctx, lambda, i) == quantum_pieri_restated(ctx, lambda, i));
          }
        }
      }
    }
  }

  TEST_CASE("operators") {
    for (const auto& [k, n] : {std::pair{2, 5}, std::pair{3, 6}}) {
      const PieriFamily family(GrContext::make(k, n));
      const auto& ctx = family.context();
      const Basis& basis = family.basis();
      for (int i = 1; i <= n - k; ++i) {
        CHECK(family.op(i).apply(basis, QKElement::basis(empty_partition(ctx))) ==
              QKElement::basis(special_partition(ctx, i)));
        for (std::size_t j = 0; j < basis.size(); ++j) {
          CHECK(family.op(i).apply(basis, QKElement::basis(basis.at(j))) == quantum_pieri(ctx, basis.at(j), i));
        }
        for (int j = 1; j <= n - k; ++j) {
          for (std::size_t idx = 0; idx < basis.size(); ++idx) {
            const QVector e = QVector::unit(basis.size(), ctx.D, idx);
            CHECK(family.op(i).apply(family.op(j).apply(e)) == family.op(j).apply(family.op(i).apply(e)));
          }
        }
      }
      for (const auto& mu : basis.partitions()) {
        CHECK(family.op(n - k).apply(basis, QKElement::basis(mu)) == seidel_H(ctx, QKElement::basis(mu)));
      }
      CHECK_THROWS(family.op(0));
      CHECK_THROWS(family.op(n - k + 1));
    }
  }
}
