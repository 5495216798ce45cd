#include <doctest.h>

#include "qkgr/curve_nbhd.hpp"
#include "support.hpp"

using namespace qkgr;
using test::P;

TEST_SUITE("curve_nbhd") {
  TEST_CASE("curve neighborhoods") {
    const auto ctx = GrContext::make(4, 9);
    CHECK(curve_neighborhood(ctx, P(ctx, "4,3,2,1"), 1) == Partition({2, 1, 0, 0}));
    CHECK(rim_peel(ctx, P(ctx, "4,3,2,1")) == Partition({2, 1, 0, 0}));
    CHECK(rim_peel(ctx, empty_partition(ctx)) == empty_partition(ctx));
    for (const auto& lambda : all_partitions(ctx)) {
      CHECK(curve_neighborhood(ctx, lambda, 0) == lambda);
      CHECK(curve_neighborhood(ctx, lambda, 4) == empty_partition(ctx));
      Partition peeled = lambda;
      for (int d = 1; d <= 4; ++d) {
        peeled = rim_peel(ctx, peeled);
        CHECK(curve_neighborhood(ctx, lambda, d) == peeled);
      }
    }
  }

  TEST_CASE("special neighborhoods") {
    const auto ctx = GrContext::make(2, 4);
    // Padding eta_0 = n forces the first row to n - k.
    CHECK(gamma_special(ctx, P(ctx, "1,0"), 1) == Partition({2, 1}));
    CHECK_THROWS(gamma_special(ctx, P(ctx, "1,0"), 0));
    CHECK_THROWS(gamma_special(ctx, P(ctx, "1,0"), 2));

    const auto c38 = GrContext::make(3, 8);
    CHECK(gamma_special(c38, full_rectangle(c38), 2) == full_rectangle(c38));
  }

  TEST_CASE("special neighborhood equals a shifted curve neighborhood") {
    for (int n = 3; n <= 9; ++n) {
      for (int k = 1; k < n; ++k) {
        const auto ctx = GrContext::make(k, n);
        for (const auto& mu : all_partitions(ctx)) {
          if (mu[k - 1] == 0) continue;
          const Partition eta = dual(ctx, mu);
          for (int d = 1; d < std::min(k + 1, n - k); ++d) {
            CHECK(gamma_special(ctx, eta, d) ==
                  dual(ctx, curve_neighborhood(ctx, dual(ctx, seidel_up(ctx, eta, 1)), d - 1)));
          }
        }
      }
    }
  }
}
