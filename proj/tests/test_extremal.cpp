#include <catch_amalgamated.hpp>

#include "bpfact/extremal.hpp"
#include "bpfact/factorization.hpp"
#include "bpfact/oracle.hpp"

using namespace bpfact;

TEST_CASE("closed form for the maximum smallest width") {
  CHECK(max_smallest_width(2, 8) == 6);
  CHECK(max_smallest_width(2, 14) == 11);
  CHECK(max_smallest_width(3, 7) == 7);
  CHECK(max_smallest_width(2, 0) == 0);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(max_smallest_width(2, 16 + i) == 12 + std::min<std::size_t>(i, 5));
  }
  CHECK_THROWS_AS(max_smallest_width(1, 5), InvalidArgument);
}

TEST_CASE("witness words") {
  CHECK(max_width_witness(2, 8) == from_digits("01011001"));
  CHECK(smallest_width(max_width_witness(2, 8)) == 6);
  CHECK(max_width_witness(3, 6) == from_digits("012210"));
  CHECK(smallest_width(max_width_witness(3, 6)) == 6);
  CHECK(max_width_witness(2, 1) == from_digits("0"));
  CHECK(max_width_witness(2, 0).empty());
  CHECK(max_width_witness(4, 9) == from_digits("012010210"));
  CHECK_THROWS_AS(max_width_witness(1, 5), InvalidArgument);
}

TEST_CASE("inserting a core between 0101 and 1001 breaks the peel") {
  // 0101.00.1001 peels 01 and then the non-overlapping border 010.
  CHECK(smallest_width(from_digits("0101001001")) == 4);
  CHECK(smallest_width(max_width_witness(2, 10)) == 8);
}

TEST_CASE("witnesses attain the closed form") {
  for (unsigned k : {2u, 3u, 4u}) {
    for (std::size_t n = 1; n <= 200; ++n) {
      const Word w = max_width_witness(k, n);
      INFO("k=" << k << " n=" << n << " w=" << to_digits(w));
      REQUIRE(w.size() == n);
      for (Symbol c : w) {
        REQUIRE(c < k);
      }
      REQUIRE(smallest_width(w) == max_smallest_width(k, n));
    }
  }
}

TEST_CASE("closed form matches brute force at small lengths") {
  for (std::size_t n = 0; n <= 14; ++n) {
    REQUIRE(oracle::maxwidth_bruteforce(2, n).width == max_smallest_width(2, n));
  }
  for (std::size_t n = 0; n <= 9; ++n) {
    REQUIRE(oracle::maxwidth_bruteforce(3, n).width == max_smallest_width(3, n));
  }
}
