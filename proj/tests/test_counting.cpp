#include <catch_amalgamated.hpp>

#include <array>
#include <cstddef>
#include <thread>
#include <vector>

#include "bpfact/counting.hpp"
#include "bpfact/oracle.hpp"

using namespace bpfact;

namespace {

// IB_2(n, t) for n = 10..20, t = 1..10, reference values.
constexpr std::array<std::array<unsigned long, 10>, 11> kReference = {{
    {284, 12, 224, 40, 168, 72, 96, 64, 32, 32},
    {568, 0, 472, 0, 416, 0, 336, 0, 192, 0},
    {1116, 20, 856, 88, 656, 176, 448, 224, 224, 160},
    {2232, 0, 1752, 0, 1488, 0, 1248, 0, 896, 0},
    {4424, 40, 3328, 176, 2544, 432, 1856, 640, 1152, 640},
    {8848, 0, 6736, 0, 5440, 0, 4576, 0, 3584, 0},
    {17622, 74, 13100, 372, 9896, 984, 7408, 1744, 5088, 2080},
    {35244, 0, 26348, 0, 20536, 0, 16784, 0, 13664, 0},
    {70340, 148, 51936, 760, 38824, 2248, 29152, 4416, 21088, 6240},
    {140680, 0, 104168, 0, 79168, 0, 62800, 0, 51008, 0},
    {281076, 284, 206744, 1592, 153344, 4992, 114688, 10912, 84704, 17312},
}};

}  // namespace

TEST_CASE("unbordered counts") {
  CHECK(unbordered_count(2, 0) == 1);
  CHECK(unbordered_count(2, 4) == oracle::unbordered_bruteforce(2, 4));
  CHECK(unbordered_count(2, 4) == 6);
  CHECK(unbordered_count(2, 10) == 284);
  CHECK_THROWS_AS(unbordered_count(1, 3), InvalidArgument);

  for (unsigned k : {2u, 3u}) {
    const std::size_t n_max = k == 2 ? 14 : 9;
    for (std::size_t n = 0; n <= n_max; ++n) {
      REQUIRE(unbordered_count(k, n) == oracle::unbordered_bruteforce(k, n));
    }
  }
}

TEST_CASE("IB counts reproduce the reference table") {
  for (std::size_t n = 10; n <= 20; ++n) {
    for (std::size_t t = 1; t <= 10; ++t) {
      INFO("n=" << n << " t=" << t);
      REQUIRE(ib_count(2, n, t) == kReference[n - 10][t - 1]);
    }
  }
  CHECK(ib_count(2, 11, 2) == 0);
  CHECK(ib_count(2, 0, 0) == 1);
  CHECK(ib_count(2, 5, 0) == 0);
  CHECK(ib_count(2, 0, 3) == 0);
  CHECK(ib_count(2, 4, 9) == 0);
  CHECK_THROWS_AS(ib_count(0, 4, 1), InvalidArgument);
}

TEST_CASE("ib_table") {
  const auto t = ib_table(2, {10, 20}, {1, 10});
  CHECK(t.entries.size() == 110);
  CHECK(t.at(16, 2) == 74);
  CHECK(t.at(20, 10) == 17312);

  const auto base = ib_table(2, {0, 0}, {0, 0});
  CHECK(base.entries.size() == 1);
  CHECK(base.at(0, 0) == 1);

  // Width n means palindrome: 2^ceil(10/2).
  CHECK(ib_table(2, {10, 10}, {10, 10}).at(10, 10) == 32);

  CHECK_THROWS_AS(ib_table(2, {5, 4}, {1, 1}), InvalidArgument);
}

TEST_CASE("IB recurrence structure") {
  for (unsigned k : {2u, 3u, 5u}) {
    for (std::size_t n = 0; n <= 30; ++n) {
      BigInt row = 0;
      for (std::size_t t = 0; t <= n; ++t) {
        const BigInt v = ib_count(k, n, t);
        REQUIRE(v >= 0);
        if (n % 2 == 1 && t % 2 == 0) {
          REQUIRE(v == 0);
        }
        row += v;
      }
      REQUIRE(row == ipow(k, n));
      if (n > 0) {
        REQUIRE(ib_count(k, n, 1) == unbordered_count(k, n));
      }
      if (n % 2 == 0 && n > 0) {
        REQUIRE(ib_count(k, n, 2) == unbordered_count(k, n / 2));
      }
    }
    for (std::size_t n = 0; n <= 20; ++n) {
      REQUIRE(ib_count(k, n, n) == ipow(k, (n + 1) / 2));
    }
  }
}

TEST_CASE("IB recurrence against the exhaustive histogram") {
  for (std::size_t n = 0; n <= 14; ++n) {
    const auto hist = oracle::ib_row_bruteforce(2, n);
    for (std::size_t t = 0; t <= n; ++t) {
      const auto it = hist.find(t);
      REQUIRE(ib_count(2, n, t) == (it == hist.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("width bound k^(n+1-t/2) holds for small n and fails from n = 11") {
  // Squared form IB^2 k^t <= k^(2n+2) keeps odd t in integers.
  auto within = [](unsigned k, std::size_t n, std::size_t t) {
    const BigInt ib = ib_count(k, n, t);
    return ib * ib * ipow(k, t) <= ipow(k, 2 * n + 2);
  };
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t t = 1; t <= n; ++t) {
      REQUIRE(within(2, n, t));
    }
  }
  // 192 binary words of length 11 have largest width 9; the bound allows 2^7.5.
  CHECK(ib_count(2, 11, 9) == 192);
  CHECK(oracle::ib_row_bruteforce(2, 11).at(9) == 192);
  CHECK_FALSE(within(2, 11, 9));

  // The trivial bound IB <= k^n of course holds.
  for (unsigned k : {2u, 3u}) {
    for (std::size_t n = 1; n <= 30; ++n) {
      for (std::size_t t = 1; t <= n; ++t) {
        REQUIRE(ib_count(k, n, t) <= ipow(k, n));
      }
    }
  }
}

TEST_CASE("expected width is exact") {
  CHECK(expected_width(2, 1) == 1);
  // Dot product of row n = 10 of the reference table with t = 1..10.
  BigInt weighted = 0;
  for (std::size_t t = 1; t <= 10; ++t) {
    weighted += BigInt(kReference[0][t - 1]) * t;
  }
  CHECK(weighted == 4204);
  CHECK(expected_width(2, 10) == ExactRatio(4204, 1024));
  CHECK_THROWS_AS(expected_width(2, 0), InvalidArgument);
  CHECK_THROWS_AS(expected_width(1, 3), InvalidArgument);

  for (std::size_t n = 1; n <= 40; ++n) {
    const ExactRatio e = expected_width(3, n);
    REQUIRE(e >= 0);
    REQUIRE(e <= n);
  }
}

TEST_CASE("unique border counts") {
  CHECK(unique_border_count_t(2, 3, 2) == 0);
  CHECK(unique_border_count_t(2, 4, 1) == 6);
  CHECK(unique_border_count_t(2, 6, 3) == 4);
  CHECK(unique_border_count_t(2, 6, 3) == unbordered_count(2, 3));
  CHECK(unique_border_count(2, 2) == 2);
  CHECK(unique_border_count(2, 4) == 8);

  // Frozen from the brute-force count over all 16 words.
  const auto b4 = oracle::unique_border_bruteforce(2, 4);
  CHECK(b4.total == 8);
  CHECK(b4.by_length == oracle::Histogram{{1, 6}, {2, 2}});
  const auto b3 = oracle::unique_border_bruteforce(2, 3);
  CHECK(b3.total == 2);
  CHECK(unique_border_count(2, 3) == 2);

  CHECK_THROWS_AS(unique_border_count_t(2, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(unique_border_count_t(2, 3, 0), InvalidArgument);
  CHECK_THROWS_AS(unique_border_count(2, 1), InvalidArgument);
  CHECK_THROWS_AS(unique_border_count_t(1, 4, 1), InvalidArgument);

  for (unsigned k : {2u, 3u}) {
    const std::size_t n_max = k == 2 ? 14 : 9;
    for (std::size_t n = 2; n <= n_max; ++n) {
      const auto brute = oracle::unique_border_bruteforce(k, n);
      REQUIRE(unique_border_count(k, n) == brute.total);
      for (std::size_t t = 1; t < n; ++t) {
        const auto it = brute.by_length.find(t);
        REQUIRE(unique_border_count_t(k, n, t) == (it == brute.by_length.end() ? 0 : it->second));
      }
    }
  }
}

TEST_CASE("unique border bound B(n,t) <= k^(n-t)") {
  for (unsigned k : {2u, 3u, 7u}) {
    for (std::size_t n = 2; n <= 40; ++n) {
      for (std::size_t t = 1; 2 * t <= n; ++t) {
        const BigInt b = unique_border_count_t(k, n, t);
        REQUIRE(b >= 0);
        REQUIRE(b <= ipow(k, n - t));
      }
    }
  }
}

TEST_CASE("unique border probability") {
  CHECK(unique_border_probability(2, 4) == ExactRatio(1, 2));
  CHECK(unique_border_probability(2, 2) == ExactRatio(1, 2));
  for (std::size_t n = 2; n <= 40; ++n) {
    const auto p = unique_border_probability(3, n);
    REQUIRE(p >= 0);
    REQUIRE(p <= 1);
  }
}

TEST_CASE("to_decimal rounds half to even") {
  CHECK(to_decimal(ExactRatio(1, 8), 2) == "0.12");
  CHECK(to_decimal(ExactRatio(3, 8), 2) == "0.38");
  CHECK(to_decimal(ExactRatio(1, 3), 4) == "0.3333");
  CHECK(to_decimal(ExactRatio(2, 3), 4) == "0.6667");
  CHECK(to_decimal(ExactRatio(4204, 1024), 4) == "4.1055");
  CHECK(to_decimal(ExactRatio(7, 1), 0) == "7");
  CHECK(to_decimal(ExactRatio(-1, 8), 2) == "-0.12");
  CHECK(to_decimal(ExactRatio(1, 400), 2) == "0.00");
}

TEST_CASE("shared tables return identical values to concurrent callers") {
  CountTables tables(4);
  std::vector<BigInt> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] {
      BigInt sum = 0;
      for (std::size_t n = 0; n <= 60; ++n) {
        sum += tables.ib(n, n / 2) + tables.unique_border(n, 1);
      }
      results[i] = sum;
    });
  }
  for (auto& t : threads) {
    t.join();
  }
  for (const auto& r : results) {
    CHECK(r == results.front());
  }
  CHECK(&tables_for(4) == &tables_for(4));
}
