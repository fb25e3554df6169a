#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "invar/additive.hpp"

using namespace invar;

namespace {

// brute-force partition count with parts <= maxpart
int64_t pi_brute(int64_t m, int64_t maxpart, int64_t largest) {
  if (m == 0) return 1;
  int64_t total = 0;
  for (int64_t part = 1; part <= std::min(maxpart, std::min<int64_t>(largest, m)); ++part)
    total += pi_brute(m - part, maxpart, part);
  return total;
}

int64_t r_brute(int64_t m, int64_t p) {
  if (m == 0) return 1;
  int64_t total = 0;
  // partitions with parts in [2, p]: count by direct recursion
  std::vector<std::vector<int64_t>> memo(m + 1, std::vector<int64_t>(p + 1, -1));
  auto go = [&](auto&& self, int64_t rem, int64_t maxp) -> int64_t {
    if (rem == 0) return 1;
    if (maxp < 2) return 0;
    if (memo[rem][maxp] >= 0) return memo[rem][maxp];
    int64_t tot = self(self, rem, maxp - 1);
    if (rem >= maxp) tot += self(self, rem - maxp, maxp);
    return memo[rem][maxp] = tot;
  };
  total = go(go, m, p);
  return total;
}

}  // namespace

TEST_CASE("pi against brute force") {
  for (int64_t p : {2, 3, 5, 7}) {
    PartitionCounter c(p);
    for (int64_t m = 0; m <= 25; ++m) CHECK(c.pi(m) == pi_brute(m, p, m));
  }
}

TEST_CASE("pi known values") {
  PartitionCounter c3(3);
  // parts <= 3: 1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14
  std::vector<int64_t> expect = {1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14};
  for (std::size_t m = 0; m < expect.size(); ++m) CHECK(c3.pi(m) == expect[m]);
}

TEST_CASE("r equals the pi difference and the direct count") {
  for (int64_t p : {3, 5, 7, 11}) {
    PartitionCounter c(p);
    for (int64_t m = 1; m <= 40; ++m) {
      CHECK(c.r(m) == c.pi(m) - c.pi(m - 1));
      CHECK(c.r(m) == r_brute(m, p));
    }
    CHECK(c.r(0) == 1);
  }
}

TEST_CASE("s and s_prime") {
  PartitionCounter c(3);  // p^2-p = 6, p+1 = 4
  CHECK(c.s(4) == 1);     // j=1, i=0
  CHECK(c.s(6) == 0);
  CHECK(c.s(10) == 1);    // 6+4
  CHECK(c.s(8) == 1);     // j=2
  CHECK(c.s(12) == 1);    // j=3; 6i+4j=12 with j>0: j=3 only
  CHECK(c.s_prime(6) == c.s(6) + 1);
  CHECK(c.s_prime(4) == c.s(4));
  for (int64_t m = 0; m <= 100; ++m) {
    int64_t extra = (m % 6 == 0) ? 1 : 0;
    CHECK(c.s_prime(m) == c.s(m) + extra);
  }
}

TEST_CASE("group descriptors") {
  PartitionCounter c(3);
  // degree 4: one free generator (partition 2+2) and one Z/3 (rho)
  AbelianGroupDesc g = c.chow_group(4);
  CHECK(g.free_rank == 1);
  CHECK(g.torsion == std::vector<int64_t>{3});
  // degree 0 and 1
  CHECK(c.chow_group(0) == AbelianGroupDesc{1, {}});
  CHECK(c.chow_group(1) == AbelianGroupDesc{0, {}});
  // even cohomology doubles the grading; odd degrees carry beta classes
  CHECK(c.cohomology_group(8) == c.chow_group(4));
  CHECK(c.cohomology_group(3) == AbelianGroupDesc{0, {3}});
  CHECK(c.cohomology_group(1) == AbelianGroupDesc{0, {}});
}

TEST_CASE("json form") {
  AbelianGroupDesc g{2, {3, 9}};
  auto j = g.to_json();
  CHECK(j["rank"] == 2);
  CHECK(j["torsion"].size() == 2);
  CHECK(j["torsion"][0] == "3");
}
