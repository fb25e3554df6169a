#pragma once

// Partition counters pi, r, s, s' and the abelian-group descriptors built
// from them.

#include <cstdint>
#include <map>
#include <vector>

#include "json.hpp"

namespace invar {

struct AbelianGroupDesc {
  int64_t free_rank = 0;
  std::vector<int64_t> torsion;  // prime powers, sorted

  bool operator==(const AbelianGroupDesc&) const = default;
  nlohmann::json to_json() const;
};

// Counter with per-instance memo tables; all values exact.
class PartitionCounter {
 public:
  explicit PartitionCounter(int64_t p) : p_(p) {}

  // partitions of m with parts <= p
  int64_t pi(int64_t m);

  // partitions of m with parts in [2, p]; equals pi(m) - pi(m-1)
  int64_t r(int64_t m);

  // #{(i,j) : i >= 0, j > 0, (p^2-p)i + (p+1)j = m}
  int64_t s(int64_t m);

  // same with j >= 0; s' = s + 1 iff (p^2-p) | m
  int64_t s_prime(int64_t m);

  AbelianGroupDesc chow_group(int64_t m);
  // m is the topological degree.
  AbelianGroupDesc cohomology_group(int64_t m);

 private:
  int64_t p_;
  std::map<int64_t, int64_t> pi_memo_, r_memo_;
};

}  // namespace invar
