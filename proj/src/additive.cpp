#include "invar/additive.hpp"

#include <stdexcept>

namespace invar {

nlohmann::json AbelianGroupDesc::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (auto x : torsion) t.push_back(std::to_string(x));
  return {{"rank", free_rank}, {"torsion", t}};
}

namespace {

// partitions of m with parts in [lo, hi], by DP over allowed parts
int64_t count_parts_in(int64_t m, int64_t lo, int64_t hi) {
  if (m < 0) return 0;
  std::vector<int64_t> dp(m + 1, 0);
  dp[0] = 1;
  for (int64_t k = lo; k <= hi; ++k)
    for (int64_t v = k; v <= m; ++v) dp[v] += dp[v - k];
  return dp[m];
}

}  // namespace

int64_t PartitionCounter::pi(int64_t m) {
  if (m < 0) return 0;
  auto it = pi_memo_.find(m);
  if (it != pi_memo_.end()) return it->second;
  int64_t v = count_parts_in(m, 1, p_);
  pi_memo_[m] = v;
  return v;
}

int64_t PartitionCounter::r(int64_t m) {
  if (m < 0) return 0;
  auto it = r_memo_.find(m);
  if (it != r_memo_.end()) return it->second;
  int64_t v = count_parts_in(m, 2, p_);
  r_memo_[m] = v;
  return v;
}

int64_t PartitionCounter::s(int64_t m) {
  int64_t a = p_ * p_ - p_, b = p_ + 1, n = 0;
  for (int64_t j = 1; j * b <= m; ++j)
    if ((m - j * b) % a == 0) ++n;
  return n;
}

int64_t PartitionCounter::s_prime(int64_t m) {
  return s(m) + (m % (p_ * p_ - p_) == 0 ? 1 : 0);
}

AbelianGroupDesc PartitionCounter::chow_group(int64_t m) {
  if (m < 0) throw std::invalid_argument("negative degree");
  AbelianGroupDesc g;
  g.free_rank = r(m);
  g.torsion.assign(s(m), p_);
  return g;
}

AbelianGroupDesc PartitionCounter::cohomology_group(int64_t m) {
  if (m < 0) throw std::invalid_argument("negative degree");
  if (m % 2 == 0) return chow_group(m / 2);
  AbelianGroupDesc g;
  if (m >= 3) g.torsion.assign(s_prime((m - 3) / 2), p_);
  return g;
}

}  // namespace invar
