#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gr/pattern.hpp"

namespace gr {

using Count = std::int64_t;

/// Two-color Ramsey numbers the formulas rely on. Closed world: lookups of
/// anything else return nullopt.
class RamseyTable {
 public:
  static const RamseyTable& standard();

  /// R_2(id); h12 and kipas(4) share an entry, as do k3 and kipas(2).
  std::optional<int> r2(PatternId id) const;
  /// R(P3, kipas(4)).
  int p3_vs_kipas4() const noexcept { return p3_kipas4_; }
  const std::map<PatternId, int>& entries() const noexcept { return entries_; }

 private:
  RamseyTable();
  std::map<PatternId, int> entries_;
  int p3_kipas4_ = 0;
};

/// Closed-form value plus the name of the branch that produced it.
struct GrValue {
  Count value = 0;
  std::string branch;
};

/// Maps aliases onto the id the formulas are keyed by (h12 -> kipas(4),
/// complete(3) -> kipas(2)).
PatternId formula_target(PatternId id);

/// Size g(k) of the lower-bound construction; GR_k >= g(k) + 1.
/// `r2` supplies R_2 for kipas(m) outside the table.
Count g_value(PatternId target, int k, std::optional<int> r2 = std::nullopt);

/// Size w(k, s) of the mixed construction avoiding kipas(4) in colors 1..s
/// and P3 in colors s+1..k.
Count w_value(int k, int s);

GrValue gr_value(PatternId target, int k);

/// GR_k((k-s) P3, s kipas(4)). For even s == k the value is w + 1 = 2*5^(s/2)
/// with no extra +1, unlike the other two branches.
GrValue gr_mixed_value(int k, int s);

GrValue conjecture_kipas(int m, int k, std::optional<int> r2 = std::nullopt);

/// Lower-bound inequalities relating g(k), g(k-1), g(k-2) for the
/// five-vertex targets (h1..h6, h10, h11). Requires k >= 3.
bool check_inequalities_star(PatternId target, int k);

/// Inequalities relating w(k, s), w(k, s-1), w(k-1, s-2), w(k-2, s-2),
/// including the monotone chains they depend on. Requires k >= 3, 1 <= s <= k.
bool check_inequalities_star2(int k, int s);

/// Checks that R2 + (m/2)(5^(k/2) - 5) - 1 satisfies
/// g(k) = g(k-2) + 2m 5^((k-2)/2) with g(2) = R2 - 1, for even k <= k_max.
bool case3_recurrence_check(int m, int k_max, std::optional<int> r2 = std::nullopt);

/// 5^e with overflow detection.
Count pow5(int e);

}  // namespace gr
