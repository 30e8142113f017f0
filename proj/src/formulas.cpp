#include "gr/formulas.hpp"

#include <algorithm>

#include "gr/error.hpp"

namespace gr {

namespace {

Count mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "value exceeds 64 bits");
  return r;
}

Count add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "value exceeds 64 bits");
  return r;
}

bool in_family_f(PatternId id) {
  if (id.family != PatternFamily::Catalog) return false;
  return (id.param >= 1 && id.param <= 6) || id.param == 10 || id.param == 11;
}

void require_k(int k) {
  if (k < 1) throw Error(ErrorCode::RangeViolation, "k must be >= 1");
}

int table_r2(PatternId id) {
  auto r = RamseyTable::standard().r2(id);
  if (!r) throw Error(ErrorCode::UnsupportedTarget, "no Ramsey number known for " + id.to_string());
  return *r;
}

int kipas_r2(int m, std::optional<int> r2) {
  if (r2) {
    if (*r2 <= m + 1)
      throw Error(ErrorCode::RangeViolation, "supplied R2 must exceed the pattern order");
    return *r2;
  }
  auto known = RamseyTable::standard().r2(PatternId::kipas(m));
  if (!known) throw Error(ErrorCode::MissingR2, "R2(kipas(" + std::to_string(m) + ")) is unknown");
  return *known;
}

}  // namespace

RamseyTable::RamseyTable() {
  entries_[PatternId::h(10)] = 7;
  for (int h : {1, 2, 3, 4}) entries_[PatternId::h(h)] = 9;
  for (int h : {5, 6, 11, 12}) entries_[PatternId::h(h)] = 10;
  entries_[PatternId::kipas(2)] = 6;
  entries_[PatternId::kipas(3)] = 10;
  entries_[PatternId::kipas(4)] = 10;
  p3_kipas4_ = 5;
}

const RamseyTable& RamseyTable::standard() {
  static const RamseyTable table;
  return table;
}

std::optional<int> RamseyTable::r2(PatternId id) const {
  if (id == PatternId::complete(3)) id = PatternId::kipas(2);
  auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Count pow5(int e) {
  if (e < 0) throw Error(ErrorCode::RangeViolation, "negative exponent");
  Count r = 1;
  for (int i = 0; i < e; ++i) r = mul(r, 5);
  return r;
}

PatternId formula_target(PatternId id) {
  if (id == PatternId::h(12)) return PatternId::kipas(4);
  if (id == PatternId::complete(3)) return PatternId::kipas(2);
  return id;
}

Count g_value(PatternId target, int k, std::optional<int> r2) {
  require_k(k);
  target = formula_target(target);
  if (target == PatternId::h(10)) {
    if (k == 1) return 4;
    if (k == 2) return table_r2(target) - 1;
    return k % 2 == 0 ? pow5(k / 2) : mul(2, pow5((k - 1) / 2));
  }
  if (in_family_f(target)) {
    const int t = table_r2(target) - 1;
    return k % 2 == 0 ? mul(t, pow5((k - 2) / 2)) : mul(4, pow5((k - 1) / 2));
  }
  if (target.family == PatternFamily::Kipas) {
    const int m = target.param;
    if (k == 1) return m;
    const int r = kipas_r2(m, r2);
    if (k % 2 == 0) {
      if (m % 2 == 1) return mul(r - 1, pow5((k - 2) / 2));
      return add(r - 1, mul(m / 2, pow5(k / 2) - 5));
    }
    return mul(std::max(2 * (r - 1), 5 * m), pow5((k - 3) / 2));
  }
  throw Error(ErrorCode::UnsupportedTarget, "no lower-bound formula for " + target.to_string());
}

Count w_value(int k, int s) {
  require_k(k);
  if (s < 0 || s > k) throw Error(ErrorCode::RangeViolation, "need 0 <= s <= k");
  if (s % 2 == 1) return mul(4, pow5((s - 1) / 2));
  Count base = mul(2, pow5(s / 2));
  return s < k ? base : base - 1;
}

GrValue gr_value(PatternId target, int k) {
  require_k(k);
  target = formula_target(target);
  if (target == PatternId::h(10)) {
    if (k == 1) return {5, "h10:k=1"};
    if (k == 2) return {7, "h10:k=2"};
    if (k % 2 == 0) return {pow5(k / 2) + 1, "h10:even"};
    return {mul(2, pow5((k - 1) / 2)) + 1, "h10:odd"};
  }
  if (in_family_f(target)) {
    const int r = table_r2(target);
    if (k % 2 == 0) return {mul(r - 1, pow5((k - 2) / 2)) + 1, "F:even"};
    return {mul(4, pow5((k - 1) / 2)) + 1, "F:odd"};
  }
  if (target == PatternId::kipas(2)) {
    if (k % 2 == 0) return {pow5(k / 2) + 1, "kipas2:even"};
    return {mul(2, pow5((k - 1) / 2)) + 1, "kipas2:odd"};
  }
  if (target == PatternId::kipas(3)) {
    if (k == 1) return {4, "kipas3:k=1"};
    if (k % 2 == 0) return {mul(9, pow5((k - 2) / 2)) + 1, "kipas3:even"};
    return {mul(18, pow5((k - 3) / 2)) + 1, "kipas3:odd"};
  }
  if (target == PatternId::kipas(4)) {
    GrValue v = gr_mixed_value(k, k);
    v.branch = "kipas4:" + v.branch;
    return v;
  }
  throw Error(ErrorCode::UnsupportedTarget, "no Gallai-Ramsey formula for " + target.to_string());
}

GrValue gr_mixed_value(int k, int s) {
  require_k(k);
  if (s < 0 || s > k) throw Error(ErrorCode::RangeViolation, "need 0 <= s <= k");
  if (s % 2 == 1) return {mul(4, pow5((s - 1) / 2)) + 1, "mixed:s-odd"};
  if (s < k) return {mul(2, pow5(s / 2)) + 1, "mixed:s-even<k"};
  return {mul(2, pow5(s / 2)), "mixed:s-even=k"};
}

GrValue conjecture_kipas(int m, int k, std::optional<int> r2) {
  require_k(k);
  if (m < 2) throw Error(ErrorCode::RangeViolation, "kipas needs m >= 2");
  if (k == 1) return {m + 1, "conjecture:k=1"};
  const int r = kipas_r2(m, r2);
  if (k % 2 == 0) {
    if (m % 2 == 1) return {mul(r - 1, pow5((k - 2) / 2)) + 1, "conjecture:k-even,m-odd"};
    return {add(r, mul(m / 2, pow5(k / 2) - 5)), "conjecture:k-even,m-even"};
  }
  return {mul(std::max(2 * (r - 1), 5 * m), pow5((k - 3) / 2)) + 1, "conjecture:k-odd"};
}

bool check_inequalities_star(PatternId target, int k) {
  if (!in_family_f(target))
    throw Error(ErrorCode::UnsupportedTarget, "inequalities are stated for h1..h6, h10, h11 only");
  if (k < 3) throw Error(ErrorCode::RangeViolation, "inequalities need k >= 3");
  const bool h10 = target == PatternId::h(10);
  const Count lhs = g_value(target, k) + 1;
  const Count prev = g_value(target, k - 1);
  const Count prev2 = g_value(target, k - 2);

  bool ok = lhs > prev + k + 1;
  if (!h10 || k >= 4) ok = ok && lhs > mul(2, prev);
  if (target == PatternId::h(5) || target == PatternId::h(6) || target == PatternId::h(11))
    ok = ok && lhs > mul(2, prev) + 2;
  if (!h10 || k >= 5) ok = ok && lhs > mul(5, prev2);
  return ok;
}

bool check_inequalities_star2(int k, int s) {
  if (k < 3) throw Error(ErrorCode::RangeViolation, "inequalities need k >= 3");
  if (s < 1 || s > k) throw Error(ErrorCode::RangeViolation, "need 1 <= s <= k");
  const Count lhs = w_value(k, s) + 1;
  bool ok = lhs > mul(2, w_value(k, s - 1));
  ok = ok && w_value(k, s - 1) >= w_value(k - 1, s - 1) && w_value(k - 1, s - 1) >= s + 1;
  if (s >= 2) {
    ok = ok && lhs > add(mul(4, w_value(k - 1, s - 2)), w_value(k - 2, s - 2));
    ok = ok && w_value(k, s - 2) == w_value(k - 1, s - 2) &&
         w_value(k - 1, s - 2) >= w_value(k - 2, s - 2) && w_value(k - 2, s - 2) >= 2;
  }
  return ok;
}

bool case3_recurrence_check(int m, int k_max, std::optional<int> r2) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorCode::ParityViolation, "m must be even and >= 2");
  if (k_max < 4 || k_max % 2 != 0)
    throw Error(ErrorCode::RangeViolation, "k_max must be even and >= 4");
  const int r = kipas_r2(m, r2);
  auto closed = [&](int k) { return add(r - 1, mul(m / 2, pow5(k / 2) - 5)); };
  if (closed(2) != r - 1) return false;
  for (int k = 4; k <= k_max; k += 2) {
    if (closed(k) != add(closed(k - 2), mul(2 * m, pow5((k - 2) / 2)))) return false;
  }
  return true;
}

}  // namespace gr
