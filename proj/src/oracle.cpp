#include "fermat/oracle.hpp"

#include <stdexcept>

namespace fermat {

namespace {

struct RawAction {
  BasisVector target;
  int sign;
  std::int64_t exponent;
};

RawAction act_raw(int n, std::int64_t m, const GroupElement& g, const BasisVector& v) {
  const std::int64_t side = basis_triangle_side(n, m, v.kind);
  const std::int64_t i = v.i;
  const std::int64_t j = v.j;
  const std::int64_t k = side - i - j;
  const int reflection_sign = (m % 2 == 0) ? 1 : -1;

  std::int64_t ti = i;
  std::int64_t tj = j;
  int sign = 1;
  switch (g.perm) {
    case Perm::identity: break;
    case Perm::s: ti = k; tj = i; break;
    case Perm::s2: ti = j; tj = k; break;
    case Perm::t: ti = k; tj = j; sign = reflection_sign; break;
    case Perm::ts: ti = j; tj = i; sign = reflection_sign; break;
    case Perm::st: ti = i; tj = k; sign = reflection_sign; break;
  }
  const std::int64_t exponent = residue(g.alpha * (ti + m) + g.beta * (tj + m), n);
  return {{v.kind, ti, tj}, sign, exponent};
}

}  // namespace

std::int64_t basis_triangle_side(int n, std::int64_t m, BasisKind kind) {
  const std::int64_t side = m * (n - 3);
  return kind == BasisKind::W ? side : side - n;
}

std::vector<BasisVector> basis(int n, std::int64_t m, BasisKind kind) {
  if (kind == BasisKind::I && m < 2) return {};
  const std::int64_t side = basis_triangle_side(n, m, kind);
  std::vector<BasisVector> out;
  for (std::int64_t i = 0; i <= side; ++i) {
    for (std::int64_t j = 0; i + j <= side; ++j) out.push_back({kind, i, j});
  }
  return out;
}

MonomialAction act(int n, std::int64_t m, const GroupElement& g, const BasisVector& v) {
  if (v.kind == BasisKind::I && m < 2) throw std::invalid_argument("I_m basis requires m >= 2");
  const RawAction raw = act_raw(n, m, g, v);
  return {raw.target, Cyclo::root_power(n, raw.exponent) * Cyclo(n, raw.sign)};
}

Cyclo trace_char(int n, std::int64_t m, const GroupElement& g, TraceKind kind) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  auto accumulate = [&](BasisKind basis_kind, int weight) {
    for (const BasisVector& v : basis(n, m, basis_kind)) {
      const RawAction raw = act_raw(n, m, g, v);
      if (raw.target == v) counts[static_cast<std::size_t>(raw.exponent)] += weight * raw.sign;
    }
  };
  if (kind != TraceKind::I) accumulate(BasisKind::W, 1);
  if (kind != TraceKind::W) accumulate(BasisKind::I, kind == TraceKind::V ? -1 : 1);
  return Cyclo::from_exponent_counts(n, std::span<const std::int64_t>(counts));
}

}  // namespace fermat
