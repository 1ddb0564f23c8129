#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sepform/mpoly.hpp"
#include "sepform/triangular.hpp"

namespace sepform {

struct CountComponent {
  int index = 0;
  /// Y-degree actually fed to the second decomposition (index, or less when
  /// the monic fiber polynomial had to be made squarefree first).
  int reduced_index = 0;
  bool squarefree_fallback = false;
  UPoly<PrimeField> a;
  XYPoly<PrimeField> b;
  XYPoly<PrimeField> b_monic;
  std::vector<TriangularPair<PrimeField>> second;
};

struct CountTrace {
  std::uint64_t b = 0;
  std::vector<CountComponent> components;
  std::size_t count = 0;
};

/// Smallest b in 0..d with L_P(b) != 0, d = total degree of P.
std::uint64_t choose_shear_value(const ModPoly& p);

/// Number of distinct points of V(P, Q) over the algebraic closure of F_mu,
/// plus the intermediate decompositions. The prime must exceed the total
/// degree of both inputs. `forced_b` overrides the shear value (it must keep
/// Lc_Y of the sheared P constant).
CountTrace count_distinct_mod(const ModPoly& p, const ModPoly& q, std::optional<std::uint64_t> forced_b = std::nullopt);

}  // namespace sepform
