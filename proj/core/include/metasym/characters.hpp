// Copyright 2026 The metasym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "metasym/local_arith.hpp"
#include "metasym/structured_element.hpp"
#include "metasym/weil_index.hpp"

namespace metasym {

/// A character of Q_v^x that is trivial on p-adic units: chi(p) = value at
/// finite places, chi(-1) = sign at the real place.
class UnramifiedCharacter {
 public:
  explicit UnramifiedCharacter(Rational value_at_uniformizer = 1, Sign sign_at_minus_one = Sign::plus());
  static UnramifiedCharacter trivial() { return UnramifiedCharacter(); }

  const Rational& value_at_uniformizer() const { return value_; }
  Sign sign_at_minus_one() const { return sign_; }
  ScaledRoot operator()(const Rational& a, const LocalPlace& v) const;

 private:
  Rational value_;
  Sign sign_;
};

ScaledRoot pow(const ScaledRoot& x, long e);

/// Eq. (2.3) style torus character: xi chi(det t) mu(t_1) mu(t_3) ...
/// PreconditionError unless t is in T^e at the place of psi.
ScaledRoot omega_chi_psi(const StructuredElement& t, Sign xi, const UnramifiedCharacter& chi,
                         const AdditiveCharacter& psi);

/// xi chi(det t) mu_{psi_a}(t_1)^{-1} mu(t_3)^{-1} mu(t_5)^{-1} ...
ScaledRoot omega_chi_psi_a(const StructuredElement& t, Sign xi, const UnramifiedCharacter& chi,
                           const AdditiveCharacter& psi, const Rational& a);

enum class CentralKind {
  Odd,         // xi chi(a)^{2q+1} mu(a)^q on GL_{2q+1}
  EvenSquare,  // xi chi(a)^q mu(a)^q on GL_{2q}
  MQEven,      // xi chi(a)^{2q} eta(a) mu(a)^{-q} on GL_{2q}
  MQOdd,       // xi chi(a)^q eta(a) mu(a)^{-q} on GL_{2q+1}
};

/// Rank of the group whose center the kind lives on.
int central_rank(CentralKind kind, int q);

ScaledRoot central_char_eval(CentralKind kind, const Rational& a, Sign xi, int q, const UnramifiedCharacter& chi,
                             const UnramifiedCharacter& eta, const AdditiveCharacter& psi);

enum class NilpotentKind {
  SemiWhittaker,  // psi(x_{r-1,r} + x_{r-3,r-2} + ...)
  PsiNa,          // psi(a x_{12} + sum_{i>=2} x_{i,i+1}); params = {a}
  PsiTuple,       // psi(a_1 x_{12} + a_2 x_{34} + ...); params = {a_1, ..., a_q}
};

/// PreconditionError unless n is unipotent upper triangular.
Complex nilpotent_char_eval(NilpotentKind kind, const StructuredElement& n, const AdditiveCharacter& psi,
                            const std::vector<Rational>& params = {});

/// value(t, xi) value(t', xi') sigma(t, t') == value(tt', xi xi').
bool torus_character_check(const StructuredElement& t, const StructuredElement& t2, Sign xi, Sign xi2,
                           const UnramifiedCharacter& chi, const AdditiveCharacter& psi);

/// The same multiplicativity for a central character kind.
bool central_character_check(CentralKind kind, const Rational& a, const Rational& b, int q,
                             const UnramifiedCharacter& chi, const UnramifiedCharacter& eta,
                             const AdditiveCharacter& psi);

}  // namespace metasym
