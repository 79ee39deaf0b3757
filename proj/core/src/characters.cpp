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

#include "metasym/characters.hpp"

#include "metasym/cocycle.hpp"
#include "metasym/errors.hpp"

namespace metasym {

UnramifiedCharacter::UnramifiedCharacter(Rational value_at_uniformizer, Sign sign_at_minus_one)
    : value_(std::move(value_at_uniformizer)), sign_(sign_at_minus_one) {
  if (value_ == 0) throw DomainError("character value must be nonzero");
}

ScaledRoot UnramifiedCharacter::operator()(const Rational& a, const LocalPlace& v) const {
  if (a == 0) throw DomainError("character evaluated at zero");
  if (v.is_real()) return {1, EighthRoot::from_sign(a < 0 ? sign_ : Sign::plus())};
  return {metasym::pow(value_, valuation(a, v.prime())), EighthRoot::one()};
}

ScaledRoot pow(const ScaledRoot& x, long e) { return {metasym::pow(x.scale, e), x.root.pow(e)}; }

namespace {
void require_even_torus(const StructuredElement& t, const LocalPlace& v) {
  if (!t.in_even_torus(v)) throw PreconditionError("element is not in the even torus T^e");
}
}  // namespace

ScaledRoot omega_chi_psi(const StructuredElement& t, Sign xi, const UnramifiedCharacter& chi,
                         const AdditiveCharacter& psi) {
  const LocalPlace& v = psi.place();
  require_even_torus(t, v);
  auto d = t.diagonal();
  EighthRoot root = EighthRoot::from_sign(xi);
  for (size_t i = 0; i + 1 < d.size(); i += 2) root = root * mu(d[i], psi);
  return ScaledRoot{1, root} * chi(t.det(), v);
}

ScaledRoot omega_chi_psi_a(const StructuredElement& t, Sign xi, const UnramifiedCharacter& chi,
                           const AdditiveCharacter& psi, const Rational& a) {
  const LocalPlace& v = psi.place();
  require_even_torus(t, v);
  auto d = t.diagonal();
  EighthRoot root = EighthRoot::from_sign(xi);
  for (size_t i = 0; i + 1 < d.size(); i += 2)
    root = root * (i == 0 ? mu(d[i], psi.twisted(a)) : mu(d[i], psi)).inverse();
  return ScaledRoot{1, root} * chi(t.det(), v);
}

int central_rank(CentralKind kind, int q) {
  return (kind == CentralKind::Odd || kind == CentralKind::MQOdd) ? 2 * q + 1 : 2 * q;
}

ScaledRoot central_char_eval(CentralKind kind, const Rational& a, Sign xi, int q, const UnramifiedCharacter& chi,
                             const UnramifiedCharacter& eta, const AdditiveCharacter& psi) {
  if (q < 1) throw DomainError("block count q must be positive");
  const LocalPlace& v = psi.place();
  ScaledRoot out{1, EighthRoot::from_sign(xi)};
  EighthRoot m = mu(a, psi);
  switch (kind) {
    case CentralKind::Odd: return out * pow(chi(a, v), 2 * q + 1) * ScaledRoot{1, m.pow(q)};
    case CentralKind::EvenSquare: return out * pow(chi(a, v), q) * ScaledRoot{1, m.pow(q)};
    case CentralKind::MQEven: return out * pow(chi(a, v), 2 * q) * eta(a, v) * ScaledRoot{1, m.pow(-q)};
    case CentralKind::MQOdd: return out * pow(chi(a, v), q) * eta(a, v) * ScaledRoot{1, m.pow(-q)};
  }
  throw DomainError("unknown central character kind");
}

Complex nilpotent_char_eval(NilpotentKind kind, const StructuredElement& n, const AdditiveCharacter& psi,
                            const std::vector<Rational>& params) {
  if (!n.is_unipotent()) {
    if (!(n.is_central() && n.diagonal()[0] == 1))
      throw PreconditionError("nilpotent characters need a unipotent upper triangular element");
    return 1.0;
  }
  const Matrix& x = n.unipotent_matrix();
  const int r = n.rank();
  auto at = [&](int i, int j) -> const Rational& { return x[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; };
  Rational arg = 0;
  switch (kind) {
    case NilpotentKind::SemiWhittaker:
      for (int i = r - 1; i >= 1; i -= 2) arg += at(i, i + 1);
      break;
    case NilpotentKind::PsiNa:
      if (params.size() != 1) throw DomainError("psiNa takes exactly one parameter");
      if (r >= 2) arg += params[0] * at(1, 2);
      for (int i = 2; i < r; ++i) arg += at(i, i + 1);
      break;
    case NilpotentKind::PsiTuple:
      if (params.size() * 2 > static_cast<size_t>(r)) throw DomainError("too many tuple parameters for the rank");
      for (size_t i = 0; i < params.size(); ++i)
        arg += params[i] * at(static_cast<int>(2 * i + 1), static_cast<int>(2 * i + 2));
      break;
  }
  return psi(arg);
}

bool torus_character_check(const StructuredElement& t, const StructuredElement& t2, Sign xi, Sign xi2,
                           const UnramifiedCharacter& chi, const AdditiveCharacter& psi) {
  ScaledRoot lhs = omega_chi_psi(t, xi, chi, psi) * omega_chi_psi(t2, xi2, chi, psi) *
                   ScaledRoot{1, EighthRoot::from_sign(sigma_torus_even_reduced(t, t2, psi.place()))};
  return lhs == omega_chi_psi(t * t2, xi * xi2, chi, psi);
}

bool central_character_check(CentralKind kind, const Rational& a, const Rational& b, int q,
                             const UnramifiedCharacter& chi, const UnramifiedCharacter& eta,
                             const AdditiveCharacter& psi) {
  int r = central_rank(kind, q);
  Sign s = sigma_eval(StructuredElement::central(a, r), StructuredElement::central(b, r), psi.place());
  ScaledRoot lhs = central_char_eval(kind, a, Sign::plus(), q, chi, eta, psi) *
                   central_char_eval(kind, b, Sign::plus(), q, chi, eta, psi) * ScaledRoot{1, EighthRoot::from_sign(s)};
  return lhs == central_char_eval(kind, a * b, Sign::plus(), q, chi, eta, psi);
}

}  // namespace metasym
