#pragma once

// Polynomial Tambara functors T[X] = T (x) Omega[A], with A the additive
// Burnside semi-ring functor and X the class of (G/G -> G/G). Levels of
// Omega[A] are infinite, so everything is cut at the configured degree.

#include <utility>

#include "tambara/burnside.hpp"
#include "tambara/tambarization.hpp"
#include "tambara/tensor.hpp"

namespace tambara {

using PolynomialOmega = Tambarization<BurnsideSemiring>;

template <Tambara T>
using Polynomial = TensorProduct<T, PolynomialOmega>;

/// Omega[X]: for T = Omega the unit law removes the tensor.
inline PolynomialOmega polynomial_omega(const GroupPtr& g, Caps caps = {}) { return PolynomialOmega(BurnsideSemiring(g, caps), caps); }

/// T[X] cut at caps.degree. Levels whose relations hit the cap report
/// `truncated`.
template <Tambara T>
Polynomial<T> polynomial(const T& t, Caps caps = {}) {
  return Polynomial<T>(t, polynomial_omega(t.group(), caps), caps);
}

/// X in Omega[X](G/G).
inline PolynomialOmega::Element indeterminate(const PolynomialOmega& p) {
  GSet pt = point_set(p.group());
  return p.decompose(identity_map(pt), p.inner().indeterminate());
}

/// The Tambara morphism Omega[X] -> S with X |-> s, for s in S(G/G).
template <Tambara S>
Morphism<PolynomialOmega, S> evaluation(const PolynomialOmega& p, const S& s, const typename S::Element& value) {
  auto psi0 = morphism_from_GG_element(p.inner(), MultiplicativePart<S>(s), value);
  return extend_to_tambarization(p, s, psi0);
}

}  // namespace tambara
