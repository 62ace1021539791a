#pragma once

// Ordinary cohomology of a presentation, cup products, and the gauge action
// e^zeta relating twisted differentials.

#include "twistcoh/cdga.hpp"

#include <stdexcept>

namespace twistcoh::cohomology {

using cdga::Element;
using cdga::Presentation;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Subspace;
using linalg::Vector;

/// A cohomology class in one degree, as coordinates in the representative
/// basis of that degree.
struct CohomologyClass {
  int degree = 0;
  Vector coordinates;

  bool is_zero() const { return linalg::is_zero(coordinates); }
  friend bool operator==(const CohomologyClass &, const CohomologyClass &) =
      default;
};

class NotClosed : public std::runtime_error {
public:
  NotClosed(const std::string &what, Element differential)
      : std::runtime_error(what), differential_(std::move(differential)) {}
  const Element &differential() const { return differential_; }

private:
  Element differential_;
};

class CohomologyRing {
public:
  explicit CohomologyRing(Presentation p);

  const Presentation &presentation() const { return presentation_; }
  int top_degree() const { return presentation_.top_degree(); }

  std::size_t betti(int degree) const;
  std::vector<std::size_t> betti_numbers() const;
  std::size_t total_dim() const;

  /// Subspaces of the local coordinate space of A^degree.
  const Subspace &cocycles(int degree) const;
  const Subspace &boundaries(int degree) const;
  /// Canonical representatives: the cocycle basis reduced modulo boundaries
  /// and brought to echelon form.
  const std::vector<Element> &representatives(int degree) const;

  /// Throws NotClosed if a is not closed.  The zero element is read as a
  /// degree-0 form unless a degree is given.
  CohomologyClass class_of(const Element &a) const;
  CohomologyClass class_of(const Element &a, int degree) const;
  Element representative(const CohomologyClass &c) const;
  CohomologyClass basis_class(int degree, std::size_t i) const;
  CohomologyClass zero_class(int degree) const;
  CohomologyClass unit() const;

  CohomologyClass cup(const CohomologyClass &a, const CohomologyClass &b) const;

  /// Span of the classes a.h for h in H^degree, inside H^{|a| + degree}.
  Subspace product_span(const CohomologyClass &a, int degree) const;
  /// Span of the classes h.b for h in H^degree.
  Subspace product_span(int degree, const CohomologyClass &b) const;

private:
  struct Degree {
    Subspace cocycles;
    Subspace boundaries;
    linalg::Quotient quotient;
    std::vector<Element> representatives;
  };
  const Degree &at(int degree) const;

  Presentation presentation_;
  std::vector<Degree> degrees_;
  Degree empty_;
};

/// Matrix of D = d - eta. on the global basis (eta acts by left
/// multiplication).
Matrix twisted_differential(const Presentation &p, const Element &eta);

struct GaugeTransform {
  Element twist;          // eta
  Element shifted_twist;  // eta + d zeta
  Element exponential;    // e^zeta
  Matrix matrix;          // multiplication by e^zeta
  /// D_{eta + d zeta} e^zeta = e^zeta D_eta, checked as a matrix equation.
  bool intertwines = false;
};

/// Throws std::invalid_argument unless eta is odd and closed and zeta is a
/// homogeneous element of degree 2 (or zero).
GaugeTransform gauge_transform(const Presentation &p, const Element &eta,
                               const Element &zeta);

/// Whether the morphism induces isomorphisms on all cohomology groups.
bool induces_cohomology_isomorphism(const cdga::Morphism &f);

} // namespace twistcoh::cohomology
