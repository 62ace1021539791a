#include "twistcoh/cohomology.hpp"

#include <algorithm>

namespace twistcoh::cohomology {

CohomologyRing::CohomologyRing(Presentation p) : presentation_(std::move(p)) {
  const cdga::GradedAlgebra &alg = presentation_.algebra();
  for (int k = 0; k <= alg.top_degree(); ++k) {
    const std::size_t n = alg.basis(k).size();
    Degree deg;
    deg.cocycles = linalg::kernel(presentation_.differential_matrix(k));
    deg.boundaries = k == 0
                         ? Subspace(n)
                         : linalg::image(presentation_.differential_matrix(k - 1));
    deg.quotient = linalg::Quotient(deg.cocycles, deg.boundaries);
    for (const Vector &rep : deg.quotient.representatives()) {
      deg.representatives.push_back(alg.element(rep, k));
    }
    degrees_.push_back(std::move(deg));
  }
}

const CohomologyRing::Degree &CohomologyRing::at(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(degrees_.size())) {
    return empty_;
  }
  return degrees_[degree];
}

std::size_t CohomologyRing::betti(int degree) const {
  return at(degree).quotient.dim();
}

std::vector<std::size_t> CohomologyRing::betti_numbers() const {
  std::vector<std::size_t> out;
  for (const Degree &d : degrees_) {
    out.push_back(d.quotient.dim());
  }
  return out;
}

std::size_t CohomologyRing::total_dim() const {
  std::size_t total = 0;
  for (const Degree &d : degrees_) {
    total += d.quotient.dim();
  }
  return total;
}

const Subspace &CohomologyRing::cocycles(int degree) const {
  return at(degree).cocycles;
}

const Subspace &CohomologyRing::boundaries(int degree) const {
  return at(degree).boundaries;
}

const std::vector<Element> &CohomologyRing::representatives(int degree) const {
  return at(degree).representatives;
}

CohomologyClass CohomologyRing::class_of(const Element &a) const {
  if (a.is_zero()) {
    return zero_class(0);
  }
  auto deg = presentation_.algebra().degree(a);
  if (!deg) {
    throw std::invalid_argument("class_of needs a homogeneous element, got " +
                                presentation_.algebra().format(a));
  }
  return class_of(a, *deg);
}

CohomologyClass CohomologyRing::class_of(const Element &a, int degree) const {
  const cdga::GradedAlgebra &alg = presentation_.algebra();
  if (degree < 0 || degree > alg.top_degree()) {
    if (!a.is_zero()) {
      throw cdga::DegreeError("element is not of degree " +
                                  std::to_string(degree),
                              std::nullopt);
    }
    return zero_class(degree);
  }
  Vector v = alg.coordinates(a, degree);
  Element da = presentation_.differential(a);
  if (!da.is_zero()) {
    throw NotClosed(alg.format(a) + " is not a closed form: d(" +
                        alg.format(a) + ") = " + alg.format(da),
                    da);
  }
  auto coords = at(degree).quotient.coordinates(v);
  return CohomologyClass{degree, *coords};
}

Element CohomologyRing::representative(const CohomologyClass &c) const {
  const auto &reps = representatives(c.degree);
  if (c.coordinates.size() != reps.size()) {
    throw linalg::DimensionError("class coordinates have wrong length");
  }
  Element out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (sgn(c.coordinates[i]) != 0) {
      out += c.coordinates[i] * reps[i];
    }
  }
  return out;
}

CohomologyClass CohomologyRing::basis_class(int degree, std::size_t i) const {
  CohomologyClass c = zero_class(degree);
  c.coordinates.at(i) = 1;
  return c;
}

CohomologyClass CohomologyRing::zero_class(int degree) const {
  return CohomologyClass{degree, linalg::zero_vector(betti(degree))};
}

CohomologyClass CohomologyRing::unit() const {
  return class_of(presentation_.algebra().unit(), 0);
}

CohomologyClass CohomologyRing::cup(const CohomologyClass &a,
                                    const CohomologyClass &b) const {
  Element product = presentation_.multiply(representative(a), representative(b));
  return class_of(product, a.degree + b.degree);
}

Subspace CohomologyRing::product_span(const CohomologyClass &a,
                                      int degree) const {
  const int target = a.degree + degree;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < betti(degree); ++i) {
    images.push_back(cup(a, basis_class(degree, i)).coordinates);
  }
  return Subspace::span(betti(target), images);
}

Subspace CohomologyRing::product_span(int degree,
                                      const CohomologyClass &b) const {
  const int target = degree + b.degree;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < betti(degree); ++i) {
    images.push_back(cup(basis_class(degree, i), b).coordinates);
  }
  return Subspace::span(betti(target), images);
}

Matrix twisted_differential(const Presentation &p, const Element &eta) {
  return p.differential_matrix() - p.algebra().multiplication_matrix(eta);
}

GaugeTransform gauge_transform(const Presentation &p, const Element &eta,
                               const Element &zeta) {
  const cdga::GradedAlgebra &alg = p.algebra();
  if (!alg.is_odd(eta)) {
    throw std::invalid_argument("twist " + alg.format(eta) +
                                " has a term of even degree");
  }
  if (!p.differential(eta).is_zero()) {
    throw std::invalid_argument("twist " + alg.format(eta) + " is not closed");
  }
  if (!zeta.is_zero() && alg.degree(zeta) != 2) {
    throw std::invalid_argument("gauge parameter " + alg.format(zeta) +
                                " must be homogeneous of degree 2");
  }
  GaugeTransform g;
  g.twist = eta;
  g.shifted_twist = eta + p.differential(zeta);
  Element power = alg.unit();
  Scalar factorial(1);
  for (int k = 0; !power.is_zero(); ++k) {
    if (k > 0) {
      factorial *= k;
    }
    g.exponential += Scalar(1 / factorial) * power;
    power = alg.multiply(power, zeta);
  }
  g.matrix = alg.multiplication_matrix(g.exponential);
  g.intertwines = twisted_differential(p, g.shifted_twist) * g.matrix ==
                  g.matrix * twisted_differential(p, eta);
  return g;
}

bool induces_cohomology_isomorphism(const cdga::Morphism &f) {
  CohomologyRing source(f.source());
  CohomologyRing target(f.target());
  const int top = std::max(source.top_degree(), target.top_degree());
  for (int k = 0; k <= top; ++k) {
    if (source.betti(k) != target.betti(k)) {
      return false;
    }
    std::vector<Vector> images;
    for (const Element &rep : source.representatives(k)) {
      images.push_back(target.class_of(f.apply(rep), k).coordinates);
    }
    if (Subspace::span(target.betti(k), images).dim() != target.betti(k)) {
      return false;
    }
  }
  return true;
}

} // namespace twistcoh::cohomology
