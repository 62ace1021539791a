#pragma once

// Finite-dimensional graded-commutative differential algebras presented as
// an exterior algebra on odd generators tensored with truncated polynomial
// algebras on even generators, with a differential given on generators.

#include "twistcoh/exactlin.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twistcoh::cdga {

using linalg::Matrix;
using linalg::Scalar;
using linalg::Vector;

struct GeneratorSpec {
  std::string name;
  int degree = 1;
  /// g^truncation = 0.  Required for even generators, forbidden for odd ones.
  std::optional<int> truncation;

  bool odd() const { return degree % 2 != 0; }
};

/// Exponent vector aligned with the generator order.
using Monomial = std::vector<int>;

/// Sparse rational combination of monomials.  Zero coefficients are never
/// stored.
class Element {
public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;
  static Element term(Monomial m, Scalar coefficient = Scalar(1));

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial &m) const;

  void add_term(const Monomial &m, const Scalar &coefficient);

  Element &operator+=(const Element &other);
  Element &operator-=(const Element &other);
  Element &operator*=(const Scalar &c);

  friend Element operator+(Element a, const Element &b) { return a += b; }
  friend Element operator-(Element a, const Element &b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Scalar(-1); }
  friend Element operator*(const Scalar &c, Element a) { return a *= c; }
  friend bool operator==(const Element &a, const Element &b) {
    return a.terms_ == b.terms_;
  }

private:
  Terms terms_;
};

class CdgaError : public std::runtime_error {
public:
  CdgaError(const std::string &what, std::optional<std::size_t> generator)
      : std::runtime_error(what), generator_(generator) {}
  /// Index of the offending generator, when the error is about one.
  std::optional<std::size_t> generator() const { return generator_; }

private:
  std::optional<std::size_t> generator_;
};

struct DegreeError : CdgaError {
  using CdgaError::CdgaError;
};
struct LeibnizError : CdgaError {
  using CdgaError::CdgaError;
};
struct TruncationError : CdgaError {
  using CdgaError::CdgaError;
};
struct NameError : CdgaError {
  using CdgaError::CdgaError;
};
struct ExpressionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The underlying graded-commutative algebra: generators, monomial basis and
/// Koszul-signed multiplication.  No differential.
class GradedAlgebra {
public:
  GradedAlgebra() : GradedAlgebra(std::vector<GeneratorSpec>{}) {}
  explicit GradedAlgebra(std::vector<GeneratorSpec> generators);

  const std::vector<GeneratorSpec> &generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }
  std::optional<std::size_t> find(std::string_view name) const;

  int top_degree() const { return top_degree_; }
  std::size_t dimension() const { return basis_.size(); }

  /// Monomials of one total degree in canonical order (lexicographically
  /// descending exponent vectors); empty outside [0, top_degree].
  const std::vector<Monomial> &basis(int degree) const;
  /// All monomials, by degree and then canonical order.
  const std::vector<Monomial> &basis() const { return basis_; }
  std::size_t offset(int degree) const;
  std::size_t index(const Monomial &m) const;
  int degree_of_index(std::size_t global_index) const {
    return index_degree_[global_index];
  }

  int degree(const Monomial &m) const;
  /// Degree if the element is nonzero and homogeneous.
  std::optional<int> degree(const Element &e) const;
  /// True when every term has odd degree.
  bool is_odd(const Element &e) const;

  Element unit() const;
  Element generator(std::size_t i) const;
  Element generator(std::string_view name) const;

  /// Product of two basis monomials: sign (0, 1 or -1) and normal form.
  std::pair<int, Monomial> multiply(const Monomial &a, const Monomial &b) const;
  Element multiply(const Element &a, const Element &b) const;
  Element power(const Element &a, int k) const;

  Vector coordinates(const Element &e) const;
  /// Coordinates in basis(degree); throws if e has terms of another degree.
  Vector coordinates(const Element &e, int degree) const;
  Element element(const Vector &global) const;
  Element element(const Vector &local, int degree) const;

  /// Matrix of left multiplication by a on the whole algebra.
  Matrix multiplication_matrix(const Element &a) const;

  std::string format(const Monomial &m) const;
  std::string format(const Element &e) const;

private:
  std::vector<GeneratorSpec> generators_;
  std::vector<Monomial> basis_;
  std::vector<int> index_degree_;
  std::vector<std::vector<Monomial>> by_degree_;
  std::vector<std::size_t> offsets_;
  std::map<Monomial, std::size_t> index_;
  int top_degree_ = 0;
};

/// Parses `2*x*y - 1/3*z + t^2`-style expressions over the algebra's
/// generators.
Element parse_element(const GradedAlgebra &algebra, std::string_view text);

/// A validated algebra with differential.  Immutable.
class Presentation {
public:
  Presentation() = default;

  const GradedAlgebra &algebra() const { return algebra_; }
  const std::vector<GeneratorSpec> &generators() const {
    return algebra_.generators();
  }
  std::size_t dimension() const { return algebra_.dimension(); }
  int top_degree() const { return algebra_.top_degree(); }
  const std::vector<Monomial> &basis(int degree) const {
    return algebra_.basis(degree);
  }

  const Element &generator_differential(std::size_t i) const {
    return differentials_[i];
  }
  Element differential(const Element &a) const;
  Element multiply(const Element &a, const Element &b) const {
    return algebra_.multiply(a, b);
  }

  /// d : A^degree -> A^{degree+1}, rows indexed by basis(degree+1).
  Matrix differential_matrix(int degree) const;
  /// d on the whole algebra in the global basis.
  const Matrix &differential_matrix() const { return global_d_; }

  friend Presentation validate(GradedAlgebra algebra,
                               std::vector<Element> differentials);

private:
  Element differential_of(const Monomial &m) const;

  GradedAlgebra algebra_;
  std::vector<Element> differentials_;
  Matrix global_d_;
};

/// Checks degrees, truncation compatibility and d^2 = 0, then caches the
/// differential.  `differentials` is indexed by generator (missing = 0).
Presentation validate(GradedAlgebra algebra,
                      std::vector<Element> differentials);

/// Convenience: differentials given as expressions keyed by generator name.
Presentation make_presentation(
    std::vector<GeneratorSpec> generators,
    const std::vector<std::pair<std::string, std::string>> &differentials);

/// Generators of the second factor are renamed `name_2`, `name_3`, ... on
/// collision.
Presentation tensor_product(const Presentation &a, const Presentation &b);

/// Canonical inclusion of the factors into tensor_product(a, b).
Element embed_left(const Presentation &product, const Element &e);
Element embed_right(const Presentation &product, const Presentation &a,
                    const Element &e);

// Built-in models.
Presentation heisenberg();         // x, y, z of degree 1, dz = xy
Presentation tower(int n);         // x, e1..en; d e_i = x e_{i+1}
Presentation complex_projective(int n);  // t of degree 2, t^{n+1} = 0
Presentation sphere3();            // s of degree 3, ds = 0
Presentation so3();                // a, b, c; da = bc, db = ca, dc = ab

/// Looks up a built-in by name: heisenberg, tower (param n), cp (param n),
/// sphere3, so3.  Throws NameError for unknown names.
Presentation builtin(std::string_view name, int parameter = 0);

/// Algebra map given by images of generators.
class Morphism {
public:
  Morphism(Presentation source, Presentation target,
           std::vector<Element> generator_images);

  const Presentation &source() const { return source_; }
  const Presentation &target() const { return target_; }

  Element apply(const Element &e) const;
  /// Matrix of the map on the global bases.
  Matrix matrix() const;
  /// True when the map preserves degrees, truncations and commutes with d.
  bool is_dga_map() const;

private:
  Presentation source_;
  Presentation target_;
  std::vector<Element> images_;
};

} // namespace twistcoh::cdga
