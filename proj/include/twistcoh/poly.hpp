#pragma once

// Sparse commutative polynomials with rational coefficients over indexed
// variables, used by the characteristic-class and Hankel modules.

#include "twistcoh/exactlin.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twistcoh::poly {

using linalg::Scalar;

/// Exponent vector; trailing zeros are always trimmed.
using Exponents = std::vector<int>;

/// Colexicographic order: the highest-index variable decides first.
struct Colex {
  bool operator()(const Exponents &a, const Exponents &b) const;
};

class Polynomial {
public:
  using Terms = std::map<Exponents, Scalar, Colex>;

  Polynomial() = default;
  Polynomial(const Scalar &c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(std::size_t index, int power = 1);
  static Polynomial monomial(Exponents e, Scalar c = Scalar(1));

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Exponents &e) const;
  void add_term(Exponents e, const Scalar &c);
  /// One past the largest variable index that occurs.
  std::size_t num_variables() const;

  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Polynomial &o);
  Polynomial &operator*=(const Scalar &c);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    return a -= b;
  }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Polynomial &b) {
    return a *= b;
  }
  friend Polynomial operator*(const Scalar &c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.terms_ == b.terms_;
  }

  Polynomial pow(int k) const;
  Polynomial derivative(std::size_t index) const;
  /// Replace each variable i by image(i).
  Polynomial compose(const std::function<Polynomial(std::size_t)> &image) const;
  Scalar evaluate(const std::vector<Scalar> &values) const;

  /// Sum of weights[i] * e_i; variables past the end have weight 0.
  static long weight(const Exponents &e, const std::vector<int> &weights);
  /// Weight when all terms agree.
  std::optional<long> homogeneous_weight(const std::vector<int> &weights) const;
  /// Terms of exactly the given weight, or of weight at most max.
  Polynomial component(const std::vector<int> &weights, long w) const;
  Polynomial truncate(const std::vector<int> &weights, long max) const;

  /// Terms in ascending colex order, e.g. `x2^2 - 2*x1*x3`.
  std::string format(const std::function<std::string(std::size_t)> &name) const;

private:
  Terms terms_;
};

std::string format_monomial(const Exponents &e,
                            const std::function<std::string(std::size_t)> &name);

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses sums of products of rationals, variables, `^k` powers and
/// parentheses.  `resolve` maps a name to a variable index or throws.
Polynomial parse(std::string_view text,
                 const std::function<std::optional<std::size_t>(std::string_view)>
                     &resolve);

/// Binomial coefficient and factorial as exact rationals.
Scalar binomial(long n, long k);
Scalar factorial(long n);

} // namespace twistcoh::poly
