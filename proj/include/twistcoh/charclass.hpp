#pragma once

// The algebra A = Q[x1, x2, ...] of characteristic classes (x_n = ch_n,
// weight n), the derivation d with d x_n = x_{n-1}, its invariant ring J,
// the exp(lambda delta) lift, psi-operation characters, Newton's identities
// and the Wang model of the universal fibration over S^3.

#include "twistcoh/poly.hpp"

#include <map>
#include <stdexcept>

namespace twistcoh::charclass {

using linalg::Matrix;
using linalg::Scalar;
using poly::Exponents;
using poly::Polynomial;

/// x_n for n >= 1 (variable index n - 1); x_0 = 0.
Polynomial x(int n);
/// Names x1, x2, ...
std::string format(const Polynomial &f);
/// Parses expressions in x1, x2, ...
Polynomial parse(std::string_view text);

long weight(const Exponents &e);
long word_length(const Exponents &e);
std::optional<long> weight(const Polynomial &f);

/// Number of partitions of n (the dimension of A_n).
std::size_t partition_count(int n);
/// Monomials of weight n in colex order.
std::vector<Exponents> weight_basis(int n);
std::vector<Scalar> coordinates(const Polynomial &f, int n);
Polynomial from_coordinates(const std::vector<Scalar> &v, int n);

Polynomial derivation_d(const Polynomial &f);
/// delta x_k = k x_{k+1}.
Polynomial delta(const Polynomial &f);
/// d : A_n -> A_{n-1} on the weight bases.
Matrix d_matrix(int n);

struct InvariantRing {
  int max_weight = 0;
  std::vector<std::vector<Polynomial>> basis;  // canonical echelon, per weight
  std::vector<std::size_t> dims;
};
InvariantRing invariant_ring(int max_weight);

struct SurjectivityRow {
  int n = 0;
  std::size_t rank = 0;
  std::size_t target_dim = 0;
  bool surjective() const { return rank == target_dim; }
};
/// Rows for 2 <= n <= max_weight (target weights n - 1 > 0).
std::vector<SurjectivityRow> check_d_surjective(int max_weight);

/// Coefficients of 1 / prod_{k>=2} (1 - t^k) + t through t^max_degree.
std::vector<std::size_t> poincare_series(int max_degree);

/// f(y) with y_n = sum_k x_{n-k} u^k / k!, keyed by the power of u.
std::map<int, Polynomial> group_action(const Polynomial &f);
bool is_invariant(const Polynomial &f);

struct NotInvariant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroWordLength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Lift {
  Polynomial input;
  Polynomial series;  // truncated to weight <= max_weight
  int max_weight = 0;
  /// (d - 1) series has no terms of weight <= max_weight - 1.
  bool closed = false;
  /// [d, delta] multiplies every monomial of weight <= max_weight by its
  /// word length.
  bool laplacian_is_word_length = false;
};

/// exp(lambda delta) f with lambda = 1 / word length, applied to each
/// word-length component of f.
Lift delta_lift(const Polynomial &f, int max_weight);

/// sum_{n=1}^{N} k^n x_n.
Polynomial psi_character(long k, int max_weight);
/// prod_i psi_character(k_i) truncated to weight N.
Polynomial psi_monomial_character(const std::vector<long> &ks, int max_weight);

/// Newton's identities.  Power sums s_n and elementary classes c_n both use
/// variable index n - 1.
Polynomial power_sum_in_elementary(int n);
Polynomial elementary_in_power_sum(int n);

/// s_n(u) = sum_k C(n, k) s_{n-k} u^k; variable k is s_k for k <= n and
/// variable n + 1 is u.
struct TensorAction {
  int n = 0;
  Polynomial poly;
  std::string format() const;
};
TensorAction tensor_action_power_sums(int n);

struct WangReport {
  int max_weight = 0;
  /// dim H^{2n} for n = 0..max_weight; equals dim J_n.
  std::vector<std::size_t> even_dims;
  /// dim H^{2n+3} for n = 0..max_weight-1 (the cokernel of d onto A_n).
  std::vector<std::size_t> odd_dims;
  /// w f is a boundary for every basis element f of J of positive weight
  /// below max_weight.
  bool twist_annihilates = false;
};
WangReport wang_model_report(int max_weight);

} // namespace twistcoh::charclass
