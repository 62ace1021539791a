#pragma once

// Hankel determinants of the total Chern class c(t) = a(t)/b(t), the
// resultant of a(t) and b(t), and the identities relating them.
//
// Variable layouts:
//   c-ring:    c_n is variable n - 1.
//   ab-ring:   a_i is variable i - 1 (i <= p), b_j is variable p + j - 1.
//   root-ring: x_i is variable i - 1, y_j is variable p + j - 1, and u is
//              variable p + q; a(t) = prod (1 + x_i t), b(t) = prod (1 + y_j t).

#include "twistcoh/poly.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace twistcoh::hankel {

using linalg::Scalar;
using poly::Polynomial;

Polynomial c_var(int n);  // zero for n <= 0 except c_0 = 1
Polynomial a_var(int p, int i);
Polynomial b_var(int p, int j);

std::string format_c(const Polynomial &f,
                     std::optional<std::size_t> u_index = std::nullopt);
std::string format_ab(const Polynomial &f, int p, int q);
std::string format_roots(const Polynomial &f, int p, int q);

/// c_1..c_N of a(t)/b(t) in the ab-ring; element n - 1 is c_n.
std::vector<Polynomial> series_quotient(int p, int q, int n_max);

/// Determinant by Laplace expansion over column subsets.
Polynomial determinant(const std::vector<std::vector<Polynomial>> &m);

/// det of the q x q matrix with (i, j) entry c_{i-j+p}; `c(k)` supplies c_k
/// for k >= 1 (c_0 = 1, c_k = 0 for k < 0).
Polynomial hankel_det(int p, int q, const std::function<Polynomial(int)> &c);
/// h_{p,q} in the c-ring.
Polynomial hankel_det(int p, int q);
/// h_{p,q}(c(a/b)) in the ab-ring.
Polynomial hankel_of_quotient(int p, int q, int p_ring, int q_ring);

/// Writes a polynomial symmetric in `vars` as a polynomial in the elementary
/// symmetric functions of `vars`; e_k becomes variable out[k - 1].  Other
/// variables are coefficients and must not overlap `out`.
struct NotSymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
Polynomial express_in_elementary(Polynomial f,
                                 const std::vector<std::size_t> &vars,
                                 const std::vector<std::size_t> &out);

struct Resultant {
  int p = 0, q = 0;
  Polynomial in_roots;  // prod (x_i - y_j)
  Polynomial in_ab;
};
Resultant resultant(int p, int q);

struct Verify94 {
  int p = 0, q = 0, p2 = 0, q2 = 0;
  Polynomial hankel;     // h_{p,q}(c(a/b))
  Polynomial resultant;  // R(a, b)
  Polynomial higher;     // h_{p2,q2}(c(a/b))
  bool hankel_is_resultant = false;
  bool higher_vanishes = false;
};
Verify94 verify_94(int p, int q, int p2, int q2);

struct InjectivityReport {
  int p = 0, q = 0, weight = 0;
  std::size_t source_dim = 0;  // monomials of this weight in c
  std::size_t rank = 0;
  /// First element of the canonical kernel basis, when the map is not
  /// injective.
  std::optional<Polynomial> kernel_element;
  std::size_t kernel_dim() const { return source_dim - rank; }
  bool injective() const { return rank == source_dim; }
  /// weight < (p + 1)(q + 1).
  bool injectivity_expected() const { return weight < (p + 1) * (q + 1); }
};
InjectivityReport injectivity_rank(int p, int q, int weight);

/// c~_n = sum_m C(n-1, m-1) u^{n-m} c_m, the coefficients of c(t / (1 - u t)).
Polynomial reparametrized_c(int n, std::size_t u_index);

struct ReparamReport {
  int p = 0;
  std::size_t u_index = 0;  // 2p - 1
  Polynomial original;
  Polynomial transformed;
  bool invariant = false;
};
ReparamReport reparam_invariance(int p);

/// x_i -> x_i + u, y_j -> y_j + u fixes prod (x_i - y_j) identically in u.
bool root_shift_invariant(int p, int q);

} // namespace twistcoh::hankel
