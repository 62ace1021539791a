#include "twistcoh/hankel.hpp"

#include "twistcoh/charclass.hpp"

#include <map>

namespace twistcoh::hankel {

namespace {

using poly::Exponents;
using V = Polynomial;

V var(std::size_t i) { return V::variable(i); }

int at(const Exponents &e, std::size_t i) { return i < e.size() ? e[i] : 0; }

std::vector<V> elementary(const std::vector<std::size_t> &vars) {
  std::vector<V> e(vars.size() + 1);
  e[0] = V(Scalar(1));
  for (std::size_t v : vars) {
    for (std::size_t k = vars.size(); k > 0; --k) {
      e[k] += e[k - 1] * var(v);
    }
  }
  return e;
}

} // namespace

Polynomial c_var(int n) {
  if (n == 0) {
    return V(Scalar(1));
  }
  return n < 0 ? V() : var(static_cast<std::size_t>(n - 1));
}

Polynomial a_var(int, int i) { return var(static_cast<std::size_t>(i - 1)); }

Polynomial b_var(int p, int j) {
  return var(static_cast<std::size_t>(p + j - 1));
}

std::string format_c(const Polynomial &f, std::optional<std::size_t> u_index) {
  return f.format([u_index](std::size_t i) {
    return u_index && i == *u_index ? std::string("u")
                                    : "c" + std::to_string(i + 1);
  });
}

std::string format_ab(const Polynomial &f, int p, int) {
  const auto pp = static_cast<std::size_t>(p);
  return f.format([pp](std::size_t i) {
    return i < pp ? "a" + std::to_string(i + 1)
                  : "b" + std::to_string(i - pp + 1);
  });
}

std::string format_roots(const Polynomial &f, int p, int q) {
  const auto pp = static_cast<std::size_t>(p);
  const auto qq = static_cast<std::size_t>(q);
  return f.format([pp, qq](std::size_t i) {
    if (i < pp) {
      return "x" + std::to_string(i + 1);
    }
    if (i < pp + qq) {
      return "y" + std::to_string(i - pp + 1);
    }
    return std::string("u");
  });
}

std::vector<Polynomial> series_quotient(int p, int q, int n_max) {
  std::vector<V> c(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  c[0] = V(Scalar(1));
  for (int n = 1; n <= n_max; ++n) {
    V value = n <= p ? a_var(p, n) : V();
    for (int j = 1; j <= std::min(n, q); ++j) {
      value -= b_var(p, j) * c[n - j];
    }
    c[n] = value;
  }
  return std::vector<V>(c.begin() + 1, c.end());
}

Polynomial determinant(const std::vector<std::vector<Polynomial>> &m) {
  const std::size_t n = m.size();
  if (n == 0) {
    return V(Scalar(1));
  }
  if (n > 20) {
    throw std::invalid_argument("determinant: matrix too large");
  }
  // memo[mask] = det of the rows n - |mask| .. n - 1 restricted to the
  // columns in mask.
  std::map<unsigned long, V> memo;
  std::function<V(unsigned long)> det = [&](unsigned long mask) -> V {
    if (mask == 0) {
      return V(Scalar(1));
    }
    auto it = memo.find(mask);
    if (it != memo.end()) {
      return it->second;
    }
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcountl(mask));
    V total;
    int position = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (1ul << col))) {
        continue;
      }
      if (!m[row][col].is_zero()) {
        V term = m[row][col] * det(mask & ~(1ul << col));
        if (position % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
      ++position;
    }
    memo.emplace(mask, total);
    return total;
  };
  return det((1ul << n) - 1);
}

Polynomial hankel_det(int p, int q, const std::function<Polynomial(int)> &c) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("hankel_det requires p, q >= 1");
  }
  std::vector<std::vector<V>> m(static_cast<std::size_t>(q),
                                std::vector<V>(static_cast<std::size_t>(q)));
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= q; ++j) {
      const int k = i - j + p;
      m[i - 1][j - 1] = k < 0 ? V() : k == 0 ? V(Scalar(1)) : c(k);
    }
  }
  return determinant(m);
}

Polynomial hankel_det(int p, int q) { return hankel_det(p, q, c_var); }

Polynomial hankel_of_quotient(int p, int q, int p_ring, int q_ring) {
  const auto c = series_quotient(p_ring, q_ring, p + q);
  return hankel_det(p, q, [&c](int k) { return c.at(k - 1); });
}

Polynomial express_in_elementary(Polynomial f,
                                 const std::vector<std::size_t> &vars,
                                 const std::vector<std::size_t> &out) {
  if (out.size() != vars.size()) {
    throw std::invalid_argument("express_in_elementary: size mismatch");
  }
  for (const auto &[e, c] : f.terms()) {
    for (std::size_t o : out) {
      if (at(e, o) != 0) {
        throw std::invalid_argument(
            "express_in_elementary: output variable already in use");
      }
    }
  }
  const std::vector<V> e = elementary(vars);
  auto part = [&vars](const Exponents &ex) {
    std::vector<int> lambda(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) {
      lambda[k] = at(ex, vars[k]);
    }
    return lambda;
  };
  V result;
  while (!f.is_zero()) {
    std::vector<int> lead = part(f.terms().begin()->first);
    for (const auto &[ex, c] : f.terms()) {
      lead = std::max(lead, part(ex));
    }
    V coeff;
    for (const auto &[ex, c] : f.terms()) {
      if (part(ex) == lead) {
        Exponents rest = ex;
        for (std::size_t v : vars) {
          if (v < rest.size()) {
            rest[v] = 0;
          }
        }
        coeff.add_term(rest, c);
      }
    }
    V new_part = coeff, old_part = coeff;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const int next = k + 1 < vars.size() ? lead[k + 1] : 0;
      const int m = lead[k] - next;
      if (m < 0) {
        throw NotSymmetric("polynomial is not symmetric in the given variables");
      }
      if (m > 0) {
        new_part *= var(out[k]).pow(m);
        old_part *= e[k + 1].pow(m);
      }
    }
    result += new_part;
    f -= old_part;
  }
  return result;
}

Resultant resultant(int p, int q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("resultant requires p, q >= 1");
  }
  const auto pp = static_cast<std::size_t>(p);
  const auto qq = static_cast<std::size_t>(q);
  Resultant r;
  r.p = p;
  r.q = q;
  r.in_roots = V(Scalar(1));
  for (std::size_t i = 0; i < pp; ++i) {
    for (std::size_t j = 0; j < qq; ++j) {
      r.in_roots *= var(i) - var(pp + j);
    }
  }
  // prod_j (x - y_j) = sum_k (-1)^k b_k x^{q-k}; multiply over the x_i and
  // rewrite the x-symmetric result through a_i = e_i(x).
  V product(Scalar(1));
  for (std::size_t i = 0; i < pp; ++i) {
    V factor;
    for (int k = 0; k <= q; ++k) {
      V bk = k == 0 ? V(Scalar(1)) : b_var(p, k);
      factor += Scalar(k % 2 == 0 ? 1 : -1) * (bk * var(i).pow(q - k));
    }
    product *= factor;
  }
  std::vector<std::size_t> xs(pp), staging(pp);
  for (std::size_t i = 0; i < pp; ++i) {
    xs[i] = i;
    staging[i] = pp + qq + i;
  }
  V staged = express_in_elementary(product, xs, staging);
  r.in_ab = staged.compose([pp, qq](std::size_t i) {
    return i >= pp + qq ? var(i - pp - qq) : var(i);
  });
  return r;
}

Verify94 verify_94(int p, int q, int p2, int q2) {
  Verify94 v;
  v.p = p;
  v.q = q;
  v.p2 = p2;
  v.q2 = q2;
  v.hankel = hankel_of_quotient(p, q, p, q);
  v.resultant = resultant(p, q).in_ab;
  v.hankel_is_resultant = v.hankel == v.resultant;
  v.higher = hankel_of_quotient(p2, q2, p, q);
  v.higher_vanishes = v.higher.is_zero();
  return v;
}

InjectivityReport injectivity_rank(int p, int q, int weight) {
  InjectivityReport report;
  report.p = p;
  report.q = q;
  report.weight = weight;
  const auto basis = charclass::weight_basis(weight);
  report.source_dim = basis.size();
  const auto c = series_quotient(p, q, std::max(weight, 1));
  std::vector<V> images;
  std::map<Exponents, std::size_t, poly::Colex> rows;
  for (const auto &e : basis) {
    V image = V::monomial(e).compose([&c](std::size_t i) { return c.at(i); });
    for (const auto &[ex, coeff] : image.terms()) {
      rows.emplace(ex, rows.size());
    }
    images.push_back(std::move(image));
  }
  linalg::Matrix m(rows.size(), basis.size());
  for (std::size_t col = 0; col < images.size(); ++col) {
    for (const auto &[ex, coeff] : images[col].terms()) {
      m(rows.at(ex), col) = coeff;
    }
  }
  report.rank = linalg::rank(m);
  if (!report.injective()) {
    const linalg::Subspace k = linalg::kernel(m);
    V element;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      element.add_term(basis[i], k.basis()[0][i]);
    }
    report.kernel_element = element;
  }
  return report;
}

Polynomial reparametrized_c(int n, std::size_t u_index) {
  if (n <= 0) {
    return c_var(n);
  }
  V out;
  for (int m = 1; m <= n; ++m) {
    out += poly::binomial(n - 1, m - 1) *
           (c_var(m) * V::variable(u_index, n - m));
  }
  return out;
}

ReparamReport reparam_invariance(int p) {
  ReparamReport r;
  r.p = p;
  r.u_index = static_cast<std::size_t>(2 * p - 1);
  r.original = hankel_det(p, p);
  const std::size_t u = r.u_index;
  r.transformed =
      hankel_det(p, p, [u](int k) { return reparametrized_c(k, u); });
  r.invariant = r.original == r.transformed;
  return r;
}

bool root_shift_invariant(int p, int q) {
  const Resultant r = resultant(p, q);
  const auto shift = static_cast<std::size_t>(p + q);
  V shifted = r.in_roots.compose([shift](std::size_t i) {
    return i < shift ? var(i) + var(shift) : var(i);
  });
  return shifted == r.in_roots;
}

} // namespace twistcoh::hankel
