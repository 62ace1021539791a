#include "twistcoh/charclass.hpp"

#include <algorithm>
#include <set>

namespace twistcoh::charclass {

namespace {

std::string x_name(std::size_t i) { return "x" + std::to_string(i + 1); }

void partitions(int remaining, int max_part, Exponents &current,
                std::vector<Exponents> &out) {
  if (remaining == 0) {
    Exponents e = current;
    while (!e.empty() && e.back() == 0) {
      e.pop_back();
    }
    out.push_back(std::move(e));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    ++current[part - 1];
    partitions(remaining - part, part, current, out);
    --current[part - 1];
  }
}

std::vector<int> ones(std::size_t n) { return std::vector<int>(n, 1); }

std::vector<int> weights(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = static_cast<int>(i) + 1;
  }
  return w;
}

} // namespace

Polynomial x(int n) {
  if (n <= 0) {
    return Polynomial();
  }
  return Polynomial::variable(static_cast<std::size_t>(n - 1));
}

std::string format(const Polynomial &f) { return f.format(x_name); }

Polynomial parse(std::string_view text) {
  return poly::parse(text, [](std::string_view name) -> std::optional<std::size_t> {
    if (name.size() < 2 || name[0] != 'x') {
      return std::nullopt;
    }
    std::size_t n = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9' || n > 1000) {
        return std::nullopt;
      }
      n = n * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (n == 0 || name[1] == '0') {
      return std::nullopt;
    }
    return n - 1;
  });
}

long weight(const Exponents &e) {
  return Polynomial::weight(e, weights(e.size()));
}

long word_length(const Exponents &e) {
  return Polynomial::weight(e, ones(e.size()));
}

std::optional<long> weight(const Polynomial &f) {
  return f.homogeneous_weight(weights(f.num_variables()));
}

std::size_t partition_count(int n) { return weight_basis(n).size(); }

std::vector<Exponents> weight_basis(int n) {
  std::vector<Exponents> out;
  if (n < 0) {
    return out;
  }
  Exponents current(static_cast<std::size_t>(n), 0);
  partitions(n, n, current, out);
  std::sort(out.begin(), out.end(), poly::Colex());
  return out;
}

std::vector<Scalar> coordinates(const Polynomial &f, int n) {
  const auto basis = weight_basis(n);
  std::vector<Scalar> out(basis.size());
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i] = f.coefficient(basis[i]);
    found += sgn(out[i]) != 0 ? 1 : 0;
  }
  if (found != f.terms().size()) {
    throw std::invalid_argument(format(f) + " is not homogeneous of weight " +
                                std::to_string(n));
  }
  return out;
}

Polynomial from_coordinates(const std::vector<Scalar> &v, int n) {
  const auto basis = weight_basis(n);
  Polynomial out;
  for (std::size_t i = 0; i < basis.size() && i < v.size(); ++i) {
    out.add_term(basis[i], v[i]);
  }
  return out;
}

Polynomial derivation_d(const Polynomial &f) {
  Polynomial out;
  for (std::size_t i = 1; i < f.num_variables(); ++i) {
    out += f.derivative(i) * Polynomial::variable(i - 1);
  }
  return out;
}

Polynomial delta(const Polynomial &f) {
  Polynomial out;
  for (std::size_t i = 0; i < f.num_variables(); ++i) {
    out += Scalar(static_cast<long>(i) + 1) *
           (f.derivative(i) * Polynomial::variable(i + 1));
  }
  return out;
}

Matrix d_matrix(int n) {
  const auto src = weight_basis(n);
  const auto dst = weight_basis(n - 1);
  Matrix m(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    auto image = coordinates(derivation_d(Polynomial::monomial(src[col])), n - 1);
    for (std::size_t row = 0; row < dst.size(); ++row) {
      m(row, col) = image[row];
    }
  }
  return m;
}

InvariantRing invariant_ring(int max_weight) {
  InvariantRing ring;
  ring.max_weight = max_weight;
  for (int n = 0; n <= max_weight; ++n) {
    std::vector<Polynomial> basis;
    if (n == 0) {
      basis.emplace_back(Scalar(1));
    } else {
      const linalg::Subspace k = linalg::kernel(d_matrix(n));
      for (const auto &v : k.basis()) {
        basis.push_back(from_coordinates(v, n));
      }
    }
    ring.dims.push_back(basis.size());
    ring.basis.push_back(std::move(basis));
  }
  return ring;
}

std::vector<SurjectivityRow> check_d_surjective(int max_weight) {
  std::vector<SurjectivityRow> rows;
  for (int n = 2; n <= max_weight; ++n) {
    rows.push_back(
        {n, linalg::rank(d_matrix(n)), partition_count(n - 1)});
  }
  return rows;
}

std::vector<std::size_t> poincare_series(int max_degree) {
  if (max_degree < 0) {
    return {};
  }
  std::vector<std::size_t> c(static_cast<std::size_t>(max_degree) + 1, 0);
  c[0] = 1;
  for (int part = 2; part <= max_degree; ++part) {
    for (int n = part; n <= max_degree; ++n) {
      c[n] += c[n - part];
    }
  }
  if (max_degree >= 1) {
    c[1] += 1;
  }
  return c;
}

std::map<int, Polynomial> group_action(const Polynomial &f) {
  const std::size_t u = f.num_variables();
  // y_n = sum_{k=0}^{n-1} x_{n-k} u^k / k!
  Polynomial substituted = f.compose([u](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    Polynomial y;
    for (int k = 0; k < n; ++k) {
      y += Scalar(1 / poly::factorial(k)) *
           (x(n - k) * Polynomial::variable(u, k));
    }
    return y;
  });
  std::map<int, Polynomial> out;
  for (const auto &[e, c] : substituted.terms()) {
    const int k = u < e.size() ? e[u] : 0;
    Exponents rest = e;
    if (u < rest.size()) {
      rest[u] = 0;
    }
    out[k].add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

bool is_invariant(const Polynomial &f) {
  for (const auto &[k, coeff] : group_action(f)) {
    if (k > 0 && !coeff.is_zero()) {
      return false;
    }
  }
  return true;
}

Lift delta_lift(const Polynomial &f, int max_weight) {
  if (!derivation_d(f).is_zero()) {
    throw NotInvariant(format(f) + " is not in J: d f = " +
                       format(derivation_d(f)));
  }
  const std::vector<int> w = weights(f.num_variables() + max_weight + 1);
  const std::vector<int> len = ones(f.num_variables() + max_weight + 1);
  Lift lift;
  lift.input = f;
  lift.max_weight = max_weight;
  std::set<long> lengths;
  for (const auto &[e, c] : f.terms()) {
    lengths.insert(word_length(e));
  }
  for (long m : lengths) {
    Polynomial part = f.component(len, m);
    if (m == 0) {
      throw ZeroWordLength("the constant term " + format(part) +
                           " has word length 0 and no lift");
    }
    Polynomial term = part.truncate(w, max_weight);
    for (long k = 1; !term.is_zero(); ++k) {
      lift.series += term;
      term = Scalar(Scalar(1) / (m * k)) * delta(term);
      term = term.truncate(w, max_weight);
    }
  }
  Polynomial defect = derivation_d(lift.series) - lift.series;
  lift.closed = defect.truncate(w, max_weight - 1).is_zero();
  lift.laplacian_is_word_length = true;
  for (int n = 0; n <= max_weight; ++n) {
    for (const Exponents &e : weight_basis(n)) {
      Polynomial m = Polynomial::monomial(e);
      Polynomial lap = derivation_d(delta(m)) - delta(derivation_d(m));
      if (!(lap == Scalar(word_length(e)) * m)) {
        lift.laplacian_is_word_length = false;
      }
    }
  }
  return lift;
}

Polynomial psi_character(long k, int max_weight) {
  Polynomial out;
  Scalar power(1);
  for (int n = 1; n <= max_weight; ++n) {
    power *= k;
    out += power * x(n);
  }
  return out;
}

Polynomial psi_monomial_character(const std::vector<long> &ks, int max_weight) {
  const std::vector<int> w = weights(static_cast<std::size_t>(max_weight));
  Polynomial out(Scalar(1));
  for (long k : ks) {
    out = (out * psi_character(k, max_weight)).truncate(w, max_weight);
  }
  return out;
}

Polynomial power_sum_in_elementary(int n) {
  std::vector<Polynomial> s(static_cast<std::size_t>(std::max(n, 0)) + 1);
  for (int m = 1; m <= n; ++m) {
    Polynomial value;
    for (int i = 1; i < m; ++i) {
      value += Scalar(i % 2 == 1 ? 1 : -1) * (x(i) * s[m - i]);
    }
    value += Scalar(m % 2 == 1 ? m : -m) * x(m);
    s[m] = value;
  }
  return n >= 1 ? s[n] : Polynomial(Scalar(0));
}

Polynomial elementary_in_power_sum(int n) {
  std::vector<Polynomial> c(static_cast<std::size_t>(std::max(n, 0)) + 1);
  c[0] = Polynomial(Scalar(1));
  for (int m = 1; m <= n; ++m) {
    Polynomial value;
    for (int i = 1; i <= m; ++i) {
      value += Scalar(i % 2 == 1 ? 1 : -1) * (c[m - i] * x(i));
    }
    c[m] = Scalar(Scalar(1) / m) * value;
  }
  return c[n];
}

std::string TensorAction::format() const {
  const int u = n + 1;
  return poly.format([u](std::size_t i) {
    return static_cast<int>(i) == u ? std::string("u")
                                    : "s" + std::to_string(i);
  });
}

TensorAction tensor_action_power_sums(int n) {
  TensorAction t;
  t.n = n;
  const std::size_t u = static_cast<std::size_t>(n) + 1;
  for (int k = 0; k <= n; ++k) {
    t.poly += poly::binomial(n, k) *
              (Polynomial::variable(static_cast<std::size_t>(n - k)) *
               Polynomial::variable(u, k));
  }
  return t;
}

WangReport wang_model_report(int max_weight) {
  WangReport report;
  report.max_weight = max_weight;
  InvariantRing j = invariant_ring(max_weight);
  report.even_dims = j.dims;
  for (int n = 0; n < max_weight; ++n) {
    report.odd_dims.push_back(partition_count(n) -
                              linalg::rank(d_matrix(n + 1)));
  }
  report.twist_annihilates = true;
  for (int n = 1; n < max_weight; ++n) {
    const Matrix d = d_matrix(n + 1);
    for (const Polynomial &f : j.basis[n]) {
      if (!linalg::solve(d, coordinates(f, n))) {
        report.twist_annihilates = false;
      }
    }
  }
  return report;
}

} // namespace twistcoh::charclass
