#include "twistcoh/poly.hpp"

#include "twistcoh/detail/expression_parser.hpp"

#include <algorithm>
#include <sstream>

namespace twistcoh::poly {

namespace {

void trim(Exponents &e) {
  while (!e.empty() && e.back() == 0) {
    e.pop_back();
  }
}

int at(const Exponents &e, std::size_t i) { return i < e.size() ? e[i] : 0; }

} // namespace

bool Colex::operator()(const Exponents &a, const Exponents &b) const {
  for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
    const int x = at(a, i), y = at(b, i);
    if (x != y) {
      return x < y;
    }
  }
  return false;
}

Polynomial::Polynomial(const Scalar &c) {
  if (sgn(c) != 0) {
    terms_.emplace(Exponents{}, c);
  }
}

Polynomial Polynomial::variable(std::size_t index, int power) {
  Exponents e(index + 1, 0);
  e[index] = power;
  return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponents e, Scalar c) {
  Polynomial p;
  p.add_term(std::move(e), c);
  return p;
}

Scalar Polynomial::coefficient(const Exponents &e) const {
  Exponents key = e;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(Exponents e, const Scalar &c) {
  if (sgn(c) == 0) {
    return;
  }
  trim(e);
  auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) {
      terms_.erase(it);
    }
  }
}

std::size_t Polynomial::num_variables() const {
  std::size_t n = 0;
  for (const auto &[e, c] : terms_) {
    n = std::max(n, e.size());
  }
  return n;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  for (const auto &[e, c] : o.terms_) {
    add_term(e, c);
  }
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  for (const auto &[e, c] : o.terms_) {
    add_term(e, -c);
  }
  return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &o) {
  Polynomial out;
  for (const auto &[ea, ca] : terms_) {
    for (const auto &[eb, cb] : o.terms_) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = at(ea, i) + at(eb, i);
      }
      out.add_term(std::move(e), ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Polynomial &Polynomial::operator*=(const Scalar &c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial out(Scalar(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) {
      out *= base;
    }
    k >>= 1;
    if (k > 0) {
      base *= base;
    }
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  Polynomial out;
  for (const auto &[e, c] : terms_) {
    const int k = at(e, index);
    if (k == 0) {
      continue;
    }
    Exponents lower = e;
    --lower[index];
    out.add_term(std::move(lower), c * k);
  }
  return out;
}

Polynomial
Polynomial::compose(const std::function<Polynomial(std::size_t)> &image) const {
  std::map<std::pair<std::size_t, int>, Polynomial> powers;
  auto power_of = [&](std::size_t i, int k) -> const Polynomial & {
    auto key = std::make_pair(i, k);
    auto it = powers.find(key);
    if (it == powers.end()) {
      it = powers.emplace(key, image(i).pow(k)).first;
    }
    return it->second;
  };
  Polynomial out;
  for (const auto &[e, c] : terms_) {
    Polynomial term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) {
        term *= power_of(i, e[i]);
      }
    }
    out += term;
  }
  return out;
}

Scalar Polynomial::evaluate(const std::vector<Scalar> &values) const {
  Scalar total(0);
  for (const auto &[e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) {
        term *= values.at(i);
      }
    }
    total += term;
  }
  return total;
}

long Polynomial::weight(const Exponents &e, const std::vector<int> &weights) {
  long w = 0;
  for (std::size_t i = 0; i < e.size() && i < weights.size(); ++i) {
    w += static_cast<long>(weights[i]) * e[i];
  }
  return w;
}

std::optional<long>
Polynomial::homogeneous_weight(const std::vector<int> &weights) const {
  std::optional<long> w;
  for (const auto &[e, c] : terms_) {
    const long we = weight(e, weights);
    if (w && *w != we) {
      return std::nullopt;
    }
    w = we;
  }
  return w;
}

Polynomial Polynomial::component(const std::vector<int> &weights,
                                 long w) const {
  Polynomial out;
  for (const auto &[e, c] : terms_) {
    if (weight(e, weights) == w) {
      out.terms_.emplace(e, c);
    }
  }
  return out;
}

Polynomial Polynomial::truncate(const std::vector<int> &weights,
                                long max) const {
  Polynomial out;
  for (const auto &[e, c] : terms_) {
    if (weight(e, weights) <= max) {
      out.terms_.emplace(e, c);
    }
  }
  return out;
}

std::string
format_monomial(const Exponents &e,
                const std::function<std::string(std::size_t)> &name) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += name(i);
    if (e[i] > 1) {
      out += '^' + std::to_string(e[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::format(
    const std::function<std::string(std::size_t)> &name) const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Scalar magnitude = negative ? Scalar(-c) : c;
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = e.empty();
    if (constant) {
      os << linalg::to_string(magnitude);
    } else if (magnitude == 1) {
      os << format_monomial(e, name);
    } else {
      os << linalg::to_string(magnitude) << '*' << format_monomial(e, name);
    }
  }
  return os.str();
}

namespace {

struct PolynomialOps {
  const std::function<std::optional<std::size_t>(std::string_view)> &resolve;

  Polynomial scalar(const Scalar &c) const { return Polynomial(c); }
  Polynomial multiply(const Polynomial &a, const Polynomial &b) const {
    return a * b;
  }
  Polynomial add(const Polynomial &a, const Polynomial &b) const {
    return a + b;
  }
  Polynomial power(const Polynomial &a, int k) const { return a.pow(k); }
  Polynomial atom(std::string_view name) const {
    auto idx = resolve(name);
    if (!idx) {
      throw ParseError("unknown variable '" + std::string(name) + "'");
    }
    return Polynomial::variable(*idx);
  }
};

} // namespace

Polynomial parse(std::string_view text,
                 const std::function<std::optional<std::size_t>(std::string_view)>
                     &resolve) {
  PolynomialOps ops{resolve};
  return detail::ExpressionParser<Polynomial, PolynomialOps, ParseError>(ops,
                                                                         text)
      .parse();
}

Scalar binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    return Scalar(0);
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Scalar(out);
}

Scalar factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0L)));
  return Scalar(out);
}

} // namespace twistcoh::poly
