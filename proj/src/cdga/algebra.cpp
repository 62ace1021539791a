#include "twistcoh/cdga.hpp"

#include "twistcoh/detail/expression_parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace twistcoh::cdga {

// ---------------------------------------------------------------------------
// Element

Element Element::term(Monomial m, Scalar coefficient) {
  Element e;
  e.add_term(m, coefficient);
  return e;
}

Scalar Element::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Monomial &m, const Scalar &coefficient) {
  if (sgn(coefficient) == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) {
      terms_.erase(it);
    }
  }
}

Element &Element::operator+=(const Element &other) {
  for (const auto &[m, c] : other.terms_) {
    add_term(m, c);
  }
  return *this;
}

Element &Element::operator-=(const Element &other) {
  for (const auto &[m, c] : other.terms_) {
    add_term(m, -c);
  }
  return *this;
}

Element &Element::operator*=(const Scalar &c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &entry : terms_) {
    entry.second *= c;
  }
  return *this;
}

// ---------------------------------------------------------------------------
// GradedAlgebra

namespace {

bool valid_identifier(const std::string &name) {
  if (name.empty() ||
      !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
           ch == '\'';
  });
}

} // namespace

GradedAlgebra::GradedAlgebra(std::vector<GeneratorSpec> generators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const GeneratorSpec &g = generators_[i];
    if (!valid_identifier(g.name)) {
      throw NameError("invalid generator name '" + g.name + "'", i);
    }
    if (!seen.insert(g.name).second) {
      throw NameError("duplicate generator '" + g.name + "'", i);
    }
    if (g.degree <= 0) {
      throw DegreeError("generator '" + g.name + "' must have positive degree",
                        i);
    }
    if (g.odd() && g.truncation) {
      throw TruncationError("odd generator '" + g.name +
                                "' cannot carry a truncation",
                            i);
    }
    if (!g.odd() && !g.truncation) {
      throw TruncationError("even generator '" + g.name +
                                "' needs a truncation",
                            i);
    }
    if (g.truncation && *g.truncation < 2) {
      throw TruncationError("truncation of '" + g.name + "' must be >= 2", i);
    }
  }

  // Enumerate all exponent vectors.
  std::vector<Monomial> all;
  Monomial current(generators_.size(), 0);
  std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
    if (i == generators_.size()) {
      all.push_back(current);
      return;
    }
    const int bound =
        generators_[i].odd() ? 2 : *generators_[i].truncation;
    for (int e = 0; e < bound; ++e) {
      current[i] = e;
      enumerate(i + 1);
    }
    current[i] = 0;
  };
  enumerate(0);

  top_degree_ = 0;
  for (const Monomial &m : all) {
    top_degree_ = std::max(top_degree_, degree(m));
  }
  by_degree_.assign(static_cast<std::size_t>(top_degree_) + 1, {});
  for (Monomial &m : all) {
    by_degree_[static_cast<std::size_t>(degree(m))].push_back(std::move(m));
  }
  for (auto &bucket : by_degree_) {
    std::sort(bucket.begin(), bucket.end(), std::greater<Monomial>());
  }
  for (int k = 0; k <= top_degree_; ++k) {
    offsets_.push_back(basis_.size());
    for (const Monomial &m : by_degree_[static_cast<std::size_t>(k)]) {
      index_.emplace(m, basis_.size());
      basis_.push_back(m);
      index_degree_.push_back(k);
    }
  }
  offsets_.push_back(basis_.size());
}

std::optional<std::size_t> GradedAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

const std::vector<Monomial> &GradedAlgebra::basis(int degree) const {
  static const std::vector<Monomial> empty;
  if (degree < 0 || degree > top_degree_) {
    return empty;
  }
  return by_degree_[static_cast<std::size_t>(degree)];
}

std::size_t GradedAlgebra::offset(int degree) const {
  if (degree <= 0) {
    return 0;
  }
  if (degree > top_degree_) {
    return basis_.size();
  }
  return offsets_[static_cast<std::size_t>(degree)];
}

std::size_t GradedAlgebra::index(const Monomial &m) const {
  auto it = index_.find(m);
  if (it == index_.end()) {
    throw std::out_of_range("monomial is not a basis element");
  }
  return it->second;
}

int GradedAlgebra::degree(const Monomial &m) const {
  int deg = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    deg += m[i] * generators_[i].degree;
  }
  return deg;
}

std::optional<int> GradedAlgebra::degree(const Element &e) const {
  std::optional<int> deg;
  for (const auto &[m, c] : e.terms()) {
    const int d = degree(m);
    if (deg && *deg != d) {
      return std::nullopt;
    }
    deg = d;
  }
  return deg;
}

bool GradedAlgebra::is_odd(const Element &e) const {
  return std::all_of(e.terms().begin(), e.terms().end(), [this](const auto &t) {
    return degree(t.first) % 2 != 0;
  });
}

Element GradedAlgebra::unit() const {
  return Element::term(Monomial(generators_.size(), 0));
}

Element GradedAlgebra::generator(std::size_t i) const {
  Monomial m(generators_.size(), 0);
  m.at(i) = 1;
  return Element::term(std::move(m));
}

Element GradedAlgebra::generator(std::string_view name) const {
  auto i = find(name);
  if (!i) {
    throw NameError("unknown generator '" + std::string(name) + "'",
                    std::nullopt);
  }
  return generator(*i);
}

std::pair<int, Monomial> GradedAlgebra::multiply(const Monomial &a,
                                                 const Monomial &b) const {
  Monomial out(generators_.size(), 0);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const int e = a[i] + b[i];
    const int bound = generators_[i].odd() ? 2 : *generators_[i].truncation;
    if (e >= bound) {
      return {0, {}};
    }
    out[i] = e;
  }
  // Bringing b's odd generators into position past a's later odd generators.
  int transpositions = 0;
  int odd_in_a_after = 0;
  for (std::size_t i = generators_.size(); i-- > 0;) {
    if (!generators_[i].odd()) {
      continue;
    }
    if (b[i] == 1) {
      transpositions += odd_in_a_after;
    }
    if (a[i] == 1) {
      ++odd_in_a_after;
    }
  }
  return {transpositions % 2 == 0 ? 1 : -1, std::move(out)};
}

Element GradedAlgebra::multiply(const Element &a, const Element &b) const {
  Element out;
  for (const auto &[ma, ca] : a.terms()) {
    for (const auto &[mb, cb] : b.terms()) {
      auto [sign, m] = multiply(ma, mb);
      if (sign != 0) {
        out.add_term(m, sign > 0 ? Scalar(ca * cb) : Scalar(-(ca * cb)));
      }
    }
  }
  return out;
}

Element GradedAlgebra::power(const Element &a, int k) const {
  Element out = unit();
  for (int i = 0; i < k; ++i) {
    out = multiply(out, a);
  }
  return out;
}

Vector GradedAlgebra::coordinates(const Element &e) const {
  Vector v = linalg::zero_vector(basis_.size());
  for (const auto &[m, c] : e.terms()) {
    v[index(m)] = c;
  }
  return v;
}

Vector GradedAlgebra::coordinates(const Element &e, int deg) const {
  const auto &b = basis(deg);
  Vector v = linalg::zero_vector(b.size());
  const std::size_t start = offset(deg);
  for (const auto &[m, c] : e.terms()) {
    if (degree(m) != deg) {
      throw DegreeError("element has a term outside degree " +
                            std::to_string(deg),
                        std::nullopt);
    }
    v[index(m) - start] = c;
  }
  return v;
}

Element GradedAlgebra::element(const Vector &global) const {
  if (global.size() != basis_.size()) {
    throw linalg::DimensionError("coordinate vector has wrong length");
  }
  Element e;
  for (std::size_t i = 0; i < global.size(); ++i) {
    e.add_term(basis_[i], global[i]);
  }
  return e;
}

Element GradedAlgebra::element(const Vector &local, int deg) const {
  const auto &b = basis(deg);
  if (local.size() != b.size()) {
    throw linalg::DimensionError("coordinate vector has wrong length");
  }
  Element e;
  for (std::size_t i = 0; i < local.size(); ++i) {
    e.add_term(b[i], local[i]);
  }
  return e;
}

Matrix GradedAlgebra::multiplication_matrix(const Element &a) const {
  Matrix m(basis_.size(), basis_.size());
  for (std::size_t col = 0; col < basis_.size(); ++col) {
    for (const auto &[ma, ca] : a.terms()) {
      auto [sign, prod] = multiply(ma, basis_[col]);
      if (sign != 0) {
        m(index(prod), col) += sign > 0 ? ca : -ca;
      }
    }
  }
  return m;
}

std::string GradedAlgebra::format(const Monomial &m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += generators_[i].name;
    if (m[i] > 1) {
      out += '^' + std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::string GradedAlgebra::format(const Element &e) const {
  if (e.is_zero()) {
    return "0";
  }
  std::vector<std::pair<std::size_t, const Scalar *>> ordered;
  for (const auto &[m, c] : e.terms()) {
    ordered.emplace_back(index(m), &c);
  }
  std::sort(ordered.begin(), ordered.end());
  std::ostringstream os;
  bool first = true;
  for (const auto &[idx, coeff] : ordered) {
    const Monomial &m = basis_[idx];
    const bool constant = std::all_of(m.begin(), m.end(),
                                      [](int x) { return x == 0; });
    Scalar c = *coeff;
    if (first) {
      if (sgn(c) < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (constant) {
      os << c.get_str();
    } else {
      if (c != 1) {
        os << c.get_str() << '*';
      }
      os << format(m);
    }
  }
  return os.str();
}

namespace {

struct AlgebraOps {
  const GradedAlgebra &algebra;

  Element scalar(const Scalar &c) const { return c * algebra.unit(); }
  Element multiply(const Element &a, const Element &b) const {
    return algebra.multiply(a, b);
  }
  Element add(const Element &a, const Element &b) const { return a + b; }
  Element power(const Element &a, int k) const { return algebra.power(a, k); }
  Element atom(std::string_view name) const {
    auto idx = algebra.find(name);
    if (!idx) {
      throw NameError("unknown generator '" + std::string(name) + "'",
                      std::nullopt);
    }
    return algebra.generator(*idx);
  }
};

} // namespace

Element parse_element(const GradedAlgebra &algebra, std::string_view text) {
  AlgebraOps ops{algebra};
  return detail::ExpressionParser<Element, AlgebraOps, ExpressionError>(ops,
                                                                        text)
      .parse();
}

} // namespace twistcoh::cdga
