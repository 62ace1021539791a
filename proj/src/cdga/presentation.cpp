#include "twistcoh/cdga.hpp"

#include <set>

namespace twistcoh::cdga {

Element Presentation::differential_of(const Monomial &m) const {
  const GradedAlgebra &alg = algebra_;
  const std::size_t n = alg.num_generators();
  Element out;
  int prefix_degree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int e = m[i];
    if (e == 0) {
      continue;
    }
    const GeneratorSpec &g = alg.generators()[i];
    if (!differentials_[i].is_zero()) {
      Monomial prefix(n, 0);
      Monomial suffix(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        (j < i ? prefix : suffix)[j] = j == i ? 0 : m[j];
      }
      // d(g^e) = e g^{e-1} dg; odd generators only ever have e = 1.
      Monomial lower(n, 0);
      lower[i] = e - 1;
      Element piece = Element::term(prefix, Scalar(e));
      piece = alg.multiply(piece, Element::term(lower));
      piece = alg.multiply(piece, differentials_[i]);
      piece = alg.multiply(piece, Element::term(suffix));
      if (prefix_degree % 2 != 0) {
        piece *= Scalar(-1);
      }
      out += piece;
    }
    prefix_degree += e * g.degree;
  }
  return out;
}

Element Presentation::differential(const Element &a) const {
  Element out;
  for (const auto &[m, c] : a.terms()) {
    out += c * differential_of(m);
  }
  return out;
}

Matrix Presentation::differential_matrix(int degree) const {
  const auto &src = algebra_.basis(degree);
  const auto &dst = algebra_.basis(degree + 1);
  Matrix m(dst.size(), src.size());
  const std::size_t src_off = algebra_.offset(degree);
  const std::size_t dst_off = algebra_.offset(degree + 1);
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (std::size_t r = 0; r < dst.size(); ++r) {
      m(r, c) = global_d_(dst_off + r, src_off + c);
    }
  }
  return m;
}

Presentation validate(GradedAlgebra algebra,
                      std::vector<Element> differentials) {
  const std::size_t n = algebra.num_generators();
  if (differentials.size() > n) {
    throw DegreeError("more differentials than generators", std::nullopt);
  }
  differentials.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GeneratorSpec &g = algebra.generators()[i];
    // Re-normalize against the algebra's relations.
    Element normalized;
    for (const auto &[m, c] : differentials[i].terms()) {
      if (m.size() != n) {
        throw DegreeError("differential of '" + g.name +
                              "' has a malformed monomial",
                          i);
      }
      normalized += c * algebra.multiply(algebra.unit(), Element::term(m));
    }
    differentials[i] = normalized;
    for (const auto &[m, c] : differentials[i].terms()) {
      if (algebra.degree(m) != g.degree + 1) {
        throw DegreeError("d(" + g.name + ") must be homogeneous of degree " +
                              std::to_string(g.degree + 1) + ", found term " +
                              algebra.format(m) + " of degree " +
                              std::to_string(algebra.degree(m)),
                          i);
      }
    }
  }

  Presentation p;
  p.algebra_ = std::move(algebra);
  p.differentials_ = std::move(differentials);
  const GradedAlgebra &alg = p.algebra_;

  for (std::size_t i = 0; i < n; ++i) {
    const GeneratorSpec &g = alg.generators()[i];
    if (!g.odd()) {
      const int t = *g.truncation;
      Monomial lower(n, 0);
      lower[i] = t - 1;
      Element image = alg.multiply(Element::term(lower, Scalar(t)),
                                   p.differentials_[i]);
      if (!image.is_zero()) {
        throw TruncationError("d does not preserve " + g.name + "^" +
                                  std::to_string(t) + " = 0: d(" + g.name +
                                  "^" + std::to_string(t) +
                                  ") = " + alg.format(image),
                              i);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Element dd = p.differential(p.differentials_[i]);
    if (!dd.is_zero()) {
      throw LeibnizError("d^2(" + alg.generators()[i].name +
                             ") = " + alg.format(dd) + " is not zero",
                         i);
    }
  }

  const std::size_t dim = alg.dimension();
  p.global_d_ = Matrix(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    Element image = p.differential_of(alg.basis()[col]);
    for (const auto &[m, c] : image.terms()) {
      p.global_d_(alg.index(m), col) = c;
    }
  }
  return p;
}

Presentation make_presentation(
    std::vector<GeneratorSpec> generators,
    const std::vector<std::pair<std::string, std::string>> &differentials) {
  GradedAlgebra algebra(std::move(generators));
  std::vector<Element> d(algebra.num_generators());
  for (const auto &[name, expr] : differentials) {
    auto idx = algebra.find(name);
    if (!idx) {
      throw NameError("differential of unknown generator '" + name + "'",
                      std::nullopt);
    }
    d[*idx] = parse_element(algebra, expr);
  }
  return validate(std::move(algebra), std::move(d));
}

Presentation tensor_product(const Presentation &a, const Presentation &b) {
  std::vector<GeneratorSpec> gens = a.generators();
  std::set<std::string> names;
  for (const auto &g : gens) {
    names.insert(g.name);
  }
  for (GeneratorSpec g : b.generators()) {
    if (names.count(g.name) != 0) {
      const std::string base = g.name;
      for (int k = 2;; ++k) {
        std::string candidate = base + "_" + std::to_string(k);
        if (names.count(candidate) == 0) {
          g.name = candidate;
          break;
        }
      }
    }
    names.insert(g.name);
    gens.push_back(std::move(g));
  }
  GradedAlgebra algebra(std::move(gens));
  const std::size_t na = a.generators().size();
  const std::size_t nb = b.generators().size();
  std::vector<Element> d(na + nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (const auto &[m, c] : a.generator_differential(i).terms()) {
      Monomial ext = m;
      ext.resize(na + nb, 0);
      d[i].add_term(ext, c);
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (const auto &[m, c] : b.generator_differential(i).terms()) {
      Monomial ext(na, 0);
      ext.insert(ext.end(), m.begin(), m.end());
      d[na + i].add_term(ext, c);
    }
  }
  return validate(std::move(algebra), std::move(d));
}

Element embed_left(const Presentation &product, const Element &e) {
  const std::size_t n = product.generators().size();
  Element out;
  for (const auto &[m, c] : e.terms()) {
    Monomial ext = m;
    ext.resize(n, 0);
    out.add_term(ext, c);
  }
  return out;
}

Element embed_right(const Presentation &product, const Presentation &a,
                    const Element &e) {
  Element out;
  for (const auto &[m, c] : e.terms()) {
    Monomial ext(a.generators().size(), 0);
    ext.insert(ext.end(), m.begin(), m.end());
    ext.resize(product.generators().size(), 0);
    out.add_term(ext, c);
  }
  return out;
}

Presentation heisenberg() {
  return make_presentation({{"x", 1, {}}, {"y", 1, {}}, {"z", 1, {}}},
                           {{"z", "x*y"}});
}

Presentation tower(int n) {
  if (n < 1) {
    throw NameError("tower needs n >= 1", std::nullopt);
  }
  std::vector<GeneratorSpec> gens{{"x", 1, {}}};
  for (int i = 1; i <= n; ++i) {
    gens.push_back({"e" + std::to_string(i), 1, {}});
  }
  std::vector<std::pair<std::string, std::string>> d;
  for (int i = 1; i < n; ++i) {
    d.emplace_back("e" + std::to_string(i), "x*e" + std::to_string(i + 1));
  }
  return make_presentation(std::move(gens), d);
}

Presentation complex_projective(int n) {
  if (n < 1) {
    throw NameError("cp needs n >= 1", std::nullopt);
  }
  return make_presentation({{"t", 2, n + 1}}, {});
}

Presentation sphere3() { return make_presentation({{"s", 3, {}}}, {}); }

Presentation so3() {
  return make_presentation({{"a", 1, {}}, {"b", 1, {}}, {"c", 1, {}}},
                           {{"a", "b*c"}, {"b", "c*a"}, {"c", "a*b"}});
}

Presentation builtin(std::string_view name, int parameter) {
  if (name == "heisenberg") {
    return heisenberg();
  }
  if (name == "tower") {
    return tower(parameter);
  }
  if (name == "cp") {
    return complex_projective(parameter);
  }
  if (name == "sphere3") {
    return sphere3();
  }
  if (name == "so3") {
    return so3();
  }
  throw NameError("unknown built-in '" + std::string(name) + "'",
                  std::nullopt);
}

Morphism::Morphism(Presentation source, Presentation target,
                   std::vector<Element> generator_images)
    : source_(std::move(source)), target_(std::move(target)),
      images_(std::move(generator_images)) {
  if (images_.size() != source_.generators().size()) {
    throw linalg::DimensionError("one image per source generator required");
  }
}

Element Morphism::apply(const Element &e) const {
  const GradedAlgebra &tgt = target_.algebra();
  Element out;
  for (const auto &[m, c] : e.terms()) {
    Element value = tgt.unit();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) {
        value = tgt.multiply(value, images_[i]);
      }
    }
    out += c * value;
  }
  return out;
}

Matrix Morphism::matrix() const {
  const auto &src = source_.algebra();
  const auto &tgt = target_.algebra();
  Matrix m(tgt.dimension(), src.dimension());
  for (std::size_t col = 0; col < src.dimension(); ++col) {
    Vector v = tgt.coordinates(apply(Element::term(src.basis()[col])));
    for (std::size_t r = 0; r < v.size(); ++r) {
      m(r, col) = v[r];
    }
  }
  return m;
}

bool Morphism::is_dga_map() const {
  const auto &src = source_.algebra();
  const auto &tgt = target_.algebra();
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const GeneratorSpec &g = src.generators()[i];
    auto deg = tgt.degree(images_[i]);
    if (!images_[i].is_zero() && (!deg || *deg != g.degree)) {
      return false;
    }
    if (!g.odd() && !tgt.power(images_[i], *g.truncation).is_zero()) {
      return false;
    }
    if (!(target_.differential(images_[i]) ==
          apply(source_.generator_differential(i)))) {
      return false;
    }
  }
  return true;
}

} // namespace twistcoh::cdga
