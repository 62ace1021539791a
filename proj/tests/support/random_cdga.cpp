#include "random_cdga.hpp"

namespace twistcoh::gen {

using cdga::Element;
using cdga::GeneratorSpec;
using cdga::GradedAlgebra;
using cdga::Presentation;
using linalg::Scalar;
using linalg::Vector;

namespace {

Scalar small_coefficient(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  return Scalar(c(rng));
}

} // namespace

Element random_element(std::mt19937_64 &rng, const GradedAlgebra &a,
                       int degree) {
  Element e;
  for (const auto &m : a.basis(degree)) {
    e.add_term(m, small_coefficient(rng));
  }
  return e;
}

Element random_cocycle(std::mt19937_64 &rng, const Presentation &p,
                       int degree) {
  if (degree < 0 || degree > p.top_degree()) {
    return {};
  }
  linalg::Subspace cocycles = linalg::kernel(p.differential_matrix(degree));
  Vector combo = linalg::zero_vector(p.basis(degree).size());
  for (const Vector &b : cocycles.basis()) {
    combo = linalg::add(combo, linalg::scale(small_coefficient(rng), b));
  }
  return p.algebra().element(combo, degree);
}

Presentation random_presentation(std::mt19937_64 &rng, std::size_t max_dim) {
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> degree_pick(0, 5);
  std::uniform_int_distribution<int> trunc_pick(2, 3);
  std::bernoulli_distribution use_d(0.8);
  while (true) {
    const int n = count(rng);
    std::vector<GeneratorSpec> gens;
    std::size_t dim = 1;
    for (int i = 0; i < n; ++i) {
      static constexpr int kDegrees[] = {1, 1, 1, 2, 3, 1};
      GeneratorSpec g{"g" + std::to_string(i), kDegrees[degree_pick(rng)], {}};
      if (!g.odd()) {
        g.truncation = trunc_pick(rng);
      }
      dim *= g.odd() ? 2 : static_cast<std::size_t>(*g.truncation);
      gens.push_back(g);
    }
    if (dim > max_dim) {
      continue;
    }
    // Extend one generator at a time.
    Presentation current = cdga::validate(GradedAlgebra(), {});
    std::vector<Element> diffs;
    std::vector<GeneratorSpec> so_far;
    for (const GeneratorSpec &g : gens) {
      Element dg;
      if (g.odd() && use_d(rng)) {
        dg = random_cocycle(rng, current, g.degree + 1);
      }
      so_far.push_back(g);
      GradedAlgebra next(so_far);
      std::vector<Element> lifted;
      for (const Element &e : diffs) {
        Element ext;
        for (const auto &[m, c] : e.terms()) {
          cdga::Monomial mm = m;
          mm.resize(so_far.size(), 0);
          ext.add_term(mm, c);
        }
        lifted.push_back(ext);
      }
      Element ext;
      for (const auto &[m, c] : dg.terms()) {
        cdga::Monomial mm = m;
        mm.resize(so_far.size(), 0);
        ext.add_term(mm, c);
      }
      lifted.push_back(ext);
      diffs = lifted;
      current = cdga::validate(next, diffs);
    }
    return current;
  }
}

Element random_twist(std::mt19937_64 &rng, const Presentation &p) {
  std::uniform_int_distribution<int> extra(0, 5);
  Element eta = random_cocycle(rng, p, 3);
  const int k = extra(rng);
  if (k == 0) {
    eta += random_cocycle(rng, p, 1);
  } else if (k == 1) {
    eta += random_cocycle(rng, p, 5);
  }
  return eta;
}

} // namespace twistcoh::gen
