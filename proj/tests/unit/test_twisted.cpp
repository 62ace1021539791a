#include "twistcoh/twisted.hpp"

#include "../support/random_cdga.hpp"

#include <gtest/gtest.h>

using namespace twistcoh;
using namespace twistcoh::cdga;
using namespace twistcoh::twisted;

namespace {

Element el(const Presentation &p, const std::string &expr) {
  return parse_element(p.algebra(), expr);
}

Presentation heisenberg_cp2() {
  return tensor_product(heisenberg(), complex_projective(2));
}

Presentation tower3_cp3() {
  return tensor_product(tower(3), complex_projective(3));
}

// Oracle: D built element by element, Z_r^p as an explicit kernel, and
// E_r^p = pi_p(Z_r^p) / pi_p(D Z_{r-1}^{p-r+1}).
struct PageOracle {
  const Presentation &p;
  Element eta;
  std::vector<std::vector<Vector>> columns;  // D(basis element) per index

  PageOracle(const Presentation &pres, Element twist)
      : p(pres), eta(std::move(twist)) {
    const GradedAlgebra &alg = p.algebra();
    for (const Monomial &m : alg.basis()) {
      Element a = Element::term(m);
      Element da = p.differential(a) - alg.multiply(eta, a);
      columns.push_back({alg.coordinates(da)});
    }
  }

  int degree(std::size_t i) const { return p.algebra().degree_of_index(i); }

  // Z_r^q: vectors supported in degrees >= q whose image has no component
  // in degrees < q + r.
  std::vector<Vector> cycles(int q, int r) const {
    const std::size_t n = p.dimension();
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i) {
      if (degree(i) >= q) {
        cols.push_back(i);
      }
    }
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (degree(i) < q + r) {
        rows.push_back(i);
      }
    }
    Matrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
        m(r2, c) = columns[cols[c]][0][rows[r2]];
      }
    }
    std::vector<Vector> out;
    const Subspace null = linalg::kernel(m);
    for (const Vector &k : null.basis()) {
      Vector v = linalg::zero_vector(n);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        v[cols[c]] = k[c];
      }
      out.push_back(v);
    }
    return out;
  }

  Vector apply(const Vector &v) const {
    Vector out = linalg::zero_vector(p.dimension());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) {
        out = linalg::add(out, linalg::scale(v[i], columns[i][0]));
      }
    }
    return out;
  }

  Vector project(const Vector &v, int q) const {
    Vector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (degree(i) == q) {
        out.push_back(v[i]);
      }
    }
    return out;
  }

  std::size_t dim(int q, int r) const {
    const std::size_t local = p.basis(q).size();
    std::vector<Vector> num, den;
    for (const Vector &z : cycles(q, r)) {
      num.push_back(project(z, q));
    }
    for (const Vector &z : cycles(q - r + 1, r - 1)) {
      den.push_back(project(apply(z), q));
    }
    return Subspace::span(local, num).dim() - Subspace::span(local, den).dim();
  }

  std::size_t total(int r) const {
    std::size_t t = 0;
    for (int q = 0; q <= p.top_degree(); ++q) {
      t += dim(q, r);
    }
    return t;
  }
};

// Oracle for twisted cohomology: ranks of the two parity blocks.
std::pair<std::size_t, std::size_t> brute_force_dims(const Presentation &p,
                                                     const Element &eta) {
  PageOracle o(p, eta);
  std::vector<std::size_t> idx[2];
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    idx[o.degree(i) % 2].push_back(i);
  }
  std::size_t ranks[2];
  for (int q = 0; q < 2; ++q) {
    Matrix m(idx[1 - q].size(), idx[q].size());
    for (std::size_t c = 0; c < idx[q].size(); ++c) {
      for (std::size_t r = 0; r < idx[1 - q].size(); ++r) {
        m(r, c) = o.columns[idx[q][c]][0][idx[1 - q][r]];
      }
    }
    ranks[q] = linalg::rank(m);
  }
  return {idx[0].size() - ranks[0] - ranks[1],
          idx[1].size() - ranks[0] - ranks[1]};
}

} // namespace

TEST(TwistedComplex, RejectsBadTwists) {
  Presentation h = heisenberg();
  EXPECT_THROW(TwistedComplex(h, el(h, "z")), TwistNotClosed);
  EXPECT_THROW(TwistedComplex(h, el(h, "x*y")), TwistNotOdd);
  EXPECT_NO_THROW(TwistedComplex(h, el(h, "x + x*y*z")));
}

TEST(TwistedComplex, SquaresToZero) {
  Presentation m = heisenberg_cp2();
  TwistedComplex c(m, el(m, "x*t"));
  EXPECT_TRUE((c.matrix() * c.matrix()).is_zero());
}

TEST(TwistedCohomology, UntwistedHeisenbergSplitsByParity) {
  Presentation h = heisenberg();
  TwistedCohomology t = twisted_cohomology(TwistedComplex(h, Element()));
  EXPECT_EQ(t.even_dim, 3u);
  EXPECT_EQ(t.odd_dim, 3u);
}

TEST(TwistedCohomology, HeisenbergTimesPlane) {
  Presentation m = heisenberg_cp2();
  TwistedCohomology t = twisted_cohomology(TwistedComplex(m, el(m, "x*t")));
  auto [even, odd] = brute_force_dims(m, el(m, "x*t"));
  EXPECT_EQ(t.even_dim, even);
  EXPECT_EQ(t.odd_dim, odd);
  EXPECT_EQ(t.total(), 8u);
}

TEST(TwistedCohomology, HeisenbergTimesPlaneMatchesMappingTorus) {
  // M fibres over the circle dual to x with fibre T^2 x CP^2.  Twisting by
  // x t turns the monodromy into T = phi* (x) e^t, and the twisted
  // cohomology is ker(T - 1) + coker(T - 1) on H(T^2) (x) H(CP^2).
  Matrix phi(4, 4);  // basis 1, y, z, yz with z -> z + y
  phi(0, 0) = 1;
  phi(1, 1) = 1;
  phi(2, 2) = 1;
  phi(1, 2) = 1;
  phi(3, 3) = 1;
  Matrix et(3, 3);  // basis 1, t, t^2
  et(0, 0) = 1;
  et(1, 1) = 1;
  et(2, 2) = 1;
  et(1, 0) = 1;
  et(2, 1) = 1;
  et(2, 0) = linalg::make_scalar(1, 2);
  Matrix monodromy(12, 12);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t d = 0; d < 3; ++d) {
          monodromy(3 * a + c, 3 * b + d) = phi(a, b) * et(c, d);
        }
      }
    }
  }
  const std::size_t r = linalg::rank(monodromy - Matrix::identity(12));
  Presentation m = heisenberg_cp2();
  TwistedCohomology t = twisted_cohomology(TwistedComplex(m, el(m, "x*t")));
  EXPECT_EQ(t.total(), 2 * (12 - r));
}

TEST(TwistedCohomology, HeisenbergTopClassTwist) {
  Presentation h = heisenberg();
  Element eta = el(h, "x*y*z");
  TwistedCohomology t = twisted_cohomology(TwistedComplex(h, eta));
  auto [even, odd] = brute_force_dims(h, eta);
  EXPECT_EQ(t.even_dim, even);
  EXPECT_EQ(t.odd_dim, odd);
  // The unit and its multiple xyz pair off.
  EXPECT_EQ(t.total(), 4u);
}

TEST(SpectralSequence, HeisenbergTimesPlane) {
  Presentation m = heisenberg_cp2();
  TwistedComplex c(m, el(m, "x*t"));
  SpectralSequence ss = spectral_sequence(c);
  EXPECT_EQ(ss.page(1).total(), 24u);
  EXPECT_EQ(ss.page(2).total(), 18u);
  EXPECT_EQ(ss.page(3).total(), 18u);
  // d_3 = -x t. kills 1, t, yz, yzt against xt, xt^2, xyzt, xyzt^2; d_5
  // then pairs y with xzt^2.
  EXPECT_EQ(ss.page(4).total(), 10u);
  EXPECT_EQ(ss.page(5).total(), 10u);
  EXPECT_EQ(ss.page(6).total(), 8u);
  EXPECT_EQ(ss.limit_total, 8u);
  EXPECT_EQ(ss.stable_from, 6);
  PageOracle oracle(m, el(m, "x*t"));
  for (const SSPage &page : ss.pages) {
    for (int p = 0; p <= m.top_degree(); ++p) {
      EXPECT_EQ(page.dim(p), oracle.dim(p, page.r))
          << "r=" << page.r << " p=" << p;
    }
  }
}

TEST(SpectralSequence, UntwistedDegeneratesAtSecondPage) {
  for (const Presentation &p :
       {heisenberg(), heisenberg_cp2(), tower(3), so3()}) {
    SpectralSequence ss = spectral_sequence(TwistedComplex(p, Element()));
    EXPECT_EQ(ss.page(2).total(), cohomology::CohomologyRing(p).total_dim());
    EXPECT_EQ(ss.limit_total, ss.page(2).total());
    EXPECT_LE(ss.stable_from, 2);
  }
}

TEST(SpectralSequence, TowerTimesProjectiveSpace) {
  Presentation m = tower3_cp3();
  Element eta = el(m, "x*t");
  TwistedComplex c(m, eta);
  SpectralSequence ss = spectral_sequence(c, 9);
  PageOracle oracle(m, eta);
  for (int r = 1; r <= 9; ++r) {
    EXPECT_EQ(ss.page(r).total(), oracle.total(r)) << "r=" << r;
  }
  EXPECT_EQ(ss.limit_total, twisted_cohomology(c).total());
  DrMasseyReport d7 = dr_vs_massey_check(c, ss, el(m, "e3"), 7);
  EXPECT_TRUE(d7.nonzero());
  EXPECT_TRUE(d7.agree);
  EXPECT_GT(ss.page(7).total(), ss.page(8).total());
}

TEST(Massey, HeisenbergTriple) {
  cohomology::CohomologyRing h(heisenberg());
  const auto x = h.basis_class(1, 0);
  const auto y = h.basis_class(1, 1);
  MasseyCoset xxy = massey_triple(h, x, x, y);
  EXPECT_EQ(xxy.degree, 2);
  EXPECT_EQ(xxy.representative, h.basis_class(2, 0).coordinates);
  EXPECT_EQ(xxy.indeterminacy.dim(), 0u);
  EXPECT_TRUE(xxy.nonzero());

  MasseyCoset xxx = massey_triple(h, x, x, x);
  EXPECT_TRUE(linalg::is_zero(xxx.representative));
  EXPECT_FALSE(xxx.nonzero());
}

TEST(Massey, ProductsMustVanish) {
  Presentation cp = complex_projective(2);
  cohomology::CohomologyRing h(cp);
  const auto t = h.basis_class(2, 0);
  const auto one = h.unit();
  try {
    massey_triple(h, t, t, one);
    FAIL() << "expected ProductsNotZero";
  } catch (const ProductsNotZero &e) {
    EXPECT_EQ(e.which(), "xy");
  }
  cohomology::CohomologyRing heis(heisenberg());
  try {
    massey_triple(heis, heis.zero_class(1), heis.unit(),
                  heis.basis_class(1, 0));
    FAIL() << "expected ProductsNotZero";
  } catch (const ProductsNotZero &e) {
    EXPECT_EQ(e.which(), "yz");
  }
}

TEST(Massey, HeisenbergTimesPlaneTriple) {
  Presentation m = heisenberg_cp2();
  cohomology::CohomologyRing h(m);
  const auto xt = h.class_of(el(m, "x*t"));
  const auto y = h.class_of(el(m, "y"));
  MasseyCoset c = massey_triple(h, xt, xt, y);
  EXPECT_EQ(c.degree, 6);
  EXPECT_EQ(c.form, el(m, "x*z*t^2"));
  EXPECT_EQ(c.representative, h.class_of(el(m, "x*z*t^2")).coordinates);
  EXPECT_TRUE(c.nonzero());
}

TEST(MasseyEta, OrderTwoOnHeisenbergTimesPlane) {
  Presentation m = heisenberg_cp2();
  cohomology::CohomologyRing h(m);
  IteratedMassey r = massey_eta_iterated(h, el(m, "x*t"), el(m, "y"), 2);
  ASSERT_TRUE(r.defined());
  EXPECT_EQ(r.value->degree, 6);
  EXPECT_EQ(r.value->representative, h.class_of(el(m, "x*z*t^2")).coordinates);
  EXPECT_TRUE(r.value->nonzero());
}

TEST(MasseyEta, OrderThreeOnTowerTimesProjectiveSpace) {
  Presentation m = tower3_cp3();
  cohomology::CohomologyRing h(m);
  IteratedMassey r = massey_eta_iterated(h, el(m, "x*t"), el(m, "e3"), 3);
  ASSERT_TRUE(r.defined());
  EXPECT_EQ(r.value->degree, 8);
  EXPECT_EQ(r.value->form, el(m, "x*e1*t^3"));
  EXPECT_EQ(r.value->representative,
            h.class_of(el(m, "x*e1*t^3")).coordinates);
  EXPECT_TRUE(r.value->nonzero());
}

TEST(MasseyEta, ObstructedAtFirstStage) {
  Presentation m = heisenberg_cp2();
  cohomology::CohomologyRing h(m);
  EXPECT_FALSE(h.class_of(el(m, "x*t^2")).is_zero());
  IteratedMassey r = massey_eta_iterated(h, el(m, "x*t"), el(m, "t"), 2);
  EXPECT_FALSE(r.defined());
  EXPECT_EQ(r.obstructed_stage, 1);
}

TEST(MasseyEta, OrderOneIsProduct) {
  Presentation m = heisenberg_cp2();
  cohomology::CohomologyRing h(m);
  IteratedMassey r = massey_eta_iterated(h, el(m, "x*t"), el(m, "y"), 1);
  ASSERT_TRUE(r.defined());
  EXPECT_EQ(r.value->form, el(m, "x*y*t"));
  EXPECT_FALSE(r.value->nonzero());
}

TEST(DrVsMassey, FifthDifferentialOnY) {
  Presentation m = heisenberg_cp2();
  TwistedComplex c(m, el(m, "x*t"));
  SpectralSequence ss = spectral_sequence(c);
  DrMasseyReport rep = dr_vs_massey_check(c, ss, el(m, "y"), 5);
  EXPECT_TRUE(rep.massey_defined);
  EXPECT_TRUE(rep.agree);
  EXPECT_TRUE(rep.nonzero());
  EXPECT_EQ(rep.massey_form, -el(m, "x*z*t^2"));
}

TEST(DrVsMassey, ThirdDifferentialIsMinusEta) {
  Presentation m = heisenberg_cp2();
  TwistedComplex c(m, el(m, "x*t"));
  SpectralSequence ss = spectral_sequence(c);
  for (const char *cls : {"y", "x", "t", "y*z", "1"}) {
    DrMasseyReport rep = dr_vs_massey_check(c, ss, el(m, cls), 3);
    EXPECT_TRUE(rep.agree) << cls;
    EXPECT_EQ(rep.massey_form,
              -m.multiply(el(m, "x*t"), el(m, cls)))
        << cls;
  }
}

TEST(DrVsMassey, Errors) {
  Presentation m = heisenberg_cp2();
  TwistedComplex c(m, el(m, "x*t"));
  SpectralSequence ss = spectral_sequence(c);
  EXPECT_THROW(dr_vs_massey_check(c, ss, el(m, "y"), 4),
               std::invalid_argument);
  EXPECT_THROW(dr_vs_massey_check(c, ss, el(m, "z"), 3), ClassDead);
  EXPECT_THROW(dr_vs_massey_check(c, ss, el(m, "t"), 5), ClassDead);
}

// Properties.

TEST(Properties, SpectralSequenceConvergesToTwistedCohomology) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Presentation p = gen::random_presentation(rng, 64);
    Element eta = gen::random_twist(rng, p);
    TwistedComplex c(p, eta);
    EXPECT_TRUE((c.matrix() * c.matrix()).is_zero());
    SpectralSequence ss = spectral_sequence(c);
    TwistedCohomology t = twisted_cohomology(c);
    EXPECT_EQ(ss.limit_total, t.total()) << "trial " << trial;
    auto [even, odd] = brute_force_dims(p, eta);
    EXPECT_EQ(t.even_dim, even);
    EXPECT_EQ(t.odd_dim, odd);
    for (std::size_t i = 1; i < ss.pages.size(); ++i) {
      EXPECT_LE(ss.pages[i].total(), ss.pages[i - 1].total());
    }
    const bool pure_degree_three = c.twist_degree() == 3 || eta.is_zero();
    for (const SSPage &page : ss.pages) {
      for (int q = 0; q <= p.top_degree(); ++q) {
        if (q + 2 * page.r <= p.top_degree()) {
          EXPECT_TRUE(
              (page.differentials[q + page.r] * page.differentials[q])
                  .is_zero());
        }
        if (pure_degree_three && page.r % 2 == 0) {
          EXPECT_TRUE(page.differentials[q].is_zero());
        }
      }
    }
  }
}

TEST(Properties, PagesMatchProjectionOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    Presentation p = gen::random_presentation(rng, 32);
    Element eta = gen::random_twist(rng, p);
    SpectralSequence ss = spectral_sequence(TwistedComplex(p, eta));
    PageOracle oracle(p, eta);
    for (const SSPage &page : ss.pages) {
      for (int q = 0; q <= p.top_degree(); ++q) {
        EXPECT_EQ(page.dim(q), oracle.dim(q, page.r));
      }
    }
  }
}

TEST(Properties, QuasiIsomorphismInvariance) {
  // Lambda(s) -> so(3), s -> abc is a quasi-isomorphism; tensoring with A
  // and twisting by eta + lambda s versus eta + lambda abc must agree.
  std::mt19937_64 rng(23);
  Presentation s3 = sphere3();
  Presentation cs = so3();
  Morphism phi(s3, cs, {el(cs, "a*b*c")});
  ASSERT_TRUE(cohomology::induces_cohomology_isomorphism(phi));
  std::uniform_int_distribution<int> lambda(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Presentation a = gen::random_presentation(rng, 24);
    Element eta = gen::random_twist(rng, a);
    Presentation left = tensor_product(a, s3);
    Presentation right = tensor_product(a, cs);
    const Scalar l(lambda(rng));
    Element eta_left = embed_left(left, eta) +
                       l * embed_right(left, a, el(s3, "s"));
    Element eta_right = embed_left(right, eta) +
                        l * embed_right(right, a, el(cs, "a*b*c"));
    TwistedCohomology tl = twisted_cohomology(TwistedComplex(left, eta_left));
    TwistedCohomology tr =
        twisted_cohomology(TwistedComplex(right, eta_right));
    EXPECT_EQ(tl.even_dim, tr.even_dim) << "trial " << trial;
    EXPECT_EQ(tl.odd_dim, tr.odd_dim) << "trial " << trial;
  }
}

TEST(Properties, GaugeInvariance) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    Presentation p = gen::random_presentation(rng, 64);
    Element eta = gen::random_twist(rng, p);
    Element zeta = gen::random_element(rng, p.algebra(), 2);
    auto g = cohomology::gauge_transform(p, eta, zeta);
    ASSERT_TRUE(g.intertwines);
    TwistedCohomology a = twisted_cohomology(TwistedComplex(p, eta));
    TwistedCohomology b =
        twisted_cohomology(TwistedComplex(p, g.shifted_twist));
    EXPECT_EQ(a.even_dim, b.even_dim);
    EXPECT_EQ(a.odd_dim, b.odd_dim);
  }
}

TEST(Properties, MasseyTripleIsWellDefinedModuloIndeterminacy) {
  std::mt19937_64 rng(25);
  std::vector<Presentation> models{heisenberg(), heisenberg_cp2(), tower(3),
                                   tower3_cp3()};
  for (int trial = 0; trial < 20; ++trial) {
    models.push_back(gen::random_presentation(rng, 32));
  }
  auto solve = [](const Presentation &p, const Element &target, int degree) {
    if (target.is_zero()) {
      return Element();
    }
    auto s = linalg::solve(p.differential_matrix(degree - 1),
                           p.algebra().coordinates(target, degree));
    return p.algebra().element(*s, degree - 1);
  };
  int checked = 0, nontrivial = 0;
  for (const Presentation &p : models) {
    cohomology::CohomologyRing h(p);
    std::vector<CohomologyClass> classes;
    for (int d = 1; d <= std::min(p.top_degree(), 4); ++d) {
      for (std::size_t i = 0; i < h.betti(d); ++i) {
        classes.push_back(h.basis_class(d, i));
      }
    }
    for (const auto &x : classes) {
      for (const auto &y : classes) {
        for (const auto &z : classes) {
          if (x.degree + y.degree + z.degree - 1 > p.top_degree() ||
              !h.cup(x, y).is_zero() || !h.cup(y, z).is_zero()) {
            continue;
          }
          MasseyCoset base = massey_triple(h, x, y, z);
          Element xf = h.representative(x);
          Element yf = h.representative(y);
          Element zf = h.representative(z);
          const int i = x.degree, j = y.degree, k = z.degree;
          // Perturb the canonical defining system by random cocycles.
          Element u = solve(p, p.multiply(xf, yf), i + j) +
                      gen::random_cocycle(rng, p, i + j - 1);
          Element v = solve(p, p.multiply(yf, zf), j + k) +
                      gen::random_cocycle(rng, p, j + k - 1);
          auto moved = massey_triple_class(h, xf, yf, zf, u, v);
          EXPECT_TRUE(base.indeterminacy.contains(
              linalg::subtract(moved.coordinates, base.representative)));
          ++checked;
          nontrivial += base.nonzero() ? 1 : 0;
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
  EXPECT_GT(nontrivial, 5);
}
