// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero when
// any criterion fails.

#include "twistcoh/charclass.hpp"
#include "twistcoh/cohomology.hpp"
#include "twistcoh/hankel.hpp"
#include "twistcoh/twisted.hpp"

#include "../support/random_cdga.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace twistcoh;
using cdga::Element;
using cdga::Presentation;
using cohomology::CohomologyClass;
using cohomology::CohomologyRing;
using poly::Polynomial;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

Element el(const Presentation &p, const std::string &expr) {
  return cdga::parse_element(p.algebra(), expr);
}

std::vector<std::string> reps(const CohomologyRing &h, int degree) {
  std::vector<std::string> out;
  for (const auto &e : h.representatives(degree)) {
    out.push_back(h.presentation().algebra().format(e));
  }
  return out;
}

void heisenberg_betti(Outcome &o) {
  CohomologyRing h(cdga::heisenberg());
  o.require(h.betti_numbers() == std::vector<std::size_t>{1, 2, 2, 1}, "betti");
  o.require(reps(h, 0) == std::vector<std::string>{"1"} &&
                reps(h, 1) == std::vector<std::string>{"x", "y"} &&
                reps(h, 2) == std::vector<std::string>{"x*z", "y*z"} &&
                reps(h, 3) == std::vector<std::string>{"x*y*z"},
            "representatives");
  o.detail << "betti (1,2,2,1), reps {1; x, y; x*z, y*z; x*y*z}";
}

void heisenberg_cp2_pages(Outcome &o) {
  Presentation m = cdga::tensor_product(cdga::heisenberg(), cdga::complex_projective(2));
  twisted::TwistedComplex c(m, el(m, "x*t"));
  auto ss = twisted::spectral_sequence(c);
  auto h = twisted::twisted_cohomology(c);
  const std::size_t e2 = ss.page(2).total(), e4 = ss.page(4).total(),
                    e6 = ss.page(6).total();
  o.require(e2 == 18, "E2 = 18");
  o.require(e4 == 14, "E4 = 14");
  o.require(e6 == 10, "E6 = 10");
  o.require(ss.stable_from == 6, "stable from 6");
  o.require(h.total() == 10, "twisted total 10");
  o.detail << "computed E2=" << e2 << " E4=" << e4 << " E6=" << e6
           << " stable_from=" << ss.stable_from << " twisted total=" << h.total()
           << " (even " << h.even_dim << ", odd " << h.odd_dim
           << "); expected 18/14/10, 6, 10";
}

void massey_products(Outcome &o) {
  {
    Presentation y = cdga::heisenberg();
    CohomologyRing h(y);
    auto x = h.class_of(el(y, "x")), yy = h.class_of(el(y, "y"));
    auto m = twisted::massey_triple(h, x, x, yy);
    o.require(m.representative == h.class_of(el(y, "x*z")).coordinates,
              "{x,x,y} = [xz]");
    o.require(m.indeterminacy.dim() == 0, "zero indeterminacy");
  }
  Presentation m = cdga::tensor_product(cdga::heisenberg(), cdga::complex_projective(2));
  CohomologyRing h(m);
  auto xt = h.class_of(el(m, "x*t")), y = h.class_of(el(m, "y"));
  auto c = twisted::massey_triple(h, xt, xt, y);
  o.require(c.representative == h.class_of(el(m, "x*z*t^2")).coordinates,
            "{xt,xt,y} = [xzt^2]");
  o.require(c.nonzero(), "{xt,xt,y} nonzero");
  twisted::TwistedComplex tc(m, el(m, "x*t"));
  auto ss = twisted::spectral_sequence(tc);
  auto d5 = twisted::dr_vs_massey_check(tc, ss, el(m, "y"), 5);
  o.require(d5.agree && d5.nonzero(), "d5(y) = -{xt,xt,y}");
  o.require(d5.massey_form == -el(m, "x*z*t^2"), "d5(y) form");
  o.detail << "{x,x,y} = [x*z], {xt,xt,y} = [" << m.algebra().format(c.form)
           << "] nonzero, d5(y) = " << m.algebra().format(d5.massey_form);
}

void tower_pages(Outcome &o) {
  Presentation m = cdga::tensor_product(cdga::tower(3), cdga::complex_projective(3));
  CohomologyRing h(m);
  const Element eta = el(m, "x*t");
  auto it = twisted::massey_eta_iterated(h, eta, el(m, "e3"), 3);
  o.require(it.defined() && it.value->nonzero(), "{xt,xt,xt,y} nonzero");
  o.require(it.defined() && it.value->representative ==
                                h.class_of(el(m, "x*e1*t^3")).coordinates,
            "{xt,xt,xt,y} = [x e1 t^3]");
  twisted::TwistedComplex c(m, eta);
  auto ss = twisted::spectral_sequence(c);
  auto d7 = twisted::dr_vs_massey_check(c, ss, el(m, "e3"), 7);
  o.require(d7.nonzero() && d7.agree, "d7(y) nonzero and equal to -Massey");
  auto t = twisted::twisted_cohomology(c);
  o.require(ss.limit_total == t.total(), "limit matches twisted cohomology");
  std::vector<std::size_t> totals;
  for (int r = 1; r <= 8; ++r) {
    totals.push_back(ss.page(r).total());
  }
  o.require(totals == std::vector<std::size_t>{64, 32, 32, 20, 20, 20, 20, 16},
            "golden page totals");
  o.detail << "{xt,xt,xt,y} = [x*e1*t^3], d7(y) nonzero, totals";
  for (auto v : totals) {
    o.detail << ' ' << v;
  }
  o.detail << ", stable from " << ss.stable_from << ", limit " << ss.limit_total
           << " = twisted total " << t.total();
}

void invariant_ring(Outcome &o) {
  auto j = charclass::invariant_ring(12);
  auto series = charclass::poincare_series(12);
  o.require(j.dims == series, "j_n = series coefficients for n <= 12");
  o.require(std::vector<std::size_t>(j.dims.begin(), j.dims.begin() + 9) ==
                std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 4, 4, 7},
            "j_0..j_8");
  bool surjective = true;
  for (const auto &row : charclass::check_d_surjective(12)) {
    surjective = surjective && row.surjective();
  }
  o.require(surjective, "d surjective for 2 <= n <= 12");
  o.require(j.basis[2] == std::vector<Polynomial>{charclass::parse("x1^2")} &&
                j.basis[3] == std::vector<Polynomial>{charclass::parse("x1^3")},
            "J2, J3");
  o.detail << "j_0..j_12 =";
  for (auto v : j.dims) {
    o.detail << ' ' << v;
  }
}

void group_action(Outcome &o) {
  auto j = charclass::invariant_ring(8);
  std::size_t invariant = 0, non_invariant = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto &f : j.basis[n]) {
      o.require(charclass::is_invariant(f), "invariant " + charclass::format(f));
      ++invariant;
    }
    for (const auto &e : charclass::weight_basis(n)) {
      Polynomial m = Polynomial::monomial(e);
      if (!charclass::derivation_d(m).is_zero()) {
        o.require(!charclass::is_invariant(m),
                  "non-invariant " + charclass::format(m));
        ++non_invariant;
      }
    }
  }
  o.detail << invariant << " J-basis elements invariant, " << non_invariant
           << " non-closed monomials not invariant";
}

void lifts(Outcome &o) {
  Polynomial ch;
  for (int n = 1; n <= 12; ++n) {
    ch += charclass::x(n);
  }
  o.require(charclass::delta_lift(charclass::x(1), 12).series == ch,
            "exp(delta) x1 = x1 + ... + x12");
  auto j = charclass::invariant_ring(6);
  std::size_t count = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto &f : j.basis[n]) {
      o.require(charclass::delta_lift(f, 12).closed,
                "(d - 1) lift of " + charclass::format(f));
      ++count;
    }
  }
  bool laplacian = true;
  for (int n = 0; n <= 8; ++n) {
    for (const auto &e : charclass::weight_basis(n)) {
      Polynomial m = Polynomial::monomial(e);
      laplacian = laplacian &&
                  charclass::derivation_d(charclass::delta(m)) -
                          charclass::delta(charclass::derivation_d(m)) ==
                      linalg::Scalar(charclass::word_length(e)) * m;
    }
  }
  o.require(laplacian, "[d, delta] = word length");
  o.detail << "Chern character through weight 12, " << count
           << " closed lifts, Laplacian through weight 8";
}

void wang(Outcome &o) {
  auto w = charclass::wang_model_report(8);
  auto j = charclass::invariant_ring(8);
  o.require(w.even_dims == j.dims, "H^{2n} = j_n");
  std::vector<std::size_t> odd(8, 0);
  odd[0] = 1;
  o.require(w.odd_dims == odd, "odd cohomology only in degree 3");
  o.require(w.twist_annihilates, "w.f exact");
  o.detail << "even dims = j_n for n <= 8, H^3 = 1, other odd 0, w.f exact";
}

void hankel_suite(Outcome &o) {
  using namespace hankel;
  o.require(hankel_det(1, 1) == c_var(1), "h11");
  o.require(hankel_det(2, 2) == c_var(2) * c_var(2) - c_var(3) * c_var(1), "h22");
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    o.require(verify_94(p, q, p + 1, q + 1).hankel_is_resultant,
              "h = R for (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  o.require(verify_94(1, 1, 2, 2).higher_vanishes, "vanishing witness");
  for (int n = 1; n <= 3; ++n) {
    o.require(injectivity_rank(1, 1, n).injective(), "injective below 4");
  }
  auto r4 = injectivity_rank(1, 1, 4);
  o.require(!r4.injective() && r4.kernel_element &&
                *r4.kernel_element == hankel_det(2, 2),
            "kernel at weight 4 is h22");
  for (int p = 1; p <= 3; ++p) {
    o.require(reparam_invariance(p).invariant, "Moebius invariance");
  }
  o.detail << "h11 = c1, h22 = " << format_c(hankel_det(2, 2))
           << ", h = R for pq <= 4, kernel at weight 4 = h22, h_pp invariant for p <= 3";
}

bool tensor_action_identity(int n_max) {
  const std::size_t u = static_cast<std::size_t>(n_max) + 1;
  Polynomial ch, eu;
  for (int m = 0; m <= n_max; ++m) {
    ch += linalg::Scalar(1 / poly::factorial(m)) * Polynomial::variable(m);
    eu += linalg::Scalar(1 / poly::factorial(m)) * Polynomial::variable(u, m);
  }
  std::vector<int> w(u + 1);
  for (std::size_t i = 0; i < u; ++i) {
    w[i] = static_cast<int>(i);
  }
  w[u] = 1;
  const Polynomial product = ch * eu;
  for (int n = 0; n <= n_max; ++n) {
    auto t = charclass::tensor_action_power_sums(n);
    Polynomial moved = t.poly.compose([&](std::size_t i) {
      return i == static_cast<std::size_t>(n) + 1 ? Polynomial::variable(u)
                                                  : Polynomial::variable(i);
    });
    if (!(linalg::Scalar(1 / poly::factorial(n)) * moved == product.component(w, n))) {
      return false;
    }
  }
  return true;
}

void properties(Outcome &o) {
  std::mt19937_64 rng(1001);
  int squares = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Presentation p = gen::random_presentation(rng);
    twisted::TwistedComplex c(p, gen::random_twist(rng, p));
    const auto &d = p.differential_matrix();
    squares += (d * d).is_zero() && (c.matrix() * c.matrix()).is_zero() ? 1 : 0;
  }
  o.require(squares == 100, "d^2 = D^2 = 0");

  int converged = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Presentation p = gen::random_presentation(rng, 64);
    twisted::TwistedComplex c(p, gen::random_twist(rng, p));
    auto ss = twisted::spectral_sequence(c);
    converged += ss.limit_total == twisted::twisted_cohomology(c).total() ? 1 : 0;
  }
  o.require(converged == 50, "sum dim E_inf = dim H_eta");

  Presentation s3 = cdga::sphere3(), cs = cdga::so3();
  int quasi = 0, gauge = 0;
  std::uniform_int_distribution<int> lambda(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Presentation a = gen::random_presentation(rng, 24);
    Element eta = gen::random_twist(rng, a);
    Presentation left = cdga::tensor_product(a, s3), right = cdga::tensor_product(a, cs);
    const linalg::Scalar l(lambda(rng));
    auto tl = twisted::twisted_cohomology(twisted::TwistedComplex(
        left, cdga::embed_left(left, eta) + l * cdga::embed_right(left, a, el(s3, "s"))));
    auto tr = twisted::twisted_cohomology(twisted::TwistedComplex(
        right,
        cdga::embed_left(right, eta) + l * cdga::embed_right(right, a, el(cs, "a*b*c"))));
    quasi += tl.even_dim == tr.even_dim && tl.odd_dim == tr.odd_dim ? 1 : 0;

    Presentation p = gen::random_presentation(rng, 64);
    Element twist = gen::random_twist(rng, p);
    auto g = cohomology::gauge_transform(p, twist, gen::random_element(rng, p.algebra(), 2));
    auto before = twisted::twisted_cohomology(twisted::TwistedComplex(p, twist));
    auto after = twisted::twisted_cohomology(twisted::TwistedComplex(p, g.shifted_twist));
    gauge += g.intertwines && before.even_dim == after.even_dim &&
                     before.odd_dim == after.odd_dim
                 ? 1
                 : 0;
  }
  o.require(quasi == 20, "quasi-isomorphism invariance");
  o.require(gauge == 20, "gauge invariance");

  std::vector<Presentation> models{
      cdga::heisenberg(),
      cdga::tensor_product(cdga::heisenberg(), cdga::complex_projective(2)),
      cdga::tower(3)};
  for (int trial = 0; trial < 10; ++trial) {
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
  int massey_checked = 0, massey_ok = 0;
  for (const Presentation &p : models) {
    CohomologyRing h(p);
    std::vector<CohomologyClass> classes;
    for (int d = 1; d <= std::min(p.top_degree(), 3); ++d) {
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
          auto base = twisted::massey_triple(h, x, y, z);
          Element xf = h.representative(x), yf = h.representative(y),
                  zf = h.representative(z);
          Element u = solve(p, p.multiply(xf, yf), x.degree + y.degree) +
                      gen::random_cocycle(rng, p, x.degree + y.degree - 1);
          Element v = solve(p, p.multiply(yf, zf), y.degree + z.degree) +
                      gen::random_cocycle(rng, p, y.degree + z.degree - 1);
          auto moved = twisted::massey_triple_class(h, xf, yf, zf, u, v);
          ++massey_checked;
          massey_ok += base.indeterminacy.contains(
                           linalg::subtract(moved.coordinates, base.representative))
                           ? 1
                           : 0;
        }
      }
    }
  }
  o.require(massey_checked > 0 && massey_ok == massey_checked,
            "Massey perturbation");
  o.require(tensor_action_identity(10), "tensor action identity for n <= 10");
  o.detail << "100 d^2/D^2, 50 convergence, 20 quasi-iso, 20 gauge, "
           << massey_checked << " Massey perturbations, tensor action n <= 10";
}

} // namespace

int main() {
  struct Criterion {
    int id;
    double budget_seconds;
    std::function<void(Outcome &)> run;
  };
  const std::vector<Criterion> criteria{
      {1, 1, heisenberg_betti}, {2, 5, heisenberg_cp2_pages},
      {3, 5, massey_products},  {4, 30, tower_pages},
      {5, 10, invariant_ring},  {6, 10, group_action},
      {7, 10, lifts},           {8, 10, wang},
      {9, 10, hankel_suite},    {10, 60, properties}};
  int failures = 0;
  for (const auto &c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      o.pass = false;
      o.detail << " [over the " << c.budget_seconds << " s budget]";
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << o.detail.str() << " (" << std::fixed << std::setprecision(2)
              << seconds << " s)\n";
  }
  return failures == 0 ? 0 : 1;
}
