#include "twistcoh/twisted.hpp"

#include <map>

namespace twistcoh::twisted {

namespace {

const cdga::GradedAlgebra &algebra_of(const TwistedComplex &c) {
  return c.presentation().algebra();
}

/// Global index where F^p starts.
std::size_t filtration_start(const cdga::GradedAlgebra &alg, int p) {
  if (p <= 0) {
    return 0;
  }
  if (p > alg.top_degree()) {
    return alg.dimension();
  }
  return alg.offset(p);
}

Vector scatter(const std::vector<std::size_t> &indices, const Vector &local,
               std::size_t n) {
  Vector out = linalg::zero_vector(n);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out[indices[i]] = local[i];
  }
  return out;
}

/// Degree-p block of a global vector.
Vector project(const cdga::GradedAlgebra &alg, const Vector &v, int p) {
  const std::size_t start = filtration_start(alg, p);
  const std::size_t n = alg.basis(p).size();
  return Vector(v.begin() + start, v.begin() + start + n);
}

/// Left multiplication by a from A^from to A^to, in local bases.
Matrix local_multiplication(const cdga::GradedAlgebra &alg, const Element &a,
                            int from, int to) {
  const auto &src = alg.basis(from);
  const auto &dst = alg.basis(to);
  Matrix m(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    Element image = alg.multiply(a, Element::term(src[col]));
    Vector v = alg.coordinates(image, to);
    for (std::size_t row = 0; row < dst.size(); ++row) {
      m(row, col) = v[row];
    }
  }
  return m;
}

/// Solution of d u = target with target of the given degree (0 if target is
/// zero).  Assumes solvability.
Element solve_boundary(const Presentation &p, const Element &target,
                       int degree) {
  if (target.is_zero()) {
    return Element();
  }
  const cdga::GradedAlgebra &alg = p.algebra();
  auto sol = linalg::solve(p.differential_matrix(degree - 1),
                           alg.coordinates(target, degree));
  if (!sol) {
    throw std::logic_error("expected an exact form: " + alg.format(target));
  }
  return alg.element(*sol, degree - 1);
}

} // namespace

TwistedComplex::TwistedComplex(Presentation p, Element eta)
    : presentation_(std::move(p)), eta_(std::move(eta)) {
  const cdga::GradedAlgebra &alg = presentation_.algebra();
  if (!alg.is_odd(eta_)) {
    throw TwistNotOdd("twist " + alg.format(eta_) +
                      " must have only odd-degree terms");
  }
  Element d_eta = presentation_.differential(eta_);
  if (!d_eta.is_zero()) {
    throw TwistNotClosed("twist " + alg.format(eta_) +
                         " is not closed: d(eta) = " + alg.format(d_eta));
  }
  d_ = cohomology::twisted_differential(presentation_, eta_);
  for (std::size_t i = 0; i < alg.dimension(); ++i) {
    parity_[alg.degree_of_index(i) % 2].push_back(i);
  }
}

std::optional<int> TwistedComplex::twist_degree() const {
  return presentation_.algebra().degree(eta_);
}

Matrix TwistedComplex::block(int parity) const {
  return d_.select_rows(parity_[1 - parity]).select_columns(parity_[parity]);
}

TwistedCohomology twisted_cohomology(const TwistedComplex &c) {
  const cdga::GradedAlgebra &alg = algebra_of(c);
  TwistedCohomology out;
  for (int q = 0; q < 2; ++q) {
    Subspace cycles = linalg::kernel(c.block(q));
    Subspace boundaries = linalg::image(c.block(1 - q));
    linalg::Quotient h(cycles, boundaries);
    std::vector<Element> reps;
    for (const Vector &v : h.representatives()) {
      reps.push_back(
          alg.element(scatter(c.parity_indices(q), v, alg.dimension())));
    }
    if (q == 0) {
      out.even_dim = h.dim();
      out.even_representatives = std::move(reps);
    } else {
      out.odd_dim = h.dim();
      out.odd_representatives = std::move(reps);
    }
  }
  return out;
}

Subspace filtered_cycles(const TwistedComplex &c, int p, int r) {
  const cdga::GradedAlgebra &alg = algebra_of(c);
  const std::size_t n = alg.dimension();
  const std::size_t start = filtration_start(alg, p);
  const std::size_t row_end = filtration_start(alg, p + r);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < row_end; ++i) {
    rows.push_back(i);
  }
  std::vector<std::size_t> cols;
  for (std::size_t i = start; i < n; ++i) {
    cols.push_back(i);
  }
  Subspace local =
      linalg::kernel(c.matrix().select_rows(rows).select_columns(cols));
  std::vector<Vector> basis;
  for (const Vector &v : local.basis()) {
    basis.push_back(scatter(cols, v, n));
  }
  return Subspace::span(n, basis);
}

std::size_t SSPage::dim(int p) const {
  if (p < 0 || p >= static_cast<int>(terms.size())) {
    return 0;
  }
  return terms[p].dim();
}

std::size_t SSPage::total() const {
  std::size_t t = 0;
  for (const auto &q : terms) {
    t += q.dim();
  }
  return t;
}

std::optional<Vector> SSPage::coordinates(int p, const Vector &v) const {
  if (p < 0 || p >= static_cast<int>(terms.size())) {
    return Vector{};
  }
  return terms[p].coordinates(v);
}

SpectralSequence spectral_sequence(const TwistedComplex &c, int r_max) {
  const cdga::GradedAlgebra &alg = algebra_of(c);
  const int top = alg.top_degree();
  if (r_max < 0) {
    r_max = top + 2;
  }
  r_max = std::max(r_max, 1);

  std::map<std::pair<int, int>, Subspace> cache;
  // Z_r^p depends only on where F^p and F^{p+r} start.
  auto cycles = [&](int p, int r) -> const Subspace & {
    const int start = std::clamp(p, 0, top + 1);
    const int end = std::clamp(p + r, start, top + 1);
    auto key = std::make_pair(start, end);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, filtered_cycles(c, start, end - start)).first;
    }
    return it->second;
  };

  SpectralSequence ss;
  for (int r = 1; r <= r_max; ++r) {
    SSPage page;
    page.r = r;
    for (int p = 0; p <= top; ++p) {
      const Subspace &z = cycles(p, r);
      Subspace b = linalg::sum(cycles(p + 1, r - 1),
                               linalg::map_subspace(c.matrix(),
                                                    cycles(p - r + 1, r - 1)));
      page.cycles.push_back(z);
      page.terms.emplace_back(z, b);
    }
    for (int p = 0; p <= top; ++p) {
      const auto &lifts = page.lifts(p);
      const int q = p + r;
      const std::size_t rows = page.dim(q);
      Matrix m(rows, lifts.size());
      if (q <= top) {
        for (std::size_t col = 0; col < lifts.size(); ++col) {
          auto coords = page.terms[q].coordinates(c.matrix().apply(lifts[col]));
          if (!coords) {
            throw std::logic_error("d_r image left Z_r");
          }
          for (std::size_t row = 0; row < rows; ++row) {
            m(row, col) = (*coords)[row];
          }
        }
      }
      page.differentials.push_back(std::move(m));
    }
    ss.pages.push_back(std::move(page));
  }
  ss.limit_total = ss.pages.back().total();
  ss.stable_from = r_max;
  for (int r = r_max; r >= 1 && ss.page(r).total() == ss.limit_total; --r) {
    ss.stable_from = r;
  }
  return ss;
}

MasseyCoset massey_triple(const CohomologyRing &ring, const CohomologyClass &x,
                          const CohomologyClass &y, const CohomologyClass &z) {
  if (!ring.cup(x, y).is_zero()) {
    throw ProductsNotZero("[x][y] is not zero", "xy");
  }
  if (!ring.cup(y, z).is_zero()) {
    throw ProductsNotZero("[y][z] is not zero", "yz");
  }
  const Presentation &p = ring.presentation();
  Element xf = ring.representative(x);
  Element yf = ring.representative(y);
  Element zf = ring.representative(z);
  Element u = solve_boundary(p, p.multiply(xf, yf), x.degree + y.degree);
  Element v = solve_boundary(p, p.multiply(yf, zf), y.degree + z.degree);

  MasseyCoset out;
  out.degree = x.degree + y.degree + z.degree - 1;
  const Scalar sign(x.degree % 2 == 1 ? 1 : -1);
  out.form = p.multiply(u, zf) + sign * p.multiply(xf, v);
  out.representative = ring.class_of(out.form, out.degree).coordinates;
  out.indeterminacy =
      linalg::sum(ring.product_span(x, y.degree + z.degree - 1),
                  ring.product_span(x.degree + y.degree - 1, z));
  return out;
}

CohomologyClass massey_triple_class(const CohomologyRing &ring,
                                    const Element &x, const Element &y,
                                    const Element &z, const Element &u,
                                    const Element &v) {
  const Presentation &p = ring.presentation();
  const cdga::GradedAlgebra &alg = p.algebra();
  if (!(p.differential(u) == p.multiply(x, y))) {
    throw std::invalid_argument("du != xy");
  }
  if (!(p.differential(v) == p.multiply(y, z))) {
    throw std::invalid_argument("dv != yz");
  }
  auto dx = alg.degree(x);
  auto dy = alg.degree(y);
  auto dz = alg.degree(z);
  if (!dx || !dy || !dz) {
    throw std::invalid_argument("Massey arguments must be homogeneous");
  }
  const Scalar sign(*dx % 2 == 1 ? 1 : -1);
  Element w = p.multiply(u, z) + sign * p.multiply(x, v);
  return ring.class_of(w, *dx + *dy + *dz - 1);
}

namespace {

IteratedMassey iterated(const CohomologyRing &ring, const Element &eta,
                        const Element &x, int p, int k) {
  const Presentation &pres = ring.presentation();
  const cdga::GradedAlgebra &alg = pres.algebra();
  if (k < 1) {
    throw std::invalid_argument("the order must be at least 1");
  }
  auto e = alg.degree(eta);
  if (!e) {
    throw std::invalid_argument("the twist must be homogeneous and nonzero");
  }
  if (*e % 2 == 0) {
    throw TwistNotOdd("twist " + alg.format(eta) + " has even degree");
  }
  if (!pres.differential(eta).is_zero()) {
    throw TwistNotClosed("twist " + alg.format(eta) + " is not closed");
  }
  ring.class_of(x, p);

  const int step = *e - 1;
  const int unknowns = k - 1;
  // Unknown j (1-based) has degree p + j*step; equation j lives in degree
  // p + j*step + 1.
  std::vector<std::size_t> col_off{0}, row_off{0};
  for (int j = 1; j <= unknowns; ++j) {
    col_off.push_back(col_off.back() + alg.basis(p + j * step).size());
    row_off.push_back(row_off.back() + alg.basis(p + j * step + 1).size());
  }
  Matrix system(row_off.back(), col_off.back());
  for (int j = 1; j <= unknowns; ++j) {
    const int deg = p + j * step;
    Matrix dm = pres.differential_matrix(deg);
    for (std::size_t r = 0; r < dm.rows(); ++r) {
      for (std::size_t c = 0; c < dm.cols(); ++c) {
        system(row_off[j - 1] + r, col_off[j - 1] + c) = dm(r, c);
      }
    }
    if (j >= 2) {
      Matrix lm = local_multiplication(alg, eta, deg - step, deg + 1);
      for (std::size_t r = 0; r < lm.rows(); ++r) {
        for (std::size_t c = 0; c < lm.cols(); ++c) {
          system(row_off[j - 1] + r, col_off[j - 2] + c) = -lm(r, c);
        }
      }
    }
  }
  Vector rhs = linalg::zero_vector(row_off.back());
  if (unknowns >= 1) {
    Vector first = alg.coordinates(alg.multiply(eta, x), p + step + 1);
    std::copy(first.begin(), first.end(), rhs.begin());
  }

  IteratedMassey out;
  std::optional<Vector> solution = Vector{};
  for (int j = 1; j <= unknowns; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < row_off[j]; ++i) {
      rows.push_back(i);
    }
    for (std::size_t i = 0; i < col_off[j]; ++i) {
      cols.push_back(i);
    }
    Vector partial(rhs.begin(), rhs.begin() + row_off[j]);
    if (!linalg::solve(system.select_rows(rows).select_columns(cols),
                       partial)) {
      out.obstructed_stage = j;
      return out;
    }
  }
  solution = linalg::solve(system, rhs);

  out.chain.push_back(x);
  for (int j = 1; j <= unknowns; ++j) {
    Vector local(solution->begin() + col_off[j - 1],
                 solution->begin() + col_off[j]);
    out.chain.push_back(alg.element(local, p + j * step));
  }

  MasseyCoset coset;
  coset.degree = p + unknowns * step + *e;
  coset.form = alg.multiply(eta, out.chain.back());
  coset.representative = ring.class_of(coset.form, coset.degree).coordinates;
  std::vector<Vector> ambiguity;
  if (unknowns >= 1) {
    const int last_deg = p + unknowns * step;
    const Subspace homogeneous = linalg::kernel(system);
    for (const Vector &delta : homogeneous.basis()) {
      Vector local(delta.begin() + col_off[unknowns - 1],
                   delta.begin() + col_off[unknowns]);
      Element shifted = alg.multiply(eta, alg.element(local, last_deg));
      ambiguity.push_back(ring.class_of(shifted, coset.degree).coordinates);
    }
  }
  coset.indeterminacy = Subspace::span(ring.betti(coset.degree), ambiguity);
  out.value = std::move(coset);
  return out;
}

} // namespace

IteratedMassey massey_eta_iterated(const CohomologyRing &ring,
                                   const Element &eta, const Element &x,
                                   int k) {
  auto p = ring.presentation().algebra().degree(x);
  if (!p) {
    throw std::invalid_argument(
        "the class must be given by a nonzero homogeneous form");
  }
  return iterated(ring, eta, x, *p, k);
}

IteratedMassey massey_eta_iterated(const CohomologyRing &ring,
                                   const Element &eta, const CohomologyClass &x,
                                   int k) {
  return iterated(ring, eta, ring.representative(x), x.degree, k);
}

DrMasseyReport dr_vs_massey_check(const TwistedComplex &c,
                                  const SpectralSequence &ss,
                                  const Element &x, int r) {
  const cdga::GradedAlgebra &alg = algebra_of(c);
  if (r < 3 || r % 2 == 0) {
    throw std::invalid_argument("r must be odd and at least 3");
  }
  if (r > static_cast<int>(ss.pages.size())) {
    throw std::invalid_argument("page " + std::to_string(r) +
                                " was not computed");
  }
  auto p = alg.degree(x);
  if (!p) {
    throw std::invalid_argument("the class must be a nonzero homogeneous form");
  }
  const SSPage &page = ss.page(r);
  DrMasseyReport out;
  out.r = r;
  out.p = *p;

  // Leading parts of the page's lifts and of its denominator.
  std::vector<Vector> columns;
  for (const Vector &lift : page.lifts(*p)) {
    columns.push_back(project(alg, lift, *p));
  }
  const std::size_t n_lifts = columns.size();
  for (const Vector &b : page.terms[*p].denominator().basis()) {
    columns.push_back(project(alg, b, *p));
  }
  const std::size_t local_dim = alg.basis(*p).size();
  auto sol = linalg::solve(Matrix::from_columns(columns, local_dim),
                           alg.coordinates(x, *p));
  if (!sol) {
    throw ClassDead(alg.format(x) + " does not survive to E_" +
                    std::to_string(r));
  }
  Vector coords(sol->begin(), sol->begin() + n_lifts);
  out.page_side = page.differentials[*p].apply(coords);

  CohomologyRing ring(c.presentation());
  std::optional<IteratedMassey> m;
  if (c.twist_degree()) {
    m = massey_eta_iterated(ring, c.twist(), x, (r - 1) / 2);
  }
  if (m && m->defined()) {
    out.massey_defined = true;
    out.massey_form = -m->value->form;
    auto coordinates =
        page.coordinates(*p + r, alg.coordinates(out.massey_form));
    if (!coordinates) {
      throw std::logic_error("Massey product does not lie in Z_r");
    }
    out.massey_side = *coordinates;
  } else {
    out.massey_side = out.page_side;
  }
  out.agree = out.massey_side == out.page_side;
  return out;
}

} // namespace twistcoh::twisted
