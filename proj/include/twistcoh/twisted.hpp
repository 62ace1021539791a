#pragma once

// The twisted differential D = d - eta, its mod-2 graded cohomology, the
// spectral sequence of the degree filtration, and Massey products.

#include "twistcoh/cohomology.hpp"

#include <optional>
#include <stdexcept>

namespace twistcoh::twisted {

using cdga::Element;
using cdga::Presentation;
using cohomology::CohomologyClass;
using cohomology::CohomologyRing;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Subspace;
using linalg::Vector;

struct TwistError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TwistNotClosed : TwistError {
  using TwistError::TwistError;
};
struct TwistNotOdd : TwistError {
  using TwistError::TwistError;
};

class TwistedComplex {
public:
  /// Throws TwistNotOdd or TwistNotClosed.
  TwistedComplex(Presentation p, Element eta);

  const Presentation &presentation() const { return presentation_; }
  const Element &twist() const { return eta_; }
  /// The twist's degree when it is homogeneous.
  std::optional<int> twist_degree() const;
  /// D on the global basis.
  const Matrix &matrix() const { return d_; }
  /// Global indices of basis elements of even (parity 0) or odd degree.
  const std::vector<std::size_t> &parity_indices(int parity) const {
    return parity_[parity];
  }
  /// D restricted to the given parity, landing in the other one.
  Matrix block(int parity) const;

private:
  Presentation presentation_;
  Element eta_;
  Matrix d_;
  std::vector<std::size_t> parity_[2];
};

struct TwistedCohomology {
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::vector<Element> even_representatives;
  std::vector<Element> odd_representatives;

  std::size_t total() const { return even_dim + odd_dim; }
};

TwistedCohomology twisted_cohomology(const TwistedComplex &c);

/// One page E_r of the spectral sequence.  Filtration degrees run over
/// 0..top_degree.
struct SSPage {
  int r = 0;
  std::vector<Subspace> cycles;       // Z_r^p in global coordinates
  std::vector<linalg::Quotient> terms;  // E_r^p
  /// d_r : E_r^p -> E_r^{p+r}; zero rows when p + r is out of range.
  std::vector<Matrix> differentials;

  std::size_t dim(int p) const;
  std::size_t total() const;
  const std::vector<Vector> &lifts(int p) const {
    return terms[p].representatives();
  }
  /// Coordinates in E_r^p of the class of a global vector of Z_r^p.
  std::optional<Vector> coordinates(int p, const Vector &v) const;
};

struct SpectralSequence {
  std::vector<SSPage> pages;  // pages[i].r == i + 1
  int stable_from = 1;
  std::size_t limit_total = 0;

  const SSPage &page(int r) const { return pages.at(r - 1); }
  const SSPage &limit() const { return pages.back(); }
};

/// Pages r = 1..r_max.  With r_max < 0 the computation runs to top + 2,
/// well past the point where every differential vanishes.
SpectralSequence spectral_sequence(const TwistedComplex &c, int r_max = -1);

/// Z_r^p = {a in F^p : Da in F^{p+r}} in global coordinates.
Subspace filtered_cycles(const TwistedComplex &c, int p, int r);

struct MasseyCoset {
  int degree = 0;
  Vector representative;   // class coordinates in H^degree
  Subspace indeterminacy;  // inside the coordinate space of H^degree
  Element form;            // the cocycle that was built

  bool nonzero() const { return !indeterminacy.contains(representative); }
};

class ProductsNotZero : public std::runtime_error {
public:
  /// which is "xy" or "yz".
  ProductsNotZero(const std::string &what, std::string which)
      : std::runtime_error(what), which_(std::move(which)) {}
  const std::string &which() const { return which_; }

private:
  std::string which_;
};

/// {x, y, z} built from the canonical representatives and the canonical
/// solutions of du = xy, dv = yz.
MasseyCoset massey_triple(const CohomologyRing &ring, const CohomologyClass &x,
                          const CohomologyClass &y, const CohomologyClass &z);

/// The class of uz + (-1)^{|x|-1} xv for an explicit defining system.
/// Throws std::invalid_argument when du != xy or dv != yz.
CohomologyClass massey_triple_class(const CohomologyRing &ring,
                                    const Element &x, const Element &y,
                                    const Element &z, const Element &u,
                                    const Element &v);

struct IteratedMassey {
  std::optional<MasseyCoset> value;
  /// Smallest j such that d x_2 = eta x, ..., d x_{2j} = eta x_{2j-2} has no
  /// joint solution; 0 when defined.
  int obstructed_stage = 0;
  /// x_0 = x, x_2, ..., x_{2(k-1)}.
  std::vector<Element> chain;

  bool defined() const { return value.has_value(); }
};

/// {eta, ..., eta, x} with k copies of eta, as the class of eta x_{2(k-1)}.
/// eta must be homogeneous, odd and closed; x closed.
IteratedMassey massey_eta_iterated(const CohomologyRing &ring,
                                   const Element &eta, const Element &x, int k);
IteratedMassey massey_eta_iterated(const CohomologyRing &ring,
                                   const Element &eta, const CohomologyClass &x,
                                   int k);

struct ClassDead : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DrMasseyReport {
  int r = 0;
  int p = 0;
  Vector page_side;          // d_r[x] in E_r^{p+r}
  Vector massey_side;        // class of -eta x_last in E_r^{p+r}
  Element massey_form;       // -eta x_last
  bool massey_defined = false;
  bool agree = false;

  bool nonzero() const { return !linalg::is_zero(page_side); }
};

/// Compares d_r on the class of the closed form x with minus the iterated
/// Massey product with (r - 1) / 2 copies of eta.  Throws ClassDead when x
/// does not survive to E_r and std::invalid_argument for even r.
DrMasseyReport dr_vs_massey_check(const TwistedComplex &c,
                                  const SpectralSequence &ss,
                                  const Element &x, int r);

} // namespace twistcoh::twisted
