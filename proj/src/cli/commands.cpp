#include "twistcoh/charclass.hpp"
#include "twistcoh/cli.hpp"
#include "twistcoh/cohomology.hpp"
#include "twistcoh/hankel.hpp"
#include "twistcoh/twisted.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace twistcoh::cli {

namespace {

using cdga::Element;
using cdga::Presentation;
using cohomology::CohomologyClass;
using cohomology::CohomologyRing;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "table";
  std::string file;
  std::string twist;
  int max_page = -1;
  int order = 2;
  int max_weight = 12;
  int psi_weight = 6;
  int p = 1, q = 1, max_pq = 6, n = 2;
  bool verify = false, reparam = false;
  std::vector<std::string> forms;
  std::string expression;
  std::vector<std::string> ks;
  std::string name;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? sep : "") + parts[i];
  }
  return out;
}

std::size_t max_dim() {
  const char *env = std::getenv("TWISTCOH_MAX_DIM");
  if (!env || !*env) {
    return 10000;
  }
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(env, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0') {
    throw InputError(std::string("TWISTCOH_MAX_DIM must be a positive integer, got '") +
                     env + "'");
  }
  return value;
}

struct Loaded {
  std::string text;
  CdgaFile file;
  std::vector<std::string> notes;
};

std::string stem_of(const std::string &path) {
  std::string base = path.substr(path.find_last_of('/') + 1);
  const std::string ext = ".cdga";
  if (base.size() > ext.size() &&
      base.compare(base.size() - ext.size(), ext.size(), ext) == 0) {
    base.resize(base.size() - ext.size());
  }
  return base;
}

Loaded load(const std::string &path) {
  Loaded loaded;
  std::ifstream in(path, std::ios::binary);
  if (in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    loaded.text = buffer.str();
  } else if (auto text = builtin_file(stem_of(path))) {
    loaded.text = *text;
    loaded.notes.push_back("using the built-in file '" + stem_of(path) + "'");
  } else {
    throw InputError("cannot read '" + path + "'");
  }
  loaded.file = parse_file(loaded.text);
  const std::size_t cap = max_dim();
  if (loaded.file.presentation.dimension() > cap) {
    throw InputError("complex dimension " +
                     std::to_string(loaded.file.presentation.dimension()) +
                     " exceeds TWISTCOH_MAX_DIM=" + std::to_string(cap));
  }
  return loaded;
}

Element parse_form(const Presentation &p, const std::string &text) {
  return cdga::parse_element(p.algebra(), text);
}

Report start(const std::string &command, const std::vector<std::string> &args,
             const std::string &text) {
  Report r;
  r.command = command;
  r.input_digest = digest(join(args, "\x1f") + "\x1e" + text);
  return r;
}

Element twist_of(const Loaded &loaded, const Options &o, Report &report,
                 std::ostream &err) {
  const Presentation &p = loaded.file.presentation;
  Element eta;
  if (!o.twist.empty()) {
    eta = parse_form(p, o.twist);
  } else if (loaded.file.twist) {
    eta = *loaded.file.twist;
  } else {
    report.notes.push_back("no twist given; using eta = 0");
  }
  const auto degree = p.algebra().degree(eta);
  if (!eta.is_zero() && (!degree || *degree != 3)) {
    err << "warning: twist " << p.algebra().format(eta)
        << " is not homogeneous of degree 3\n";
    report.notes.push_back("twist is not homogeneous of degree 3");
  }
  report.data["twist"] = p.algebra().format(eta);
  return eta;
}

std::vector<std::string> formatted(const Presentation &p,
                                   const std::vector<Element> &elements) {
  std::vector<std::string> out;
  for (const auto &e : elements) {
    out.push_back(p.algebra().format(e));
  }
  return out;
}

Report cmd_cohomology(const Options &o, const std::vector<std::string> &args) {
  Loaded loaded = load(o.file);
  Report r = start("cohomology", args, loaded.text);
  r.notes = loaded.notes;
  const Presentation &p = loaded.file.presentation;
  CohomologyRing ring(p);
  Table t{"Betti numbers", {"degree", "betti", "representatives"}, {}};
  nlohmann::json degrees = nlohmann::json::array();
  for (int k = 0; k <= ring.top_degree(); ++k) {
    auto reps = formatted(p, ring.representatives(k));
    t.rows.push_back({std::to_string(k), std::to_string(ring.betti(k)),
                      join(reps, ", ")});
    degrees.push_back(
        {{"degree", k}, {"betti", ring.betti(k)}, {"representatives", reps}});
  }
  r.tables.push_back(std::move(t));
  r.notes.push_back("total dimension " + std::to_string(ring.total_dim()));
  r.data["degrees"] = degrees;
  r.data["total"] = ring.total_dim();
  return r;
}

Report cmd_twisted(const Options &o, const std::vector<std::string> &args,
                   std::ostream &err) {
  Loaded loaded = load(o.file);
  Report r = start("twisted", args, loaded.text);
  r.notes = loaded.notes;
  const Presentation &p = loaded.file.presentation;
  twisted::TwistedComplex c(p, twist_of(loaded, o, r, err));
  auto h = twisted::twisted_cohomology(c);
  Table t{"Twisted cohomology", {"parity", "dim", "representatives"}, {}};
  t.rows.push_back({"even", std::to_string(h.even_dim),
                    join(formatted(p, h.even_representatives), ", ")});
  t.rows.push_back({"odd", std::to_string(h.odd_dim),
                    join(formatted(p, h.odd_representatives), ", ")});
  r.tables.push_back(std::move(t));
  r.notes.push_back("total dimension " + std::to_string(h.total()));
  r.data["even_dim"] = h.even_dim;
  r.data["odd_dim"] = h.odd_dim;
  r.data["total"] = h.total();
  return r;
}

Report cmd_ss(const Options &o, const std::vector<std::string> &args,
              std::ostream &err) {
  Loaded loaded = load(o.file);
  Report r = start("ss", args, loaded.text);
  r.notes = loaded.notes;
  const Presentation &p = loaded.file.presentation;
  twisted::TwistedComplex c(p, twist_of(loaded, o, r, err));
  if (o.max_page == 0 || o.max_page < -1) {
    throw UsageError("--max-page must be positive");
  }
  const auto ss = twisted::spectral_sequence(
      c, std::max(o.max_page, p.top_degree() + 2));
  const int shown = o.max_page > 0 ? o.max_page : static_cast<int>(ss.pages.size());
  Table totals{"Page totals", {"page", "total", "stable"}, {}};
  std::vector<std::string> dim_columns{"page"};
  for (int q = 0; q <= p.top_degree(); ++q) {
    dim_columns.push_back("p=" + std::to_string(q));
  }
  Table dims{"Dimensions of E_r^p", dim_columns, {}};
  nlohmann::json pages = nlohmann::json::array();
  for (int page = 1; page <= shown; ++page) {
    const auto &E = ss.page(page);
    const bool stable = page >= ss.stable_from;
    totals.rows.push_back(
        {std::to_string(page), std::to_string(E.total()), yes_no(stable)});
    std::vector<std::string> row{std::to_string(page)};
    std::vector<std::size_t> d;
    for (int q = 0; q <= p.top_degree(); ++q) {
      row.push_back(std::to_string(E.dim(q)));
      d.push_back(E.dim(q));
    }
    dims.rows.push_back(std::move(row));
    pages.push_back(
        {{"page", page}, {"total", E.total()}, {"stable", stable}, {"dims", d}});
  }
  r.tables.push_back(std::move(totals));
  r.tables.push_back(std::move(dims));
  const auto h = twisted::twisted_cohomology(c);
  r.notes.push_back("stable from page " + std::to_string(ss.stable_from) +
                    " with limit total " + std::to_string(ss.limit_total));
  r.notes.push_back("direct twisted cohomology total " +
                    std::to_string(h.total()) +
                    (h.total() == ss.limit_total ? " (agrees)" : " (DISAGREES)"));
  r.data["pages"] = pages;
  r.data["stable_from"] = ss.stable_from;
  r.data["limit_total"] = ss.limit_total;
  r.data["twisted_total"] = h.total();
  return r;
}

nlohmann::json coset_json(const CohomologyRing &ring,
                          const twisted::MasseyCoset &m) {
  const auto &a = ring.presentation().algebra();
  const Element rep = ring.representative(CohomologyClass{m.degree, m.representative});
  std::vector<std::string> coords;
  for (const auto &c : m.representative) {
    coords.push_back(linalg::to_string(c));
  }
  return {{"degree", m.degree},
          {"representative", a.format(rep)},
          {"coordinates", coords},
          {"indeterminacy_dim", m.indeterminacy.dim()},
          {"nonzero", m.nonzero()},
          {"form", a.format(m.form)}};
}

Table coset_table(const std::string &title, const nlohmann::json &j) {
  return Table{title,
               {"degree", "representative", "indeterminacy_dim", "nonzero", "form"},
               {{std::to_string(j["degree"].get<int>()),
                 j["representative"].get<std::string>(),
                 std::to_string(j["indeterminacy_dim"].get<std::size_t>()),
                 yes_no(j["nonzero"].get<bool>()), j["form"].get<std::string>()}}};
}

Report cmd_massey(const Options &o, const std::vector<std::string> &args) {
  if (o.forms.size() != 3) {
    throw UsageError("massey needs exactly three forms");
  }
  Loaded loaded = load(o.file);
  Report r = start("massey", args, loaded.text);
  r.notes = loaded.notes;
  const Presentation &p = loaded.file.presentation;
  CohomologyRing ring(p);
  std::vector<CohomologyClass> classes;
  for (const auto &f : o.forms) {
    classes.push_back(ring.class_of(parse_form(p, f)));
  }
  const auto m = twisted::massey_triple(ring, classes[0], classes[1], classes[2]);
  r.data = coset_json(ring, m);
  r.tables.push_back(
      coset_table("Massey product {" + join(o.forms, ", ") + "}", r.data));
  return r;
}

Report cmd_massey_eta(const Options &o, const std::vector<std::string> &args,
                      std::ostream &err) {
  if (o.forms.size() != 1) {
    throw UsageError("massey-eta needs exactly one form");
  }
  if (o.order < 1) {
    throw UsageError("--order must be at least 1");
  }
  Loaded loaded = load(o.file);
  Report r = start("massey-eta", args, loaded.text);
  r.notes = loaded.notes;
  const Presentation &p = loaded.file.presentation;
  const Element eta = twist_of(loaded, o, r, err);
  CohomologyRing ring(p);
  const auto result =
      twisted::massey_eta_iterated(ring, eta, parse_form(p, o.forms[0]), o.order);
  if (!result.defined()) {
    throw PreconditionError("{eta, ..., eta, " + o.forms[0] + "} with " +
                            std::to_string(o.order) +
                            " copies of eta is undefined: obstructed at stage " +
                            std::to_string(result.obstructed_stage));
  }
  r.data = coset_json(ring, *result.value);
  r.data["order"] = o.order;
  r.data["twist"] = p.algebra().format(eta);
  r.data["chain"] = formatted(p, result.chain);
  r.tables.push_back(coset_table("Iterated Massey product with " +
                                     std::to_string(o.order) + " copies of " +
                                     p.algebra().format(eta),
                                 r.data));
  Table chain{"Defining system", {"index", "form"}, {}};
  for (std::size_t i = 0; i < result.chain.size(); ++i) {
    chain.rows.push_back(
        {"x" + std::to_string(2 * i), p.algebra().format(result.chain[i])});
  }
  r.tables.push_back(std::move(chain));
  return r;
}

void require_weight(int n, int at_least) {
  if (n < at_least) {
    throw UsageError("--max-weight must be at least " + std::to_string(at_least));
  }
}

Report cmd_jring(const Options &o, const std::vector<std::string> &args) {
  require_weight(o.max_weight, 0);
  Report r = start("jring", args, "");
  const auto j = charclass::invariant_ring(o.max_weight);
  const auto series = charclass::poincare_series(o.max_weight);
  Table t{"Invariant ring J", {"n", "dim A_n", "j_n", "series", "basis"}, {}};
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 0; n <= o.max_weight; ++n) {
    std::vector<std::string> basis;
    for (const auto &f : j.basis[n]) {
      basis.push_back(charclass::format(f));
    }
    t.rows.push_back({std::to_string(n),
                      std::to_string(charclass::partition_count(n)),
                      std::to_string(j.dims[n]), std::to_string(series[n]),
                      join(basis, "; ")});
    rows.push_back({{"n", n}, {"j", j.dims[n]}, {"series", series[n]},
                    {"basis", basis}});
  }
  r.tables.push_back(std::move(t));
  bool surjective = true;
  for (const auto &row : charclass::check_d_surjective(o.max_weight)) {
    surjective = surjective && row.surjective();
  }
  r.notes.push_back(std::string("Poincare series cross-check: ") +
                    (j.dims == series ? "agrees" : "DISAGREES"));
  r.notes.push_back("d surjective onto A_{n-1} for 2 <= n <= max weight: " +
                    yes_no(surjective));
  r.data["weights"] = rows;
  r.data["series_agrees"] = j.dims == series;
  r.data["d_surjective"] = surjective;
  return r;
}

Report cmd_wang(const Options &o, const std::vector<std::string> &args) {
  require_weight(o.max_weight, 1);
  Report r = start("wang", args, "");
  const auto w = charclass::wang_model_report(o.max_weight);
  Table t{"Wang model cohomology", {"degree", "dim"}, {}};
  nlohmann::json even = nlohmann::json::array(), odd = nlohmann::json::array();
  for (int n = 0; n <= o.max_weight; ++n) {
    t.rows.push_back({std::to_string(2 * n), std::to_string(w.even_dims[n])});
    even.push_back({{"degree", 2 * n}, {"dim", w.even_dims[n]}});
    if (n < o.max_weight) {
      t.rows.push_back(
          {std::to_string(2 * n + 3), std::to_string(w.odd_dims[n])});
      odd.push_back({{"degree", 2 * n + 3}, {"dim", w.odd_dims[n]}});
    }
  }
  std::stable_sort(t.rows.begin(), t.rows.end(), [](const auto &a, const auto &b) {
    return std::stoi(a[0]) < std::stoi(b[0]);
  });
  r.tables.push_back(std::move(t));
  r.notes.push_back("computed blockwise on A_n -> A_{n-1} through weight " +
                    std::to_string(o.max_weight));
  r.notes.push_back("w.f is a boundary for every positive-weight basis element of J: " +
                    yes_no(w.twist_annihilates));
  r.data["even"] = even;
  r.data["odd"] = odd;
  r.data["twist_annihilates"] = w.twist_annihilates;
  return r;
}

Report cmd_hankel(const Options &o, const std::vector<std::string> &args) {
  if (o.p < 1 || o.q < 1) {
    throw UsageError("--p and --q must be positive");
  }
  if (o.p * o.q > o.max_pq) {
    throw PreconditionError("p*q = " + std::to_string(o.p * o.q) +
                            " exceeds --max-pq " + std::to_string(o.max_pq));
  }
  Report r = start("hankel", args, "");
  const auto h = hankel::hankel_det(o.p, o.q);
  const std::string label = "h_{" + std::to_string(o.p) + "," + std::to_string(o.q) + "}";
  Table t{"Hankel determinant", {"name", "weight", "polynomial"},
          {{label, std::to_string(o.p * o.q), hankel::format_c(h)}}};
  r.tables.push_back(std::move(t));
  r.data["hankel"] = hankel::format_c(h);
  if (o.verify) {
    const auto v = hankel::verify_94(o.p, o.q, o.p + 1, o.q + 1);
    const auto res = hankel::resultant(o.p, o.q);
    Table ident{"Identities", {"check", "holds", "value"}, {}};
    ident.rows.push_back({label + "(a/b) = R(a,b)", yes_no(v.hankel_is_resultant),
                          hankel::format_ab(v.resultant, o.p, o.q)});
    ident.rows.push_back({"h_{" + std::to_string(o.p + 1) + "," +
                              std::to_string(o.q + 1) + "}(a/b) = 0",
                          yes_no(v.higher_vanishes),
                          hankel::format_ab(v.higher, o.p, o.q)});
    ident.rows.push_back({"R in roots", "-",
                          hankel::format_roots(res.in_roots, o.p, o.q)});
    ident.rows.push_back({"root shift invariance",
                          yes_no(hankel::root_shift_invariant(o.p, o.q)), "-"});
    r.tables.push_back(std::move(ident));
    Table inj{"Injectivity of c -> (a, b)",
              {"weight", "dim", "rank", "injective", "kernel element"}, {}};
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= (o.p + 1) * (o.q + 1); ++n) {
      const auto rep = hankel::injectivity_rank(o.p, o.q, n);
      const std::string kernel =
          rep.kernel_element ? hankel::format_c(*rep.kernel_element) : "-";
      inj.rows.push_back({std::to_string(n), std::to_string(rep.source_dim),
                          std::to_string(rep.rank), yes_no(rep.injective()),
                          kernel});
      rows.push_back({{"weight", n}, {"rank", rep.rank},
                      {"dim", rep.source_dim}, {"injective", rep.injective()}});
    }
    r.tables.push_back(std::move(inj));
    r.data["hankel_is_resultant"] = v.hankel_is_resultant;
    r.data["higher_vanishes"] = v.higher_vanishes;
    r.data["injectivity"] = rows;
  }
  if (o.reparam) {
    if (o.p != o.q) {
      throw PreconditionError("--reparam needs p = q");
    }
    const auto rep = hankel::reparam_invariance(o.p);
    r.tables.push_back(Table{"Reparametrization t -> t/(1 - u t)",
                             {"name", "invariant", "transformed"},
                             {{label, yes_no(rep.invariant),
                               hankel::format_c(rep.transformed, rep.u_index)}}});
    r.data["reparam_invariant"] = rep.invariant;
  }
  return r;
}

Report cmd_lift(const Options &o, const std::vector<std::string> &args) {
  require_weight(o.max_weight, 1);
  Report r = start("lift", args, "");
  const auto f = charclass::parse(o.expression);
  const auto lift = charclass::delta_lift(f, o.max_weight);
  Table t{"exp(lambda delta) lift, truncated at weight " +
              std::to_string(o.max_weight),
          {"weight", "component"}, {}};
  std::vector<int> weights;
  for (int i = 1; i <= o.max_weight + 1; ++i) {
    weights.push_back(i);
  }
  for (int n = 0; n <= o.max_weight; ++n) {
    const auto part = lift.series.component(weights, n);
    if (!part.is_zero()) {
      t.rows.push_back({std::to_string(n), charclass::format(part)});
    }
  }
  r.tables.push_back(std::move(t));
  r.notes.push_back("(d - 1) lift vanishes through weight " +
                    std::to_string(o.max_weight - 1) + ": " + yes_no(lift.closed));
  r.notes.push_back("[d, delta] is word length through weight " +
                    std::to_string(o.max_weight) + ": " +
                    yes_no(lift.laplacian_is_word_length));
  r.data["input"] = charclass::format(f);
  r.data["series"] = charclass::format(lift.series);
  r.data["max_weight"] = o.max_weight;
  r.data["closed"] = lift.closed;
  r.data["laplacian_is_word_length"] = lift.laplacian_is_word_length;
  return r;
}

Report cmd_psi(const Options &o, const std::vector<std::string> &args) {
  require_weight(o.psi_weight, 1);
  std::vector<long> ks;
  for (const auto &item : o.ks) {
    std::stringstream parts(item);
    std::string part;
    while (std::getline(parts, part, ',')) {
      std::size_t used = 0;
      long k = 0;
      try {
        k = std::stol(part, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used == 0 || used != part.size() || k == 0) {
        throw UsageError("psi expects nonzero integers, got '" + part + "'");
      }
      ks.push_back(k);
    }
  }
  if (ks.empty()) {
    throw UsageError("psi needs at least one k");
  }
  Report r = start("psi", args, "");
  Table t{"psi characters through weight " + std::to_string(o.psi_weight),
          {"operation", "character"}, {}};
  std::vector<std::string> labels;
  long sum = 0;
  linalg::Scalar product(1);
  for (long k : ks) {
    labels.push_back("psi^" + std::to_string(k));
    t.rows.push_back(
        {labels.back(), charclass::format(charclass::psi_character(k, o.psi_weight))});
    sum += k;
    product *= k;
  }
  const auto mu = charclass::psi_monomial_character(ks, o.psi_weight);
  const std::string name = join(labels, " ");
  t.rows.push_back({name, charclass::format(mu)});
  r.tables.push_back(std::move(t));
  const int l = static_cast<int>(ks.size());
  std::vector<int> weights;
  for (int i = 1; i <= o.psi_weight; ++i) {
    weights.push_back(i);
  }
  const auto lowest = mu.component(weights, l);
  const bool identity =
      l <= o.psi_weight &&
      lowest == poly::Polynomial(product) * charclass::x(1).pow(l);
  r.notes.push_back("sum of k_i = " + std::to_string(sum));
  r.notes.push_back("weight-" + std::to_string(l) +
                    " component: " + charclass::format(lowest) +
                    " (equals prod(k_i) x1^" + std::to_string(l) + ": " +
                    yes_no(identity) + ")");
  r.data["ks"] = ks;
  r.data["character"] = charclass::format(mu);
  r.data["lowest_component"] = charclass::format(lowest);
  r.data["lowest_identity"] = identity;
  return r;
}

Report cmd_tensor_action(const Options &o, const std::vector<std::string> &args) {
  if (o.n < 0) {
    throw UsageError("--n must be non-negative");
  }
  Report r = start("tensor-action", args, "");
  const auto t = charclass::tensor_action_power_sums(o.n);
  r.tables.push_back(Table{"Tensor action on power sums", {"n", "s_n(u)"},
                           {{std::to_string(o.n), t.format()}}});
  r.data["n"] = o.n;
  r.data["identity"] = t.format();
  return r;
}

int dispatch(CLI::App &app, const Options &o, const std::vector<std::string> &args,
             std::ostream &out, std::ostream &err) {
  const auto format = parse_format(o.format);
  if (!format) {
    throw UsageError("unknown format '" + o.format + "'");
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "example") {
    const auto text = builtin_file(o.name);
    if (!text) {
      throw UsageError("unknown example '" + o.name + "'; available: " +
                       join(builtin_names(), ", "));
    }
    out << *text;
    return kOk;
  }
  Report report;
  if (command == "cohomology") {
    report = cmd_cohomology(o, args);
  } else if (command == "twisted") {
    report = cmd_twisted(o, args, err);
  } else if (command == "ss") {
    report = cmd_ss(o, args, err);
  } else if (command == "massey") {
    report = cmd_massey(o, args);
  } else if (command == "massey-eta") {
    report = cmd_massey_eta(o, args, err);
  } else if (command == "jring") {
    report = cmd_jring(o, args);
  } else if (command == "wang") {
    report = cmd_wang(o, args);
  } else if (command == "hankel") {
    report = cmd_hankel(o, args);
  } else if (command == "lift") {
    report = cmd_lift(o, args);
  } else if (command == "psi") {
    report = cmd_psi(o, args);
  } else {
    report = cmd_tensor_action(o, args);
  }
  out << export_report(report, *format);
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Exact twisted cohomology, spectral sequences, Massey products "
               "and characteristic-class identities.",
               "twistcoh"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto with_file = [&](CLI::App *sub) {
    sub->add_option("file", o.file, "CDGA description file")->required();
    return sub;
  };
  auto twist_flag = [&](CLI::App *sub) {
    sub->add_option("--twist", o.twist, "Override the file's twist");
  };

  with_file(app.add_subcommand("cohomology", "Betti numbers and representatives"));
  twist_flag(with_file(app.add_subcommand("twisted", "Twisted cohomology H_eta")));
  auto *ss = with_file(app.add_subcommand("ss", "Spectral sequence page totals"));
  twist_flag(ss);
  ss->add_option("--max-page", o.max_page, "Last page to print");
  auto *massey = with_file(app.add_subcommand("massey", "Massey triple product"));
  massey->add_option("forms", o.forms, "Three closed forms")->required();
  auto *meta = with_file(
      app.add_subcommand("massey-eta", "Iterated Massey product with the twist"));
  meta->add_option("forms", o.forms, "A closed form")->required();
  meta->add_option("--order", o.order, "Number of copies of the twist");
  twist_flag(meta);
  for (const char *name : {"jring", "wang"}) {
    auto *sub = app.add_subcommand(
        name, std::string(name) == "jring" ? "Invariant ring J" : "Wang model report");
    sub->add_option("--max-weight", o.max_weight, "Weight cutoff");
  }
  auto *hk = app.add_subcommand("hankel", "Hankel determinants and resultants");
  hk->add_option("--p", o.p)->required();
  hk->add_option("--q", o.q)->required();
  hk->add_option("--max-pq", o.max_pq, "Bound on p*q");
  hk->add_flag("--verify", o.verify, "Check the resultant identities");
  hk->add_flag("--reparam", o.reparam, "Check t -> t/(1 - u t) invariance");
  auto *lift = app.add_subcommand("lift", "exp(lambda delta) lift of an invariant");
  lift->add_option("expression", o.expression)->required();
  lift->add_option("--max-weight", o.max_weight, "Weight cutoff");
  auto *psi = app.add_subcommand("psi", "psi-operation characters");
  psi->add_option("ks", o.ks, "Integers k_1 ... k_l")->required();
  psi->add_option("--max-weight", o.psi_weight, "Weight cutoff");
  auto *ta = app.add_subcommand("tensor-action", "Tensor action on power sums");
  ta->add_option("--n", o.n)->required();
  auto *ex = app.add_subcommand("example", "Print a built-in file");
  ex->add_option("name", o.name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return dispatch(app, o, args, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const poly::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FileError &e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const cdga::CdgaError &e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const cdga::ExpressionError &e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const PreconditionError &e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const cohomology::NotClosed &e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const twisted::ProductsNotZero &e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const twisted::TwistError &e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
}

} // namespace twistcoh::cli
