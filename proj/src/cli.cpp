#include "reglab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reglab/bounds.hpp"
#include "reglab/error.hpp"
#include "reglab/harness.hpp"
#include "reglab/json_io.hpp"
#include "reglab/normality.hpp"
#include "reglab/projection.hpp"
#include "reglab/separation.hpp"

namespace reglab::cli {

namespace {

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

Vector parse_vector(const std::string& text, Field f) {
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Scalar::parse(item, f));
  if (v.empty()) throw InvalidInput("empty vector \"" + text + "\"");
  return v;
}

Json sizes(const std::vector<std::size_t>& v) { return Json(v); }

std::size_t env_cap() {
  if (const char* s = std::getenv("REGLAB_CAP")) {
    try {
      return std::stoul(s);
    } catch (const std::logic_error&) {
      throw InvalidInput(std::string("REGLAB_CAP must be a number, got \"") + s + "\"");
    }
  }
  return kDefaultEnumerationCap;
}

struct Options {
  std::string field_text;
  std::size_t cap = 0;
  std::string scheme, recipe, config, center, curve, subspace, suite, u_text, y_text, param_text;
  unsigned max_degree = 0, degree = 0, n = 0;
  bool have_max_degree = false, have_degree = false;
  long dim = 0, deg = 0, codim = 0;
  bool quadric = false, no_quadric = false, singular = false, quadric_generators = false, explain = false;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool timing = false;

  Field field() const { return field_text.empty() ? Field::rationals() : parse_field_flag(field_text); }
  FiniteScheme load_scheme() const {
    const Json j = read_json(scheme);
    return field_text.empty() ? scheme_from_json(j) : scheme_from_json(j, field());
  }
};

struct Result {
  Json body;
  int code = kOk;
};

Result cmd_hilbert(const Options& o) {
  const FiniteScheme x = o.load_scheme();
  const unsigned top = o.have_max_degree ? o.max_degree : static_cast<unsigned>(x.degree());
  return {Json{{"phi", sizes(hilbert_function_values(x, top))}}};
}

Result cmd_normality(const Options& o) {
  const FiniteScheme x = o.load_scheme();
  const unsigned d = static_cast<unsigned>(x.degree());
  const unsigned bound = normality_threshold_bound(x, o.cap);
  const unsigned minimal = minimal_normality_degree(x);
  Json j;
  j["degree"] = d;
  j["span"] = span_dim(x);
  j["t"] = invariant_t(x, o.cap);
  j["bound"] = bound;
  j["minimal_normal_degree"] = minimal;
  const bool holds = minimal <= bound;
  j["bound_holds"] = holds;
  int code = holds ? kOk : kViolated;
  if (o.have_degree) {
    const bool normal = is_k_normal(x, o.degree);
    j["k"] = o.degree;
    j["k_normal"] = normal;
    if (!normal) code = kViolated;
  }
  return {j, code};
}

Result cmd_regularity(const Options& o) {
  const FiniteScheme x = o.load_scheme();
  Json j;
  j["regularity"] = finite_scheme_regularity(x);
  j["phi"] = sizes(hilbert_function_values(x, static_cast<unsigned>(x.degree())));
  return {j};
}

Result cmd_invariant_t(const Options& o) {
  const FiniteScheme x = o.load_scheme();
  return {Json{{"t", invariant_t(x, o.cap)}, {"span", span_dim(x)}}};
}

Result cmd_secant(const Options& o) {
  const FiniteScheme x = o.load_scheme();
  const auto w = max_collinear_length(x);
  Json j;
  j["max_collinear"] = w.length;
  j["line"] = w.line ? subspace_to_json(*w.line) : Json(nullptr);
  int code = kOk;
  if (span_dim(x) == static_cast<long>(x.ambient()) && x.degree() > x.ambient()) {
    const auto v = check_cor13a(x);
    j["secant_line"] = v.has_secant;
    j["dN_normal"] = v.is_dN_normal;
    j["dN1_normal"] = v.is_dN1_normal;
    j["equivalence_holds"] = v.equivalence_holds;
    if (!v.equivalence_holds) code = kViolated;
  }
  return {j, code};
}

Result cmd_separate(const Options& o) {
  const FiniteScheme x = o.load_scheme();
  const FormSpaceRecipe r = recipe_from_json(read_json(o.recipe), x.field());
  Vector u = o.u_text.empty() ? zero_vector(x.ambient() + 1, x.field()) : parse_vector(o.u_text, x.field());
  if (o.u_text.empty()) u[0] = Scalar(1, x.field());
  const auto forms = recipe_space(r, o.degree, u);
  const std::size_t rk = rank(evaluation_matrix(x, forms));
  const bool ok = recipe_separates(x, r, o.degree, u);
  return {Json{{"separates", ok}, {"rank", rk}, {"degree", x.degree()}}, ok ? kOk : kViolated};
}

Result cmd_lemma26(const Options& o) {
  const SeparatorConfig cfg = separator_from_json(read_json(o.config), o.field());
  cfg.validate();
  Json j;
  j["rank"] = separating_rank(cfg);
  try {
    Json forms = Json::array();
    for (const auto& f : lemma26_separators(cfg)) forms.push_back(form_to_json(f));
    j["forms"] = forms;
    return {j};
  } catch (const DegenerateConfiguration& e) {
    j["degenerate"] = e.what();
    return {j, kViolated};
  }
}

Result cmd_project(const Options& o) {
  const FiniteScheme x = o.load_scheme();
  const LinearSubspace c = subspace_from_json(read_json(o.center), x.field());
  const auto fibers = project_scheme(x, c);
  Json list = Json::array();
  for (const auto& f : fibers) {
    list.push_back(Json{{"image", vector_to_json(f.image.coords())},
                        {"length", f.length},
                        {"germs", sizes(f.selector.lengths)}});
  }
  Json yk = Json::object();
  for (const auto& [k, count] : yk_counts(fibers)) yk[std::to_string(k)] = count;
  return {Json{{"fibers", list}, {"yk", yk}}};
}

Result cmd_classify_fiber(const Options& o) {
  const FiniteScheme x = o.load_scheme();
  const auto p = classify_fiber(x, o.n);
  const auto m = mather_inequality(p, o.n);
  const unsigned minimal = minimal_normality_degree(x);
  Json j;
  j["label"] = p.label;
  j["deltas"] = sizes(p.deltas);
  j["total"] = p.total;
  j["support"] = p.support;
  j["span"] = p.span;
  j["max_collinear"] = p.max_collinear;
  j["mather"] = Json{{"sum", m.sum}, {"holds", m.holds}};
  j["predicted"] = p.predicted ? Json(*p.predicted) : Json(nullptr);
  j["exact"] = p.prediction_exact;
  j["minimal_normal_degree"] = minimal;
  bool ok = !p.predicted || (p.prediction_exact ? minimal == *p.predicted : minimal <= *p.predicted);
  return {j, ok ? kOk : kViolated};
}

Result cmd_curve_fiber(const Options& o) {
  const RationalCurve c = curve_from_json(read_json(o.curve));
  const LinearSubspace center = subspace_from_json(read_json(o.center), Field::rationals());
  const auto f = curve_fiber_scheme(c, center, parse_vector(o.y_text, Field::rationals()));
  Json irr = Json::array();
  for (const auto& [deg, mult] : f.irrational) irr.push_back(Json::array({deg, mult}));
  Json j;
  j["total"] = f.total;
  j["scheme"] = f.scheme ? scheme_to_json(*f.scheme) : Json(nullptr);
  j["irrational"] = irr;
  return {j, f.total == c.degree() ? kOk : kViolated};
}

Result cmd_curve_section(const Options& o) {
  const RationalCurve c = curve_from_json(read_json(o.curve));
  const LinearSubspace l = subspace_from_json(read_json(o.subspace), Field::rationals());
  const long len = static_cast<long>(curve_linear_section_length(c, l));
  const long bound = static_cast<long>(c.degree()) - (static_cast<long>(c.ambient()) - 1 - l.dim());
  return {Json{{"length", len}, {"bound", bound}, {"holds", len <= bound}}, len <= bound ? kOk : kViolated};
}

Result cmd_bounds(const Options& o) {
  if (o.quadric && o.no_quadric) throw InvalidInput("--quadric and --no-quadric exclude each other");
  BoundQuery q;
  q.n = o.dim;
  q.d = o.deg;
  q.e = o.codim;
  q.smooth = !o.singular;
  if (o.quadric) q.quadric = true;
  if (o.no_quadric) q.quadric = false;
  q.quadric_generators = o.quadric_generators;
  const auto b = known_regularity_bound(q);
  Json j{{"eisenbud_goto", b.eisenbud_goto}, {"paper", b.value}, {"bel", b.bel}};
  if (o.explain) {
    j["source"] = b.source;
    j["conditional"] = b.conditional;
  }
  return {j};
}

Result cmd_verify(const Options& o) {
  SuiteOptions s;
  s.name = o.suite;
  s.trials = o.trials;
  s.seed = o.seed;
  s.field = o.field();
  s.jobs = o.jobs;
  s.cap = o.cap;
  s.timing = o.timing;
  const auto report = run_suite(s);
  return {report.to_json(), report.passed() ? kOk : kViolated};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact finite-scheme and regularity-bound toolkit", "reglab"};
  app.require_subcommand(1);
  app.add_option("--field", o.field_text, "Q (default) or fp:PRIME");
  app.add_option("--cap", o.cap, "subscheme enumeration cap (default $REGLAB_CAP or 12)");

  std::map<std::string, Result (*)(const Options&)> handlers;
  auto sub = [&](const char* name, const char* help, Result (*fn)(const Options&)) {
    handlers[name] = fn;
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto need_scheme = [&](CLI::App* s) { s->add_option("--scheme", o.scheme, "scheme JSON file or -")->required(); };

  auto* hilbert = sub("hilbert", "Hilbert function values", cmd_hilbert);
  need_scheme(hilbert);
  hilbert->add_option("--max-degree", o.max_degree)->each([&](const std::string&) { o.have_max_degree = true; });
  auto* normality = sub("normality", "normality threshold and k-normality", cmd_normality);
  need_scheme(normality);
  normality->add_option("--degree", o.degree)->each([&](const std::string&) { o.have_degree = true; });
  need_scheme(sub("regularity", "regularity of a finite scheme", cmd_regularity));
  need_scheme(sub("invariant-t", "the invariant t", cmd_invariant_t));
  need_scheme(sub("secant", "longest collinear subscheme and the secant-line criterion", cmd_secant));
  auto* separate = sub("separate", "does a recipe space separate the scheme", cmd_separate);
  need_scheme(separate);
  separate->add_option("--recipe", o.recipe)->required();
  separate->add_option("--degree", o.degree)->required();
  separate->add_option("--u", o.u_text, "linear form U as comma-separated coefficients");
  sub("lemma26", "separating forms for a configuration in the plane", cmd_lemma26)
      ->add_option("--config", o.config)
      ->required();
  auto* project = sub("project", "fibers of a linear projection", cmd_project);
  need_scheme(project);
  project->add_option("--center", o.center)->required();
  auto* classify = sub("classify-fiber", "fiber case analysis", cmd_classify_fiber);
  need_scheme(classify);
  classify->add_option("--n", o.n, "dimension of the projected variety")->required();
  auto* cfiber = sub("curve-fiber", "fiber of a rational curve over a point of P^1", cmd_curve_fiber);
  cfiber->add_option("--curve", o.curve)->required();
  cfiber->add_option("--center", o.center)->required();
  cfiber->add_option("--y", o.y_text, "point of P^1, e.g. 1,2")->required();
  auto* csection = sub("curve-section", "length of a linear section of a rational curve", cmd_curve_section);
  csection->add_option("--curve", o.curve)->required();
  csection->add_option("--subspace", o.subspace)->required();
  auto* bounds = sub("bounds", "regularity bounds for a projective variety", cmd_bounds);
  bounds->add_option("--dim", o.dim)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--degree", o.deg)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--codim", o.codim)->required()->check(CLI::PositiveNumber);
  bounds->add_flag("--quadric", o.quadric, "contained in a hyperquadric");
  bounds->add_flag("--no-quadric", o.no_quadric, "on no hyperquadric");
  bounds->add_flag("--singular", o.singular, "not assumed smooth");
  bounds->add_flag("--quadric-generators", o.quadric_generators, "e-1 minimal generators are quadrics");
  bounds->add_flag("--explain", o.explain, "add the source of the bound");
  auto* verify = sub("verify", "run a property suite", cmd_verify);
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", o.trials, "0 uses the suite default");
  verify->add_option("--seed", o.seed);
  verify->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--timing", o.timing, "include wall time in the report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (o.cap == 0) o.cap = env_cap();
    const auto* chosen = app.get_subcommands().front();
    const Result r = handlers.at(chosen->get_name())(o);
    out << r.body.dump() << "\n";
    return r.code;
  } catch (const Json::exception& e) {
    err << "reglab: malformed JSON: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "reglab: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "reglab: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace reglab::cli
