#include "reglab/json_io.hpp"

#include "reglab/error.hpp"

namespace reglab {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t need_count(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidInput(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

Field parse_field_flag(const std::string& text) {
  if (text == "Q" || text == "q") return Field::rationals();
  if (text.rfind("fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      const unsigned long long p = std::stoull(text.substr(3), &used);
      if (used != text.size() - 3) throw std::invalid_argument("trailing");
      return Field::prime(p);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad prime in field \"" + text + "\"");
    }
  }
  throw InvalidInput("field must be Q or fp:PRIME, got \"" + text + "\"");
}

Json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return parse_field_flag(j.get<std::string>());
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    return Field::prime(j["Fp"].get<std::uint64_t>());
  }
  throw InvalidInput("field must be \"Q\" or {\"Fp\": prime}");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, Field f) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
  if (j.is_number_integer()) return Scalar(j.get<long>(), f);
  throw InvalidInput("exact numbers must be integers or \"p/q\" strings, got " + j.dump());
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

Vector vector_from_json(const Json& j, Field f) {
  if (!j.is_array()) throw InvalidInput("expected an array of numbers, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, f));
  return v;
}

Json scheme_to_json(const FiniteScheme& x) {
  Json germs = Json::array();
  for (const auto& g : x.germs()) {
    Json e;
    e["point"] = vector_to_json(g.support().coords());
    if (g.length() >= 2) {
      e["chart"] = g.chart();
      Json jet = Json::array();
      for (const auto& s : g.jet()) jet.push_back(vector_to_json(s));
      e["jet"] = jet;
    }
    germs.push_back(e);
  }
  Json out;
  out["field"] = field_to_json(x.field());
  out["ambient"] = x.ambient();
  out["germs"] = germs;
  return out;
}

FiniteScheme scheme_from_json(const Json& j, std::optional<Field> override_field) {
  const Field f = override_field ? *override_field
                  : j.contains("field") ? field_from_json(j["field"])
                                        : Field::rationals();
  const std::size_t n = need_count(j, "ambient");
  const Json& germs = need(j, "germs");
  if (!germs.is_array() || germs.empty()) throw InvalidInput("\"germs\" must be a nonempty array");
  std::vector<CurvilinearGerm> out;
  for (const auto& g : germs) {
    const Vector p = vector_from_json(need(g, "point"), f);
    if (p.size() != n + 1) throw InvalidInput("point " + need(g, "point").dump() + " is not in P^" + std::to_string(n));
    const ProjPoint pt(p);
    if (!g.contains("jet")) {
      out.push_back(CurvilinearGerm::reduced(pt));
      continue;
    }
    std::size_t chart = 0;
    if (g.contains("chart")) {
      chart = need_count(g, "chart");
    } else {
      while (chart <= n && pt[chart].is_zero()) ++chart;
    }
    if (chart > n || pt[chart].is_zero()) throw InvalidInput("chart coordinate of the support is zero");
    std::vector<Series> jet;
    for (const auto& s : g["jet"]) jet.push_back(vector_from_json(s, f));
    out.push_back(CurvilinearGerm::from_jet(pt, chart, jet));
  }
  return FiniteScheme(n, std::move(out));
}

Json subspace_to_json(const LinearSubspace& l) {
  Json forms = Json::array();
  for (const auto& v : l.forms()) forms.push_back(vector_to_json(v));
  Json out;
  out["ambient"] = l.ambient();
  out["forms"] = forms;
  return out;
}

LinearSubspace subspace_from_json(const Json& j, Field f) {
  const std::size_t n = need_count(j, "ambient");
  std::vector<Vector> forms;
  for (const auto& v : need(j, "forms")) forms.push_back(vector_from_json(v, f));
  return LinearSubspace(n, std::move(forms));
}

Json curve_to_json(const RationalCurve& c) {
  Json forms = Json::array();
  for (const auto& v : c.forms()) forms.push_back(vector_to_json(v));
  Json out;
  out["ambient"] = c.ambient();
  out["degree"] = c.degree();
  out["forms"] = forms;
  return out;
}

RationalCurve curve_from_json(const Json& j) {
  std::vector<Vector> forms;
  for (const auto& v : need(j, "forms")) forms.push_back(vector_from_json(v, Field::rationals()));
  return RationalCurve(need_count(j, "ambient"), static_cast<unsigned>(need_count(j, "degree")), std::move(forms));
}

Json form_to_json(const Form& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({scalar_to_json(c), e}));
  return terms;
}

FormSpaceRecipe recipe_from_json(const Json& j, Field f) {
  FormSpaceRecipe r;
  r.t_count = need_count(j, "T_count");
  r.standard = j.value("standard", false);
  if (j.contains("T_forms"))
    for (const auto& v : j["T_forms"]) r.t_forms.push_back(vector_from_json(v, f));
  if (j.contains("spaces")) {
    for (const auto& [key, list] : j["spaces"].items()) {
      unsigned deg = 0;
      try {
        deg = static_cast<unsigned>(std::stoul(key));
      } catch (const std::logic_error&) {
        throw InvalidInput("recipe degree \"" + key + "\" is not a number");
      }
      for (const auto& form : list) {
        Form fm(r.t_count, deg, f);
        for (const auto& term : form) {
          if (!term.is_array() || term.size() != 2) throw InvalidInput("recipe term must be [coeff, exponents]");
          fm.add_term(term[1].get<Exponents>(), scalar_from_json(term[0], f));
        }
        r.spaces[deg].push_back(std::move(fm));
      }
    }
  }
  return r;
}

Json recipe_to_json(const FormSpaceRecipe& r) {
  Json out;
  out["T_count"] = r.t_count;
  if (!r.t_forms.empty()) {
    Json tf = Json::array();
    for (const auto& v : r.t_forms) tf.push_back(vector_to_json(v));
    out["T_forms"] = tf;
  }
  Json spaces = Json::object();
  for (const auto& [j, forms] : r.spaces) {
    Json list = Json::array();
    for (const auto& f : forms) list.push_back(form_to_json(f));
    spaces[std::to_string(j)] = list;
  }
  out["spaces"] = spaces;
  out["standard"] = r.standard;
  return out;
}

SeparatorConfig separator_from_json(const Json& j, Field f) {
  SeparatorConfig c;
  c.n = static_cast<unsigned>(need_count(j, "n"));
  c.which = static_cast<int>(need_count(j, "case"));
  c.a = scalar_from_json(need(j, "a"), f);
  c.b = scalar_from_json(need(j, "b"), f);
  c.u = vector_from_json(need(j, "u"), f);
  for (const auto& p : need(j, "off_line")) c.off_line.push_back(vector_from_json(p, f));
  return c;
}

Json separator_to_json(const SeparatorConfig& c) {
  Json off = Json::array();
  for (const auto& p : c.off_line) off.push_back(vector_to_json(p));
  Json out;
  out["n"] = c.n;
  out["case"] = c.which;
  out["a"] = scalar_to_json(c.a);
  out["b"] = scalar_to_json(c.b);
  out["u"] = vector_to_json(c.u);
  out["off_line"] = off;
  return out;
}

}  // namespace reglab
