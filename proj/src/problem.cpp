#include "immdec/problem.hpp"

#include <algorithm>
#include <utility>

#include "immdec/errors.hpp"

namespace immdec {

namespace {

std::string degree_list(int count) {
  if (count == 0) return "no entries";
  std::string out = "degrees ";
  for (int i = 1; i <= count; ++i) {
    if (i > 1) out += ", ";
    out += std::to_string(4 * i);
  }
  return out;
}

}  // namespace

int ImmersionProblem::carrier_dim(int k) const {
  if (k < 0) return 0;
  if (presentation) return presentation->dim(k);
  if (!model) throw input_error("problem has no cohomology carrier");
  return static_cast<int>(basis_of_degree(model->generators(), k).size());
}

ImmersionProblem parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("problem file is not valid JSON: ") + e.what());
  }
  require_keys(j, {"dimension_m", "dimension_n", "cohomology"},
               {"tangent_pontrjagin", "pullback_pontrjagin", "pullback_euler",
                "euler_tangent"},
               "problem document");
  if (!j["dimension_m"].is_number_integer() ||
      !j["dimension_n"].is_number_integer())
    throw input_error("dimension_m and dimension_n must be integers");

  ImmersionProblem p;
  p.m = j["dimension_m"].get<int>();
  p.n = j["dimension_n"].get<int>();
  if (p.m < 1) throw scope_error("the source dimension m must be at least 1");
  if (p.n <= p.m)
    throw scope_error("the target dimension n must exceed the source dimension m");
  if ((p.n - p.m) % 2 == 0)
    throw scope_error("[odd-codimension-scope] only odd codimension n - m is "
                      "supported; got n - m = " + std::to_string(p.n - p.m));
  const MonoLayout layout = mono_layout(p.m, p.n);

  const Json& c = j["cohomology"];
  if (!c.is_object()) throw input_error("'cohomology' must be an object");
  const bool as_presentation = c.contains("basis");
  const bool as_model = c.contains("generators");
  if (as_presentation == as_model)
    throw input_error("'cohomology' must have exactly one of 'basis' (finite "
                      "presentation) or 'generators' (free model)");
  if (as_presentation)
    p.presentation = std::make_shared<const FinitePresentation>(
        presentation_data_from_json(c, "cohomology"));
  else
    p.model = free_cdga_from_json(c, "cohomology");

  // Hypotheses on the carrier: nothing in degree 1, nothing above m. For a
  // free-model carrier (whose pieces never vanish outright) the check runs
  // through every degree the decision can consult, which is bounded by 2n.
  if (p.presentation) {
    if (p.presentation->cohomology_dim(1) != 0)
      throw scope_error(
          "[degree-one-cohomology] the carrier has nonzero cohomology in degree "
          "1; only simply connected inputs are supported, and degree-one classes "
          "cannot change the verdict, so pass the degree-one-free reduction "
          "instead");
    for (int k = p.m + 1; k <= p.presentation->top_degree(); ++k)
      if (p.presentation->cohomology_dim(k) != 0)
        throw input_error("the carrier has nonzero cohomology in degree " +
                          std::to_string(k) + ", above the source dimension " +
                          std::to_string(p.m));
  } else {
    for (int k = p.m + 1; k <= 2 * p.n; ++k)
      if (cohomology_dim(*p.model, k) != 0)
        throw input_error("the carrier has nonzero cohomology in degree " +
                          std::to_string(k) + ", above the source dimension " +
                          std::to_string(p.m));
  }

  const auto check_closed = [&](int deg, const QVec& v, const std::string& what) {
    if (p.presentation) {
      if (!is_zero_vec(p.presentation->diff(deg, v)))
        throw input_error(what + " is not closed");
    } else {
      const Element e = element_from_coordinates(
          p.model->generators_ptr(), basis_of_degree(p.model->generators(), deg), v);
      if (!p.model->apply_diff(e).is_zero())
        throw input_error(what + " is not closed");
    }
  };

  const auto parse_class_map = [&](const char* key, int max_index) {
    std::map<int, QVec> out;
    if (!j.contains(key)) return out;
    const Json& cm = j[key];
    if (!cm.is_object())
      throw input_error(std::string("'") + key +
                        "' must map degrees to coordinate vectors");
    for (auto it = cm.begin(); it != cm.end(); ++it) {
      const int deg = degree_from_json_key(it.key(), std::string(key) + " key");
      if (deg % 4 != 0 || deg / 4 < 1 || deg / 4 > max_index)
        throw input_error(std::string("'") + key + "' has no class in degree " +
                          std::to_string(deg) + " for (m, n) = (" +
                          std::to_string(p.m) + ", " + std::to_string(p.n) +
                          "); expected " + degree_list(max_index));
      const std::string what =
          std::string(key) + " class in degree " + std::to_string(deg);
      QVec v = qvec_from_json(it.value(), p.carrier_dim(deg), what);
      check_closed(deg, v, what);
      out[deg] = std::move(v);
    }
    return out;
  };
  p.tangent_pontrjagin = parse_class_map("tangent_pontrjagin", layout.beta_count);
  p.pullback_pontrjagin =
      parse_class_map("pullback_pontrjagin", layout.alpha_count);

  if (j.contains("pullback_euler")) {
    if (p.n % 2 != 0)
      throw input_error("'pullback_euler' is only meaningful when n is even "
                        "(got n = " + std::to_string(p.n) + ")");
    QVec v = qvec_from_json(j["pullback_euler"], p.carrier_dim(p.n),
                            "pullback_euler class");
    check_closed(p.n, v, "pullback_euler class");
    p.pullback_euler = std::move(v);
  }
  if (j.contains("euler_tangent")) {
    if (p.m % 2 != 0)
      throw input_error("'euler_tangent' is only meaningful when m is even "
                        "(got m = " + std::to_string(p.m) + ")");
    QVec v = qvec_from_json(j["euler_tangent"], p.carrier_dim(p.m),
                            "euler_tangent class");
    check_closed(p.m, v, "euler_tangent class");
    p.euler_tangent = std::move(v);
  }
  return p;
}

std::shared_ptr<const Ambient> carrier_view(const ImmersionProblem& p,
                                            int max_degree) {
  if (p.presentation) return p.presentation;
  if (!p.model) throw input_error("problem has no cohomology carrier");
  return std::make_shared<const FreeCdgaAmbient>(*p.model, max_degree);
}

CdgaMorphism assemble_phi(const ImmersionProblem& p, const RelativeModel& r,
                          const Ambient& carrier) {
  const GeneratorSet& bg = r.base().generators();
  std::vector<QVec> images;
  for (int i = 0; i < bg.size(); ++i) {
    const std::string& name = bg[i].name;
    const int deg = bg[i].degree;
    const QVec* given = nullptr;
    std::string source_key;
    if (name.rfind("alpha", 0) == 0) {
      const auto it = p.pullback_pontrjagin.find(deg);
      if (it != p.pullback_pontrjagin.end()) given = &it->second;
      source_key = "pullback_pontrjagin[\"" + std::to_string(deg) + "\"]";
    } else if (name.rfind("beta", 0) == 0) {
      const auto it = p.tangent_pontrjagin.find(deg);
      if (it != p.tangent_pontrjagin.end()) given = &it->second;
      source_key = "tangent_pontrjagin[\"" + std::to_string(deg) + "\"]";
    } else if (p.n % 2 == 0) {
      if (p.pullback_euler) given = &*p.pullback_euler;
      source_key = "pullback_euler";
    } else {
      if (p.euler_tangent) given = &*p.euler_tangent;
      source_key = "euler_tangent";
    }
    if (given)
      images.push_back(*given);
    else if (checked_dim(carrier, deg) == 0)
      images.push_back(QVec{});
    else
      throw input_error("missing class for generator '" + name + "' (degree " +
                        std::to_string(deg) + "): supply " + source_key);
  }
  return CdgaMorphism(r.base(), carrier, std::move(images));
}

int decision_cutoff(const RelativeModel& r, int m,
                    std::optional<int> max_degree) {
  int cutoff = max_degree.value_or(m + 1);
  for (int i = 0; i < r.fiber_count(); ++i)
    cutoff = std::max(cutoff, r.fiber_gen(i).degree + 1);
  // A base generator can outrank every fiber degree (the gamma range may be
  // empty); the comparison morphism is still validated at its degree, so the
  // carrier view has to stay enumerable there.
  for (int i = 0; i < r.base().generators().size(); ++i)
    cutoff = std::max(cutoff, r.base().generators()[i].degree);
  return cutoff;
}

Verdict decide_immersion(const ImmersionProblem& p, DifferentialMode mode,
                         std::optional<int> max_degree) {
  const RelativeModel r = build_mono_model(p.m, p.n, mode);
  const int cutoff = decision_cutoff(r, p.m, max_degree);
  const auto carrier = carrier_view(p, cutoff);
  const CdgaMorphism phi = assemble_phi(p, r, *carrier);
  const LiftVerdict lv =
      decide_dga_lift(r, *carrier, phi, nullptr, nullptr, nullptr, cutoff);

  Verdict v;
  v.immersible = lv.exists;
  v.mode = mode;
  for (const auto& o : lv.obstructions)
    v.obstructions.push_back(
        {o.generator, o.obstruction_degree, o.class_coords, o.exact, o.witness});
  return v;
}

std::string explain(const Verdict& v, const Ambient& carrier) {
  std::string out = "verdict: ";
  out += v.immersible ? "YES" : "NO";
  out += " (differential mode: " + mode_name(v.mode) + ")\n";
  if (v.obstructions.empty()) {
    out += "no obstructions arise: the model has no fiber generators in the "
           "consulted range.\n";
    return out;
  }
  out += "obstruction classes:\n";
  for (const auto& o : v.obstructions) {
    out += "  " + o.name + " (degree " + std::to_string(o.degree) +
           "): class = " + carrier.describe(o.degree, o.class_coords) + "\n";
    if (o.exact)
      out += "      exact; witness = " +
             carrier.describe(o.degree - 1, *o.witness) + "\n";
    else
      out += "      not exact; no witness exists\n";
  }
  if (!v.immersible) {
    out += "not immersible:";
    const char* sep = " ";
    for (const auto& o : v.obstructions)
      if (!o.exact) {
        out += sep;
        out += "the class of '" + o.name + "' survives in degree " +
               std::to_string(o.degree);
        sep = "; ";
      }
    out += "\n";
  }
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["format_version"] = 1;
  j["immersible"] = v.immersible;
  j["mode"] = mode_name(v.mode);
  Json obs = Json::array();
  for (const auto& o : v.obstructions) {
    Json e;
    e["name"] = o.name;
    e["degree"] = o.degree;
    e["class"] = qvec_to_json(o.class_coords);
    e["exact"] = o.exact;
    e["witness"] = o.witness ? qvec_to_json(*o.witness) : Json(nullptr);
    obs.push_back(std::move(e));
  }
  j["obstructions"] = std::move(obs);
  return j;
}

}  // namespace immdec
