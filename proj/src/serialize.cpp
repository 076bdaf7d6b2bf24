#include "immdec/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "immdec/errors.hpp"

namespace immdec {

int degree_from_json_key(const std::string& key, const std::string& what) {
  if (key.empty() || key.size() > 6 ||
      !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw input_error(what + ": '" + key + "' is not a degree");
  return std::stoi(key);
}

namespace {

std::string json_identifier(const Json& j, const std::string& what) {
  if (!j.is_string()) throw input_error(what + " must be a string");
  return j.get<std::string>();
}

}  // namespace

void require_keys(const Json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional,
                  const std::string& where) {
  if (!j.is_object()) throw input_error(where + " must be an object");
  for (const char* k : required)
    if (!j.contains(k))
      throw input_error(where + " is missing required key '" + std::string(k) + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto known = [&](const char* k) { return it.key() == k; };
    if (!std::any_of(required.begin(), required.end(), known) &&
        !std::any_of(optional.begin(), optional.end(), known))
      throw input_error(where + " has unknown key '" + it.key() + "'");
  }
}

QVec qvec_from_json(const Json& j, int expected_len, const std::string& what) {
  if (!j.is_array())
    throw input_error(what + " must be an array of rational strings");
  if (expected_len >= 0 && static_cast<int>(j.size()) != expected_len)
    throw input_error(what + " must have length " + std::to_string(expected_len) +
                      ", got " + std::to_string(j.size()));
  QVec v;
  v.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_string())
      throw input_error(what + ": every entry must be a rational string such as "
                        "\"3\" or \"-2/5\"");
    v.push_back(parse_rational(entry.get<std::string>()));
  }
  return v;
}

Json qvec_to_json(const QVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rational_to_string(x));
  return j;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + " must be an array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = 0;
  std::vector<QVec> parsed;
  for (int r = 0; r < rows; ++r) {
    QVec row = qvec_from_json(j[static_cast<std::size_t>(r)], -1,
                              what + " row " + std::to_string(r + 1));
    if (r == 0)
      cols = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != cols)
      throw input_error(what + " has rows of unequal length");
    parsed.push_back(std::move(row));
  }
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = parsed[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json j = Json::array();
  for (int r = 0; r < m.rows(); ++r) j.push_back(qvec_to_json(m.row(r)));
  return j;
}

Json element_to_json(const Element& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json mono = Json::object();
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] != 0)
        mono[e.gens()[static_cast<int>(i)].name] = m.exps[i];
    terms.push_back(Json::array({rational_to_string(c), std::move(mono)}));
  }
  return terms;
}

Element element_from_json(const GenSetPtr& gens, const Json& j,
                          const std::string& what) {
  if (!j.is_array()) throw input_error(what + " must be an array of terms");
  Element out(gens);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw input_error(what + ": every term must be a pair "
                        "[coefficient, {generator: exponent}]");
    if (!term[0].is_string())
      throw input_error(what + ": term coefficients must be rational strings");
    const Rational c = parse_rational(term[0].get<std::string>());
    if (!term[1].is_object())
      throw input_error(what + ": the monomial part of a term must be an object");
    Monomial m;
    m.exps.assign(static_cast<std::size_t>(gens->size()), 0);
    for (auto it = term[1].begin(); it != term[1].end(); ++it) {
      const int idx = gens->index_of(it.key());
      if (idx < 0)
        throw input_error(what + ": unknown generator '" + it.key() + "'");
      if (!it.value().is_number_unsigned() || it.value().get<std::uint64_t>() == 0 ||
          it.value().get<std::uint64_t>() > 1000000)
        throw input_error(what + ": exponent of '" + it.key() +
                          "' must be a positive integer");
      m.exps[static_cast<std::size_t>(idx)] =
          static_cast<std::uint32_t>(it.value().get<std::uint64_t>());
    }
    out += Element::from_monomial(gens, std::move(m), c);
  }
  return out;
}

Json free_cdga_to_json(const FreeCDGA& a) {
  Json j;
  Json gens = Json::array();
  for (int i = 0; i < a.generators().size(); ++i)
    gens.push_back(Json::array(
        {a.generators()[i].name, a.generators()[i].degree}));
  j["generators"] = std::move(gens);
  Json diff = Json::object();
  for (int i = 0; i < a.generators().size(); ++i)
    if (!a.diff_of_generator(i).is_zero())
      diff[a.generators()[i].name] = element_to_json(a.diff_of_generator(i));
  j["differential"] = std::move(diff);
  return j;
}

FreeCDGA free_cdga_from_json(const Json& j, const std::string& what) {
  require_keys(j, {"generators"}, {"differential"}, what);
  if (!j["generators"].is_array())
    throw input_error(what + ": 'generators' must be an array of [name, degree]");
  std::vector<Generator> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array() || g.size() != 2 || !g[0].is_string() ||
        !g[1].is_number_integer())
      throw input_error(what + ": every generator must be a [name, degree] pair");
    gens.push_back({g[0].get<std::string>(), g[1].get<int>()});
  }
  GenSetPtr gs = make_generator_set(std::move(gens));
  std::vector<Element> diffs(static_cast<std::size_t>(gs->size()),
                             Element::zero(gs));
  if (j.contains("differential")) {
    const Json& d = j["differential"];
    if (!d.is_object())
      throw input_error(what + ": 'differential' must be an object");
    for (auto it = d.begin(); it != d.end(); ++it) {
      const int idx = gs->index_of(it.key());
      if (idx < 0)
        throw input_error(what + ": differential given for unknown generator '" +
                          it.key() + "'");
      diffs[static_cast<std::size_t>(idx)] = element_from_json(
          gs, it.value(), what + ": differential of '" + it.key() + "'");
    }
  }
  return FreeCDGA(gs, std::move(diffs));
}

FinitePresentation::Data presentation_data_from_json(const Json& j,
                                                     const std::string& what) {
  require_keys(j, {"basis"}, {"products", "differential", "unit_name"}, what);
  FinitePresentation::Data data;
  if (!j["basis"].is_object())
    throw input_error(what + ": 'basis' must map degrees to name lists");
  for (auto it = j["basis"].begin(); it != j["basis"].end(); ++it) {
    const int deg = degree_from_json_key(it.key(), what + ": basis key");
    if (!it.value().is_array())
      throw input_error(what + ": basis of degree " + it.key() +
                        " must be an array of names");
    std::vector<std::string> names;
    for (const auto& n : it.value())
      names.push_back(json_identifier(n, what + ": basis name in degree " + it.key()));
    data.basis[deg] = std::move(names);
  }
  if (j.contains("unit_name"))
    data.unit_name = json_identifier(j["unit_name"], what + ": unit_name");
  if (j.contains("products")) {
    if (!j["products"].is_array())
      throw input_error(what + ": 'products' must be an array of "
                        "[left, right, value] triples");
    for (const auto& p : j["products"]) {
      if (!p.is_array() || p.size() != 3)
        throw input_error(what + ": every product entry must be a "
                          "[left, right, value] triple");
      FinitePresentation::ProductEntry e;
      e.left = json_identifier(p[0], what + ": product left factor");
      e.right = json_identifier(p[1], what + ": product right factor");
      e.value = qvec_from_json(p[2], -1, what + ": product of '" + e.left +
                                             "' and '" + e.right + "'");
      data.products.push_back(std::move(e));
    }
  }
  if (j.contains("differential")) {
    if (!j["differential"].is_object())
      throw input_error(what + ": 'differential' must map degrees to matrices");
    for (auto it = j["differential"].begin(); it != j["differential"].end(); ++it) {
      const int deg = degree_from_json_key(it.key(), what + ": differential key");
      data.differential[deg] = matrix_from_json(
          it.value(), what + ": differential in degree " + it.key());
    }
  }
  return data;
}

Json relative_model_to_json(const RelativeModel& r) {
  Json j = free_cdga_to_json(r.total());
  Json base = Json::array(), fiber = Json::array();
  for (int i = 0; i < r.base().generators().size(); ++i)
    base.push_back(r.base().generators()[i].name);
  for (int i = 0; i < r.fiber_count(); ++i)
    fiber.push_back(r.fiber_gen(i).name);
  j["base_generators"] = std::move(base);
  j["fiber_generators"] = std::move(fiber);
  return j;
}

}  // namespace immdec
