#include "solvcoh/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace solvcoh {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) {
  throw ModelError(ValidationErrorKind::ParseError, msg);
}

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) parse_fail("bad integer string");
    return z;
  }
  parse_fail("expected an integer");
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<int> indices_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("index list must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) parse_fail("index must be an integer");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json rational_to_json(const Rational& r) {
  return Json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())});
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      parse_fail(e.what());
    }
  }
  if (!j.is_array() || j.size() != 2) parse_fail("rational must be [num, den]");
  const mpz_class den = integer_from_json(j[1]);
  if (den == 0) parse_fail("zero denominator");
  Rational r(integer_from_json(j[0]), den);
  r.canonicalize();
  return r;
}

Json scalar_to_json(const Scalar& s) {
  return Json::array({integer_to_json(s.re().get_num()), integer_to_json(s.re().get_den()),
                      integer_to_json(s.im().get_num()), integer_to_json(s.im().get_den())});
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return Scalar(rational_from_json(j));
  if (!j.is_array() || (j.size() != 2 && j.size() != 4)) {
    parse_fail("coefficient must be [re_num, re_den, im_num, im_den]");
  }
  const Rational re = rational_from_json(Json::array({j[0], j[1]}));
  if (j.size() == 2) return Scalar(re);
  return Scalar(re, rational_from_json(Json::array({j[2], j[3]})));
}

Json character_to_json(const Character& chi, const std::vector<std::string>& labels) {
  Json out = Json::object();
  for (std::size_t k = 0; k < chi.exponents().size(); ++k) {
    if (chi.exponent(k) != 0) out[labels.at(k)] = chi.exponent(k);
  }
  return out;
}

Character character_from_json(const Json& j, const std::vector<std::string>& labels) {
  if (!j.is_object()) parse_fail("character must be an object {label: exponent}");
  std::vector<int> exps(labels.size(), 0);
  for (const auto& [label, e] : j.items()) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) parse_fail("unknown character '" + label + "'");
    if (!e.is_number_integer()) parse_fail("character exponent must be an integer");
    exps[it - labels.begin()] += e.get<int>();
  }
  return Character(std::move(exps));
}

Json element_to_json(const Element& e, const std::vector<std::string>& char_labels) {
  Json out = Json::array();
  for (const auto& [key, c] : e.terms()) {
    Json t = Json::object();
    t["coeff"] = scalar_to_json(c);
    t["character"] = character_to_json(key.chi, char_labels);
    t["holo"] = key.mono.holo_indices();
    t["anti"] = key.mono.anti_indices();
    out.push_back(std::move(t));
  }
  return out;
}

Element element_from_json(const Json& j, int n, const std::vector<std::string>& char_labels) {
  if (!j.is_array()) parse_fail("form must be a list of terms");
  Element out(n);
  for (const auto& t : j) {
    const Scalar c = scalar_from_json(field(t, "coeff"));
    const Character chi = t.contains("character") ? character_from_json(t.at("character"), char_labels)
                                                  : Character{};
    const std::vector<int> holo = t.contains("holo") ? indices_from_json(t.at("holo")) : std::vector<int>{};
    const std::vector<int> anti = t.contains("anti") ? indices_from_json(t.at("anti")) : std::vector<int>{};
    for (int i : holo) {
      if (i < 1 || i > n) parse_fail("holomorphic index out of range");
    }
    for (int i : anti) {
      if (i < 1 || i > n) parse_fail("antiholomorphic index out of range");
    }
    FormMonomial m;
    try {
      m = FormMonomial::from_indices(holo, anti);
    } catch (const std::exception& e) {
      parse_fail(e.what());
    }
    out.add_term(chi, m, c);
  }
  return out;
}

Json model_to_json(const ModelData& m) {
  std::vector<std::string> labels;
  for (const auto& c : m.characters) labels.push_back(c.label);
  Json out = Json::object();
  out["schema"] = kSchemaVersion;
  out["name"] = m.name;
  out["n"] = m.n;
  out["coframe"] = m.coframe;
  Json chars = Json::array();
  for (const auto& c : m.characters) {
    Json cj = Json::object();
    cj["label"] = c.label;
    cj["weight"] = rational_to_json(c.weight);
    cj["dlog"] = element_to_json(c.dlog, labels);
    chars.push_back(std::move(cj));
  }
  out["characters"] = std::move(chars);
  Json structure = Json::array();
  for (int j = 0; j < m.n; ++j) {
    Json sj = Json::object();
    sj["target"] = m.coframe[j];
    sj["terms"] = element_to_json(m.structure[j], labels);
    structure.push_back(std::move(sj));
  }
  out["structure"] = std::move(structure);
  Json metric = Json::array();
  for (const auto& g : m.metric) metric.push_back(rational_to_json(g));
  out["metric"] = std::move(metric);
  Json cs = Json::array();
  for (const auto& chi : m.character_set) cs.push_back(character_to_json(chi, labels));
  out["character_set"] = std::move(cs);
  Json meta = Json::object();
  for (const auto& [k, v] : m.meta) meta[k] = v;
  out["meta"] = std::move(meta);
  return out;
}

ModelData model_data_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("model must be a JSON object");
  if (j.contains("model") && j.at("model").is_object()) return model_data_from_json(j.at("model"));
  if (j.contains("schema") && (!j.at("schema").is_number_integer() || j.at("schema").get<int>() != kSchemaVersion)) {
    parse_fail("unsupported schema version");
  }
  ModelData m;
  try {
    m.name = j.value("name", std::string("unnamed"));
    m.n = field(j, "n").get<int>();
    m.coframe = field(j, "coframe").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
  if (m.n < 1 || m.n > kMaxCoframe) parse_fail("n out of range");
  std::vector<std::string> labels;
  if (j.contains("characters")) {
    for (const auto& cj : j.at("characters")) {
      if (!field(cj, "label").is_string()) parse_fail("character label must be a string");
      labels.push_back(cj.at("label").get<std::string>());
    }
    for (const auto& cj : j.at("characters")) {
      BasisCharacter c;
      c.label = cj.at("label").get<std::string>();
      c.weight = cj.contains("weight") ? rational_from_json(cj.at("weight")) : Rational(0);
      c.dlog = element_from_json(field(cj, "dlog"), m.n, labels);
      m.characters.push_back(std::move(c));
    }
  }
  m.structure.assign(m.n, Element(m.n));
  std::vector<bool> seen(m.n, false);
  for (const auto& sj : field(j, "structure")) {
    const Json& tj = field(sj, "target");
    int idx = -1;
    if (tj.is_number_integer()) {
      idx = tj.get<int>() - 1;
    } else if (tj.is_string()) {
      auto it = std::find(m.coframe.begin(), m.coframe.end(), tj.get<std::string>());
      if (it != m.coframe.end()) idx = static_cast<int>(it - m.coframe.begin());
    }
    if (idx < 0 || idx >= m.n) parse_fail("unknown structure target");
    if (seen[idx]) parse_fail("duplicate structure equation for " + m.coframe[idx]);
    seen[idx] = true;
    m.structure[idx] = element_from_json(field(sj, "terms"), m.n, labels);
  }
  if (j.contains("metric")) {
    for (const auto& g : j.at("metric")) m.metric.push_back(rational_from_json(g));
  }
  if (j.contains("character_set")) {
    for (const auto& cj : j.at("character_set")) m.character_set.push_back(character_from_json(cj, labels));
  }
  if (j.contains("meta")) {
    for (const auto& [k, v] : j.at("meta").items()) m.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return m;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
}

ManifoldModel load_model(std::string_view text) {
  return ManifoldModel::create(model_data_from_json(parse_json(text)));
}

ManifoldModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

std::string dump_model(const ModelData& m) { return model_to_json(m).dump(2); }

}  // namespace solvcoh
