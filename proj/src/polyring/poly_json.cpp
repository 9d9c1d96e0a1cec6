#include "cfgpoly/poly_json.hpp"

#include <stdexcept>

namespace cfgpoly {

nlohmann::ordered_json to_json(const Polynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.entries()) mono[to_string(v)] = e;
    nlohmann::ordered_json term;
    term["coeff"] = c.get_str();
    term["mono"] = std::move(mono);
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json out;
  out["terms"] = std::move(terms);
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
  Polynomial p;
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("mono"))
      throw std::invalid_argument("each term needs \"coeff\" and \"mono\"");
    const auto& coeff = term.at("coeff");
    if (!coeff.is_string()) throw std::invalid_argument("\"coeff\" must be a decimal string");
    Integer c;
    if (c.set_str(coeff.get<std::string>(), 10) != 0)
      throw std::invalid_argument("malformed coefficient " + coeff.get<std::string>());
    std::vector<Monomial::Entry> entries;
    for (const auto& [name, exp] : term.at("mono").items()) {
      if (!exp.is_number_unsigned()) throw std::invalid_argument("exponent of " + name + " must be a positive integer");
      auto e = exp.get<std::uint32_t>();
      if (e == 0) throw std::invalid_argument("zero exponent for " + name);
      entries.emplace_back(parse_variable(name), e);
    }
    p.add_term(Monomial::from_entries(std::move(entries)), c);
  }
  return p;
}

std::string serialize(const Polynomial& p) { return to_json(p).dump(); }

Polynomial parse_polynomial(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("polynomial JSON does not parse: ") + e.what());
  }
  return polynomial_from_json(j);
}

}  // namespace cfgpoly
