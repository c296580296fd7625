#include "schemelab/export.hpp"

#include <sstream>

#include <json.hpp>

#include "schemelab/error.hpp"

namespace schemelab {

using nlohmann::json;

namespace {

json set_json(const FinSet& F) { return json(std::vector<Ordinal>(F.begin(), F.end())); }

json type_json(const TypeSequence& t) {
  json out = json::array();
  for (const Triple& x : t.triples()) out.push_back({x.m, x.n, x.r});
  return out;
}

json condition_value(const Condition& c) {
  if (const auto* m = std::get_if<SepCondition>(&c)) {
    json out = json::object();
    for (const auto& [a, v] : *m) out[std::to_string(a)] = v;
    return out;
  }
  return set_json(std::get<FinSet>(c));
}

}  // namespace

std::string type_to_json(const TypeSequence& t) { return type_json(t).dump(); }

std::vector<Triple> type_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (doc.is_object()) {
    if (!doc.contains("type")) throw Error(Errc::ParseError, "JSON object has no \"type\" field");
    doc = doc["type"];
  }
  if (!doc.is_array()) throw Error(Errc::ParseError, "type must be a list of [m, n, r] triples");
  std::vector<Triple> out;
  for (const json& row : doc) {
    if (!row.is_array() || row.size() != 3) throw Error(Errc::ParseError, "each triple needs exactly three entries");
    for (const json& x : row) {
      if (!x.is_number_unsigned()) throw Error(Errc::ParseError, "triple entries must be naturals");
    }
    out.push_back({row[0].get<Natural>(), row[1].get<Natural>(), row[2].get<Natural>()});
  }
  return out;
}

std::vector<Triple> parse_type_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) return type_from_json(text);
  return parse_triples(text);
}

std::string scheme_to_json(const Scheme& s, int indent) {
  json levels = json::array();
  for (const auto& lvl : s.levels()) {
    json members = json::array();
    for (const FinSet& F : lvl) members.push_back(set_json(F));
    levels.push_back(std::move(members));
  }
  json doc;
  doc["type"] = type_json(s.type());
  doc["levels"] = std::move(levels);
  return doc.dump(indent);
}

std::string xi_csv(const Scheme& s) {
  std::ostringstream out;
  out << "alpha,k,value\n";
  for (Ordinal a = 0; a < s.domain_size(); ++a) {
    for (Level k = 0; k <= s.K(); ++k) out << a << ',' << k << ',' << s.xi(a, k) << '\n';
  }
  return out.str();
}

std::string norm_csv(const Scheme& s) {
  std::ostringstream out;
  out << "alpha,k,value\n";
  for (Ordinal a = 0; a < s.domain_size(); ++a) {
    for (Level k = 0; k <= s.K(); ++k) out << a << ',' << k << ',' << s.norm(a, k) << '\n';
  }
  return out.str();
}

std::string rho_csv(const Scheme& s) {
  std::ostringstream out;
  out << "alpha,beta,value\n";
  for (Ordinal a = 0; a < s.domain_size(); ++a) {
    for (Ordinal b = 0; b < s.domain_size(); ++b) out << a << ',' << b << ',' << s.rho(a, b) << '\n';
  }
  return out.str();
}

std::string gap_csv(const Pregap& g) {
  std::ostringstream out;
  out << "alpha,L,R\n";
  for (std::size_t i = 0; i < g.size(); ++i) out << g.index(i) << ',' << g.left[i].str() << ',' << g.right[i].str() << '\n';
  return out.str();
}

namespace {

json certificate_value(const CaptureCertificate& c) {
  json members = json::array();
  for (const FinSet& D : c.members) members.push_back(set_json(D));
  return {{"level", c.level}, {"members", std::move(members)}, {"root", set_json(c.root)}};
}

}  // namespace

std::string certificate_json(const CaptureCertificate& c) { return certificate_value(c).dump(); }

std::string certificates_json(const std::vector<CaptureCertificate>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(certificate_value(c));
  return out.dump();
}

std::string condition_json(const Condition& c) { return condition_value(c).dump(); }

std::string conditions_json(const std::vector<Condition>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(condition_value(c));
  return out.dump();
}

std::string separating_json(const Pregap& g, const SeparatingFunction& s) {
  json out = json::object();
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[std::to_string(g.index(i))] = {{"L", s.left.at(i)}, {"R", s.right.at(i)}};
  }
  return out.dump();
}

std::string violations_json(const std::vector<GapViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"check", v.check}, {"alpha", v.alpha}, {"beta", v.beta}, {"detail", v.detail}});
  return out.dump();
}

std::string violations_json(const std::vector<AxiomViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"axiom", v.axiom}, {"level", v.level}, {"detail", v.detail}});
  return out.dump();
}

}  // namespace schemelab
