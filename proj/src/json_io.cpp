#include "lucas/json_io.hpp"

#include "lucas/errors.hpp"

namespace lucas {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(r.to_string());
  return arr;
}

Json to_json(const RecurrenceRelation& rel) {
  Json doc;
  doc["p"] = to_json(rel.p);
  doc["q"] = to_json(rel.q);
  doc["order"] = rel.order();
  doc["coeffs"] = to_json(rel.coeffs);
  return doc;
}

Json to_json(const ProofCertificate& cert) {
  Json doc;
  doc["status"] = "proved";
  doc["identity"] = cert.identity;
  doc["degrees"] = cert.degrees;
  doc["annihilator"] = to_json(cert.annihilator);
  doc["order"] = cert.order;
  doc["n0"] = cert.n0;
  doc["scope"] = cert.scope();
  doc["all_integers"] = cert.all_integers;
  Json checked = Json::array();
  for (const auto& v : cert.checked) {
    Json item;
    item["n"] = v.n;
    item["left"] = to_json(v.left);
    item["right"] = to_json(v.right);
    checked.push_back(std::move(item));
  }
  doc["checked"] = std::move(checked);
  return doc;
}

Json to_json(const Counterexample& cex) {
  Json doc;
  doc["status"] = "disproved";
  doc["identity"] = cex.identity;
  doc["n"] = cex.n;
  doc["left"] = to_json(cex.left);
  doc["right"] = to_json(cex.right);
  return doc;
}

namespace {

std::vector<Rational> rationals(const Json& arr) {
  std::vector<Rational> out;
  for (const auto& x : arr) out.push_back(Rational::parse(x.get<std::string>()));
  return out;
}

}  // namespace

ProofCertificate certificate_from_json(const Json& doc) {
  try {
    ProofCertificate cert;
    cert.identity = doc.at("identity").get<std::string>();
    cert.degrees = doc.at("degrees").get<std::vector<std::int64_t>>();
    const Json& rel = doc.at("annihilator");
    cert.annihilator.p = Rational::parse(rel.at("p").get<std::string>());
    cert.annihilator.q = Rational::parse(rel.at("q").get<std::string>());
    cert.annihilator.coeffs = rationals(rel.at("coeffs"));
    cert.order = doc.at("order").get<std::size_t>();
    cert.n0 = doc.at("n0").get<std::int64_t>();
    cert.all_integers = doc.at("all_integers").get<bool>();
    for (const auto& item : doc.at("checked"))
      cert.checked.push_back({item.at("n").get<std::int64_t>(),
                              Rational::parse(item.at("left").get<std::string>()),
                              Rational::parse(item.at("right").get<std::string>())});
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace lucas
