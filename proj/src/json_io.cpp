#include "qcg/json_io.hpp"

namespace qcg {

Json qpolynomial_to_json(const QPolynomial& p) {
  Json j = Json::object();
  if (p.is_zero()) {
    j["0"] = "0";
    return j;
  }
  for (const auto& [d, c] : p.entries()) j[std::to_string(d)] = rational_string(c);
  return j;
}

QPolynomial qpolynomial_from_json(const Json& j) {
  QPolynomial p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int d = std::stoi(it.key());
    std::string s = it.value().get<std::string>();
    p.add_term(Rational(s), d);
  }
  return p;
}

Json schubert_vector_to_json(const SchubertVector& v) {
  Json cls = Json::object();
  for (const auto& [p, c] : v.entries()) cls[p.key()] = qpolynomial_to_json(c);
  Json j = Json::object();
  j["class"] = std::move(cls);
  return j;
}

SchubertVector schubert_vector_from_json(const Json& j, const GrassSpec& spec) {
  SchubertVector v(spec);
  const Json& cls = j.at("class");
  for (auto it = cls.begin(); it != cls.end(); ++it)
    v.add(parse_partition(it.key()), qpolynomial_from_json(it.value()));
  return v;
}

QueryResult make_result(const std::string& command, const Json& query, const std::string& provenance,
                        Json payload) {
  QueryResult r;
  r.root = Json::object();
  r.root["schema"] = "qcg-result/1";
  Json q = Json::object();
  q["command"] = command;
  for (auto it = query.begin(); it != query.end(); ++it) q[it.key()] = it.value();
  r.root["query"] = std::move(q);
  r.root["provenance"] = provenance;
  r.root["payload"] = std::move(payload);
  return r;
}

} // namespace qcg
