#ifndef QCG_JSON_IO_HPP
#define QCG_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "qcg/schubert.hpp"

namespace qcg {

using Json = nlohmann::ordered_json;

// {"q_power": "rational"}, ascending q powers; "0" for the zero polynomial.
Json qpolynomial_to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const Json& j);

// {"class": {"[2,2]": {"0": "1"}, "[]": {"1": "1"}}} with partitions in the
// canonical (size, lex-descending) order.
Json schubert_vector_to_json(const SchubertVector& v);
SchubertVector schubert_vector_from_json(const Json& j, const GrassSpec& spec);

// One CLI query result; serialization round-trips exactly.
struct QueryResult {
  Json root;

  std::string serialize() const { return root.dump(2) + "\n"; }
  static QueryResult parse(const std::string& text) { return {Json::parse(text)}; }
  bool operator==(const QueryResult& o) const { return root == o.root; }
};

QueryResult make_result(const std::string& command, const Json& query, const std::string& provenance,
                        Json payload);

} // namespace qcg

#endif
