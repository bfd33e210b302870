#include "tic/hyperreal_json.hpp"

#include "tic/error.hpp"

namespace tic {

namespace {

std::string as_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::InvalidArgument, "expected a number string, got " + j.dump());
}

}  // namespace

Json to_json(const HyperReal& h) {
  Json terms = Json::array();
  for (const auto& t : h.terms()) terms.push_back(Json::array({t.exponent.str(), t.coefficient.str()}));
  Json out;
  out["terms"] = std::move(terms);
  out["order"] = h.order();
  return out;
}

HyperReal hyperreal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) {
    throw Error(ErrorKind::InvalidArgument, "hyperreal JSON needs a \"terms\" array");
  }
  const int order = j.contains("order") ? j.at("order").get<int>() : kDefaultOrder;
  std::vector<Term> terms;
  for (const auto& pair : j.at("terms")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorKind::InvalidArgument, "each term must be [exponent, coefficient]");
    }
    terms.push_back({Rational::parse(as_text(pair[0])), Scalar::parse(as_text(pair[1]))});
  }
  return HyperReal::from_terms(std::move(terms), order);
}

}  // namespace tic
