#include "hurwitz/report.hpp"

namespace hurwitz {

json CheckReport::to_json() const {
  json j;
  j["identity"] = identity;
  j["anchor"] = anchor;
  j["params"] = params;
  j["status"] = passed ? "pass" : "fail";
  j["witness"] = witness;
  return j;
}

Check::Check(std::string identity, std::string anchor, json params) {
  report_.identity = std::move(identity);
  report_.anchor = std::move(anchor);
  report_.params = std::move(params);
}

void Check::fail(json witness) {
  if (report_.passed) report_.witness = std::move(witness);
  report_.passed = false;
}

bool Check::equal(const Scalar& expected, const Scalar& got, const json& where) {
  ++report_.comparisons;
  if (expected == got) return true;
  fail({{"where", where}, {"expected", expected.to_string()}, {"got", got.to_string()}});
  return false;
}

bool Check::equal(const SymFun& expected, const SymFun& got, const json& where) {
  ++report_.comparisons;
  if (expected == got) return true;
  SymFun diff = got - expected;
  const auto& [mu, c] = *diff.coeffs().begin();
  json w = where;
  w["monomial"] = partition_json(mu);
  fail({{"where", w}, {"expected", expected.coeff(mu).to_string()}, {"got", got.coeff(mu).to_string()}});
  return false;
}

bool Check::equal(const GradedSeries& expected, const GradedSeries& got, const json& where,
                  int from_degree, int to_degree) {
  if (to_degree < 0) to_degree = std::min(expected.max_degree(), got.max_degree());
  bool ok = true;
  for (int n = from_degree; n <= to_degree; ++n) {
    json w = where;
    w["degree"] = n;
    ok = equal(expected.coeff(n), got.coeff(n), w) && ok;
  }
  return ok;
}

bool Check::zero(const GradedSeries& residual, const json& where, int from_degree, int to_degree) {
  return equal(GradedSeries(residual.max_degree()), residual, where, from_degree, to_degree);
}

bool Check::that(bool ok, const json& where, const std::string& detail) {
  ++report_.comparisons;
  if (!ok) {
    json w = {{"where", where}};
    if (!detail.empty()) w["detail"] = detail;
    fail(std::move(w));
  }
  return ok;
}

void Check::error(const std::exception& e, const json& where) {
  ++report_.comparisons;
  json w = {{"where", where}, {"error", e.what()}};
  if (auto* he = dynamic_cast<const Error*>(&e)) w["code"] = error_code_name(he->code());
  fail(std::move(w));
}

json partition_json(const Partition& p) { return p.parts(); }

json symfun_json(const SymFun& f) {
  json arr = json::array();
  for (const auto& [mu, c] : f.coeffs())
    arr.push_back({{"partition", partition_json(mu)}, {"coefficient", c.to_string()}});
  return arr;
}

}  // namespace hurwitz
