#pragma once

// Pass/fail bookkeeping for identity checks. A report keeps the first
// mismatch it sees as a witness.

#include <string>
#include <vector>

#include "json.hpp"

#include "hurwitz/series.hpp"

namespace hurwitz {

using json = nlohmann::ordered_json;

struct CheckReport {
  std::string identity;
  std::string anchor;
  json params;
  bool passed = true;
  json witness;  // null when passed
  std::size_t comparisons = 0;

  json to_json() const;
  std::string to_jsonl() const { return to_json().dump(); }
};

class Check {
 public:
  Check(std::string identity, std::string anchor, json params = json::object());

  bool equal(const Scalar& expected, const Scalar& got, const json& where);
  bool equal(const SymFun& expected, const SymFun& got, const json& where);
  bool equal(const GradedSeries& expected, const GradedSeries& got, const json& where,
             int from_degree = 0, int to_degree = -1);
  bool zero(const GradedSeries& residual, const json& where, int from_degree = 0,
            int to_degree = -1);
  bool that(bool ok, const json& where, const std::string& detail = {});
  // Records an exception as a failure.
  void error(const std::exception& e, const json& where);

  bool passed() const { return report_.passed; }
  const CheckReport& report() const { return report_; }

 private:
  void fail(json witness);
  CheckReport report_;
};

json partition_json(const Partition& p);
json symfun_json(const SymFun& f);

}  // namespace hurwitz
