#pragma once

// Machine-readable verification reports. Rationals are "p/q" strings so
// values survive serialization exactly; elapsed times are recorded only on
// request so that reports stay byte-identical across runs.

#include <chrono>
#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "brauerdef/linalg.hpp"
#include "brauerdef/scalar.hpp"

#ifndef BRAUERDEF_VERSION
#define BRAUERDEF_VERSION "0.0.0"
#endif

namespace brauerdef {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, skipped };

inline std::string statusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return {};
}

struct CheckOutcome {
  bool pass = false;
  Json expected;
  Json actual;
};

struct Check {
  std::string name;
  std::string claim;  // the statement being verified, in words
  CheckStatus status = CheckStatus::fail;
  Json expected;
  Json actual;
  long elapsedMilliseconds = 0;
};

/// Thrown by a check body when a resource bound is hit; the check is then
/// reported as skipped rather than failed.
class CheckSkipped : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationReport {
 public:
  VerificationReport(std::string command, Json parameters, bool timings = false)
      : command_(std::move(command)), parameters_(std::move(parameters)), timings_(timings) {}

  template <class F>
  const Check& run(std::string name, std::string claim, F&& body) {
    Check c{std::move(name), std::move(claim), CheckStatus::fail, nullptr, nullptr, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      CheckOutcome o = body();
      c.status = o.pass ? CheckStatus::pass : CheckStatus::fail;
      c.expected = std::move(o.expected);
      c.actual = std::move(o.actual);
    } catch (const CheckSkipped& e) {
      c.status = CheckStatus::skipped;
      c.actual = std::string("skipped: ") + e.what();
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    if (timings_)
      c.elapsedMilliseconds = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                    std::chrono::steady_clock::now() - start)
                                                    .count());
    checks_.push_back(std::move(c));
    return checks_.back();
  }

  void attach(const std::string& key, Json value) { extra_[key] = std::move(value); }
  void merge(const VerificationReport& other, const std::string& prefix) {
    for (auto c : other.checks_) {
      c.name = prefix + c.name;
      checks_.push_back(std::move(c));
    }
  }

  const std::vector<Check>& checks() const { return checks_; }
  const std::string& command() const { return command_; }
  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.status == s;
    return n;
  }
  bool failed() const { return count(CheckStatus::fail) > 0; }

  Json toJson() const {
    Json j;
    j["command"] = command_;
    j["toolVersion"] = BRAUERDEF_VERSION;
    j["parameters"] = parameters_;
    j["summary"] = {{"pass", count(CheckStatus::pass)},
                    {"fail", count(CheckStatus::fail)},
                    {"skipped", count(CheckStatus::skipped)}};
    j["checks"] = Json::array();
    for (const auto& c : checks_)
      j["checks"].push_back({{"name", c.name},
                             {"claim", c.claim},
                             {"status", statusName(c.status)},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"elapsedMilliseconds", c.elapsedMilliseconds}});
    for (auto it = extra_.begin(); it != extra_.end(); ++it) j[it.key()] = it.value();
    return j;
  }
  std::string dump() const { return toJson().dump(2) + "\n"; }

 private:
  std::string command_;
  Json parameters_;
  bool timings_ = false;
  std::vector<Check> checks_;
  Json extra_ = Json::object();
};

inline Json toJson(const Rational& r) { return toString(r); }

inline Json toJson(const DenseVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(toString(x));
  return j;
}

inline Json toJson(const RatMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toString(m.at(i, c)));
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace brauerdef
