#include "bwm/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace bwm {

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
    return std::tie(a.n, a.identity, a.variant, a.backend) < std::tie(b.n, b.identity, b.variant, b.backend);
  });
}

std::size_t Report::count(const std::string& v) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.verdict == v; }));
}

bool Report::failed() const { return count(verdict::kNotReduced) + count(verdict::kError) > 0; }

bool Report::inconclusive() const { return count(verdict::kBudget) + count(verdict::kSingular) > 0; }

std::string Report::status() const {
  if (failed()) return "fail";
  if (inconclusive()) return "inconclusive";
  return "pass";
}

int Report::exit_code() const {
  if (failed()) return 1;
  if (inconclusive()) return 2;
  return 0;
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

Json Report::to_json() const {
  Json j;
  j["suite"] = suite;
  j["backend"] = backend;
  j["evidence"] = certifying ? "proof" : "evidence (modular specialization, not a proof)";
  Json arr = Json::array();
  for (const Check& c : checks) {
    Json x;
    x["identity"] = c.identity;
    x["n"] = c.n;
    x["variant"] = c.variant.empty() ? Json(nullptr) : Json(c.variant);
    x["verdict"] = c.verdict;
    x["wall_time_ms"] = c.wall_time_ms ? Json(*c.wall_time_ms) : Json(nullptr);
    x["backend"] = c.backend;
    arr.push_back(std::move(x));
  }
  j["checks"] = std::move(arr);
  Json s;
  s["total"] = checks.size();
  s["equal"] = count(verdict::kEqual);
  s["not_reduced_to_zero"] = count(verdict::kNotReduced);
  s["budget_exhausted"] = count(verdict::kBudget);
  s["parameter_singular"] = count(verdict::kSingular);
  s["error"] = count(verdict::kError);
  j["summary"] = std::move(s);
  j["status"] = status();
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\nbackend: " << backend << (certifying ? "" : "  [evidence only]") << "\n";
  for (const Check& c : checks) {
    out << (c.verdict == verdict::kEqual ? "  ok    " : "  FAIL  ") << "n=" << c.n << "  " << c.identity;
    if (!c.variant.empty()) out << "  [" << c.variant << "]";
    if (c.verdict != verdict::kEqual) out << "  " << c.verdict;
    if (c.wall_time_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  %.1f ms", *c.wall_time_ms);
      out << buf;
    }
    out << "\n";
    if (!c.detail.empty()) out << "        " << c.detail << "\n";
  }
  out << "total: " << checks.size() << "  equal: " << count(verdict::kEqual) << "  status: " << status() << "\n";
  return out.str();
}

}  // namespace bwm
