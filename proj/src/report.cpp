#include "ydforge/report.hpp"

#include <algorithm>

#include "json.hpp"
#include "ydforge/errors.hpp"

namespace ydforge {

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerificationReport::passed(const std::string& name) const {
  const Check* c = find(name);
  if (!c) throw Error("no check named " + name);
  return c->passed;
}

std::string render_tuple(const std::vector<std::size_t>& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(tuple[i]);
  }
  s += ")";
  return s;
}

namespace {

std::vector<const Check*> sorted_checks(const std::vector<Check>& checks) {
  std::vector<const Check*> v;
  v.reserve(checks.size());
  for (const auto& c : checks) v.push_back(&c);
  std::stable_sort(v.begin(), v.end(), [](const Check* a, const Check* b) {
    if (a->name != b->name) return a->name < b->name;
    const auto& ta = a->witness ? a->witness->tuple : std::vector<std::size_t>{};
    const auto& tb = b->witness ? b->witness->tuple : std::vector<std::size_t>{};
    return ta < tb;
  });
  return v;
}

}  // namespace

std::string VerificationReport::to_json_string(int indent) const {
  nlohmann::ordered_json j;
  j["subject"] = subject_;
  j["all_passed"] = all_passed();
  auto arr = nlohmann::ordered_json::array();
  for (const Check* c : sorted_checks(checks_)) {
    nlohmann::ordered_json e;
    e["name"] = c->name;
    e["passed"] = c->passed;
    if (c->witness) {
      nlohmann::ordered_json w;
      w["tuple"] = c->witness->tuple;
      if (!c->witness->tuple_labels.empty()) w["labels"] = c->witness->tuple_labels;
      auto d = nlohmann::ordered_json::array();
      for (const auto& [idx, s] : c->witness->diff) d.push_back({idx, s.str()});
      w["diff"] = d;
      e["witness"] = w;
    }
    if (c->verified_up_to_degree) e["verified_up_to_degree"] = *c->verified_up_to_degree;
    if (c->skipped_tuples) e["skipped_tuples"] = c->skipped_tuples;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j.dump(indent) + "\n";
}

std::string VerificationReport::to_markdown() const {
  std::string out;
  out += "# verification";
  if (!subject_.empty()) out += ": " + subject_;
  out += "\n\n";
  for (const Check* c : sorted_checks(checks_)) {
    out += "- " + c->name + ": " + (c->passed ? "pass" : "FAIL");
    if (c->verified_up_to_degree)
      out += " (verified up to degree " + std::to_string(*c->verified_up_to_degree) + ")";
    if (c->skipped_tuples)
      out += " [skipped " + std::to_string(c->skipped_tuples) + " tuples beyond cap]";
    out += "\n";
    if (c->witness) {
      out += "    at tuple " + render_tuple(c->witness->tuple);
      if (!c->witness->tuple_labels.empty()) {
        out += " [";
        for (std::size_t i = 0; i < c->witness->tuple_labels.size(); ++i) {
          if (i) out += ",";
          out += c->witness->tuple_labels[i];
        }
        out += "]";
      }
      out += "\n    difference:";
      for (const auto& [idx, s] : c->witness->diff)
        out += " [" + std::to_string(idx) + "]=" + s.str();
      out += "\n";
    }
  }
  out += "\n" + std::string(all_passed() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") + "\n";
  return out;
}

}  // namespace ydforge
