#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ydforge/svec.hpp"

namespace ydforge {

// First failing basis tuple of a check, with the nonzero difference
// (lhs minus rhs) at that tuple.
struct Witness {
  std::vector<std::size_t> tuple;
  SVec diff;
  std::vector<std::string> tuple_labels;  // basis labels for the tuple, for rendering
};

struct Check {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
  // Set when a degree cap restricted the sweep to the tuples whose products
  // stay defined; the check then only claims verification up to that degree.
  std::optional<int> verified_up_to_degree;
  std::size_t skipped_tuples = 0;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string subject = "") : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  void set_subject(const std::string& s) { subject_ = s; }

  void add(Check c) { checks_.push_back(std::move(c)); }
  void add_pass(const std::string& name) { checks_.push_back({name, true, std::nullopt, std::nullopt, 0}); }
  void add_fail(const std::string& name, Witness w) {
    checks_.push_back({name, false, std::move(w), std::nullopt, 0});
  }
  void merge(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  bool all_passed() const;
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;  // throws if the check is absent

  // Renderings sort entries by check name, then witness tuple.
  std::string to_json_string(int indent = 2) const;
  std::string to_markdown() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

std::string render_tuple(const std::vector<std::size_t>& tuple);

}  // namespace ydforge
