#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgk {

/// Violated precondition of an operation (bad input data, non-parallel
/// quotient pairs, malformed relabelings, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration was refused because it would exceed its budget.
/// `required` is the budget that would have been needed.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, unsigned long long required_budget)
      : std::runtime_error(what), required(required_budget) {}
  unsigned long long required;
};

struct ValidationIssue {
  enum class Kind { structural, axiom };
  Kind kind = Kind::axiom;
  std::string code;    // short machine-readable tag
  std::string detail;  // offending ids / instance description

  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

/// Result of a validator: the empty report means "valid".  Issues are kept
/// in canonical (code, detail) order so parallel and serial runs agree.
struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }

  void add(ValidationIssue::Kind kind, std::string code, std::string detail) {
    issues.push_back({kind, std::move(code), std::move(detail)});
  }
  void add_structural(std::string code, std::string detail) {
    add(ValidationIssue::Kind::structural, std::move(code), std::move(detail));
  }
  void add_axiom(std::string code, std::string detail) {
    add(ValidationIssue::Kind::axiom, std::move(code), std::move(detail));
  }
  void merge(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }

  bool has_structural() const {
    return std::any_of(issues.begin(), issues.end(), [](const ValidationIssue& i) {
      return i.kind == ValidationIssue::Kind::structural;
    });
  }
  bool has_code(const std::string& code) const {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const ValidationIssue& i) { return i.code == code; });
  }

  void canonicalize() {
    std::sort(issues.begin(), issues.end(),
              [](const ValidationIssue& a, const ValidationIssue& b) {
                if (a.kind != b.kind) return a.kind < b.kind;
                if (a.code != b.code) return a.code < b.code;
                return a.detail < b.detail;
              });
    issues.erase(std::unique(issues.begin(), issues.end()), issues.end());
  }

  std::string summary() const {
    if (ok()) return "valid";
    std::string out;
    for (const auto& i : issues) {
      out += (i.kind == ValidationIssue::Kind::structural ? "[structural] " : "[axiom] ");
      out += i.code;
      if (!i.detail.empty()) {
        out += ": ";
        out += i.detail;
      }
      out += '\n';
    }
    return out;
  }
};

/// Parse failure for any of the JSON interchange formats.  Carries the
/// structural issues found so the CLI can report them machine-readably.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, ValidationReport report = {})
      : std::runtime_error(what), report(std::move(report)) {}
  ValidationReport report;
};

}  // namespace dgk
