#pragma once

#include <string>
#include <vector>

namespace graphmonads {

// Outcome of a pointwise law check. When it fails, `witness` names the
// first counterexample in canonical order, so failures stay diagnosable.
struct CheckResult {
  bool ok = true;
  std::string witness;

  explicit operator bool() const { return ok; }

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

// One named diagram per entry, e.g. the two unit triangles and the
// associativity square of a monad.
struct LawReport {
  struct Entry {
    std::string law;
    CheckResult result;
  };

  std::vector<Entry> entries;

  bool all_ok() const {
    for (const auto& e : entries) {
      if (!e.result.ok) return false;
    }
    return true;
  }

  std::string summary() const {
    std::string out;
    for (const auto& e : entries) {
      out += e.result.ok ? "ok   " : "FAIL ";
      out += e.law;
      if (!e.result.ok) {
        out += "  [" + e.result.witness + "]";
      }
      out += '\n';
    }
    return out;
  }
};

}  // namespace graphmonads
