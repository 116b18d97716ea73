#include "ybs/report.hpp"

#include <sstream>

namespace ybs {

void Report::fail(Mismatch m) {
  ++failures;
  if (mismatches.size() < kMaxStored) mismatches.push_back(std::move(m));
}

void Report::expect(bool ok, const std::string& relation, const std::string& row,
                    const std::string& col, const std::string& lhs, const std::string& rhs) {
  ++checks;
  if (!ok) fail({relation, row, col, lhs, rhs});
}

void Report::absorb(const Report& sub) {
  checks += sub.checks;
  failures += sub.failures;
  for (const auto& m : sub.mismatches) {
    if (mismatches.size() >= kMaxStored) break;
    mismatches.push_back(m);
  }
  notes.insert(notes.end(), sub.notes.begin(), sub.notes.end());
}

std::string Report::summary() const {
  std::ostringstream os;
  os << suite << " [" << model << ", N=" << N << "]: " << (passed() ? "pass" : "FAIL") << " ("
     << checks << " checks, " << failures << " failures)";
  return os.str();
}

}  // namespace ybs
