#pragma once
#include <string>
#include <vector>

namespace hpga::repro {

// One comparison row: computed vs expected at a tolerance, with the
// provenance of the expected value: "figure" for numbers read off
// the reproduced construction, "derived" for independently computed
// cross-checks, "exact" for identities.
struct Row {
  std::string quantity;
  double computed;
  double expected;
  double tol;
  const char* provenance;
  bool pass() const;
};

struct Case {
  std::string id;
  std::string title;
  std::vector<Row> rows;
  bool pass() const;
};

const std::vector<std::string>& case_ids();
Case run_case(const std::string& id);  // throws errc::unknown_case

}  // namespace hpga::repro
