#pragma once

#include <string>
#include <vector>

#include "yhc/char_oracle.hpp"
#include "yhc/closed_forms.hpp"

namespace yhc {

struct VerifyOptions {
  OracleOptions oracle;
  std::size_t sample_labels = 6;
  std::uint64_t seed = 1;
  // Label-level worker threads; results are sorted afterwards.
  unsigned jobs = 1;
};

struct Mismatch {
  std::string label;
  std::string check;
  std::string closed;
  std::string oracle;
};

struct VerifyReport {
  TypeTag type = TypeTag::A;
  int d = 2;
  int n = 0;
  bool skipped = false;
  std::string skip_reason;
  std::size_t labels = 0;
  OrthogonalityReport orthogonality;
  // check name -> number of labels on which it was run
  std::vector<std::pair<std::string, std::size_t>> checks;
  std::vector<Mismatch> mismatches;
  // Type C: some label has a strictly imaginary or half-integral-exponent T_w0 value.
  bool nonsplit_witness = false;

  bool pass() const { return !skipped && orthogonality.pass && mismatches.empty(); }
};

VerifyReport verify_n(TypeTag type, int d, int n, const VerifyOptions& opts = {});
std::vector<VerifyReport> verify(TypeTag type, int d, int max_n, const VerifyOptions& opts = {});

}  // namespace yhc
