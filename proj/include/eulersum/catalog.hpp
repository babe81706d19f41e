#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eulersum/closed_form.hpp"
#include "eulersum/summation.hpp"

namespace eulersum {

struct Identity {
  std::string id;
  std::string description;  // plain-text statement of the series
  std::string anchor;       // family note
  int dimensionality = 1;
  std::variant<Summand1D, Summand2D> lhs;
  ClosedForm rhs;
  double tolerance = 1e-9;
};

// The full identity registry: five harmonic-over-square sums (inner
// multiples 1,2,3,4,6), three alternating ones, three rational-kernel sums,
// four trigamma sums, six bilinear sums, two gamma-ratio sums, and eight
// double series.  Built once, immutable afterwards.
const std::vector<Identity>& catalog();
const Identity& find_identity(const std::string& id);  // throws UnknownIdentity

// Closed form for sum_{n>=1} [gamma + psi(1+k n)]/n^2 (alternating: extra
// (-1)^n), canonicalized over the {1, zeta, pi*Cl2} basis.
ClosedForm theorem1_closed_form(int k, bool alternating);

// Summand matching theorem1_closed_form, shared by the catalog entries and
// the coherence rows.
Summand1D theorem1_summand(int k, bool alternating);

struct VerificationReport {
  std::string id;
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  long long terms_used = 0;
  std::string strategy;
  double seconds = 0.0;
  std::string note;
};

VerificationReport verify(const std::string& id,
                          std::optional<double> tolerance_override = {});

// Reports for every catalog identity followed by closed-form-vs-direct
// coherence rows for k = 1..8, both sign patterns.  `jobs` > 1 fans the
// work out across threads; the report order and values are identical for
// any job count.
std::vector<VerificationReport> verify_all(int jobs = 1);

std::string catalog_json();
// Serializations of report lists.  JSON is one object per line and CSV one
// row per report; both omit wall time so equal runs serialize identically.
std::string reports_json(const std::vector<VerificationReport>& rows);
std::string reports_csv(const std::vector<VerificationReport>& rows);
std::string reports_text(const std::vector<VerificationReport>& rows);

}  // namespace eulersum
