#pragma once

// Identity proving by annihilator construction plus finitely many exact
// initial-value checks.
//
// If both sides of an identity are annihilated by a recurrence whose leading
// coefficient c_0 is 1, their difference is too, so it vanishes for every
// n >= n0 once it vanishes at n0, ..., n0 + order - 1. When the trailing
// coefficient is nonzero (q != 0) the same argument runs backwards.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lucas/identity.hpp"
#include "lucas/recurrence.hpp"

namespace lucas {

/// Product (coefficient convolution) of jarden_relation(p, q, d) over every
/// degree d present in the identity. Order is sum of (d + 1).
RecurrenceRelation annihilator_for(const Identity& identity, const Rational& p, const Rational& q);

struct CheckedValue {
  std::int64_t n = 0;
  Rational left;
  Rational right;
  friend bool operator==(const CheckedValue&, const CheckedValue&) = default;
};

struct ProofCertificate {
  std::string identity;  // canonical text
  std::vector<std::int64_t> degrees;
  RecurrenceRelation annihilator;
  std::size_t order = 0;
  std::int64_t n0 = 0;
  std::vector<CheckedValue> checked;  // n0, ..., n0 + order - 1
  bool all_integers = false;          // holds for every integer n, not only n >= n0

  std::string scope() const;
  friend bool operator==(const ProofCertificate&, const ProofCertificate&) = default;
};

struct Counterexample {
  std::string identity;
  std::int64_t n = 0;
  Rational left;
  Rational right;
};

using ProofOutcome = std::variant<ProofCertificate, Counterexample>;

/// Before deciding, the annihilator is checked against each side separately
/// over a window past the initial values; a failure there throws
/// UnsoundAnnihilator instead of producing a certificate.
ProofOutcome prove(const Identity& identity, const SequenceEnv& env, std::int64_t n0 = 0);

/// Replays a certificate: re-parses the identity, recomputes the recorded
/// initial values, and checks the annihilator on both sides over
/// `extra_factor * order` further indices.
bool check_certificate(const ProofCertificate& cert, const SequenceEnv& env,
                       std::size_t extra_factor = 3);

}  // namespace lucas
