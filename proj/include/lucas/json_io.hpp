#pragma once

// JSON encodings of library values. Field order is fixed and every number
// is an exact rational string ("num/den", denominator omitted when 1), so
// dump(parse(dump(x))) reproduces the same bytes.

#include <json.hpp>

#include "lucas/prover.hpp"
#include "lucas/recurrence.hpp"

namespace lucas {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json to_json(const RecurrenceRelation& rel);
Json to_json(const ProofCertificate& cert);
Json to_json(const Counterexample& cex);

/// Throws ParseError on a malformed document.
ProofCertificate certificate_from_json(const Json& doc);

}  // namespace lucas
