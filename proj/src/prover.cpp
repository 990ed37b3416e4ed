#include "lucas/prover.hpp"

#include "lucas/errors.hpp"

namespace lucas {

namespace {

// Side values at n in [from, to].
ValueWindow side_window(Evaluator& ev, const Expr& side, std::int64_t from, std::int64_t to) {
  ValueWindow w{from, {}};
  for (std::int64_t n = from; n <= to; ++n) w.values.push_back(ev.eval(side, n));
  return w;
}

bool annihilates(const RecurrenceRelation& rel, Evaluator& ev, const Expr& side,
                 std::int64_t n0, std::size_t extra) {
  const auto order = static_cast<std::int64_t>(rel.order());
  const std::int64_t last = n0 + order + static_cast<std::int64_t>(extra) - 1;
  if (last < n0 + order) return true;
  return verify_relation(rel, side_window(ev, side, n0, last), n0 + order, last).ok;
}

}  // namespace

RecurrenceRelation annihilator_for(const Identity& identity, const Rational& p, const Rational& q) {
  RecurrenceRelation acc{p, q, {Rational(1)}};
  for (std::int64_t d : identity.degrees()) acc = convolve(acc, jarden_relation(p, q, d));
  return acc;
}

std::string ProofCertificate::scope() const {
  return all_integers ? "all integers n" : "all n >= " + std::to_string(n0);
}

ProofOutcome prove(const Identity& identity, const SequenceEnv& env, std::int64_t n0) {
  const std::string text = pretty_print(identity);
  const RecurrenceRelation rel = annihilator_for(identity, env.p(), env.q());
  const std::size_t order = rel.order();
  Evaluator ev(env);

  for (const Expr* side : {identity.left.get(), identity.right.get()})
    if (!annihilates(rel, ev, *side, n0, 3 * order))
      throw UnsoundAnnihilator("the constructed recurrence does not annihilate '" +
                               pretty_print(*side) + "'");

  ProofCertificate cert;
  cert.identity = text;
  const auto degrees = identity.degrees();
  cert.degrees.assign(degrees.begin(), degrees.end());
  cert.annihilator = rel;
  cert.order = order;
  cert.n0 = n0;
  for (std::int64_t n = n0; n < n0 + static_cast<std::int64_t>(order); ++n) {
    CheckedValue v{n, ev.eval(*identity.left, n), ev.eval(*identity.right, n)};
    if (v.left != v.right) return Counterexample{text, n, v.left, v.right};
    cert.checked.push_back(std::move(v));
  }
  cert.all_integers = !env.q().is_zero() && !rel.coeffs.back().is_zero();
  return cert;
}

bool check_certificate(const ProofCertificate& cert, const SequenceEnv& env, std::size_t extra_factor) {
  const RecurrenceRelation& rel = cert.annihilator;
  if (rel.coeffs.empty() || rel.coeffs.front() != Rational(1)) return false;
  if (rel.p != env.p() || rel.q != env.q()) return false;
  if (cert.order != rel.order() || cert.checked.size() != cert.order) return false;
  if (cert.all_integers && (env.q().is_zero() || rel.coeffs.back().is_zero())) return false;

  try {
    const Identity id = parse_identity(cert.identity, env);
    Evaluator ev(env);
    for (std::size_t i = 0; i < cert.checked.size(); ++i) {
      const CheckedValue& v = cert.checked[i];
      if (v.n != cert.n0 + static_cast<std::int64_t>(i)) return false;
      if (v.left != v.right) return false;
      if (ev.eval(*id.left, v.n) != v.left || ev.eval(*id.right, v.n) != v.right) return false;
    }
    const std::size_t extra = extra_factor * cert.order;
    return annihilates(rel, ev, *id.left, cert.n0, extra) &&
           annihilates(rel, ev, *id.right, cert.n0, extra);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace lucas
