#include "lucas/selftest.hpp"

#include <functional>
#include <sstream>

#include "lucas/binom.hpp"
#include "lucas/errors.hpp"
#include "lucas/matrices.hpp"
#include "lucas/prover.hpp"
#include "lucas/recurrence.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::string join(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

// Returns "" on success, otherwise a description of the failure.
using Check = std::function<std::string()>;

std::string u_cubed_window_check(const RecurrenceRelation& rel, std::int64_t from, std::int64_t to) {
  auto x = [&](std::int64_t m) { return pow(u_term(rel.p, rel.q, m), 3); };
  auto rep = verify_relation(rel, x, from, to);
  return rep.ok ? "" : "fails at m=" + std::to_string(*rep.first_failure);
}

}  // namespace

const char* to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::kPass: return "pass";
    case ItemStatus::kFail: return "fail";
    case ItemStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::vector<SelftestItem> run_selftest(const SelftestOptions& options) {
  std::vector<std::pair<std::string, Check>> checks;

  checks.emplace_back("u-values p=2 q=4", []() -> std::string {
    auto w = window(SequenceDef::u_sequence(2, 4), 0, 4);
    return w.values == ints({0, 1, 2, 0, -8}) ? "" : "got " + join(w.values);
  });

  checks.emplace_back("(7|3)_u = 2 for p=q=1 (pascal, limit)", []() -> std::string {
    GenBinomQuery query{1, 1, 7, 3};
    Rational a = genbinom_pascal(query), b = genbinom_limit(query);
    if (a != 2 || b != 2) return "pascal=" + a.to_string() + " limit=" + b.to_string();
    try {
      genbinom_quotient(query);
      return std::string("quotient route did not report a degenerate denominator");
    } catch (const DegenerateDenominator&) {
      return std::string();
    }
  });

  checks.emplace_back("u_m^6 relation, p=q=1", []() -> std::string {
    auto rel = jarden_relation(1, 1, 6);
    if (rel.coeffs != ints({1, -1, 0, -2, 2, 0, 1, -1})) return "coefficients " + to_string(rel);
    auto rep = verify_relation(rel, [](std::int64_t m) { return pow(u_term(1, 1, m), 6); }, 7, 100);
    return rep.ok ? "" : "fails at m=" + std::to_string(*rep.first_failure);
  });

  checks.emplace_back("Fibonacci cube relation and determinant identity", []() -> std::string {
    auto rel = jarden_relation(1, -1, 3);
    if (rel.coeffs != ints({1, -3, -6, 3, 1})) return "coefficients " + to_string(rel);
    SequenceEnv env({{"F", SequenceDef::u_sequence(1, -1)}});
    auto id = parse_identity(
        "det[[F[n],F[n+1],F[n+2]],[F[n+2],F[n],F[n+1]],[F[n+1],F[n+2],F[n]]] = 2*(F[n]^3 + F[n+1]^3)",
        env);
    auto outcome = prove(id, env, 0);
    auto* cert = std::get_if<ProofCertificate>(&outcome);
    if (!cert) return std::string("identity was disproved");
    if (cert->order != 4) return "order " + std::to_string(cert->order);
    return check_certificate(*cert, env) ? "" : "certificate replay failed";
  });

  checks.emplace_back("degenerate cube relations p=2 q=4", []() -> std::string {
    auto short_rel = degenerate_relation(2, 4, 3, 3);
    if (short_rel.coeffs != ints({1, 0, 0, 512})) return "short relation " + to_string(short_rel);
    if (auto e = u_cubed_window_check(short_rel, 4, 60); !e.empty()) return "short relation " + e;
    auto rel = jarden_relation(2, 4, 3);
    if (rel.coeffs != ints({1, 8, 0, 512, 4096})) return "relation " + to_string(rel);
    if (auto e = u_cubed_window_check(rel, 4, 60); !e.empty()) return "relation " + e;
    RecurrenceRelation flipped{2, 4, ints({1, -8, 0, -512, 4096})};
    if (u_cubed_window_check(flipped, 4, 4).empty()) return std::string("sign-flipped relation unexpectedly holds");
    return std::string();
  });

  checks.emplace_back("integrality on |p|,|q| <= 5, r <= 10", []() -> std::string {
    for (long p = -5; p <= 5; ++p)
      for (long q = -5; q <= 5; ++q)
        for (long r = 0; r <= 10; ++r) integrality_check(p, q, r);
    return std::string();
  });

  if (options.quotient_route) {
    checks.emplace_back("route agreement", []() -> std::string {
      for (auto [p, q] : {std::pair{Rational(1), Rational(-1)}, {Rational(3, 2), Rational(-2, 3)},
                          {Rational(5), Rational(7)}})
        for (std::int64_t r = 0; r <= 10; ++r)
          for (std::int64_t k = 0; k <= r; ++k) {
            GenBinomQuery query{p, q, r, k};
            Rational a = genbinom_pascal(query);
            if (a != genbinom_limit(query) || a != genbinom_quotient(query))
              return "disagreement at r=" + std::to_string(r) + " k=" + std::to_string(k);
          }
      return std::string();
    });
  }

  checks.emplace_back("matrix similarity and characteristic polynomial, n <= 5", []() -> std::string {
    for (auto [p, q] : {std::pair{Rational(1), Rational(1)}, {Rational(2), Rational(4)},
                        {Rational(0), Rational(3)}, {Rational(1), Rational(-1)}})
      for (std::int64_t n = 1; n <= 5; ++n)
        if (!similarity_check(n, p, q) || !verify_binomial_form(n, p, q))
          return "fails at n=" + std::to_string(n) + " p=" + p.to_string() + " q=" + q.to_string();
    return std::string();
  });

  std::vector<SelftestItem> items;
  for (auto& [name, check] : checks) {
    SelftestItem item{name, ItemStatus::kPass, ""};
    try {
      item.detail = check();
    } catch (const std::exception& e) {
      item.detail = e.what();
    }
    if (!item.detail.empty()) item.status = ItemStatus::kFail;
    items.push_back(std::move(item));
  }
  if (!options.quotient_route)
    items.push_back({"route agreement", ItemStatus::kSkipped, "quotient route disabled"});
  return items;
}

}  // namespace lucas
