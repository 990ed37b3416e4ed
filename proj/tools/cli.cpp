#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "lucas/binom.hpp"
#include "lucas/errors.hpp"
#include "lucas/json_io.hpp"
#include "lucas/matrices.hpp"
#include "lucas/prover.hpp"
#include "lucas/recurrence.hpp"
#include "lucas/selftest.hpp"
#include "lucas/sequences.hpp"

namespace lucas::cli {

namespace {

struct CommandResult {
  ExitCode code = kOk;
  Json payload = Json::object();
  std::vector<std::string> diagnostics;
  std::string text;  // human-readable rendering
};

const char* status_name(ExitCode c) {
  switch (c) {
    case kOk: return "ok";
    case kDisproved: return "disproved";
    default: return "error";
  }
}

std::string join(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Options shared by the p/q-parameterized subcommands.
struct Params {
  std::string p, q;
  Rational rp() const { return Rational::parse(p); }
  Rational rq() const { return Rational::parse(q); }
};

void add_params(CLI::App* cmd, Params& params) {
  cmd->add_option("-p", params.p, "parameter p (exact rational, e.g. 3/2)")->required();
  cmd->add_option("-q", params.q, "parameter q (exact rational)")->required();
}

// seq ------------------------------------------------------------------------

struct SeqArgs {
  Params params;
  bool u = false, companion = false;
  std::string x0 = "0", x1 = "1";
  std::int64_t from = 0, to = 0;
};

CommandResult cmd_seq(const SeqArgs& a) {
  const Rational p = a.params.rp(), q = a.params.rq();
  SequenceDef def = a.companion ? SequenceDef::companion(p, q)
                    : a.u       ? SequenceDef::u_sequence(p, q)
                                : SequenceDef{p, q, Rational::parse(a.x0), Rational::parse(a.x1)};
  if (a.from > a.to) throw Error("seq: from > to");
  const SequenceWindow w = window(def, a.from, a.to);
  CommandResult res;
  res.payload["from"] = a.from;
  res.payload["to"] = a.to;
  res.payload["terms"] = to_json(w.values);
  res.text = join(w.values);
  return res;
}

// binom ----------------------------------------------------------------------

struct BinomArgs {
  Params params;
  std::int64_t r = 0;
  std::optional<std::int64_t> k;
  std::string route = "pascal";
};

using Route = std::function<Rational(const GenBinomQuery&)>;

std::vector<Rational> route_values(const Route& route, const Rational& p, const Rational& q,
                                   std::int64_t r, std::optional<std::int64_t> k) {
  std::vector<Rational> out;
  const std::int64_t lo = k ? *k : 0, hi = k ? *k : r;
  for (std::int64_t i = lo; i <= hi; ++i) out.push_back(route(GenBinomQuery{p, q, r, i}));
  return out;
}

CommandResult cmd_binom(const BinomArgs& a) {
  const Rational p = a.params.rp(), q = a.params.rq();
  if (a.r < 0) throw Error("binom: r must be >= 0");
  if (a.k && (*a.k < 0 || *a.k > a.r)) throw Error("binom: k must satisfy 0 <= k <= r");
  const std::vector<std::pair<std::string, Route>> routes{
      {"pascal", genbinom_pascal}, {"limit", genbinom_limit}, {"quotient", genbinom_quotient}};

  CommandResult res;
  res.payload["r"] = a.r;
  if (a.k) res.payload["k"] = *a.k;
  res.payload["route"] = a.route;
  if (a.route != "all") {
    auto it = std::find_if(routes.begin(), routes.end(), [&](auto& r) { return r.first == a.route; });
    auto values = route_values(it->second, p, q, a.r, a.k);
    res.payload["values"] = to_json(values);
    res.text = join(values);
    return res;
  }

  std::ostringstream text;
  std::optional<std::vector<Rational>> reference;
  bool consistent = true;
  Json per_route = Json::object();
  for (const auto& [name, route] : routes) {
    try {
      auto values = route_values(route, p, q, a.r, a.k);
      if (!reference) reference = values;
      consistent = consistent && values == *reference;
      per_route[name] = to_json(values);
      text << name << ": " << join(values) << "\n";
    } catch (const DegenerateDenominator& e) {
      per_route[name] = nullptr;
      res.diagnostics.push_back(name + ": " + e.what());
      text << name << ": undefined (" << e.what() << ")\n";
    }
  }
  res.payload["values"] = per_route;
  res.payload["consistent"] = consistent;
  text << "consistent: " << (consistent ? "true" : "false");
  res.text = text.str();
  if (!consistent) res.code = kError;
  return res;
}

// jarden ---------------------------------------------------------------------

struct JardenArgs {
  Params params;
  std::int64_t n = 1;
  std::optional<std::int64_t> degenerate;
};

CommandResult cmd_jarden(const JardenArgs& a) {
  const Rational p = a.params.rp(), q = a.params.rq();
  if (a.n < 1) throw Error("jarden: n must be >= 1");
  const RecurrenceRelation rel =
      a.degenerate ? degenerate_relation(p, q, a.n, *a.degenerate) : jarden_relation(p, q, a.n);
  CommandResult res;
  res.payload["n"] = a.n;
  res.payload["kind"] = a.degenerate ? "degenerate" : "jarden";
  if (a.degenerate) {
    res.payload["k"] = *a.degenerate;
    res.payload["valid_from"] = *a.degenerate + 1;
  }
  res.payload["relation"] = to_json(rel);
  res.text = to_string(rel);
  return res;
}

// prove ----------------------------------------------------------------------

struct ProveArgs {
  std::string env_path;
  std::string identity;
  std::string file;
  std::string check;
  std::int64_t from = 0;
};

std::string render(const ProofCertificate& c) {
  std::ostringstream os;
  os << "proved: " << c.identity << "\n";
  os << "annihilator: " << to_string(c.annihilator) << " (order " << c.order << ")\n";
  os << "checked:";
  for (const auto& v : c.checked) os << " n=" << v.n << ": " << v.left;
  os << "\nscope: " << c.scope();
  return os.str();
}

std::string render(const Counterexample& c) {
  std::ostringstream os;
  os << "disproved: " << c.identity << "\n";
  os << "counterexample: n=" << c.n << ": left = " << c.left << ", right = " << c.right;
  return os.str();
}

CommandResult cmd_prove(const ProveArgs& a) {
  const SequenceEnv env = SequenceEnv::parse(read_file(a.env_path));
  CommandResult res;

  if (!a.check.empty()) {
    Json doc = Json::parse(read_file(a.check));
    // accept the envelope written by `prove --json` as well as a bare certificate
    if (doc.is_object() && doc.contains("payload")) doc = doc["payload"];
    const ProofCertificate cert = certificate_from_json(doc);
    const bool ok = check_certificate(cert, env);
    res.payload["identity"] = cert.identity;
    res.payload["valid"] = ok;
    res.text = std::string("certificate ") + (ok ? "valid" : "INVALID") + ": " + cert.identity;
    if (!ok) res.code = kDisproved;
    return res;
  }

  std::vector<std::string> identities;
  if (!a.identity.empty()) identities.push_back(a.identity);
  if (!a.file.empty()) {
    std::istringstream lines(read_file(a.file));
    for (std::string line; std::getline(lines, line);) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) identities.push_back(line);
    }
  }
  if (identities.empty()) throw Error("prove: give --identity or --file");

  Json results = Json::array();
  std::ostringstream text;
  for (const auto& src : identities) {
    const ProofOutcome outcome = prove(parse_identity(src, env), env, a.from);
    if (const auto* cert = std::get_if<ProofCertificate>(&outcome)) {
      results.push_back(to_json(*cert));
      text << render(*cert) << "\n";
    } else {
      const auto& cex = std::get<Counterexample>(outcome);
      results.push_back(to_json(cex));
      text << render(cex) << "\n";
      res.code = kDisproved;
    }
  }
  res.payload = results.size() == 1 ? results[0] : Json{{"results", results}};
  res.text = text.str();
  if (!res.text.empty()) res.text.pop_back();
  return res;
}

// matrix ---------------------------------------------------------------------

struct MatrixArgs {
  Params params;
  std::int64_t n = 1;
  std::string check = "all";
};

CommandResult cmd_matrix(const MatrixArgs& a) {
  const Rational p = a.params.rp(), q = a.params.rq();
  if (a.n < 1) throw Error("matrix: n must be >= 1");
  CommandResult res;
  std::ostringstream text;
  const ExactMatrix qn = build_Q(a.n, p, q);
  const ExactMatrix an = build_A(a.n - 1, p, q);
  text << "A: " << an.to_string() << "\nQ: " << qn.to_string() << "\n";
  res.payload["n"] = a.n;
  res.payload["A"] = an.to_string();
  res.payload["Q"] = qn.to_string();
  bool all_ok = true;

  if (a.check == "similarity" || a.check == "all") {
    const bool sim = similarity_check(a.n, p, q);
    all_ok = all_ok && sim;
    res.payload["similarity"] = sim;
    text << "similarity: " << (sim ? "true" : "false") << "\n";
  }
  if (a.check == "charpoly" || a.check == "all") {
    const DensePoly cp = char_poly(qn);
    const auto rev = reversed(cp, static_cast<std::size_t>(a.n));
    const auto binomial = binomial_form(a.n, p, q);
    const bool match = rev == binomial;
    all_ok = all_ok && match;
    res.payload["charpoly"] = to_json(cp.coefficients());
    res.payload["reversed"] = to_json(rev);
    res.payload["binomial_form"] = to_json(binomial);
    res.payload["binomial_form_match"] = match;
    text << "charpoly: " << cp.to_string("x", true) << "\n";
    text << "reversed: " << join(rev) << "\n";
    text << "binomial form: " << join(binomial) << "\n";
    text << "binomial form match: " << (match ? "true" : "false") << "\n";
    try {
      const auto quotient = quotient_form(a.n, p, q);
      res.payload["quotient_form"] = to_json(quotient);
      text << "quotient form: " << join(quotient) << "\n";
    } catch (const DegenerateDenominator& e) {
      res.payload["quotient_form"] = nullptr;
      res.diagnostics.push_back(e.what());
      text << "quotient form: undefined (" << e.what() << ")\n";
    }
  }
  res.text = text.str();
  res.text.pop_back();
  if (!all_ok) res.code = kDisproved;
  return res;
}

// selftest -------------------------------------------------------------------

CommandResult cmd_selftest(const std::vector<std::string>& disabled) {
  SelftestOptions options;
  for (const auto& d : disabled)
    if (d == "quotient") options.quotient_route = false;
  CommandResult res;
  Json items = Json::array();
  std::ostringstream text;
  for (const auto& item : run_selftest(options)) {
    items.push_back({{"name", item.name}, {"status", to_string(item.status)}, {"detail", item.detail}});
    text << "[" << to_string(item.status) << "] " << item.name;
    if (!item.detail.empty()) text << ": " << item.detail;
    text << "\n";
    if (item.status == ItemStatus::kFail) res.code = kError;
  }
  res.payload["items"] = items;
  res.text = text.str();
  res.text.pop_back();
  return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized binomial coefficients, Jarden recurrences and identity proving", "lucas"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a JSON document instead of text");

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "terms x_from..x_to of x_r = p x_{r-1} - q x_{r-2}");
  add_params(seq_cmd, seq.params);
  seq_cmd->add_flag("--u", seq.u, "use the fundamental sequence u_0 = 0, u_1 = 1");
  seq_cmd->add_flag("--companion", seq.companion, "use the companion sequence V_0 = 2, V_1 = p");
  seq_cmd->add_option("--x0", seq.x0, "initial value x_0");
  seq_cmd->add_option("--x1", seq.x1, "initial value x_1");
  seq_cmd->add_option("from", seq.from)->required();
  seq_cmd->add_option("to", seq.to)->required();

  BinomArgs binom;
  auto* binom_cmd = app.add_subcommand("binom", "generalized binomial coefficient (r|k)_u or row r");
  add_params(binom_cmd, binom.params);
  binom_cmd->add_option("r", binom.r)->required();
  binom_cmd->add_option("k", binom.k);
  binom_cmd->add_option("--route", binom.route)
      ->check(CLI::IsMember({"pascal", "limit", "quotient", "all"}));

  JardenArgs jarden;
  auto* jarden_cmd = app.add_subcommand("jarden", "recurrence annihilating products of n sequences");
  add_params(jarden_cmd, jarden.params);
  jarden_cmd->add_option("n", jarden.n)->required();
  jarden_cmd->add_option("--degenerate", jarden.degenerate, "short relation for an index k with u_k = 0");

  ProveArgs prove_args;
  auto* prove_cmd = app.add_subcommand("prove", "prove or refute an identity");
  prove_cmd->add_option("--env", prove_args.env_path, "file with lines `NAME p q x0 x1`")->required();
  auto* id_opt = prove_cmd->add_option("--identity", prove_args.identity);
  auto* file_opt = prove_cmd->add_option("--file", prove_args.file, "one identity per line");
  auto* check_opt = prove_cmd->add_option("--check", prove_args.check, "replay a JSON certificate");
  id_opt->excludes(check_opt);
  file_opt->excludes(check_opt);
  prove_cmd->add_option("--from", prove_args.from, "first index n0 (default 0)");

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "companion-type matrices and their characteristic polynomial");
  add_params(matrix_cmd, matrix.params);
  matrix_cmd->add_option("n", matrix.n)->required();
  matrix_cmd->add_option("--check", matrix.check)->check(CLI::IsMember({"similarity", "charpoly", "all"}));

  std::vector<std::string> disabled;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the regression corpus");
  selftest_cmd->add_option("--disable-route", disabled)->check(CLI::IsMember({"quotient"}));

  // --json is accepted after the subcommand too
  for (auto* cmd : {seq_cmd, binom_cmd, jarden_cmd, prove_cmd, matrix_cmd, selftest_cmd})
    cmd->add_flag("--json", json, "emit a JSON document instead of text");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  std::string command;
  CommandResult res;
  try {
    if (seq_cmd->parsed()) command = "seq", res = cmd_seq(seq);
    else if (binom_cmd->parsed()) command = "binom", res = cmd_binom(binom);
    else if (jarden_cmd->parsed()) command = "jarden", res = cmd_jarden(jarden);
    else if (prove_cmd->parsed()) command = "prove", res = cmd_prove(prove_args);
    else if (matrix_cmd->parsed()) command = "matrix", res = cmd_matrix(matrix);
    else command = "selftest", res = cmd_selftest(disabled);
  } catch (const std::exception& e) {
    res = CommandResult{};
    res.code = kError;
    res.payload = nullptr;
    res.diagnostics.push_back(e.what());
    err << "error: " << e.what() << "\n";
  }

  if (json) {
    Json doc;
    doc["command"] = command;
    doc["status"] = status_name(res.code);
    doc["payload"] = res.payload;
    doc["diagnostics"] = res.diagnostics;
    out << doc.dump(2) << "\n";
  } else if (!res.text.empty()) {
    out << res.text << "\n";
  }
  return res.code;
}

}  // namespace lucas::cli
