#include "hurwitz/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "hurwitz/isomorphism.hpp"
#include "hurwitz/octonify.hpp"
#include "hurwitz/report.hpp"
#include "hurwitz/suites.hpp"
#include "hurwitz/table_io.hpp"

namespace hurwitz::cli {

namespace {

using nlohmann::json;

// Distinguishes bad input (exit 2) from library errors.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <typename Int>
std::optional<Int> parse_int(std::string_view text) {
  Int value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) return std::nullopt;
  return value;
}

Signature signature_from(std::string_view p_text, std::string_view q_text) {
  const auto p = parse_int<int>(p_text);
  const auto q = parse_int<int>(q_text);
  if (!p || !q) throw UsageError("p and q must be integers");
  if (*p < 0 || *q < 0 || *p + *q != 3) throw UsageError("p + q must be 3 with p, q >= 0");
  return Signature::from_pq(*p, *q);
}

// "p,q"
Signature signature_from(std::string_view pq) {
  const auto comma = pq.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("expected p,q in '" + std::string(pq) + "'");
  return signature_from(pq.substr(0, comma), pq.substr(comma + 1));
}

BulletVariant variant_from(std::string_view text) {
  const auto v = parse_bullet_variant(text);
  if (!v) throw UsageError("variant must be + or -");
  return *v;
}

std::string join(const std::vector<std::string>& args) {
  std::string out = "hurwitz-ga";
  for (const auto& a : args) out += " " + a;
  return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const std::optional<std::string>& env) {
  if (flag) return *flag;
  if (env) {
    const auto v = parse_int<std::uint64_t>(*env);
    if (!v) throw UsageError("HURWITZ_GA_SEED must be a non-negative integer");
    return *v;
  }
  return kDefaultSeed;
}

Multivector from_table_coords(const Element& u, const Signature& sig) {
  Multivector x(sig);
  for (std::size_t i = 0; i < kBasisOrder.size(); ++i) {
    x = x + Multivector::basis(sig, kBasisOrder[i], u[static_cast<int>(i)]);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_table(const std::string& spec, const std::string& format, std::ostream& out) {
  AlgebraTable table = [&] {
    try {
      return table_from_spec(spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (format == "json") {
    out << table_to_json(table).dump(2) << '\n';
  } else if (format == "csv") {
    out << render_csv(table);
  } else {
    out << table.name() << '\n' << render_text(table);
  }
  return 0;
}

json row_json(const ClassificationRow& r) {
  return {{"signature", r.sig.name()},
          {"p", r.sig.p()},
          {"q", r.sig.q()},
          {"tensor", r.tensor_label()},
          {"even", to_string(r.even)},
          {"pseudoscalar", to_string(r.pseudoscalar)},
          {"bullet", to_string(r.bullet)},
          {"bullet_minus", to_string(r.bullet_minus)}};
}

int cmd_classify(const std::vector<std::string>& pq, const std::string& format, const std::string& command,
                 std::ostream& out) {
  std::vector<Signature> sigs;
  if (pq.empty()) {
    sigs.assign(standard_signatures().begin(), standard_signatures().end());
  } else if (pq.size() == 2) {
    sigs.push_back(signature_from(pq[0], pq[1]));
  } else {
    throw UsageError("classify takes either no arguments or p q");
  }
  std::vector<ClassificationRow> rows;
  for (const auto& s : sigs) rows.push_back(classification_row(s));

  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    out << json{{"command", command}, {"rows", std::move(arr)}}.dump(2) << '\n';
  } else {
    out << "signature  tensor  even  pseudoscalar  bullet+  bullet-\n";
    for (const auto& r : rows) {
      out << r.sig.name() << "  " << r.tensor_label() << "  " << to_string(r.even) << "  "
          << to_string(r.pseudoscalar) << "  " << to_string(r.bullet) << "  " << to_string(r.bullet_minus) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite_name, const std::optional<std::string>& p, const std::optional<std::string>& q,
               std::size_t trials, std::uint64_t seed, const std::string& format, const std::string& command,
               std::ostream& out) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
  SuiteOptions options;
  if (p.has_value() != q.has_value()) throw UsageError("give both -p and -q or neither");
  if (p) options.signature = signature_from(*p, *q);
  options.trials = trials;
  options.seed = seed;

  Report report(command);
  report.append(run_suite(*suite, options));
  if (format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return report.exit_code();
}

int witness_zero_divisor(const Signature& sig, BulletVariant v, json& doc, std::ostringstream& text) {
  const HurwitzClass cls = classify(sig, v);
  doc["class"] = to_string(cls);
  const NormDiagonal diag = norm_diagonal(sig, v);
  if (diag.positive_definite()) {
    doc["exists"] = false;
    doc["reason"] = "none exists (norm positive definite)";
    doc["norm_diagonal"] = to_string(diag);
    text << "none exists (norm positive definite)\n"
         << "norm diagonal " << to_string(diag) << ": N(x) > 0 for x != 0, so x*y = 0 forces N(x)N(y) = 0\n";
    return 0;
  }
  const auto found = find_zero_divisor(share(cayley_table_bullet(sig, v)));
  if (!found) throw ConsistencyError("indefinite norm but no zero divisor found");
  const Multivector x = from_table_coords(found->left, sig);
  const Multivector y = from_table_coords(found->right, sig);
  const Multivector xy = bullet_product(x, y, v);
  const Rational nx = octonion_norm(x, v);
  const Rational ny = octonion_norm(y, v);
  const bool ok = !x.is_zero() && !y.is_zero() && xy.is_zero() && sgn(nx) == 0 && sgn(ny) == 0;
  doc["exists"] = true;
  doc["x"] = to_string(x);
  doc["y"] = to_string(y);
  doc["product"] = to_string(xy);
  doc["norm_x"] = to_string(nx);
  doc["norm_y"] = to_string(ny);
  doc["verified"] = ok;
  text << "x = " << to_string(x) << "\ny = " << to_string(y) << "\nx*y = " << to_string(xy) << "\nN(x) = "
       << to_string(nx) << "\nN(y) = " << to_string(ny) << '\n'
       << (ok ? "verified" : "VERIFICATION FAILED") << '\n';
  return ok ? 0 : 1;
}

int witness_non_assoc(const Signature& sig, BulletVariant v, json& doc, std::ostringstream& text) {
  const AssociatorWitness w = nonassociativity_witness(sig, v);
  const Multivector x = Multivector::basis(sig, w.x);
  const Multivector y = Multivector::basis(sig, w.y);
  const Multivector z = Multivector::basis(sig, w.z);
  const Multivector left = bullet_product(bullet_product(x, y, v), z, v);
  const Multivector right = bullet_product(x, bullet_product(y, z, v), v);
  const Multivector assoc = left - right;
  const bool ok = !assoc.is_zero();
  doc["x"] = w.x.label();
  doc["y"] = w.y.label();
  doc["z"] = w.z.label();
  doc["left"] = to_string(left);
  doc["right"] = to_string(right);
  doc["associator"] = to_string(assoc);
  doc["verified"] = ok;
  text << "(x, y, z) = (" << w.x.label() << ", " << w.y.label() << ", " << w.z.label() << ")\n"
       << "(x*y)*z = " << to_string(left) << "\nx*(y*z) = " << to_string(right) << "\nassociator = "
       << to_string(assoc) << '\n'
       << (ok ? "verified" : "VERIFICATION FAILED") << '\n';
  return ok ? 0 : 1;
}

int witness_isomorphism(const Signature& sig, BulletVariant v, json& doc, std::ostringstream& text) {
  const HurwitzClass cls = classify(sig, v);
  const auto w = find_isomorphism(share(cayley_table_bullet(sig, v)), canonical_table(cls));
  if (!w) throw ConsistencyError("classified as " + std::string(to_string(cls)) + " but no signed-basis witness exists");
  const bool ok = verify_witness(*w);
  const json exported = witness_to_json(*w);
  for (const auto& [key, value] : exported.items()) doc[key] = value;
  doc["class"] = to_string(cls);
  doc["verified"] = ok;
  text << w->source->name() << " -> " << w->target->name() << '\n';
  for (std::size_t i = 0; i < w->map.size(); ++i) {
    const TableEntry& m = w->map[i];
    text << "  " << w->source->label(static_cast<int>(i)) << " -> " << (m.sign < 0 ? "-" : "+")
         << w->target->label(m.index) << '\n';
  }
  text << (ok ? "verified on the full " : "VERIFICATION FAILED on the ") << w->source->dim() << "x"
       << w->source->dim() << " grid\n";
  return ok ? 0 : 1;
}

int cmd_witness(const std::string& kind, const std::string& p, const std::string& q, const std::string& variant,
                const std::string& format, const std::string& command, std::ostream& out) {
  const Signature sig = signature_from(p, q);
  const BulletVariant v = variant_from(variant);
  json doc = {{"command", command}, {"kind", kind}, {"signature", sig.name()}, {"variant", to_string(v)}};
  std::ostringstream text;
  int code = 0;
  if (kind == "zero-divisor") {
    code = witness_zero_divisor(sig, v, doc, text);
  } else if (kind == "non-assoc") {
    code = witness_non_assoc(sig, v, doc, text);
  } else if (kind == "isomorphism") {
    code = witness_isomorphism(sig, v, doc, text);
  } else {
    throw UsageError("unknown witness kind '" + kind + "'");
  }
  if (format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    out << kind << " witness for " << sig.name() << " variant " << to_string(v) << '\n' << text.str();
  }
  return code;
}

}  // namespace

AlgebraTable table_from_spec(std::string_view spec) {
  if (const auto c = parse_hurwitz_class(spec)) return *canonical_table(*c);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown algebra spec '" + std::string(spec) + "'");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  if (kind == "ga") return geometric_product_table(signature_from(rest));
  if (kind == "even") return even_subalgebra_table(signature_from(rest));
  if (kind == "ps") return pseudoscalar_table(signature_from(rest));
  if (kind == "transported") return transported_table(signature_from(rest));
  if (kind == "bullet") {
    const auto second = rest.find(':');
    if (second == std::string_view::npos) throw std::invalid_argument("expected bullet:p,q:+|-");
    return cayley_table_bullet(signature_from(rest.substr(0, second)), variant_from(rest.substr(second + 1)));
  }
  if (kind == "biq") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("expected biq:C|Cs,H|Hs");
    const auto c = parse_hurwitz_class(rest.substr(0, comma));
    const auto h = parse_hurwitz_class(rest.substr(comma + 1));
    if (!c || !h) throw std::invalid_argument("expected biq:C|Cs,H|Hs");
    return build_biquaternion(*c, *h);
  }
  throw std::invalid_argument("unknown algebra spec '" + std::string(spec) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<std::string> env;
  if (const char* s = std::getenv("HURWITZ_GA_SEED")) env = s;
  return run(args, out, err, env);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed) {
  CLI::App app{"Octonionic products on the 3D geometric algebras G(p,q)", "hurwitz-ga"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };

  std::string spec;
  auto* table = app.add_subcommand("table", "Print a multiplication table");
  table->add_option("spec", spec, "R|C|Cs|H|Hs|O|Os, ga:p,q, bullet:p,q:+|-, biq:C|Cs,H|Hs, even:p,q, ps:p,q")
      ->required();
  add_format(table, {"text", "json", "csv"});

  std::vector<std::string> pq;
  auto* classify_cmd = app.add_subcommand("classify", "Classify G(p,q): tensor label, even, Ps, bullet classes");
  classify_cmd->add_option("pq", pq, "p q (all four signatures if omitted)");
  add_format(classify_cmd, {"text", "json"});

  std::string suite;
  std::optional<std::string> vp;
  std::optional<std::string> vq;
  std::size_t trials = 10000;
  std::optional<std::uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "ga-axioms|involutions|hurwitz-properties|composition|norm-lemma|isomorphisms|all")
      ->required();
  verify->add_option("-p", vp, "Restrict to G(p,q)");
  verify->add_option("-q", vq, "Restrict to G(p,q)");
  verify->add_option("--trials", trials, "Random cases per check");
  verify->add_option("--seed", seed, "Seed (default 1729 or HURWITZ_GA_SEED)");
  add_format(verify, {"text", "json"});

  std::string kind;
  std::string wp;
  std::string wq;
  std::string variant = "+";
  auto* witness = app.add_subcommand("witness", "Produce and verify a witness");
  witness->add_option("kind", kind, "zero-divisor|non-assoc|isomorphism")->required();
  witness->add_option("p", wp, "p")->required();
  witness->add_option("q", wq, "q")->required();
  witness->add_option("variant", variant, "+ or - (default +)");
  add_format(witness, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  const std::string command = join(args);
  try {
    if (table->parsed()) return cmd_table(spec, format, out);
    if (classify_cmd->parsed()) return cmd_classify(pq, format, command, out);
    if (verify->parsed()) {
      return cmd_verify(suite, vp, vq, trials, resolve_seed(seed, env_seed), format, command, out);
    }
    if (witness->parsed()) return cmd_witness(kind, wp, wq, variant, format, command, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace hurwitz::cli
