#include "skewring/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewring/literals.hpp"

namespace skewring::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const RingElement& z) { return Json{{"a", z.a()}, {"b", z.b()}, {"c", z.c()}}; }

Json to_json(std::span<const RingElement> elements) {
  auto out = Json::array();
  for (const auto& e : elements) out.push_back(to_json(e));
  return out;
}

Json to_json(const SkewPolynomial& f) { return to_json(f.coeffs()); }

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

struct Options {
  std::uint64_t prime = 0;
  int theta = 1;
  bool json = false;
  bool brute_force = false;
  bool min_distance = false;
  std::uint64_t budget = kDefaultDistanceBudget;
  std::size_t length = 0;
  std::string generator;
  std::vector<std::string> operands;
};

// --- autos / endos / table -------------------------------------------------

int cmd_autos(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  Json doc{{"prime", p.value()}, {"automorphisms", Json::array()}, {"brute_force", nullptr}};
  for (auto id : AutomorphismId::all()) {
    doc["automorphisms"].push_back(Json{{"id", id.value()}, {"image_of_v", to_json(theta_image_of_v(id, p))}});
  }

  int status = kExitOk;
  std::vector<FoundAutomorphism> found;
  std::size_t candidates = 0;
  std::size_t non_injective = 0;
  if (opt.brute_force) {
    const auto endos = enumerate_endomorphism_candidates(p);
    candidates = endos.size();
    non_injective = static_cast<std::size_t>(
        std::count_if(endos.begin(), endos.end(), [](const auto& c) { return !c.injective; }));
    found = enumerate_automorphisms_bruteforce(p);

    std::set<RingElement> closed, brute;
    for (auto id : AutomorphismId::all()) closed.insert(theta_image_of_v(id, p));
    for (const auto& f : found) brute.insert(f.image_of_v);
    const bool ok = found.size() == static_cast<std::size_t>(kAutomorphismCount) && closed == brute;
    if (!ok) status = kExitDomainError;

    Json bf{{"status", ok ? "OK" : "MISMATCH"},
            {"candidates", candidates},
            {"automorphisms", found.size()},
            {"non_injective", non_injective},
            {"found", Json::array()}};
    for (const auto& f : found) bf["found"].push_back(Json{{"id", f.id.value()}, {"image_of_v", to_json(f.image_of_v)}});
    doc["brute_force"] = bf;
  }

  if (opt.json) {
    emit(out, doc);
    return status;
  }
  out << "automorphisms of F_" << p.value() << " + vF_" << p.value() << " + v^2F_" << p.value() << '\n';
  out << "id  image of v\n";
  for (auto id : AutomorphismId::all()) {
    const auto t = theta_image_of_v(id, p);
    out << std::left << std::setw(4) << id.value() << std::setw(14) << format_element(t) << pretty(t) << '\n';
  }
  if (opt.brute_force) {
    const auto& bf = doc["brute_force"];
    out << "brute force: " << bf["status"].get<std::string>() << " (" << candidates << " candidates with t^3 = t, "
        << non_injective << " non-injective, " << found.size() << " automorphisms)\n";
    for (const auto& f : found) out << "  v -> " << format_element(f.image_of_v) << "  = theta_" << f.id.value() << '\n';
  }
  return status;
}

int cmd_endos(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  const auto endos = enumerate_endomorphism_candidates(p);
  if (opt.json) {
    Json doc{{"prime", p.value()}, {"candidates", Json::array()}};
    for (const auto& c : endos) {
      Json row{{"image_of_v", to_json(c.image_of_v)},
               {"injective", c.injective},
               {"automorphism_id", c.automorphism_id ? Json(c.automorphism_id->value()) : Json(nullptr)},
               {"witness", nullptr}};
      if (c.witness) row["witness"] = Json::array({to_json(c.witness->first), to_json(c.witness->second)});
      doc["candidates"].push_back(row);
    }
    emit(out, doc);
    return kExitOk;
  }
  out << "endomorphism candidates v -> t with t^3 = t (p = " << p.value() << ")\n";
  out << "t             injective  id  witness\n";
  for (const auto& c : endos) {
    out << std::left << std::setw(14) << format_element(c.image_of_v) << std::setw(11)
        << (c.injective ? "yes" : "no") << std::setw(4)
        << (c.automorphism_id ? std::to_string(c.automorphism_id->value()) : "-");
    if (c.witness) {
      out << format_element(c.witness->first) << " and " << format_element(c.witness->second) << " -> "
          << format_element(theta_apply_via_image(c.image_of_v, c.witness->first));
    } else {
      out << '-';
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_table(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  const auto table = group_table(p);
  if (opt.json) {
    auto rows = Json::array();
    for (auto i : AutomorphismId::all()) {
      auto row = Json::array();
      for (auto j : AutomorphismId::all()) row.push_back(table.at(i, j).value());
      rows.push_back(row);
    }
    emit(out, rows);
    return kExitOk;
  }
  out << "o |";
  for (auto j : AutomorphismId::all()) out << ' ' << j.value();
  out << "\n--+------------\n";
  for (auto i : AutomorphismId::all()) {
    out << i.value() << " |";
    for (auto j : AutomorphismId::all()) out << ' ' << table.at(i, j).value();
    out << '\n';
  }
  return kExitOk;
}

// --- elem ---------------------------------------------------------------

int cmd_elem_mul(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  const auto product = parse_element(opt.operands.at(0), p) * parse_element(opt.operands.at(1), p);
  if (opt.json) {
    emit(out, to_json(product));
  } else {
    out << format_element(product) << '\n';
  }
  return kExitOk;
}

int cmd_elem_inv(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  const auto inverse = inv(parse_element(opt.operands.at(0), p));
  if (opt.json) {
    emit(out, to_json(inverse));
  } else {
    out << format_element(inverse) << '\n';
  }
  return kExitOk;
}

int cmd_elem_classify(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  const auto z = parse_element(opt.operands.at(0), p);
  const auto cls = classify(z);
  if (opt.json) {
    const char* kind = cls.kind == Classification::Kind::zero           ? "zero"
                       : cls.kind == Classification::Kind::zero_divisor ? "zero_divisor"
                                                                        : "unit";
    auto conditions = Json::array();
    if (cls.a_vanishes) conditions.push_back("a=0");
    if (cls.alternating_vanishes) conditions.push_back("a-b+c=0");
    if (cls.sum_vanishes) conditions.push_back("a+b+c=0");
    emit(out, Json{{"element", to_json(z)},
                   {"class", kind},
                   {"conditions", conditions},
                   {"description", cls.describe()}});
  } else {
    out << cls.describe() << '\n';
  }
  return kExitOk;
}

// --- poly ---------------------------------------------------------------

int cmd_poly_mul(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  const AutomorphismId theta(opt.theta);
  const auto product = parse_polynomial(opt.operands.at(0), p, theta) * parse_polynomial(opt.operands.at(1), p, theta);
  if (opt.json) {
    emit(out, Json{{"product", to_json(product)}});
  } else {
    out << format_polynomial(product) << '\n';
  }
  return kExitOk;
}

int cmd_poly_divmod(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  const AutomorphismId theta(opt.theta);
  const auto [q, r] =
      skew_right_divmod(parse_polynomial(opt.operands.at(0), p, theta), parse_polynomial(opt.operands.at(1), p, theta));
  if (opt.json) {
    emit(out, Json{{"quotient", to_json(q)}, {"remainder", to_json(r)}});
  } else {
    out << "quotient  " << format_polynomial(q) << '\n' << "remainder " << format_polynomial(r) << '\n';
  }
  return kExitOk;
}

// --- code ---------------------------------------------------------------

int cmd_code_build(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  const AutomorphismId theta(opt.theta);
  const auto code = build_code(p, theta, opt.length, parse_polynomial(opt.generator, p, theta));
  std::optional<std::size_t> distance;
  if (opt.min_distance) distance = min_hamming_distance(code, opt.budget);

  const auto q = std::to_string(p.value()) + "^" + std::to_string(code.cardinality_exponent());
  const auto cardinality = code.cardinality();
  if (opt.json) {
    emit(out, Json{{"n", code.length()},
                   {"k", code.rank()},
                   {"q", q},
                   {"cardinality", cardinality ? Json(*cardinality) : Json(nullptr)},
                   {"theta", theta.value()},
                   {"generator", to_json(code.generator())},
                   {"right_divisor", true},
                   {"min_distance", distance ? Json(*distance) : Json(nullptr)}});
    return kExitOk;
  }
  out << "n             " << code.length() << '\n'
      << "k             " << code.rank() << '\n'
      << "q             " << q;
  if (cardinality) out << " = " << *cardinality;
  out << '\n'
      << "theta         " << theta.value() << '\n'
      << "generator     " << format_polynomial(code.generator()) << '\n'
      << "right divisor yes (x^" << code.length() << " - 1 = h * g)\n"
      << "min distance  " << (distance ? std::to_string(*distance) : std::string("-")) << '\n';
  return kExitOk;
}

int cmd_code_shift(const Options& opt, std::ostream& out) {
  const PrimeModulus p(opt.prime);
  const AutomorphismId theta(opt.theta);
  const auto shifted = theta_shift(parse_codeword(opt.operands.at(0), p), theta);
  if (opt.json) {
    emit(out, Json{{"codeword", to_json(shifted.entries)}});
  } else {
    out << format_codeword(shifted) << '\n';
  }
  return kExitOk;
}

void add_prime(CLI::App* app, Options& opt) {
  app->add_option("--prime,-p", opt.prime, "odd prime p")->required();
}

void add_json(CLI::App* app, Options& opt) { app->add_flag("--json", opt.json, "emit JSON"); }

void add_theta(CLI::App* app, Options& opt) {
  app->add_option("--theta,-t", opt.theta, "automorphism id 1..6")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Arithmetic, automorphisms and skew cyclic codes over F_p + vF_p + v^2F_p (v^3 = v)", "skewring"};
  app.require_subcommand(1);

  auto* autos = app.add_subcommand("autos", "list the six automorphisms");
  add_prime(autos, opt);
  autos->add_flag("--brute-force", opt.brute_force, "cross-check against exhaustive enumeration");
  add_json(autos, opt);

  auto* endos = app.add_subcommand("endos", "list all endomorphism candidates v -> t with t^3 = t");
  add_prime(endos, opt);
  add_json(endos, opt);

  auto* table = app.add_subcommand("table", "6x6 composition table");
  add_prime(table, opt);
  add_json(table, opt);

  auto* elem = app.add_subcommand("elem", "element arithmetic");
  elem->require_subcommand(1);
  auto* elem_mul = elem->add_subcommand("mul", "product of two elements");
  auto* elem_inv = elem->add_subcommand("inv", "inverse of a unit");
  auto* elem_classify = elem->add_subcommand("classify", "zero / zero divisor / unit");
  for (auto* sub : {elem_mul, elem_inv, elem_classify}) {
    add_prime(sub, opt);
    add_json(sub, opt);
  }
  elem_mul->add_option("operands", opt.operands, "two elements a,b,c")->required()->expected(2);
  elem_inv->add_option("operand", opt.operands, "element a,b,c")->required()->expected(1);
  elem_classify->add_option("operand", opt.operands, "element a,b,c")->required()->expected(1);

  auto* poly = app.add_subcommand("poly", "skew polynomial arithmetic");
  poly->require_subcommand(1);
  auto* poly_mul = poly->add_subcommand("mul", "skew product F * G");
  auto* poly_divmod = poly->add_subcommand("divmod", "right division F = Q * G + R");
  for (auto* sub : {poly_mul, poly_divmod}) {
    add_prime(sub, opt);
    add_theta(sub, opt);
    add_json(sub, opt);
    sub->add_option("operands", opt.operands, "polynomials F G")->required()->expected(2);
  }

  auto* code = app.add_subcommand("code", "skew cyclic codes");
  code->require_subcommand(1);
  auto* code_build = code->add_subcommand("build", "build a code from a generator");
  add_prime(code_build, opt);
  add_theta(code_build, opt);
  add_json(code_build, opt);
  code_build->add_option("-n,--length", opt.length, "code length")->required();
  code_build->add_option("-g,--generator", opt.generator, "monic generator polynomial")->required();
  code_build->add_flag("--min-distance", opt.min_distance, "compute the minimum distance exhaustively");
  code_build->add_option("--budget", opt.budget, "maximum number of codewords to enumerate");

  auto* code_shift = code->add_subcommand("shift", "theta-cyclic shift of a codeword");
  add_prime(code_shift, opt);
  add_theta(code_shift, opt);
  add_json(code_shift, opt);
  code_shift->add_option("codeword", opt.operands, "codeword e0;e1;...")->required()->expected(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsageError;
  }

  try {
    if (autos->parsed()) return cmd_autos(opt, out);
    if (endos->parsed()) return cmd_endos(opt, out);
    if (table->parsed()) return cmd_table(opt, out);
    if (elem_mul->parsed()) return cmd_elem_mul(opt, out);
    if (elem_inv->parsed()) return cmd_elem_inv(opt, out);
    if (elem_classify->parsed()) return cmd_elem_classify(opt, out);
    if (poly_mul->parsed()) return cmd_poly_mul(opt, out);
    if (poly_divmod->parsed()) return cmd_poly_divmod(opt, out);
    if (code_build->parsed()) return cmd_code_build(opt, out);
    if (code_shift->parsed()) return cmd_code_shift(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitDomainError;
  }
  err << app.help();
  return kExitUsageError;
}

}  // namespace skewring::cli
