#include "deltasg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "deltasg/betti.hpp"
#include "deltasg/delta.hpp"
#include "deltasg/oracle.hpp"

namespace deltasg::cli {

namespace {

using nlohmann::json;

json num(Int v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

template <class T>
json triple(const T& c) {
  return json::array({num(c[0]), num(c[1]), num(c[2])});
}

json values(const std::vector<Int>& v) {
  json a = json::array();
  for (Int x : v) a.push_back(num(x));
  return a;
}

json values(const DeltaSet& d) { return values(d.values()); }

struct Request {
  std::string format = "text";
  std::string method = "fast";
  std::string bound;
  std::vector<std::string> positional;
};

struct Outcome {
  json input = json::object();
  json result = json::object();
  json warnings = json::array();
  int code = kOk;
};

Int parse_int(const std::string& text, const char* what) {
  try {
    return Int::parse(text);
  } catch (const Error& e) {
    throw Error(Errc::InvalidArgument, std::string(what) + ": " + e.what());
  }
}

Generators generators(const Request& r, Outcome& o) {
  const Int a = parse_int(r.positional.at(0), "n1");
  const Int b = parse_int(r.positional.at(1), "n2");
  const Int c = parse_int(r.positional.at(2), "n3");
  o.input["generators"] = json::array({num(a), num(b), num(c)});
  return Generators::validate(a, b, c);
}

std::optional<Int> bound_of(const Request& r, Outcome& o) {
  if (r.bound.empty()) return std::nullopt;
  const Int b = parse_int(r.bound, "--bound");
  if (b.sign() < 0) throw Error(Errc::InvalidArgument, "--bound must be nonnegative");
  o.input["bound"] = num(b);
  return b;
}

json form_json(const StructuralForm& form) {
  if (const auto* one = std::get_if<OneBetti>(&form)) {
    return {{"type", "OneBetti"}, {"s1", num(one->s1)}, {"s2", num(one->s2)}, {"s3", num(one->s3)}};
  }
  if (const auto* two = std::get_if<TwoBetti>(&form)) {
    return {{"type", "TwoBetti"}, {"a", num(two->a)},   {"m1", num(two->m1)},
            {"m2", num(two->m2)}, {"b", num(two->b)},   {"c", num(two->c)},
            {"permutation", json::array({two->perm[0], two->perm[1], two->perm[2]})}};
  }
  return {{"type", "ThreeBetti"}};
}

json basis_json(const BasisPair& b) {
  return {{"v1", triple(b.v1)},         {"v2", triple(b.v2)},     {"delta1", num(b.delta1)},
          {"delta2", num(b.delta2)},    {"sigma", b.sigma},       {"gcd", num(b.g)}};
}

json report_json(const OracleReport& r) {
  return {{"bound", num(r.bound)},
          {"observed_delta", values(r.observed_delta)},
          {"fast_delta", values(r.fast_delta)},
          {"missing", values(r.missing)},
          {"extra", values(r.extra)},
          {"verdict", verdict_name(r.verdict)},
          {"experimental", r.experimental}};
}

const char* kExperimental =
    "EXPERIMENTAL: non-symmetric semigroup; the fast path seeds Euclid's set with the Betti-element "
    "distances. Cross-check with --method both or --method oracle.";

void cmd_info(const Request& r, Outcome& o) {
  const auto S = generators(r, o);
  const auto betti = betti_elements(S);
  const auto form = classify(S, betti);
  json bj = json::array();
  for (Int b : betti.elements) {
    json zs = json::array();
    for (const auto& z : factorizations(S, b)) zs.push_back(triple(z));
    bj.push_back({{"element", num(b)}, {"factorizations", zs}, {"delta", values(delta_of_element(S, b))}});
  }
  o.result = {{"atoms", triple(S.atoms())},
              {"frobenius", num(frobenius_number(S))},
              {"symmetric", is_symmetric(S)},
              {"betti", bj},
              {"form", form_json(form)}};
  if (is_symmetric_form(form)) o.result["basis"] = basis_json(basis_and_deltas(S, form));
}

void cmd_delta(const Request& r, Outcome& o) {
  const auto S = generators(r, o);
  o.input["method"] = r.method;
  const auto bound = bound_of(r, o);
  if (r.method == "fast") {
    const auto form = classify(S, betti_elements(S));
    if (is_symmetric_form(form)) {
      o.result["delta"] = values(delta_set_fast(S));
    } else {
      o.warnings.push_back(kExperimental);
      o.result["delta"] = values(delta_set_nonsymmetric(S));
      o.result["experimental"] = true;
    }
  } else if (r.method == "oracle") {
    const Int b = bound ? *bound : default_bound(S);
    o.result["bound"] = num(b);
    o.result["delta"] = values(delta_set_bruteforce(S, b));
  } else {
    const auto rep = verify(S, bound);
    if (rep.experimental) o.warnings.push_back(kExperimental);
    o.result = report_json(rep);
    o.result["delta"] = values(rep.fast_delta);
    if (rep.verdict == Verdict::Mismatch) o.code = kMismatch;
  }
}

void cmd_element(const Request& r, Outcome& o) {
  const auto S = generators(r, o);
  const Int s = parse_int(r.positional.at(3), "s");
  o.input["element"] = num(s);
  if (s.sign() < 0) throw Error(Errc::InvalidArgument, "s must be nonnegative");
  if (enumeration_cost(S, s) > tuple_budget()) {
    throw Error(Errc::BudgetExceeded, "enumerating Z(" + s.to_string() + ") exceeds the tuple budget");
  }
  const auto zs = factorizations(S, s);
  if (zs.empty()) throw Error(Errc::ElementNotInSemigroup, s.to_string() + " is not in the semigroup");
  json zj = json::array();
  for (const auto& z : zs) zj.push_back(triple(z));
  const auto lengths = length_set(S, s);
  o.result = {{"factorizations", zj},
              {"lengths", values(lengths)},
              {"delta", values(consecutive_differences(lengths))},
              {"nabla_connected", nabla_graph_connected(S, s)}};
}

void cmd_euclid(const Request& r, Outcome& o) {
  const Int d1 = parse_int(r.positional.at(0), "delta1");
  const Int d2 = parse_int(r.positional.at(1), "delta2");
  o.input["deltas"] = json::array({num(d1), num(d2)});
  const auto e = euclid_set(d1, d2);
  json levels = json::array();
  for (const auto& l : e.levels) {
    levels.push_back({{"upper", num(l.upper)}, {"lower", num(l.lower)}, {"values", values(l.values)}});
  }
  o.result = {{"eta", values(e.eta)},
              {"gcd", num(e.g)},
              {"levels", levels},
              {"union", values(e.values)},
              {"delta", values(std::vector<Int>(e.values.begin() + 1, e.values.end()))}};
}

void cmd_witness(const Request& r, Outcome& o) {
  const auto S = generators(r, o);
  const Int d = parse_int(r.positional.at(3), "d");
  o.input["distance"] = num(d);
  const auto data = analyze_symmetric(S);
  const auto w = witness(data, d);
  const auto checked = check_witness(S, w, std::min(tuple_budget(), kWitnessEnumerationBudget));
  o.result = {{"distance", num(w.distance)},
              {"element", num(w.element)},
              {"z", triple(w.longer)},
              {"z_prime", triple(w.shorter)},
              {"vector", triple(w.vector)},
              {"betti_fallback", w.betti_fallback},
              {"verified", checked ? json(*checked) : json(nullptr)}};
  if (!checked) o.warnings.push_back("adjacency not verified: enumeration of Z(s) exceeds the budget");
  if (checked && !*checked) o.code = kMismatch;
}

void cmd_verify(const Request& r, Outcome& o) {
  const auto S = generators(r, o);
  const auto bound = bound_of(r, o);
  const auto rep = verify(S, bound);
  if (rep.experimental) o.warnings.push_back(kExperimental);
  o.result = report_json(rep);
  if (rep.verdict == Verdict::Mismatch) o.code = kMismatch;
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::NonSymmetric:
    case Errc::NotNonSymmetric:
    case Errc::MoreThanTwoDistinctValues:
      return kUnsupported;
    case Errc::InternalInvariant:
      return kMismatch;
    default:
      return kInvalidInput;
  }
}

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_array = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return x.is_primitive(); });
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array() && !scalar_array(v)) {
      out << pad << it.key() << ":\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render_text(item, out, indent + 4);
        } else {
          out << pad << "  - " << item.dump() << "\n";
        }
      }
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta sets of three-generated numerical semigroups", "deltasg"};
  app.require_subcommand(1);
  Request req;

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--format", req.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };
  auto* info = add("info", "Generators, Frobenius number, Betti elements, structural form");
  auto* delta = add("delta", "Delta set of the semigroup");
  auto* element = add("element", "Factorizations, lengths and Delta of one element");
  auto* euclid = add("euclid", "Euclid's set of a pair of distances");
  auto* wit = add("witness", "Element realizing a distance, with both factorizations");
  auto* ver = add("verify", "Compare the fast path against brute-force enumeration");
  const std::pair<CLI::App*, std::size_t> arity[] = {{info, 3}, {delta, 3}, {element, 4},
                                                     {euclid, 2}, {wit, 4}, {ver, 3}};
  for (auto [sub, n] : arity) {
    sub->add_option("args", req.positional, "integers")->required()->expected(static_cast<int>(n));
  }
  delta->add_option("--method", req.method, "fast, oracle or both")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));
  delta->add_option("--bound", req.bound, "largest element enumerated by the oracle");
  ver->add_option("--bound", req.bound, "largest element enumerated by the oracle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  Outcome o;
  try {
    if (command == "info") cmd_info(req, o);
    if (command == "delta") cmd_delta(req, o);
    if (command == "element") cmd_element(req, o);
    if (command == "euclid") cmd_euclid(req, o);
    if (command == "witness") cmd_witness(req, o);
    if (command == "verify") cmd_verify(req, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const int code = exit_code_for(e.code());
    if (code == kUnsupported) err << "hint: use --method oracle for non-symmetric semigroups\n";
    return code;
  }

  const json doc = {{"schema_version", kSchemaVersion},
                    {"command", command},
                    {"input", o.input},
                    {"result", o.result},
                    {"warnings", o.warnings}};
  if (req.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    render_text(doc, out, 0);
  }
  for (const auto& w : o.warnings) err << "warning: " << w.get<std::string>() << "\n";
  return o.code;
}

}  // namespace deltasg::cli
