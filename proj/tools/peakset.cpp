// peakset: command-line front end for the peak-set library.
//
// Exit codes: 0 success, 1 argument or cap error, 2 formula/oracle mismatch or
// failed suite.

#include "peakset/peakset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace peakset;

constexpr int kExitOk = 0;
constexpr int kExitArgs = 1;
constexpr int kExitMismatch = 2;

struct Output {
  json doc = json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit_code = kExitOk;
};

json count_json(const Count& c) {
  if (c >= 0 && c <= Count(std::numeric_limits<std::uint64_t>::max())) return json(c.convert_to<std::uint64_t>());
  return json(c.str());
}

json set_json(const PeakSet& s) { return json(std::vector<int>(s.indices().begin(), s.indices().end())); }

std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_text(const json& doc, std::ostream& os, const std::string& indent = "") {
  for (const auto& [key, v] : doc.items()) {
    if (v.is_object()) {
      os << indent << key << ":\n";
      print_text(v, os, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << key << ":\n";
      for (const auto& item : v) {
        os << indent << "  -\n";
        print_text(item, os, indent + "    ");
      }
    } else if (v.is_array()) {
      os << indent << key << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
      os << "\n";
    } else {
      os << indent << key << ": " << scalar_text(v) << "\n";
    }
  }
}

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.doc.dump(2) << "\n";
  } else if (format == "csv") {
    auto line = [](const std::vector<std::string>& row) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + csv_field(row[i]);
      return s;
    };
    std::cout << line(out.csv_header) << "\r\n";
    for (const auto& row : out.csv_rows) std::cout << line(row) << "\r\n";
  } else {
    print_text(out.doc, std::cout);
  }
}

// Common options ------------------------------------------------------------

EnumerationLimits limits_from(const std::optional<int>& cap) {
  EnumerationLimits l;
  if (cap) l.max_sn = l.max_c = l.max_d = *cap;
  return l;
}

struct Common {
  std::string type = "A";
  bool hat = false;
  std::string set;
  int n = 0;
  std::string ending = "any";
  std::string method = "formula";
  std::string format = "json";
  std::optional<int> max_enum_n;

  EnumerationLimits limits() const { return limits_from(max_enum_n); }
};

Ending parse_ending(const std::string& text) {
  if (text == "any") return Ending::any();
  if (text == "asc") return Ending::any_ascent();
  if (text == "desc") return Ending::any_descent();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const int k = detail::parse_int(std::string_view(text).substr(colon + 1));
    if (head == "asc") return Ending::ascent_to(k);
    if (head == "desc") return Ending::descent_to(k);
  }
  throw ArgumentError("unknown ending '" + text + "' (expected any, asc, desc, asc:K or desc:K)");
}

std::string ending_text(const Ending& e) {
  switch (e.kind) {
    case EndingKind::Any: return "any";
    case EndingKind::AnyAscent: return "asc";
    case EndingKind::AnyDescent: return "desc";
    case EndingKind::AscentTo: return "asc:" + std::to_string(e.value);
    case EndingKind::DescentTo: return "desc:" + std::to_string(e.value);
  }
  return "any";
}

MirrorKind mirror_kind(const std::string& type) {
  if (type == "C") return MirrorKind::C;
  if (type == "D") return MirrorKind::D;
  throw ArgumentError("type must be C or D here, got '" + type + "'");
}

/// The family named by the common flags, checked for consistency.
struct Query {
  std::string type;
  bool hat = false;
  PeakSet set;
  int n = 0;
  Ending ending;
};

Query make_query(const Common& c) {
  Query q{c.type, c.hat, parse_peak_set(c.set), c.n, parse_ending(c.ending)};
  if (q.n < 1) throw ArgumentError("--n must be at least 1");
  if (q.type == "A") {
    if (q.hat) throw ArgumentError("--hat applies only to types C and D");
  } else {
    mirror_kind(q.type);
    if (q.ending != Ending::any()) throw ArgumentError("--ending applies only to type A");
  }
  for (int i : q.set.indices())
    if (i > q.n) throw ArgumentError("peak index " + std::to_string(i) + " exceeds n=" + std::to_string(q.n));
  return q;
}

void describe(json& doc, const Query& q) {
  doc["type"] = q.type;
  doc["hatted"] = q.hat;
  doc["set"] = set_json(q.set);
  doc["n"] = q.n;
  if (q.type == "A") doc["ending"] = ending_text(q.ending);
}

Count formula_count(const Query& q) {
  if (q.type == "A") return count_family(RefinedFamily{q.set, q.n, q.ending});
  const MirrorKind kind = mirror_kind(q.type);
  if (!q.hat) return count_pc_pd(q.set, q.n, kind);
  if (q.n < 2) return q.set.empty() ? Count(kind == MirrorKind::C ? 2 : 1) : Count(0);
  const bool include_n = q.set.contains(q.n);
  const PeakSet rest = include_n ? q.set.without(q.n) : q.set;
  return kind == MirrorKind::C ? count_hat_c(rest, q.n, include_n) : count_hat_d(rest, q.n, include_n);
}

template <typename Visitor>
void for_each_member(const Query& q, const EnumerationLimits& limits, Visitor&& visit) {
  if (q.type == "A") {
    for_each_in_family(RefinedFamily{q.set, q.n, q.ending}, [&](const Permutation& p) { visit(to_text(p)); }, limits);
    return;
  }
  for_each_mirrored_with_peaks(
      q.n, mirror_kind(q.type), q.set, q.hat, [&](const MirroredPermutation& m) { visit(to_text(m)); }, limits);
}

Count brute_count(const Query& q, const EnumerationLimits& limits) {
  Count total = 0;
  for_each_member(q, limits, [&](const std::string&) { ++total; });
  return total;
}

// Commands ------------------------------------------------------------------

Output run_count(const Common& c) {
  const Query q = make_query(c);
  Output out;
  out.doc["command"] = "count";
  describe(out.doc, q);
  out.doc["method"] = c.method;
  out.csv_header = {"type", "hatted", "set", "n", "method", "formula", "brute", "match"};
  std::optional<Count> f, b;
  if (c.method == "formula" || c.method == "both") f = formula_count(q);
  if (c.method == "brute" || c.method == "both") b = brute_count(q, c.limits());
  if (f) out.doc["formula"] = count_json(*f);
  if (b) out.doc["brute"] = count_json(*b);
  if (f && b) {
    const bool match = *f == *b;
    out.doc["match"] = match;
    if (!match) out.exit_code = kExitMismatch;
  }
  out.csv_rows.push_back({q.type, q.hat ? "true" : "false", to_text(q.set), std::to_string(q.n), c.method,
                          f ? f->str() : "", b ? b->str() : "", f && b ? (*f == *b ? "true" : "false") : ""});
  return out;
}

Output run_enumerate(const Common& c) {
  const Query q = make_query(c);
  Output out;
  out.doc["command"] = "enumerate";
  describe(out.doc, q);
  json members = json::array();
  out.csv_header = {"index", "word"};
  for_each_member(q, c.limits(), [&](const std::string& w) {
    out.csv_rows.push_back({std::to_string(members.size() + 1), w});
    members.push_back(w);
  });
  out.doc["count"] = members.size();
  out.doc["members"] = std::move(members);
  return out;
}

Output run_poly(const std::string& set_text, std::optional<int> alpha_k, bool delta, std::optional<int> at_n) {
  if (alpha_k && delta) throw ArgumentError("--alpha-k and --delta are mutually exclusive");
  const PeakSet s = parse_peak_set(set_text);
  const PeakPolynomial p = alpha_k ? poly_alpha_k(s, *alpha_k) : delta ? poly_delta(s) : peak_poly(s);
  Output out;
  out.doc["command"] = "poly";
  out.doc["set"] = set_json(s);
  out.doc["kind"] = alpha_k ? "alpha:" + std::to_string(*alpha_k) : delta ? "delta" : "peak";
  json coeffs = json::array();
  for (const Count& x : p.coefficients) coeffs.push_back(count_json(x));
  out.doc["coefficients"] = coeffs;
  out.doc["base_offset"] = p.base_offset;
  out.doc["valid_from"] = p.valid_from;
  out.doc["degree"] = p.degree();
  out.doc["rendered"] = render(p);
  json mono = json::array();
  for (const Rational& r : p.monomial_coefficients()) mono.push_back(r.str());
  out.doc["monomial_coefficients"] = mono;
  if (at_n) {
    if (*at_n < p.valid_from)
      throw ArgumentError("--n " + std::to_string(*at_n) + " is below valid_from " + std::to_string(p.valid_from));
    out.doc["value"] = count_json(p(*at_n));
  }
  out.csv_header = {"j", "coefficient"};
  for (std::size_t j = 0; j < p.coefficients.size(); ++j)
    out.csv_rows.push_back({std::to_string(j), p.coefficients[j].str()});
  return out;
}

Output run_bundle(const std::string& type, const std::string& base_text, const EnumerationLimits& limits) {
  const MirrorKind kind = mirror_kind(type);
  const Permutation base = parse_permutation(base_text);
  check_mirrored_cap(base.size(), kind, limits);
  const PatternBundle b = pattern_bundle(base, kind);
  Output out;
  out.doc["command"] = "bundle";
  out.doc["type"] = type;
  out.doc["base"] = to_text(base);
  out.doc["peak_set"] = set_json(peak_set(base));
  out.doc["size"] = b.members.size();
  json members = json::array();
  out.csv_header = {"index", "word"};
  for (const auto& m : b.members) {
    members.push_back(to_text(m));
    out.csv_rows.push_back({std::to_string(members.size()), to_text(m)});
  }
  out.doc["members"] = std::move(members);
  return out;
}

Output run_bijection(const std::string& map, const std::string& type, const std::string& input) {
  Output out;
  out.doc["command"] = "bijection";
  out.doc["map"] = map;
  out.doc["input"] = input;
  std::string image;
  if (map == "f" || map == "gf") {
    const MirroredPermutation m = parse_mirrored(input, MirrorKind::C);
    const SignedPermutation f = map_f(m);
    image = to_text(map == "f" ? f : map_g(f));
    if (map == "gf") {
      const PeakSet hatted = mirrored_peak_set(m, true);
      out.doc["hatted_peak_set"] = set_json(hatted);
      out.doc["image_peak_set"] = set_json(signed_peak_set(map_g(f)));
      out.doc["reflected"] = set_json(reflect_set(hatted, m.half_n()));
    }
  } else if (map == "f-inverse") {
    image = to_text(map_f_inverse(parse_signed(input)));
  } else if (map == "g") {
    image = to_text(map_g(parse_signed(input)));
  } else if (map == "delta") {
    image = delta_map(parse_mirrored(input, mirror_kind(type))).letters();
  } else if (map == "theta") {
    image = to_text(theta_map(TernarySequence(input, parity_kind_of(mirror_kind(type)))));
  } else {
    throw ArgumentError("unknown map '" + map + "' (expected f, f-inverse, g, gf, delta or theta)");
  }
  out.doc["image"] = image;
  out.csv_header = {"map", "input", "image"};
  out.csv_rows.push_back({map, input, image});
  return out;
}

Output run_verify(const std::string& suite, int max_n, const EnumerationLimits& limits) {
  if (max_n < 1) throw ArgumentError("--max-n must be at least 1");
  const auto results = run_suites(suite, max_n, limits);
  Output out;
  out.doc["command"] = "verify";
  out.doc["suite"] = suite;
  out.doc["max_n"] = max_n;
  json arr = json::array();
  std::uint64_t checks = 0, failures = 0;
  out.csv_header = {"suite", "checks", "failures", "passed"};
  for (const auto& r : results) {
    checks += r.checks;
    failures += r.failures;
    arr.push_back({{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"passed", r.ok()},
                   {"messages", r.messages}});
    out.csv_rows.push_back({r.name, std::to_string(r.checks), std::to_string(r.failures), r.ok() ? "true" : "false"});
  }
  out.doc["suites"] = std::move(arr);
  out.doc["checks"] = checks;
  out.doc["failures"] = failures;
  out.doc["passed"] = failures == 0;
  if (failures) out.exit_code = kExitMismatch;
  return out;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_cap(CLI::App* cmd, std::optional<int>& cap) {
  cmd->add_option("--max-enum-n", cap,
                  "Override the enumeration cap (hard ceilings: " + std::to_string(EnumerationLimits::kHardMaxSn) +
                      " for S_n, " + std::to_string(EnumerationLimits::kHardMaxMirrored) + " for C_n and D_n)");
}

void add_family(CLI::App* cmd, Common& c) {
  cmd->add_option("--type", c.type, "Group: A (S_n), C or D")->check(CLI::IsMember({"A", "C", "D"}));
  cmd->add_flag("--hat", c.hat, "Count peaks among the first n+1 entries (C and D)");
  cmd->add_option("--set", c.set, "Peak set as comma-separated indices; \"\" is the empty set");
  cmd->add_option("--n", c.n, "Size n")->required();
  cmd->add_option("--ending", c.ending, "Type A ending: any, asc, desc, asc:K, desc:K");
  add_format(cmd, c.format);
  add_cap(cmd, c.max_enum_n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts, enumerates and verifies permutations by peak set in S_n, C_n and D_n."};
  app.require_subcommand(1);

  Common count_opts, enum_opts;
  auto* count_cmd = app.add_subcommand("count", "Size of a peak-set family");
  add_family(count_cmd, count_opts);
  count_cmd->add_option("--method", count_opts.method, "formula, brute or both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));

  auto* enum_cmd = app.add_subcommand("enumerate", "List a peak-set family");
  add_family(enum_cmd, enum_opts);

  std::string poly_set, poly_type = "A", poly_format = "json";
  std::optional<int> alpha_k, poly_n;
  bool delta = false;
  auto* poly_cmd = app.add_subcommand("poly", "Binomial-basis peak polynomial");
  poly_cmd->add_option("--set", poly_set, "Peak set");
  poly_cmd->add_option("--alpha-k", alpha_k, "Fit |P(S;n)^{/k}| (ends in an ascent to k)");
  poly_cmd->add_flag("--delta", delta, "Fit the count ending in a descent");
  poly_cmd->add_option("--n", poly_n, "Also evaluate at n");
  poly_cmd->add_option("--type", poly_type, "Accepted and ignored; polynomials live in S_n")
      ->check(CLI::IsMember({"A", "C", "D"}));
  add_format(poly_cmd, poly_format);

  std::string bundle_type = "C", bundle_base, bundle_format = "json";
  std::optional<int> bundle_cap;
  auto* bundle_cmd = app.add_subcommand("bundle", "Pattern bundle of a base permutation");
  bundle_cmd->add_option("--type", bundle_type, "C or D")->check(CLI::IsMember({"C", "D"}));
  bundle_cmd->add_option("--base", bundle_base, "Base permutation, e.g. 231")->required();
  add_format(bundle_cmd, bundle_format);
  add_cap(bundle_cmd, bundle_cap);

  std::string bij_map, bij_type = "C", bij_input, bij_format = "json";
  auto* bij_cmd = app.add_subcommand("bijection", "Apply F, G, G.F, Delta or Theta");
  bij_cmd->add_option("--map", bij_map, "f, f-inverse, g, gf, delta or theta")->required();
  bij_cmd->add_option("--type", bij_type, "C or D (delta and theta)")->check(CLI::IsMember({"C", "D"}));
  bij_cmd->add_option("--input", bij_input, "Mirrored word (132|546), signed word (0 -1 2) or ABC sequence")
      ->required();
  add_format(bij_cmd, bij_format);

  std::string suite = "all", verify_format = "json";
  int max_n = 5;
  std::optional<int> verify_cap;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  verify_cmd->add_option("--suite", suite, "Suite name or all");
  verify_cmd->add_option("--max-n", max_n, "Largest n exercised");
  add_format(verify_cmd, verify_format);
  add_cap(verify_cmd, verify_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitArgs;
  }

  try {
    Output out;
    std::string format;
    if (*count_cmd) {
      out = run_count(count_opts);
      format = count_opts.format;
    } else if (*enum_cmd) {
      out = run_enumerate(enum_opts);
      format = enum_opts.format;
    } else if (*poly_cmd) {
      out = run_poly(poly_set, alpha_k, delta, poly_n);
      format = poly_format;
    } else if (*bundle_cmd) {
      out = run_bundle(bundle_type, bundle_base, limits_from(bundle_cap));
      format = bundle_format;
    } else if (*bij_cmd) {
      out = run_bijection(bij_map, bij_type, bij_input);
      format = bij_format;
    } else {
      out = run_verify(suite, max_n, limits_from(verify_cap));
      format = verify_format;
    }
    emit(out, format);
    return out.exit_code;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const FitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
