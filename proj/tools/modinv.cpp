// Command-line front end: every check and computation as a batch command.
//
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 on usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "modinv/modinv.hpp"

namespace {

using namespace modinv;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string q = "";
  std::string group = "sl2";
  std::string basis = "S";
  int max_deg = 12;
  std::string format = "plain";
  std::string out;
  std::string poly;
};

unsigned parse_q(const std::string& text) {
  if (text.empty()) throw UsageError("--q is required");
  std::uint64_t q = 0;
  try {
    const auto caret = text.find('^');
    std::size_t used = 0;
    if (caret == std::string::npos) {
      q = std::stoull(text, &used);
      if (used != text.size()) throw UsageError("bad q '" + text + "'");
    } else {
      const auto p = std::stoull(text.substr(0, caret), &used);
      if (used != caret) throw UsageError("bad q '" + text + "'");
      const auto rtext = text.substr(caret + 1);
      const auto r = std::stoull(rtext, &used);
      if (used != rtext.size() || r == 0 || r > 16) throw UsageError("bad q '" + text + "'");
      q = 1;
      for (std::uint64_t i = 0; i < r; ++i) {
        q *= p;
        if (q > (1u << 16)) throw UsageError("q = " + text + " is too large");
      }
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad q '" + text + "'");
  }
  try {
    split_prime_power(q);
  } catch (const std::invalid_argument&) {
    throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  }
  if (q > (1u << 16)) throw UsageError("q = " + std::to_string(q) + " is too large");
  return static_cast<unsigned>(q);
}

GroupKind parse_cli_group(const std::string& g) {
  if (g != "p2" && g != "sl2" && g != "gl2") throw UsageError("--group must be one of p2, sl2, gl2");
  return parse_group_kind(g);
}

void check_max_deg(int d) {
  try {
    check_degree_guard(d);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--max-deg: ") + e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot open '" + o.out + "' for writing");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Options& o, bool csv_ok) {
  if (o.format == "csv" && !csv_ok) throw UsageError("--format csv is not available for this command");
}

// --- commands ---------------------------------------------------------------

int cmd_identities(const Options& o) {
  require_format(o, false);
  const unsigned q = parse_q(o.q);
  const InvariantCatalog cat = InvariantCatalog::for_order(q);
  std::vector<IdentityResult> results;
  for (auto t : all_identity_tags()) results.push_back(verify_identity(cat, t));
  const std::vector<IdentityResult> extra = {verify_h_star_symmetry(cat), verify_h_first_is_c21s(cat),
                                             verify_h_last_is_c21(cat)};
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass;
  bool all = passed == results.size();
  for (const auto& r : extra) all = all && r.pass;

  if (o.format == "json") {
    Json j{{"q", q}, {"identities", Json::array()}, {"symmetries", Json::array()}, {"pass", all}};
    for (const auto& r : results) j["identities"].push_back(to_json(r));
    for (const auto& r : extra) j["symmetries"].push_back(to_json(r));
    emit(o, dump(j));
  } else {
    std::ostringstream os;
    auto line = [&](const IdentityResult& r) {
      os << (r.pass ? "PASS  " : "FAIL  ") << r.tag << "  " << r.relation << '\n';
      if (r.witness) os << "      lhs - rhs = " << *r.witness << '\n';
    };
    os << "q = " << q << '\n';
    for (const auto& r : results) line(r);
    for (const auto& r : extra) line(r);
    os << passed << '/' << results.size() << " identities PASS\n";
    emit(o, os.str());
  }
  return all ? 0 : kExitFail;
}

int cmd_dims(const Options& o) {
  const unsigned q = parse_q(o.q);
  const GroupKind g = parse_cli_group(o.group);
  check_max_deg(o.max_deg);
  const DimensionTable t = dimension_table(GroupId{g, field_of_order(q)}, o.max_deg);
  if (o.format == "json") emit(o, dump(to_json(t)));
  else if (o.format == "csv") emit(o, to_csv(t));
  else {
    std::ostringstream os;
    os << group_kind_name(g) << "(F_" << q << ") invariant dimensions\n";
    for (std::size_t d = 0; d < t.dims.size(); ++d) os << "  d = " << d << ": " << t.dims[d] << '\n';
    emit(o, os.str());
  }
  return 0;
}

HilbertSeries series_for(GroupKind g, unsigned q) {
  switch (g) {
    case GroupKind::SL2: return sl2_series_closed_form(q);
    case GroupKind::GL2: return from_free_module(basis_catalog(q, BasisId::D).degrees(), hsop_degrees(GroupKind::GL2, q));
    case GroupKind::P2: return from_free_module(basis_catalog(q, BasisId::P).degrees(), hsop_degrees(GroupKind::P2, q));
    default: break;
  }
  throw UsageError("no series for group " + group_kind_name(g));
}

int cmd_hilbert(const Options& o) {
  const unsigned q = parse_q(o.q);
  const GroupKind g = parse_cli_group(o.group);
  if (o.max_deg < 0) throw UsageError("--max-deg must be nonnegative");
  const HilbertSeries h = series_for(g, q);
  const auto coeffs = expand(h, o.max_deg);
  if (o.format == "json") {
    Json exp = Json::array();
    for (const auto& c : coeffs) exp.push_back(bigint_to_json(c));
    emit(o, dump(Json{{"group", group_kind_name(g)}, {"q", q}, {"series", to_json(h)}, {"expansion", exp}}));
  } else if (o.format == "csv") {
    emit(o, expansion_csv(coeffs));
  } else {
    std::ostringstream os;
    os << "H(" << group_kind_name(g) << ", F_" << q << ") = " << to_string(h) << '\n';
    os << "expansion:";
    for (const auto& c : coeffs) os << ' ' << c;
    os << '\n';
    emit(o, os.str());
  }
  return 0;
}

int cmd_gorenstein(const Options& o) {
  require_format(o, false);
  const unsigned q = parse_q(o.q);
  const GroupKind g = parse_cli_group(o.group);
  const HilbertSeries h = series_for(g, q);
  const GorensteinResult r = gorenstein_check(h);
  if (o.format == "json") {
    Json j{{"group", group_kind_name(g)}, {"q", q}, {"symmetric", r.symmetric()}};
    if (r.exponent) j["i"] = *r.exponent;
    if (r.asymmetry) {
      j["asymmetry"] = Json{{"low_exponent", r.asymmetry->low_exponent},
                            {"high_exponent", r.asymmetry->high_exponent},
                            {"low_coefficient", bigint_to_json(r.asymmetry->low_coefficient)},
                            {"high_coefficient", bigint_to_json(r.asymmetry->high_coefficient)}};
    }
    emit(o, dump(j));
  } else if (r.exponent) {
    emit(o, "i = " + std::to_string(*r.exponent) + "\n");
  } else {
    const auto& a = *r.asymmetry;
    emit(o, "not symmetric: t^" + std::to_string(a.low_exponent) + " has " + a.low_coefficient.str() + ", t^" +
                std::to_string(a.high_exponent) + " has " + a.high_coefficient.str() + "\n");
  }
  return r.symmetric() ? 0 : kExitFail;
}

std::string degree_table(const std::vector<DegreeCheck>& rows) {
  std::ostringstream os;
  os << "  degree  count  rank  dim\n";
  for (const auto& c : rows)
    os << "  " << c.degree << "  " << c.count << "  " << c.rank << "  " << c.dimension << (c.ok() ? "" : "  <-") << '\n';
  return os.str();
}

int cmd_basis_check(const Options& o) {
  const unsigned q = parse_q(o.q);
  check_max_deg(o.max_deg);
  BasisId b;
  try {
    b = parse_basis_id(o.basis);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const FreeBasisReport r = verify_free_basis(b, q, o.max_deg);
  if (o.format == "json") emit(o, dump(to_json(r)));
  else if (o.format == "csv") emit(o, to_csv(r.degrees));
  else {
    std::ostringstream os;
    os << "basis " << basis_name(b) << " over F_" << q << " for " << group_kind_name(r.group) << ", hsop degrees {";
    for (std::size_t i = 0; i < r.hsop_degrees.size(); ++i) os << (i ? "," : "") << r.hsop_degrees[i];
    os << "}, checked through degree " << o.max_deg << '\n' << degree_table(r.degrees) << (r.pass ? "PASS" : "FAIL") << '\n';
    emit(o, os.str());
  }
  return r.pass ? 0 : kExitFail;
}

int cmd_generators_check(const Options& o) {
  const unsigned q = parse_q(o.q);
  const GroupKind g = parse_cli_group(o.group);
  check_max_deg(o.max_deg);
  if (g == GroupKind::P2) throw UsageError("generators-check supports sl2 and gl2");
  const InvariantCatalog cat = InvariantCatalog::for_order(q);
  const auto gens = g == GroupKind::GL2 ? gl2_generators(cat) : sl2_generators(cat);
  const GeneratorReport r = verify_generators(gens, g, cat.field(), o.max_deg);
  if (o.format == "json") emit(o, dump(to_json(r)));
  else if (o.format == "csv") emit(o, to_csv(r.degrees));
  else {
    std::ostringstream os;
    os << group_kind_name(g) << "(F_" << q << ") generators:";
    for (const auto& n : r.generators) os << ' ' << n;
    os << '\n';
    for (const auto& c : r.degrees)
      os << "  d = " << c.degree << ": rank " << c.rank << " / dim " << c.dimension << (c.rank == c.dimension ? "" : "  <-")
         << '\n';
    os << (r.pass ? "PASS" : "FAIL") << '\n';
    emit(o, os.str());
  }
  return r.pass ? 0 : kExitFail;
}

int cmd_nonmembership_h1(const Options& o) {
  require_format(o, false);
  const unsigned q = parse_q(o.q);
  if (q < 3) throw UsageError("nonmembership-h1 needs q >= 3");
  const NonmembershipReport r = subalgebra_nonmembership_h1(InvariantCatalog::for_order(q));
  if (o.format == "json") {
    emit(o, dump(Json{{"q", q},
                      {"h1_in_span", r.h1_in_span},
                      {"c21_in_span", r.c21_in_span},
                      {"h0_in_span", r.h0_in_span},
                      {"verdict", r.pass() ? "PASS" : "FAIL"}}));
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream os;
    os << "span of d22, c21, d22s, c21s, u1s, u0, u1 in degree " << q * q - q << " over F_" << q << '\n'
       << "  contains h1:  " << yn(r.h1_in_span) << '\n'
       << "  contains c21: " << yn(r.c21_in_span) << '\n'
       << "  contains h0:  " << yn(r.h0_in_span) << '\n'
       << (r.pass() ? "PASS" : "FAIL") << '\n';
    emit(o, os.str());
  }
  return r.pass() ? 0 : kExitFail;
}

int cmd_trace(const Options& o) {
  require_format(o, false);
  const unsigned q = parse_q(o.q);
  if (o.poly.empty()) throw UsageError("--poly is required");
  const Field f = field_of_order(q);
  Poly p;
  try {
    p = parse_poly(f, o.poly);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot parse --poly: ") + e.what());
  }
  if (!is_invariant(p, GroupId{GroupKind::SL2, f})) throw UsageError("--poly is not SL2-invariant");
  const Poly t = relative_trace(p);
  if (o.format == "json") emit(o, dump(Json{{"q", q}, {"input", p.to_string()}, {"trace", t.to_string()}}));
  else emit(o, t.to_string() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of a vector and a covector for 2x2 groups over finite fields"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"plain", "json", "csv"};

  auto add_q = [&](CLI::App* s) { s->add_option("--q", o.q, "field size: an integer or p^r")->required(); };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "plain, json or csv")->check(CLI::IsMember(formats));
    s->add_option("--out", o.out, "write output to this file instead of stdout");
  };
  auto add_group = [&](CLI::App* s) { s->add_option("--group", o.group, "p2, sl2 or gl2"); };
  auto add_deg = [&](CLI::App* s) { s->add_option("--max-deg", o.max_deg, "largest degree to compute"); };

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    bool group, deg, basis, poly;
  };
  const Cmd cmds[] = {
      {"identities", "verify every polynomial identity among the named invariants", cmd_identities, false, false, false, false},
      {"dims", "dimensions of the graded pieces of an invariant ring", cmd_dims, true, true, false, false},
      {"hilbert", "Hilbert series and its expansion through --max-deg", cmd_hilbert, true, true, false, false},
      {"gorenstein", "exponent i with H(1/t) = t^i H(t)", cmd_gorenstein, true, false, false, false},
      {"basis-check", "certify a free module basis through --max-deg", cmd_basis_check, false, true, true, false},
      {"generators-check", "check that a generating set spans every degree", cmd_generators_check, true, true, false, false},
      {"nonmembership-h1", "check h1 lies outside the subalgebra of the other generators", cmd_nonmembership_h1, false, false, false, false},
      {"trace", "relative trace of an SL2-invariant polynomial into the GL2-invariants", cmd_trace, false, false, false, true},
  };
  int (*selected)(const Options&) = nullptr;
  for (const auto& c : cmds) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    add_q(s);
    add_format(s);
    if (c.group) add_group(s);
    if (c.deg) add_deg(s);
    if (c.basis) s->add_option("--basis", o.basis, "P, S, G or D");
    if (c.poly) s->add_option("--poly", o.poly, "polynomial in x1, x2, y1, y2")->required();
    s->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    return selected(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
