#pragma once

// JSON and CSV forms of reports, tables and series.

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "modinv/hilbert.hpp"
#include "modinv/invariants.hpp"
#include "modinv/ringcalc.hpp"

namespace modinv {

using Json = nlohmann::ordered_json;

// Integers that fit in int64 are emitted as JSON numbers, larger ones as decimal strings.
inline Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

// --- identity reports -------------------------------------------------------

inline Json to_json(const IdentityResult& r) {
  Json j{{"q", r.q}, {"tag", r.tag}, {"relation", r.relation}, {"status", r.pass ? "PASS" : "FAIL"}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

inline IdentityResult identity_result_from_json(const Json& j) {
  IdentityResult r;
  r.q = j.at("q").get<unsigned>();
  r.tag = j.at("tag").get<std::string>();
  r.relation = j.value("relation", std::string{});
  const auto status = j.at("status").get<std::string>();
  if (status != "PASS" && status != "FAIL") throw std::invalid_argument("status must be PASS or FAIL");
  r.pass = status == "PASS";
  if (j.contains("witness")) r.witness = j.at("witness").get<std::string>();
  return r;
}

// --- dimension tables -------------------------------------------------------

inline Json to_json(const DimensionTable& t) {
  return Json{{"group", group_kind_name(t.group)}, {"q", t.q}, {"dims", t.dims}};
}

inline DimensionTable dimension_table_from_json(const Json& j) {
  return {parse_group_kind(j.at("group").get<std::string>()), j.at("q").get<unsigned>(),
          j.at("dims").get<std::vector<std::uint64_t>>()};
}

inline std::string to_csv(const DimensionTable& t) {
  std::ostringstream os;
  os << "degree,dimension\n";
  for (std::size_t d = 0; d < t.dims.size(); ++d) os << d << ',' << t.dims[d] << '\n';
  return os.str();
}

// --- free-basis and generator reports ---------------------------------------

inline Json to_json(const DegreeCheck& c) {
  return Json{{"degree", c.degree}, {"count", c.count}, {"rank", c.rank}, {"dimension", c.dimension}};
}

inline DegreeCheck degree_check_from_json(const Json& j) {
  return {j.at("degree").get<int>(), j.at("count").get<std::uint64_t>(), j.at("rank").get<std::uint64_t>(),
          j.at("dimension").get<std::uint64_t>()};
}

inline Json to_json(const FreeBasisReport& r) {
  Json degrees = Json::array();
  for (const auto& c : r.degrees) degrees.push_back(to_json(c));
  return Json{{"basis", basis_name(r.basis)},
              {"q", r.q},
              {"group", group_kind_name(r.group)},
              {"hsop_degrees", r.hsop_degrees},
              {"max_degree", r.degrees.empty() ? -1 : r.degrees.back().degree},
              {"degrees", degrees},
              {"verdict", r.pass ? "PASS" : "FAIL"}};
}

inline FreeBasisReport free_basis_report_from_json(const Json& j) {
  FreeBasisReport r;
  r.basis = parse_basis_id(j.at("basis").get<std::string>());
  r.q = j.at("q").get<unsigned>();
  r.group = parse_group_kind(j.at("group").get<std::string>());
  r.hsop_degrees = j.at("hsop_degrees").get<std::vector<int>>();
  for (const auto& c : j.at("degrees")) r.degrees.push_back(degree_check_from_json(c));
  r.pass = j.at("verdict").get<std::string>() == "PASS";
  return r;
}

inline std::string to_csv(const std::vector<DegreeCheck>& rows) {
  std::ostringstream os;
  os << "degree,count,rank,dimension,ok\n";
  for (const auto& c : rows) os << c.degree << ',' << c.count << ',' << c.rank << ',' << c.dimension << ',' << (c.ok() ? 1 : 0) << '\n';
  return os.str();
}

inline Json to_json(const GeneratorReport& r) {
  Json degrees = Json::array();
  for (const auto& c : r.degrees) degrees.push_back(to_json(c));
  return Json{{"q", r.q},
              {"group", group_kind_name(r.group)},
              {"generators", r.generators},
              {"degrees", degrees},
              {"verdict", r.pass ? "PASS" : "FAIL"}};
}

// --- series -----------------------------------------------------------------

inline Json to_json(const HilbertSeries& h) {
  Json num = Json::array();
  for (const auto& c : h.numerator) num.push_back(bigint_to_json(c));
  return Json{{"numerator", num}, {"denominator", h.denominator}};
}

inline HilbertSeries hilbert_series_from_json(const Json& j) {
  HilbertSeries h;
  for (const auto& c : j.at("numerator")) h.numerator.push_back(bigint_from_json(c));
  h.denominator = j.at("denominator").get<std::vector<int>>();
  return h;
}

inline std::string expansion_csv(const std::vector<BigInt>& coeffs) {
  std::ostringstream os;
  os << "degree,coefficient\n";
  for (std::size_t d = 0; d < coeffs.size(); ++d) os << d << ',' << coeffs[d] << '\n';
  return os.str();
}

}  // namespace modinv
