#include "cyclosemi/serialize.hpp"

#include <stdexcept>

namespace cyclosemi {

namespace {

std::string dec(std::int64_t v) { return std::to_string(v); }

bool is_decimal_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Json poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const BigInt& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string() || !is_decimal_integer(item.get<std::string>())) {
      throw std::invalid_argument("polynomial coefficients must be decimal integer strings");
    }
    coeffs.emplace_back(item.get<std::string>());
  }
  return IntPoly(std::move(coeffs));
}

Json integers_to_json(const std::vector<Element>& values) {
  Json arr = Json::array();
  for (Element v : values) arr.push_back(dec(v));
  return arr;
}

Json analysis_record(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = integers_to_json(s.generators());
  j["minimal_generators"] = integers_to_json(s.minimal_generators());
  j["embedding_dimension"] = dec(static_cast<std::int64_t>(s.embedding_dimension()));
  j["frobenius"] = dec(s.frobenius());
  j["genus"] = dec(static_cast<std::int64_t>(s.genus()));
  j["gaps"] = integers_to_json(s.gaps());
  j["polynomial"] = poly_to_json(semigroup_polynomial(s));
  j["symmetric"] = is_symmetric(s);
  return j;
}

Json cyclotomic_report_json(const CyclotomicReport& r) {
  Json j;
  j["cyclotomic"] = r.is_cyclotomic;
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    Json fj;
    fj["index"] = std::to_string(f.index);
    fj["multiplicity"] = std::to_string(f.multiplicity);
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  j["remainder"] = poly_to_json(r.remainder);
  return j;
}

Json roots_to_json(const std::vector<std::complex<double>>& roots) {
  Json arr = Json::array();
  for (const auto& z : roots) {
    Json r;
    r["re"] = z.real();
    r["im"] = z.imag();
    r["modulus"] = std::abs(z);
    arr.push_back(std::move(r));
  }
  return arr;
}

Json certificate_to_json(const CertificateReport& r) {
  Json j;
  j["i_min"] = dec(r.i_min);
  j["i_max"] = dec(r.i_max);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["indices_checked"] = dec(static_cast<std::int64_t>(r.flags.size()));
  Json failing = Json::array();
  for (const auto& f : r.flags) {
    if (f.a_holds && f.b_holds && f.c_holds) continue;
    Json fj;
    fj["index"] = dec(f.index);
    fj["a"] = f.a_holds;
    fj["b"] = f.b_holds;
    fj["c"] = f.c_holds;
    failing.push_back(std::move(fj));
  }
  j["all_flags_hold"] = r.all_flags_hold();
  j["failing_indices"] = std::move(failing);
  j["exclusion_ok"] = r.exclusion_ok;
  j["root_count"] = dec(r.root_count);
  j["r_bound"] = dec(r.r_bound);
  j["t_bound"] = dec(r.t_bound);
  j["passed"] = r.passed();
  return j;
}

Json unit_circle_roots_to_json(const UnitCircleRoots& r) {
  Json j;
  j["count"] = dec(r.count);
  j["sign_change_roots"] = dec(r.sign_change_roots);
  j["suspected_double_roots"] = dec(r.suspected_double_roots);
  j["thetas"] = r.thetas;
  return j;
}

Json band_report_to_json(const BandReport& r) {
  Json j;
  j["n"] = dec(r.n);
  j["band"] = r.band;
  j["lower"] = 1.0 - r.band;
  j["upper"] = 1.0 + r.band;
  j["epsilon"] = r.epsilon;
  j["max_deviation"] = r.max_deviation;
  j["max_band_violation"] = r.max_band_violation;
  j["off_circle_witness"] = r.off_circle_witness();
  j["pass"] = r.pass();
  return j;
}

Json census_row_to_json(const CensusRow& row) {
  Json j;
  j["genus"] = dec(row.genus);
  j["e"] = dec(row.embedding_dimension);
  j["total"] = dec(row.total);
  j["symmetric"] = dec(row.symmetric);
  j["cyclotomic"] = dec(row.cyclotomic);
  j["sym_not_cyc"] = dec(row.symmetric_not_cyclotomic());
  return j;
}

}  // namespace cyclosemi
