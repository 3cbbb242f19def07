#include "parkqt/serialize.hpp"

#include "parkqt/ndinv.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace parkqt {

namespace {

using Json = nlohmann::ordered_json;

std::int64_t parse_coef(const std::string& s) {
  std::size_t used = 0;
  std::int64_t c = 0;
  try {
    c = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || c <= 0) throw std::invalid_argument("bad coefficient \"" + s + "\"");
  return c;
}

Json row_json(const PfRow& r) {
  Json j;
  j["n"] = r.n;
  j["J"] = r.J;
  j["U"] = r.pf.U;
  j["V"] = r.pf.V;
  j["area"] = r.area;
  j["dinv"] = r.dinv;
  j["ndinv"] = r.ndinv;
  j["sigma"] = r.sigma;
  j["diag_comp"] = r.diag_comp;
  j["big_comp"] = r.big_comp;
  return j;
}

}  // namespace

std::string to_json(const PolyRecord& rec) {
  Json j;
  j["J"] = rec.J;
  j["p"] = rec.p;
  j["n"] = rec.n;
  j["method"] = rec.method;
  j["poly"] = Json::array();
  const LaurentPoly poly = rec.poly.to_laurent();
  for (const auto& term : poly.terms()) {
    Json t;
    t["t"] = term.mono.t;
    t["q"] = term.mono.q;
    t["coef"] = to_string(term.coef);
    j["poly"].push_back(t);
  }
  return j.dump();
}

PolyRecord poly_record_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  try {
    PolyRecord rec;
    rec.J = j.at("J").get<int>();
    rec.p = j.at("p").get<Composition>();
    rec.n = j.at("n").get<int>();
    rec.method = j.at("method").get<std::string>();
    for (const auto& t : j.at("poly")) rec.poly.add(t.at("t").get<int>(), t.at("q").get<int>(),
                                                    parse_coef(t.at("coef").get<std::string>()));
    return rec;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("JSON schema error: ") + e.what());
  }
}

PfRow make_row(const ParkingFunction& pf, int J) {
  PfRow r;
  r.J = J;
  r.n = pf.size() - J;
  r.pf = pf;
  r.area = area(pf);
  r.dinv = dinv(pf);
  r.ndinv = ndinv_rec(pf, J);
  r.sigma = diagonal_word(pf);
  r.diag_comp = diag_comp(pf);
  r.big_comp = big_comp(pf, J);
  return r;
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string csv_header() { return "n,J,U,V,area,dinv,ndinv,sigma,diag_comp,big_comp"; }

std::string csv_row(const PfRow& r) {
  std::ostringstream os;
  os << r.n << ',' << r.J << ',' << join(r.pf.U) << ',' << join(r.pf.V) << ',' << r.area << ',' << r.dinv << ','
     << r.ndinv << ',' << join(r.sigma) << ',' << join(r.diag_comp) << ',' << join(r.big_comp);
  return os.str();
}

std::string text_row(const PfRow& r) {
  std::ostringstream os;
  os << "V: " << join(r.pf.V) << " | U: " << join(r.pf.U) << " | area=" << r.area << " dinv=" << r.dinv
     << " ndinv=" << r.ndinv << " sigma=" << join(r.sigma) << " p=" << to_string(r.big_comp);
  return os.str();
}

std::string rows_to_json(const std::vector<PfRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  return arr.dump();
}

}  // namespace parkqt
