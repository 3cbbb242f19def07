#pragma once

/**
 * @file serialize.hpp
 * @brief Text, JSON and CSV renderings used by the command-line tool.
 *
 * Polynomial JSON:
 *   {"J":2,"p":[3,2],"n":5,"method":"all","poly":[{"t":3,"q":4,"coef":"1"}]}
 * with terms in the canonical order. Parsing and re-serializing is
 * byte-identical.
 */

#include "parkqt/parking.hpp"
#include "parkqt/qtpoly.hpp"

#include <string>
#include <vector>

namespace parkqt {

struct PolyRecord {
  int J = 0;
  Composition p;
  int n = 0;
  std::string method;
  QtPoly poly;

  bool operator==(const PolyRecord& o) const {
    return J == o.J && p == o.p && n == o.n && method == o.method && poly == o.poly;
  }
};

std::string to_json(const PolyRecord& rec);
/// Throws std::invalid_argument on malformed input.
PolyRecord poly_record_from_json(const std::string& text);

/// Statistics of one member of PF(J, size - J).
struct PfRow {
  int n = 0;
  int J = 0;
  ParkingFunction pf;
  int area = 0;
  int dinv = 0;
  int ndinv = 0;
  std::vector<int> sigma;
  Composition diag_comp;
  Composition big_comp;
};

/// Requires pf in PF(J, size - J) with the big cars on a Dyck path.
PfRow make_row(const ParkingFunction& pf, int J);

/// "n,J,U,V,area,dinv,ndinv,sigma,diag_comp,big_comp"; sequences inside a
/// field are space separated.
std::string csv_header();
std::string csv_row(const PfRow& row);
/// "V: 5 1 4 ... | U: 0 1 ... | area=3 dinv=3 ndinv=4 sigma=... p=[3,2]".
std::string text_row(const PfRow& row);
/// Array of row objects with the CSV column names as keys.
std::string rows_to_json(const std::vector<PfRow>& rows);

/// Space-separated integers.
std::string join(const std::vector<int>& xs);

}  // namespace parkqt
