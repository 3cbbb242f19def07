#pragma once

/**
 * @file parking.hpp
 * @brief Parking functions as two-line arrays and the families PF(J,n), PF_J(p).
 *
 * Positions are 0-based in code. U holds the diagonal numbers, V the cars
 * listed from the bottom row of the lattice square upwards. In PF(J,n) the
 * cars 1..J are small and J+1..J+n are big.
 */

#include "parkqt/caps.hpp"
#include "parkqt/partition.hpp"
#include "parkqt/qtpoly.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parkqt {

struct ParkingFunction {
  std::vector<int> U;
  std::vector<int> V;

  int size() const { return static_cast<int>(U.size()); }
  bool operator==(const ParkingFunction& o) const { return U == o.U && V == o.V; }
  bool operator!=(const ParkingFunction& o) const { return !(*this == o); }
  bool operator<(const ParkingFunction& o) const { return U != o.U ? U < o.U : V < o.V; }
};

class InvalidParkingFunction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidParkingFunction naming the violated condition.
ParkingFunction pf_validate(std::vector<int> U, std::vector<int> V);
/// True iff U is a Dyck area sequence (u_1 = 0, u_i <= u_{i-1} + 1).
bool is_area_sequence(const std::vector<int>& U);

int area(const ParkingFunction& pf);
int dinv(const ParkingFunction& pf);
/// sigma(PF): cars by decreasing diagonal, right to left within a diagonal.
std::vector<int> diagonal_word(const ParkingFunction& pf);

/// Whether w is a shuffle of the given increasing segments. Throws
/// std::invalid_argument if the segments do not partition the letters of w.
bool is_shuffle(const std::vector<int>& w, const std::vector<std::vector<int>>& segments);

/// Lengths of the runs between successive zeros of U.
Composition diag_comp(const std::vector<int>& U);
Composition diag_comp(const ParkingFunction& pf);

/// Membership in PF(J, size - J): the diagonal word is a shuffle of 1..J and
/// J+1..J+n and v_1 = J+n.
bool in_family(const ParkingFunction& pf, int J);
/// U restricted to big-car positions.
std::vector<int> big_area_sequence(const ParkingFunction& pf, int J);
/// Diagonal composition of the big cars. Throws std::invalid_argument for a
/// parking function outside PF(J,n) and std::logic_error if the big cars do
/// not sit on a Dyck path.
Composition big_comp(const ParkingFunction& pf, int J);

/// Small cars replaced by 1, big cars by 2.
struct ReducedTableau {
  int J = 0;
  std::vector<int> U;
  std::vector<bool> big;
};

ReducedTableau reduce(const ParkingFunction& pf, int J);
/// Cars 1..J go to the small cells and J+1..J+n to the big cells, each in
/// diagonal-word order.
ParkingFunction refill(const ReducedTableau& red);
/// 1-on-1 or 2-on-2 column in a reduced tableau.
bool has_bad_column(const ReducedTableau& red);

/// Dyck area sequences of length n in lexicographic order.
std::vector<std::vector<int>> dyck_paths(int n);

using PfVisitor = std::function<void(const ParkingFunction&)>;

/// Visits PF(J,n) in lexicographic (path, filling) order.
void for_each_family_member(int J, int n, const PfVisitor& visit, int cap = kDefaultEnumCap);
std::vector<ParkingFunction> enumerate_family(int J, int n, int cap = kDefaultEnumCap);
/// Members of PF(J,|p|) with big_comp = p.
std::vector<ParkingFunction> enumerate_family(int J, const Composition& p, int cap = kDefaultEnumCap);
/// Every parking function of size n (unrestricted).
void for_each_parking_function(int n, const PfVisitor& visit, int cap = kDefaultEnumCap);

/// Sum of t^area q^dinv over PF_J(p).
QtPoly classical_poly(int J, const Composition& p, int cap = kDefaultEnumCap);

/// "V: 4 6 8 1 3 2 7 5\nU: 0 1 2 2 3 0 1 1".
std::string to_text(const ParkingFunction& pf);

}  // namespace parkqt
