#pragma once

/**
 * @file ndinv.hpp
 * @brief Domino sequences, the bijection Phi, the ndinv statistic and Pi_J(p).
 *
 * A domino is one column of the two-line array: a car on top of its diagonal
 * number. Sections are cut before every big car on diagonal 0.
 */

#include "parkqt/parking.hpp"

#include <functional>
#include <string>
#include <vector>

namespace parkqt {

struct Domino {
  int car = 0;
  int diag = 0;
  bool big = false;
  bool marked = false;

  bool operator==(const Domino& o) const { return car == o.car && diag == o.diag && big == o.big; }
};

struct DominoSeq {
  int J = 0;
  std::vector<Domino> dominoes;

  std::vector<std::vector<Domino>> sections() const;
  /// "(13,0) (1,0) (9,1) | (12,0) ..." with a bar before every section but the first.
  std::string to_string() const;
  /// Refills the cars from the big/small pattern and the diagonals.
  ParkingFunction to_pf() const;
};

/// Throws std::invalid_argument unless pf lies in PF(J, size - J).
DominoSeq to_domino_seq(const ParkingFunction& pf, int J);
std::vector<std::vector<Domino>> sections(const DominoSeq& seq);

/// Which component of the codomain Phi lands in.
enum class PhiBranch {
  kRemoveBig,    // the first section was a lone big car: PF_J(p_2..p_k)
  kRemoveSmall,  // a small car was removed: PF_{J-1}(p_2..p_k, q) with q |= p_1
};

struct PhiImage {
  ParkingFunction pf;
  int J = 0;
  PhiBranch branch = PhiBranch::kRemoveSmall;
};

/// Phi on PF_J(p). Throws std::invalid_argument outside the families.
PhiImage phi(const ParkingFunction& pf, int J);
/// Inverse of phi onto PF_{J}(p) with l(p) = k, where the image lies in
/// PF_{image_J}: the branch selects the codomain component. Throws
/// std::invalid_argument when the branch does not fit the image.
ParkingFunction phi_inv(const ParkingFunction& image, int image_J, PhiBranch branch, int k);

/// ndinv through repeated application of Phi: each removal of a small car
/// adds the number of sections minus one.
int ndinv_rec(const ParkingFunction& pf, int J);

/// State of the circular algorithm after a domino has been marked.
struct CircleState {
  std::vector<Domino> circle;  // position 0 follows the bar
  int c = 1;
  int ndinv = 0;
  int endsec = -1;
  int last_marked = -1;
};

std::string to_string(const CircleState& state);

/// Reading of the bar rule in the second stage.
enum class BarRule {
  kCountScanOnly,    // the threshold rises to c+1 only while counting past the bar
  kSearchAndCount,   // crossing the bar while looking for endsec also raises it
};

struct CircleOptions {
  BarRule bar_rule = BarRule::kCountScanOnly;
  std::function<void(const CircleState&)> observer;
};

/// Sequence after the first stage: sections end with their big car, every
/// small car has been moved left by its diagonal number, and each big car it
/// passed has its diagonal raised by one.
std::vector<Domino> circle_stage_one(const ParkingFunction& pf, int J);
/// The two-stage circular computation of ndinv.
int ndinv_circ(const ParkingFunction& pf, int J, const CircleOptions& opts = {});

/// Pi_J(p) from its recursion (memoized, thread-safe).
QtPoly pi_poly(int J, const Composition& p);
/// Sum of t^area q^ndinv over PF_J(p), by enumeration.
QtPoly family_poly(int J, const Composition& p, int cap = kDefaultEnumCap);

}  // namespace parkqt
