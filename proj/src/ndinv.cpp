#include "parkqt/ndinv.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace parkqt {

namespace {

using Dominoes = std::vector<Domino>;

bool starts_section(const Domino& d) { return d.big && d.diag == 0; }

std::vector<Dominoes> cut(const Dominoes& ds) {
  std::vector<Dominoes> secs;
  for (const auto& d : ds) {
    if (secs.empty() || starts_section(d)) secs.emplace_back();
    secs.back().push_back(d);
  }
  return secs;
}

int count_sections(const Dominoes& ds) {
  int k = 0;
  for (const auto& d : ds) k += starts_section(d);
  return k;
}

ParkingFunction pf_of(const Dominoes& ds, int J) {
  ReducedTableau red;
  red.J = J;
  for (const auto& d : ds) {
    red.U.push_back(d.diag);
    red.big.push_back(d.big);
  }
  return refill(red);
}

Domino small_at(int diag) { return Domino{0, diag, false, false}; }
Domino big_at(int diag) { return Domino{0, diag, true, false}; }

// One step of Phi on the reduced dominoes; returns the branch taken.
PhiBranch phi_step(Dominoes& ds) {
  auto secs = cut(ds);
  Dominoes first = secs.front();
  Dominoes rest;
  for (std::size_t s = 1; s < secs.size(); ++s) rest.insert(rest.end(), secs[s].begin(), secs[s].end());
  std::size_t zero_small = first.size();
  for (std::size_t i = 0; i < first.size(); ++i)
    if (!first[i].big && first[i].diag == 0) {
      zero_small = i;
      break;
    }
  if (zero_small == first.size()) {
    if (first.size() != 1) throw std::logic_error("phi: first section has no small car on the diagonal");
    ds = std::move(rest);
    return PhiBranch::kRemoveBig;
  }
  first.erase(first.begin() + static_cast<std::ptrdiff_t>(zero_small));
  for (std::size_t i = 1; i < first.size(); ++i)
    if (first[i].big) --first[i].diag;
  for (std::size_t i = 0; i + 1 < first.size(); ++i)
    if (first[i].big && !first[i + 1].big && first[i + 1].diag == first[i].diag + 1) {
      std::swap(first[i].big, first[i + 1].big);
      ++i;
    }
  rest.insert(rest.end(), first.begin(), first.end());
  ds = std::move(rest);
  return PhiBranch::kRemoveSmall;
}

Dominoes reduced_dominoes(const ParkingFunction& pf, int J) {
  Dominoes ds;
  for (int i = 0; i < pf.size(); ++i) ds.push_back(Domino{pf.V[i], pf.U[i], pf.V[i] > J, false});
  return ds;
}

void require_family(const ParkingFunction& pf, int J, const char* what) {
  if (!in_family(pf, J)) throw std::invalid_argument(std::string(what) + ": parking function is not in PF(J,n)");
  if (!is_area_sequence(big_area_sequence(pf, J)))
    throw std::invalid_argument(std::string(what) + ": big cars do not sit on a Dyck path");
}

}  // namespace

std::vector<std::vector<Domino>> DominoSeq::sections() const { return cut(dominoes); }

std::string DominoSeq::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& d : dominoes) {
    if (!first) os << (starts_section(d) ? " | " : " ");
    os << '(' << d.car << ',' << d.diag << ')';
    first = false;
  }
  return os.str();
}

ParkingFunction DominoSeq::to_pf() const { return pf_of(dominoes, J); }

DominoSeq to_domino_seq(const ParkingFunction& pf, int J) {
  require_family(pf, J, "to_domino_seq");
  return DominoSeq{J, reduced_dominoes(pf, J)};
}

std::vector<std::vector<Domino>> sections(const DominoSeq& seq) { return seq.sections(); }

PhiImage phi(const ParkingFunction& pf, int J) {
  require_family(pf, J, "phi");
  Dominoes ds = reduced_dominoes(pf, J);
  PhiBranch b = phi_step(ds);
  int J2 = b == PhiBranch::kRemoveSmall ? J - 1 : J;
  return PhiImage{pf_of(ds, J2), J2, b};
}

ParkingFunction phi_inv(const ParkingFunction& image, int image_J, PhiBranch branch, int k) {
  require_family(image, image_J, "phi_inv");
  Dominoes ds = reduced_dominoes(image, image_J);
  int J = image_J;
  if (branch == PhiBranch::kRemoveBig) {
    ds.insert(ds.begin(), big_at(0));
  } else {
    auto secs = cut(ds);
    if (k < 1 || static_cast<int>(secs.size()) < k)
      throw std::invalid_argument("phi_inv: image has fewer than k sections");
    Dominoes kept, last;
    for (int s = 0; s < static_cast<int>(secs.size()); ++s) {
      auto& dst = s < k - 1 ? kept : last;
      dst.insert(dst.end(), secs[s].begin(), secs[s].end());
    }
    for (std::size_t i = 0; i + 1 < last.size(); ++i)
      if (!last[i].big && last[i + 1].big && last[i + 1].diag == last[i].diag + 1) {
        std::swap(last[i].big, last[i + 1].big);
        ++i;
      }
    for (std::size_t i = 1; i < last.size(); ++i)
      if (last[i].big) ++last[i].diag;
    last.insert(last.begin() + 1, small_at(0));
    last.insert(last.end(), kept.begin(), kept.end());
    ds = std::move(last);
    J = image_J + 1;
  }
  ParkingFunction pf = pf_of(ds, J);
  if (!in_family(pf, J) || !is_area_sequence(big_area_sequence(pf, J)))
    throw std::invalid_argument("phi_inv: branch does not fit the image");
  return pf;
}

int ndinv_rec(const ParkingFunction& pf, int J) {
  require_family(pf, J, "ndinv_rec");
  Dominoes ds = reduced_dominoes(pf, J);
  int nd = 0;
  for (int j = J; j > 0;) {
    int k = count_sections(ds);
    if (phi_step(ds) == PhiBranch::kRemoveSmall) {
      nd += k - 1;
      --j;
    }
  }
  return nd;
}

std::string to_string(const CircleState& s) {
  std::ostringstream os;
  os << "c=" << s.c << " ndinv=" << s.ndinv << " endsec=" << s.endsec << " marked=" << s.last_marked << " |";
  for (std::size_t i = 0; i < s.circle.size(); ++i) {
    const auto& d = s.circle[i];
    os << ' ' << (d.marked ? '*' : 'o') << (d.big ? 'b' : 's') << d.car << '/' << d.diag;
  }
  os << " |";
  return os.str();
}

std::vector<Domino> circle_stage_one(const ParkingFunction& pf, int J) {
  require_family(pf, J, "ndinv_circ");
  Dominoes ds = reduced_dominoes(pf, J);
  std::rotate(ds.begin(), ds.begin() + 1, ds.end());
  // Left to right, so every small car moves within the already updated sequence.
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(ds.size()); ++i)
    if (!ds[i].big) order.push_back(ds[i].car);
  for (int car : order) {
    int i = 0;
    while (ds[i].car != car) ++i;
    int a = ds[i].diag;
    for (int step = 0; step < a; ++step) {
      if (ds[i - 1].big) ++ds[i - 1].diag;
      std::swap(ds[i - 1], ds[i]);
      --i;
    }
  }
  return ds;
}

int ndinv_circ(const ParkingFunction& pf, int J, const CircleOptions& opts) {
  CircleState st;
  st.circle = circle_stage_one(pf, J);
  auto& cir = st.circle;
  const int L = static_cast<int>(cir.size());
  auto notify = [&] {
    if (opts.observer) opts.observer(st);
  };

  // Marks position `pos`; for a small car, finds the end of its section and
  // counts the big cars that are currently on the main diagonal.
  auto process = [&](int pos) {
    cir[pos].marked = true;
    st.last_marked = pos;
    if (cir[pos].big) {
      st.endsec = pos;
      notify();
      return;
    }
    int threshold = st.c;
    int e = pos;
    bool crossed = false;
    while (true) {
      if (e == L - 1) {
        crossed = true;
        if (opts.bar_rule == BarRule::kSearchAndCount) threshold = st.c + 1;
      }
      e = (e + 1) % L;
      if (e == pos) throw std::logic_error("ndinv_circ: no section end found");
      if (cir[e].big && !cir[e].marked && cir[e].diag < threshold) break;
    }
    st.endsec = e;
    int count_threshold = (opts.bar_rule == BarRule::kSearchAndCount && crossed) ? st.c + 1 : st.c;
    for (int i = e; (i + 1) % L != pos;) {
      if (i == L - 1) count_threshold = st.c + 1;
      i = (i + 1) % L;
      if (cir[i].big && !cir[i].marked && cir[i].diag < count_threshold) ++st.ndinv;
    }
    notify();
  };

  process(0);
  while (true) {
    int pos = st.endsec;
    int scanned = 0;
    do {
      if (pos == L - 1) ++st.c;
      pos = (pos + 1) % L;
      ++scanned;
    } while (cir[pos].marked && scanned <= L);
    if (cir[pos].marked) break;
    process(pos);
  }
  return st.ndinv;
}

QtPoly pi_poly(int J, const Composition& p) {
  static std::mutex mu;
  static std::map<std::pair<int, Composition>, QtPoly> memo;
  if (J < 0) throw std::invalid_argument("pi_poly: J must be nonnegative");
  if (!p.empty() && !is_composition(p)) throw std::invalid_argument("pi_poly: p is not a composition");
  const auto key = std::make_pair(J, p);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  QtPoly out;
  if (J == 0) {
    bool ones = true;
    for (int x : p) ones = ones && x == 1;
    if (ones) out.add(0, 0);
  } else if (!p.empty()) {
    const int k = static_cast<int>(p.size());
    Composition tail(p.begin() + 1, p.end());
    QtPoly inner;
    for (const auto& r : compositions(p[0])) {
      Composition next = tail;
      next.insert(next.end(), r.begin(), r.end());
      inner += pi_poly(J - 1, next);
    }
    out = inner.shifted(p[0] - 1, k - 1);
    if (p[0] == 1) out += pi_poly(J, tail);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, out);
  return out;
}

QtPoly family_poly(int J, const Composition& p, int cap) {
  QtPoly poly;
  for (const auto& pf : enumerate_family(J, p, cap)) poly.add(area(pf), ndinv_rec(pf, J));
  return poly;
}

}  // namespace parkqt
