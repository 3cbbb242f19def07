#include "parkqt/parking.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace parkqt {

namespace {

void check_cap(int size, int cap) {
  if (size > cap)
    throw CapExceeded("parking-function size " + std::to_string(size) + " exceeds enumeration cap " +
                      std::to_string(cap));
}

// Positions in diagonal-word order.
std::vector<int> reading_order(const std::vector<int>& U) {
  std::vector<int> order(U.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return U[a] != U[b] ? U[a] > U[b] : a > b; });
  return order;
}

void dyck_rec(std::vector<int>& cur, int n, const std::function<bool(const std::vector<int>&, int)>& allow,
              const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == n) {
    emit(cur);
    return;
  }
  int top = cur.empty() ? 0 : cur.back() + 1;
  for (int u = 0; u <= top; ++u) {
    if (!allow(cur, u)) continue;
    cur.push_back(u);
    dyck_rec(cur, n, allow, emit);
    cur.pop_back();
  }
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    emit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_area_sequence(const std::vector<int>& U) {
  for (std::size_t i = 0; i < U.size(); ++i) {
    if (U[i] < 0) return false;
    if (i == 0 ? U[i] != 0 : U[i] > U[i - 1] + 1) return false;
  }
  return true;
}

ParkingFunction pf_validate(std::vector<int> U, std::vector<int> V) {
  if (U.size() != V.size())
    throw InvalidParkingFunction("U and V have different lengths (" + std::to_string(U.size()) + " vs " +
                                 std::to_string(V.size()) + ")");
  const int n = static_cast<int>(U.size());
  for (int i = 0; i < n; ++i) {
    if (U[i] < 0) throw InvalidParkingFunction("U has a negative entry at position " + std::to_string(i + 1));
    if (i == 0 && U[0] != 0) throw InvalidParkingFunction("U must start with 0");
    if (i > 0 && U[i] > U[i - 1] + 1)
      throw InvalidParkingFunction("U is not a Dyck area sequence: u_" + std::to_string(i + 1) +
                                   " > u_" + std::to_string(i) + " + 1");
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : V) {
    if (v < 1 || v > n || seen[v]) throw InvalidParkingFunction("V is not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
  for (int i = 1; i < n; ++i)
    if (U[i] == U[i - 1] + 1 && V[i] < V[i - 1])
      throw InvalidParkingFunction("column not increasing: u_" + std::to_string(i + 1) + " = u_" +
                                   std::to_string(i) + " + 1 requires v_" + std::to_string(i + 1) + " > v_" +
                                   std::to_string(i));
  return ParkingFunction{std::move(U), std::move(V)};
}

int area(const ParkingFunction& pf) { return std::accumulate(pf.U.begin(), pf.U.end(), 0); }

int dinv(const ParkingFunction& pf) {
  const auto& U = pf.U;
  const auto& V = pf.V;
  int d = 0;
  for (int i = 0; i < pf.size(); ++i)
    for (int j = i + 1; j < pf.size(); ++j) {
      if (U[i] == U[j] && V[i] < V[j]) ++d;
      if (U[i] == U[j] + 1 && V[i] > V[j]) ++d;
    }
  return d;
}

std::vector<int> diagonal_word(const ParkingFunction& pf) {
  std::vector<int> w;
  for (int i : reading_order(pf.U)) w.push_back(pf.V[i]);
  return w;
}

bool is_shuffle(const std::vector<int>& w, const std::vector<std::vector<int>>& segments) {
  std::unordered_map<int, int> pos;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!pos.emplace(w[i], static_cast<int>(i)).second) throw std::invalid_argument("is_shuffle: repeated letter");
  std::size_t total = 0;
  for (const auto& seg : segments) {
    total += seg.size();
    for (int x : seg)
      if (!pos.count(x)) throw std::invalid_argument("is_shuffle: segment letter " + std::to_string(x) + " not in word");
  }
  if (total != w.size()) throw std::invalid_argument("is_shuffle: segments do not cover the word");
  for (const auto& seg : segments)
    for (std::size_t i = 1; i < seg.size(); ++i)
      if (pos[seg[i - 1]] > pos[seg[i]]) return false;
  return true;
}

Composition diag_comp(const std::vector<int>& U) {
  Composition c;
  for (int u : U) {
    if (u == 0) c.push_back(0);
    if (c.empty()) throw std::invalid_argument("diag_comp: sequence does not start at 0");
    ++c.back();
  }
  return c;
}

Composition diag_comp(const ParkingFunction& pf) { return diag_comp(pf.U); }

bool in_family(const ParkingFunction& pf, int J) {
  const int N = pf.size();
  if (J < 0 || J >= N) return false;
  if (pf.V[0] != N) return false;
  std::vector<int> small(J), big(N - J);
  std::iota(small.begin(), small.end(), 1);
  std::iota(big.begin(), big.end(), J + 1);
  return is_shuffle(diagonal_word(pf), {small, big});
}

std::vector<int> big_area_sequence(const ParkingFunction& pf, int J) {
  std::vector<int> ub;
  for (int i = 0; i < pf.size(); ++i)
    if (pf.V[i] > J) ub.push_back(pf.U[i]);
  return ub;
}

Composition big_comp(const ParkingFunction& pf, int J) {
  if (!in_family(pf, J))
    throw std::invalid_argument("big_comp: parking function is not in PF(" + std::to_string(J) + "," +
                                std::to_string(pf.size() - J) + ")");
  auto ub = big_area_sequence(pf, J);
  if (!is_area_sequence(ub)) throw std::logic_error("big_comp: big cars do not sit on a Dyck path");
  return diag_comp(ub);
}

ReducedTableau reduce(const ParkingFunction& pf, int J) {
  ReducedTableau red;
  red.J = J;
  red.U = pf.U;
  for (int v : pf.V) red.big.push_back(v > J);
  return red;
}

ParkingFunction refill(const ReducedTableau& red) {
  ParkingFunction pf;
  pf.U = red.U;
  pf.V.assign(red.U.size(), 0);
  int next_small = 1;
  int next_big = red.J + 1;
  for (int i : reading_order(red.U)) pf.V[i] = red.big[i] ? next_big++ : next_small++;
  if (next_small != red.J + 1) throw std::invalid_argument("refill: tableau does not hold exactly J small cars");
  return pf;
}

bool has_bad_column(const ReducedTableau& red) {
  for (std::size_t i = 1; i < red.U.size(); ++i)
    if (red.U[i] == red.U[i - 1] + 1 && !(red.big[i] && !red.big[i - 1])) return true;
  return false;
}

std::vector<std::vector<int>> dyck_paths(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  dyck_rec(cur, n, [](const std::vector<int>&, int) { return true; },
           [&](const std::vector<int>& u) { out.push_back(u); });
  return out;
}

void for_each_family_member(int J, int n, const PfVisitor& visit, int cap) {
  if (J < 0 || n < 1) throw std::invalid_argument("PF(J,n) needs J >= 0 and n >= 1");
  const int N = J + n;
  check_cap(N, cap);
  // Columns have length at most 2, so rises never follow rises, and at most
  // J of them exist. Car J+n at the bottom of column 1 forbids u_2 = 1.
  auto allow = [&](const std::vector<int>& cur, int u) {
    if (cur.empty()) return true;
    bool rise = u == cur.back() + 1;
    if (!rise) return true;
    if (cur.size() == 1) return false;
    if (cur.back() == cur[cur.size() - 2] + 1) return false;
    int rises = 0;
    for (std::size_t i = 1; i < cur.size(); ++i) rises += cur[i] == cur[i - 1] + 1;
    return rises < J;
  };
  std::vector<int> cur;
  dyck_rec(cur, N, allow, [&](const std::vector<int>& U) {
    ReducedTableau red;
    red.J = J;
    red.U = U;
    red.big.assign(N, true);
    std::vector<bool> fixed(N, false);
    fixed[0] = true;
    int rises = 0;
    for (int i = 1; i < N; ++i)
      if (U[i] == U[i - 1] + 1) {
        ++rises;
        red.big[i - 1] = false;
        fixed[i - 1] = fixed[i] = true;
      }
    std::vector<int> free;
    for (int i = 0; i < N; ++i)
      if (!fixed[i]) free.push_back(i);
    for_each_combination(static_cast<int>(free.size()), J - rises, [&](const std::vector<int>& pick) {
      ReducedTableau r = red;
      for (int k : pick) r.big[free[k]] = false;
      visit(refill(r));
    });
  });
}

std::vector<ParkingFunction> enumerate_family(int J, int n, int cap) {
  std::vector<ParkingFunction> out;
  for_each_family_member(J, n, [&](const ParkingFunction& pf) { out.push_back(pf); }, cap);
  return out;
}

std::vector<ParkingFunction> enumerate_family(int J, const Composition& p, int cap) {
  if (p.empty() || !is_composition(p)) throw std::invalid_argument("enumerate_family: p must be a nonempty composition");
  std::vector<ParkingFunction> out;
  for_each_family_member(
      J, size(p),
      [&](const ParkingFunction& pf) {
        if (diag_comp(big_area_sequence(pf, J)) == p) out.push_back(pf);
      },
      cap);
  return out;
}

void for_each_parking_function(int n, const PfVisitor& visit, int cap) {
  check_cap(n, cap);
  for (const auto& U : dyck_paths(n)) {
    // Column runs: a column is a maximal block of consecutive rises.
    std::vector<std::pair<int, int>> cols;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && U[i] == U[i - 1] + 1)
        ++cols.back().second;
      else
        cols.push_back({i, 1});
    }
    ParkingFunction pf{U, std::vector<int>(n, 0)};
    std::vector<bool> used(n + 1, false);
    std::function<void(std::size_t)> fill = [&](std::size_t c) {
      if (c == cols.size()) {
        visit(pf);
        return;
      }
      std::vector<int> avail;
      for (int v = 1; v <= n; ++v)
        if (!used[v]) avail.push_back(v);
      auto [start, len] = cols[c];
      for_each_combination(static_cast<int>(avail.size()), len, [&](const std::vector<int>& pick) {
        for (int k = 0; k < len; ++k) {
          pf.V[start + k] = avail[pick[k]];
          used[avail[pick[k]]] = true;
        }
        fill(c + 1);
        for (int k = 0; k < len; ++k) used[avail[pick[k]]] = false;
      });
    };
    fill(0);
  }
}

QtPoly classical_poly(int J, const Composition& p, int cap) {
  QtPoly poly;
  for (const auto& pf : enumerate_family(J, p, cap)) poly.add(area(pf), dinv(pf));
  return poly;
}

std::string to_text(const ParkingFunction& pf) {
  std::ostringstream os;
  os << "V:";
  for (int v : pf.V) os << ' ' << v;
  os << "\nU:";
  for (int u : pf.U) os << ' ' << u;
  return os.str();
}

}  // namespace parkqt
