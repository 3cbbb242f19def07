#include "parkqt/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parkqt {

int size(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

bool is_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

bool is_composition(const std::vector<int>& parts) {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p > 0; });
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
  int sa = size(a), sb = size(b);
  if (sa != sb) return sa < sb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

void gen_compositions(int n, Composition& cur, std::vector<Composition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    cur.push_back(k);
    gen_compositions(n - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) gen_partitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  Composition cur;
  if (n >= 0) gen_compositions(n, cur, out);
  return out;
}

std::vector<Composition> compositions(int n, int k) {
  std::vector<Composition> out;
  for (auto& c : compositions(n))
    if (int(c.size()) == k) out.push_back(std::move(c));
  return out;
}

Partition conjugate(const Partition& mu) {
  Partition out;
  if (mu.empty()) return out;
  for (int j = 0; j < mu[0]; ++j) {
    int c = 0;
    for (int p : mu)
      if (p > j) ++c;
    out.push_back(c);
  }
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

int n_stat(const Partition& mu) {
  int s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += int(i) * mu[i];
  return s;
}

std::vector<int> multiplicities(const Partition& mu) {
  int top = mu.empty() ? 0 : *std::max_element(mu.begin(), mu.end());
  std::vector<int> m(top + 1, 0);
  for (int p : mu) ++m[p];
  return m;
}

BigInt z_coef(const Partition& mu) {
  BigInt z = 1;
  auto m = multiplicities(mu);
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (int k = 1; k <= m[i]; ++k) z *= BigInt(long(i)) * k;
  }
  return z;
}

int sign_eps(const Partition& mu) { return ((size(mu) - int(mu.size())) % 2) ? -1 : 1; }

Partition merge(const Partition& a, const Partition& b) {
  Partition out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

std::vector<CellStats> cell_stats(const Partition& mu) {
  std::vector<CellStats> out;
  Partition conj = conjugate(mu);
  for (int r = 0; r < int(mu.size()); ++r) {
    for (int c = 0; c < mu[r]; ++c) {
      CellStats cs;
      cs.row = r;
      cs.col = c;
      cs.arm = mu[r] - c - 1;
      cs.leg = conj[c] - r - 1;
      cs.coarm = c;
      cs.coleg = r;
      out.push_back(cs);
    }
  }
  return out;
}

std::vector<Partition> add_corner(const Partition& nu) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i <= nu.size(); ++i) {
    int cur = i < nu.size() ? nu[i] : 0;
    if (i == 0 || nu[i - 1] > cur) {
      Partition mu(nu);
      if (i < nu.size())
        ++mu[i];
      else
        mu.push_back(1);
      out.push_back(std::move(mu));
    }
  }
  return out;
}

std::vector<Partition> remove_corner(const Partition& mu) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    int next = i + 1 < mu.size() ? mu[i + 1] : 0;
    if (mu[i] > next) {
      Partition nu(mu);
      if (--nu[i] == 0) nu.pop_back();
      out.push_back(std::move(nu));
    }
  }
  return out;
}

std::string to_string(const std::vector<int>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

std::vector<int> parse_parts(const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == '(' || ch == ')') continue;
    cleaned += (ch == ',') ? ' ' : ch;
  }
  std::istringstream in(cleaned);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: " + tok);
    }
    if (used != tok.size()) throw std::invalid_argument("not an integer: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace parkqt
