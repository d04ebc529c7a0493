#include "horo/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace horo {

bool SimpleType::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

void SimpleType::validate() const {
  if (!valid())
    throw invalid_type_error("invalid simple type " + name());
}

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("weight rank mismatch");
  Weight r = a;
  for (size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& x : r.coords) x = -x;
  return r;
}

CoweightVec operator+(const CoweightVec& a, const CoweightVec& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("coweight rank mismatch");
  CoweightVec r = a;
  for (size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
  return r;
}

CoweightVec operator-(const CoweightVec& a) {
  CoweightVec r = a;
  for (auto& x : r.coords) x = -x;
  return r;
}

namespace {

// Unordered simple edges of the Dynkin diagram, plus the marked pairs
// (long, short) carrying a double or triple bond.
struct Bonds {
  std::vector<std::pair<int, int>> simple;      // mult 1
  std::vector<std::pair<int, int>> dbl;         // (long, short)
  std::vector<std::pair<int, int>> triple;      // (long, short)
};

Bonds bonds_of(SimpleType t) {
  const int n = t.rank;
  Bonds b;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) b.simple.push_back({i, i + 1});
  };
  switch (t.family) {
    case Family::A:
      chain(1, n);
      break;
    case Family::B:
      chain(1, n - 1);
      b.dbl.push_back({n - 1, n});  // alpha_n short
      break;
    case Family::C:
      chain(1, n - 1);
      b.dbl.push_back({n, n - 1});  // alpha_n long
      break;
    case Family::D:
      chain(1, n - 1);
      b.simple.push_back({n - 2, n});
      break;
    case Family::E:
      b.simple.push_back({1, 3});
      b.simple.push_back({2, 4});
      chain(3, n);
      break;
    case Family::F:
      b.simple.push_back({1, 2});
      b.dbl.push_back({2, 3});  // alpha_3, alpha_4 short
      b.simple.push_back({3, 4});
      break;
    case Family::G:
      b.triple.push_back({2, 1});  // alpha_1 short
      break;
  }
  return b;
}

}  // namespace

std::vector<std::vector<long long>> cartan_matrix(SimpleType t) {
  t.validate();
  const int n = t.rank;
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  const Bonds b = bonds_of(t);
  for (auto [p, q] : b.simple) {
    a[p - 1][q - 1] = -1;
    a[q - 1][p - 1] = -1;
  }
  // For a bond (long l, short s): <alpha_l, coroot_s> = -mult,
  // <alpha_s, coroot_l> = -1.
  for (auto [l, s] : b.dbl) {
    a[l - 1][s - 1] = -2;
    a[s - 1][l - 1] = -1;
  }
  for (auto [l, s] : b.triple) {
    a[l - 1][s - 1] = -3;
    a[s - 1][l - 1] = -1;
  }
  return a;
}

RootSystem::RootSystem(SimpleType t) : RootSystem(std::vector<SimpleType>{t}) {}

RootSystem::RootSystem(std::vector<SimpleType> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw invalid_type_error("empty factor list");
  for (const auto& f : factors_) f.validate();
  for (const auto& f : factors_) {
    offsets_.push_back(rank_);
    rank_ += f.rank;
  }
  cartan_.assign(rank_, std::vector<long long>(rank_, 0));
  for (size_t k = 0; k < factors_.size(); ++k) {
    const auto block = cartan_matrix(factors_[k]);
    const int off = offsets_[k];
    for (int i = 0; i < factors_[k].rank; ++i)
      for (int j = 0; j < factors_[k].rank; ++j)
        cartan_[off + i][off + j] = block[i][j];
  }
}

int RootSystem::factor_offset(int k) const {
  if (k < 0 || k >= static_cast<int>(factors_.size()))
    throw std::out_of_range("factor index");
  return offsets_[k] + 1;
}

void RootSystem::check_vertex(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("vertex index out of range");
}

long long RootSystem::cartan(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return cartan_[i - 1][j - 1];
}

std::set<int> RootSystem::all_vertices() const {
  std::set<int> s;
  for (int i = 1; i <= rank_; ++i) s.insert(i);
  return s;
}

Weight RootSystem::fundamental(int i) const {
  check_vertex(i);
  Weight w{std::vector<long long>(rank_, 0)};
  w.coords[i - 1] = 1;
  return w;
}

Weight RootSystem::zero_weight() const {
  return Weight{std::vector<long long>(rank_, 0)};
}

RootVec RootSystem::simple_root(int i) const {
  check_vertex(i);
  RootVec r{std::vector<long long>(rank_, 0)};
  r.coords[i - 1] = 1;
  return r;
}

CoweightVec RootSystem::simple_coroot(int i) const {
  check_vertex(i);
  CoweightVec c{std::vector<long long>(rank_, 0)};
  c.coords[i - 1] = 1;
  return c;
}

Weight RootSystem::root_to_weight(const RootVec& r) const {
  if (static_cast<int>(r.coords.size()) != rank_)
    throw std::invalid_argument("root rank mismatch");
  Weight w{std::vector<long long>(rank_, 0)};
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w.coords[j] += r.coords[i] * cartan_[i][j];
  return w;
}

long long RootSystem::root_coroot_pairing(const RootVec& r, int i) const {
  check_vertex(i);
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += r.coords[j] * cartan_[j][i - 1];
  return s;
}

std::vector<RootVec> RootSystem::positive_roots() const {
  std::set<std::vector<long long>> known;
  std::vector<std::vector<RootVec>> by_height(1);
  for (int i = 1; i <= rank_; ++i) {
    auto r = simple_root(i);
    known.insert(r.coords);
    by_height[0].push_back(r);
  }
  for (size_t h = 0; h < by_height.size(); ++h) {
    for (const auto& beta : by_height[h]) {
      for (int i = 1; i <= rank_; ++i) {
        // Walk down the alpha_i-string through beta; everything below beta
        // has smaller height and is already known.
        long long p = 0;
        auto down = beta.coords;
        while (true) {
          down[i - 1] -= 1;
          if (down[i - 1] < 0 || !known.count(down)) break;
          ++p;
        }
        const long long q = p - root_coroot_pairing(beta, i);
        if (q < 1) continue;
        auto up = beta;
        up.coords[i - 1] += 1;
        if (known.insert(up.coords).second) {
          if (by_height.size() <= h + 1) by_height.resize(h + 2);
          by_height[h + 1].push_back(up);
        }
      }
    }
  }
  std::vector<RootVec> out;
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
  check_vertex(i);
  if (static_cast<int>(w.coords.size()) != rank_)
    throw std::invalid_argument("weight rank mismatch");
  Weight r = w;
  const long long c = w.coords[i - 1];
  for (int j = 0; j < rank_; ++j) r.coords[j] -= c * cartan_[i - 1][j];
  return r;
}

CoweightVec RootSystem::reflect(int i, const CoweightVec& v) const {
  check_vertex(i);
  if (static_cast<int>(v.coords.size()) != rank_)
    throw std::invalid_argument("coweight rank mismatch");
  long long c = 0;
  for (int j = 0; j < rank_; ++j) c += cartan_[i - 1][j] * v.coords[j];
  CoweightVec r = v;
  r.coords[i - 1] -= c;
  return r;
}

Weight RootSystem::act_on_weight(const WeylWord& word, Weight w) const {
  for (int l : word.letters) w = reflect(l, w);
  return w;
}

CoweightVec RootSystem::act_on_coweight(const WeylWord& word, CoweightVec c) const {
  for (int l : word.letters) c = reflect(l, c);
  return c;
}

WeylWord RootSystem::longest_element_word(const std::set<int>& I) const {
  for (int i : I) check_vertex(i);
  Weight cur = zero_weight();
  for (int i : I) cur.coords[i - 1] = 1;  // rho_I
  WeylWord word;
  while (true) {
    int pick = 0;
    for (int i : I) {
      if (cur.coords[i - 1] > 0) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;
    cur = reflect(pick, cur);
    word.letters.push_back(pick);
  }
  return word;
}

bool RootSystem::is_dominant(const Weight& w) const {
  return is_dominant_on(w, all_vertices());
}

bool RootSystem::is_antidominant(const Weight& w) const {
  return is_antidominant_on(w, all_vertices());
}

bool RootSystem::is_dominant_on(const Weight& w, const std::set<int>& I) const {
  for (int i : I) {
    check_vertex(i);
    if (w.coords[i - 1] < 0) return false;
  }
  return true;
}

bool RootSystem::is_antidominant_on(const Weight& w, const std::set<int>& I) const {
  for (int i : I) {
    check_vertex(i);
    if (w.coords[i - 1] > 0) return false;
  }
  return true;
}

std::pair<Weight, WeylWord> RootSystem::dominant_representative(const Weight& w) const {
  Weight cur = w;
  WeylWord word;
  while (true) {
    int pick = 0;
    for (int i = 1; i <= rank_; ++i) {
      if (cur.coords[i - 1] < 0) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;
    cur = reflect(pick, cur);
    word.letters.push_back(pick);
  }
  return {cur, word};
}

long long RootSystem::dim_flag_variety(const std::set<int>& J) const {
  for (int j : J) check_vertex(j);
  long long count = 0;
  for (const auto& r : positive_roots()) {
    bool supported = true;
    for (int i = 0; i < rank_; ++i) {
      if (r.coords[i] != 0 && !J.count(i + 1)) {
        supported = false;
        break;
      }
    }
    if (!supported) ++count;
  }
  return count;
}

long long pairing(const Weight& w, const CoweightVec& c) {
  if (w.coords.size() != c.coords.size())
    throw std::invalid_argument("pairing rank mismatch");
  long long s = 0;
  for (size_t k = 0; k < w.coords.size(); ++k) s += w.coords[k] * c.coords[k];
  return s;
}

std::string to_string(const Weight& w) {
  std::string s = "[";
  for (size_t k = 0; k < w.coords.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w.coords[k]);
  }
  return s + "]";
}

}  // namespace horo
