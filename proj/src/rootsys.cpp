#include "klext/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "klext/error.hpp"

namespace klext {

std::string format_weight(const Weight& w) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) out << ",";
    out << w.coords[i];
  }
  out << "]";
  return out.str();
}

Weight parse_weight(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw InputError("malformed weight '" + text + "': expected [a1,...,an]");
  Weight w;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) throw InputError("malformed weight '" + text + "': empty");
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed weight '" + text + "': bad entry '" + item + "'");
    }
    if (used != item.size())
      throw InputError("malformed weight '" + text + "': bad entry '" + item + "'");
    w.coords.push_back(v);
  }
  if (!body.empty() && body.back() == ',')
    throw InputError("malformed weight '" + text + "': trailing comma");
  return w;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.coords.begin(), w.coords.end(), [](std::int64_t c) { return c >= 0; });
}

namespace {

void bond(std::vector<IntVec>& a, int i, int j, std::int64_t aij, std::int64_t aji) {
  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
  a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
}

std::vector<IntVec> cartan_matrix(char type, int n) {
  std::vector<IntVec> a(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1, -1, -1);
      bond(a, n - 2, n - 1, -1, -2);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1, -1, -1);
      bond(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1, -1, -1);
      bond(a, n - 3, n - 1, -1, -1);
      break;
    case 'E':
      bond(a, 0, 2, -1, -1);
      bond(a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) bond(a, i, i + 1, -1, -1);
      break;
    case 'F':
      bond(a, 0, 1, -1, -1);
      bond(a, 1, 2, -1, -2);
      bond(a, 2, 3, -1, -1);
      break;
    case 'G':
      bond(a, 0, 1, -3, -1);
      break;
    default:
      break;
  }
  return a;
}

void validate_type(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok)
    throw InputError("invalid root system type " + std::string(1, type) + std::to_string(rank) +
                     " (need A>=1, B>=2, C>=2, D>=3, E6-E8, F4, G2)");
}

std::int64_t height(const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

RootSystem RootSystem::build(char type_label, int rank) {
  type_label = static_cast<char>(std::toupper(static_cast<unsigned char>(type_label)));
  validate_type(type_label, rank);

  RootSystem rs;
  rs.type_ = type_label;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type_label, rank);
  const auto n = static_cast<std::size_t>(rank);
  const auto& a = rs.cartan_;

  // d_i a_ij = d_j a_ji, propagated along the (connected) Dynkin diagram.
  IntVec d(n, 0);
  d[0] = 6;
  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      todo.push_back(j);
    }
  }
  std::int64_t dmin = *std::min_element(d.begin(), d.end());
  for (auto& x : d) x /= dmin;
  rs.sym_ = d;
  rs.lacing_ = static_cast<int>(*std::max_element(d.begin(), d.end()));

  // Positive roots: closure of the simple roots under simple reflections.
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (std::size_t j = 0; j < n; ++j) p += a[i][j] * beta[j];
      if (p == 0) continue;
      IntVec img = beta;
      img[i] -= p;
      if (std::any_of(img.begin(), img.end(), [](std::int64_t c) { return c < 0; })) continue;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  rs.roots_.assign(seen.begin(), seen.end());
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const IntVec& x, const IntVec& y) {
    auto hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  // Coroots: beta^vee = sum_j beta_j (d_j / d_beta) alpha_j^vee.
  std::int64_t best_short_height = -1, best_height = -1;
  std::size_t highest = 0;
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    const IntVec& beta = rs.roots_[k];
    std::int64_t norm = 0;  // (beta, beta) with (alpha_i, alpha_i) = 2 d_i
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += beta[i] * beta[j] * d[i] * a[i][j];
    std::int64_t dbeta = norm / 2;
    IntVec co(n);
    for (std::size_t j = 0; j < n; ++j) {
      if ((beta[j] * d[j]) % dbeta != 0) throw InternalError("non-integral coroot");
      co[j] = beta[j] * d[j] / dbeta;
    }
    rs.coroots_.push_back(co);
    std::int64_t h = height(beta);
    if (dbeta == 1 && h > best_short_height) {
      best_short_height = h;
      rs.highest_short_ = k;
    }
    if (h > best_height) {
      best_height = h;
      highest = k;
    }
  }
  rs.coxeter_ = static_cast<int>(best_height + 1);
  rs.dual_coxeter_ = static_cast<int>(height(rs.coroots_[highest]) + 1);
  rs.simple_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) rs.simple_index_[i] = i;  // sorted first by height
  return rs;
}

Weight RootSystem::rho() const { return Weight{IntVec(static_cast<std::size_t>(rank_), 1)}; }

std::int64_t RootSystem::weyl_group_order() const {
  auto fact = [](std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 2; i <= k; ++i) r = checked::mul(r, i);
    return r;
  };
  const std::int64_t n = rank_;
  switch (type_) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return checked::mul(std::int64_t{1} << n, fact(n));
    case 'D': return checked::mul(std::int64_t{1} << (n - 1), fact(n));
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

std::int64_t RootSystem::pair(const IntVec& v, std::size_t coroot_index) const {
  if (coroot_index >= coroots_.size())
    throw InputError("coroot index " + std::to_string(coroot_index) + " out of range (" +
                     std::to_string(coroots_.size()) + " positive coroots)");
  if (v.size() != static_cast<std::size_t>(rank_)) throw InputError("weight has wrong rank");
  const IntVec& c = coroots_[coroot_index];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s = checked::add(s, checked::mul(c[j], v[j]));
  return s;
}

std::int64_t RootSystem::pair(const Weight& lambda, std::size_t coroot_index) const {
  return pair(lambda.coords, coroot_index);
}

IntVec RootSystem::root_in_weight_coords(std::size_t root_index) const {
  const IntVec& beta = roots_.at(root_index);
  const auto n = static_cast<std::size_t>(rank_);
  IntVec out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += cartan_[i][j] * beta[j];
  return out;
}

}  // namespace klext
