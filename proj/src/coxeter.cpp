#include "klext/coxeter.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "klext/error.hpp"

namespace klext {

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.letters[i]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty() || s == "e") return w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 2)
      throw InputError("malformed word '" + text + "': expected comma-separated generator indices");
    w.letters.push_back(static_cast<std::uint8_t>(std::stoi(item)));
  }
  if (s.back() == ',') throw InputError("malformed word '" + text + "': trailing comma");
  return w;
}

GeneratorSet GeneratorSet::of(std::initializer_list<int> gens) {
  GeneratorSet s;
  for (int g : gens) s.insert(g);
  return s;
}

GeneratorSet GeneratorSet::of(const std::vector<int>& gens) {
  GeneratorSet s;
  for (int g : gens) s.insert(g);
  return s;
}

std::vector<int> GeneratorSet::to_vector() const {
  std::vector<int> out;
  for (int s = 0; s < 32; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

std::string format_generator_set(GeneratorSet s) {
  std::string out = "{";
  bool first = true;
  for (int g : s.to_vector()) {
    if (!first) out += ",";
    out += std::to_string(g);
    first = false;
  }
  return out + "}";
}

GeneratorSet parse_generator_set(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '{' && c != '}') s.push_back(c);
  GeneratorSet out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 2)
      throw InputError("malformed generator set '" + text + "'");
    int g = std::stoi(item);
    if (g >= 32) throw InputError("generator index too large in '" + text + "'");
    out.insert(g);
  }
  return out;
}

std::size_t AffineElementHash::operator()(const AffineElement& e) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::int64_t v) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (auto v : e.fin) mix(v);
  for (auto v : e.trans) mix(v);
  return h;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

CoxeterGroup::CoxeterGroup(RootSystem rs, std::int64_t ell, bool affine)
    : rs_(std::move(rs)), ell_(ell), affine_(affine) {
  const auto n = static_cast<std::size_t>(rs_.rank());
  if (rs_.rank() + 1 > 32) throw InputError("rank too large");

  gen_elems_.resize(n + 1);
  for (int s = affine_ ? 0 : 1; s <= rs_.rank(); ++s) {
    gens_.push_back(s);
    all_.insert(s);
  }

  for (std::size_t i = 0; i < n; ++i) {
    // v -> v - v_i alpha_i
    IntVec alpha = rs_.root_in_weight_coords(rs_.simple_root_index(static_cast<int>(i)));
    AffineElement g{IntVec(n * n, 0), IntVec(n, 0)};
    for (std::size_t r = 0; r < n; ++r) {
      g.fin[r * n + r] = 1;
      g.fin[r * n + i] -= alpha[r];
    }
    gen_elems_[i + 1] = g;
  }
  {
    // v -> v - (<v, theta^vee> + ell) theta
    std::size_t t = rs_.highest_short_root();
    IntVec theta = rs_.root_in_weight_coords(t);
    const IntVec& theta_co = rs_.positive_coroots()[t];
    AffineElement g{IntVec(n * n, 0), IntVec(n, 0)};
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) g.fin[r * n + c] = (r == c ? 1 : 0) - theta[r] * theta_co[c];
      g.trans[r] = -ell_ * theta[r];
    }
    gen_elems_[0] = g;
  }

  // Base point -(ell/m) rho with m = 1 + max <rho, alpha^vee>, stored scaled by m.
  std::int64_t max_pair = 0;
  for (std::size_t k = 0; k < rs_.positive_coroots().size(); ++k)
    max_pair = std::max(max_pair, rs_.pair(rs_.rho(), k));
  scale_ = max_pair + 1;
  const std::int64_t e = affine_ ? ell_ : 1;
  base_point_.assign(n, -e);
  for (std::size_t k = 0; k < rs_.positive_coroots().size(); ++k) {
    std::int64_t p = rs_.pair(base_point_, k);
    if (!(p < 0 && p > -e * scale_))
      throw InternalError("base point is not interior to the antidominant alcove");
    base_pairings_.push_back(p);
  }
}

CoxeterGroup CoxeterGroup::affine(RootSystem rs, std::int64_t ell) {
  if (ell < 1) throw InputError("ell must be a positive integer");
  return CoxeterGroup(std::move(rs), ell, true);
}

CoxeterGroup CoxeterGroup::finite(RootSystem rs) { return CoxeterGroup(std::move(rs), 0, false); }

std::string CoxeterGroup::describe() const {
  if (affine_) return rs_.name() + "~ ell=" + std::to_string(ell_);
  return rs_.name() + " finite";
}

AffineElement CoxeterGroup::identity() const {
  const auto n = static_cast<std::size_t>(rs_.rank());
  AffineElement e{IntVec(n * n, 0), IntVec(n, 0)};
  for (std::size_t i = 0; i < n; ++i) e.fin[i * n + i] = 1;
  return e;
}

const AffineElement& CoxeterGroup::generator(int s) const {
  if (!is_generator(s))
    throw InputError("generator " + std::to_string(s) + " does not belong to " + describe());
  return gen_elems_[static_cast<std::size_t>(s)];
}

AffineElement CoxeterGroup::multiply(const AffineElement& a, const AffineElement& b) const {
  const auto n = static_cast<std::size_t>(rs_.rank());
  if (a.fin.size() != n * n || b.fin.size() != n * n)
    throw InputError("elements belong to groups of different rank");
  AffineElement out{IntVec(n * n, 0), a.trans};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t ark = a.fin[r * n + k];
      if (ark == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        out.fin[r * n + c] = checked::add(out.fin[r * n + c], checked::mul(ark, b.fin[k * n + c]));
      out.trans[r] = checked::add(out.trans[r], checked::mul(ark, b.trans[k]));
    }
  }
  return out;
}

AffineElement CoxeterGroup::from_word(const Word& w) const {
  AffineElement out = identity();
  for (auto s : w.letters) out = multiply(out, generator(s));
  return out;
}

AffineElement CoxeterGroup::inverse(const AffineElement& a) const {
  Word w = canonical_word(a);
  std::reverse(w.letters.begin(), w.letters.end());
  return from_word(w);
}

IntVec CoxeterGroup::act(const AffineElement& a, const IntVec& v) const {
  const auto n = static_cast<std::size_t>(rs_.rank());
  if (v.size() != n) throw InputError("point has wrong rank");
  IntVec out = a.trans;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out[r] = checked::add(out[r], checked::mul(a.fin[r * n + c], v[c]));
  return out;
}

int CoxeterGroup::length(const AffineElement& w) const {
  const auto n = static_cast<std::size_t>(rs_.rank());
  IntVec image(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t acc = checked::mul(scale_, w.trans[r]);
    for (std::size_t c = 0; c < n; ++c)
      acc = checked::add(acc, checked::mul(w.fin[r * n + c], base_point_[c]));
    image[r] = acc;
  }
  int count = 0;
  const auto& coroots = rs_.positive_coroots();
  for (std::size_t k = 0; k < coroots.size(); ++k) {
    std::int64_t b = 0;
    for (std::size_t j = 0; j < n; ++j) b = checked::add(b, checked::mul(coroots[k][j], image[j]));
    std::int64_t a = base_pairings_[k];
    if (affine_) {
      std::int64_t period = ell_ * scale_;
      std::int64_t diff = floor_div(b, period) - floor_div(a, period);
      count += static_cast<int>(diff < 0 ? -diff : diff);
    } else if (b > 0) {
      ++count;
    }
  }
  return count;
}

GeneratorSet CoxeterGroup::right_descents(const AffineElement& w) const {
  GeneratorSet out;
  int l = length(w);
  for (int s : gens_)
    if (length(multiply(w, gen_elems_[static_cast<std::size_t>(s)])) < l) out.insert(s);
  return out;
}

GeneratorSet CoxeterGroup::left_descents(const AffineElement& w) const {
  GeneratorSet out;
  int l = length(w);
  for (int s : gens_)
    if (length(multiply(gen_elems_[static_cast<std::size_t>(s)], w)) < l) out.insert(s);
  return out;
}

Word CoxeterGroup::canonical_word(const AffineElement& w) const {
  Word out;
  AffineElement cur = w;
  int l = length(cur);
  while (l > 0) {
    bool found = false;
    for (int s : gens_) {
      AffineElement next = multiply(gen_elems_[static_cast<std::size_t>(s)], cur);
      int ln = length(next);
      if (ln < l) {
        out.letters.push_back(static_cast<std::uint8_t>(s));
        cur = std::move(next);
        l = ln;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("element of positive length without a left descent");
  }
  return out;
}

bool CoxeterGroup::bruhat_leq(const AffineElement& u, const AffineElement& w) const {
  AffineElement x = u, y = w;
  int lx = length(x), ly = length(y);
  while (true) {
    if (lx > ly) return false;
    if (ly == 0) return lx == 0;
    if (lx == ly) return x == y;
    int s = right_descents(y).first();
    const AffineElement& g = gen_elems_[static_cast<std::size_t>(s)];
    y = multiply(y, g);
    --ly;
    AffineElement xs = multiply(x, g);
    int lxs = length(xs);
    if (lxs < lx) {
      x = std::move(xs);
      lx = lxs;
    }
  }
}

bool CoxeterGroup::is_finite_parabolic(GeneratorSet J) const {
  if (!J.is_subset_of(all_)) return false;
  return !affine_ || J != all_;
}

bool CoxeterGroup::is_minimal_in_coset(const AffineElement& w, GeneratorSet J) const {
  return right_descents(w).intersect(J).empty();
}

CosetDecomposition CoxeterGroup::coset_decompose(const AffineElement& w, GeneratorSet J) const {
  if (!J.is_subset_of(all_))
    throw InputError("generator set " + format_generator_set(J) + " is not a subset of the generators");
  if (!is_finite_parabolic(J))
    throw InputError("generator set " + format_generator_set(J) + " generates an infinite subgroup");
  AffineElement minimal = w;
  AffineElement parabolic = identity();
  while (true) {
    int s = right_descents(minimal).intersect(J).first();
    if (s < 0) break;
    const AffineElement& g = gen_elems_[static_cast<std::size_t>(s)];
    minimal = multiply(minimal, g);
    parabolic = multiply(g, parabolic);
  }
  return {minimal, parabolic};
}

namespace {

struct Keyed {
  int length;
  Word word;
  AffineElement elem;
};

std::vector<AffineElement> sort_by_length_word(const CoxeterGroup& g, std::vector<AffineElement> elems) {
  std::vector<Keyed> keyed;
  keyed.reserve(elems.size());
  for (auto& e : elems) keyed.push_back({g.length(e), g.canonical_word(e), std::move(e)});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  std::vector<AffineElement> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.elem));
  return out;
}

}  // namespace

std::vector<AffineElement> CoxeterGroup::parabolic_subgroup(GeneratorSet J) const {
  if (!is_finite_parabolic(J))
    throw InputError("generator set " + format_generator_set(J) + " does not generate a finite parabolic subgroup");
  const std::int64_t cap = rs_.weyl_group_order();
  std::unordered_set<AffineElement, AffineElementHash> seen{identity()};
  std::vector<AffineElement> frontier{identity()};
  std::vector<AffineElement> all{identity()};
  std::vector<int> js = J.to_vector();
  while (!frontier.empty()) {
    std::vector<AffineElement> next;
    for (const auto& x : frontier) {
      for (int s : js) {
        AffineElement y = multiply(x, gen_elems_[static_cast<std::size_t>(s)]);
        if (seen.insert(y).second) {
          if (static_cast<std::int64_t>(seen.size()) > cap)
            throw InputError("parabolic subgroup " + format_generator_set(J) + " exceeds the finite Weyl group order");
          next.push_back(y);
          all.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return sort_by_length_word(*this, std::move(all));
}

std::vector<AffineElement> CoxeterGroup::enumerate_ball(int length_bound) const {
  if (length_bound < 0) throw InputError("length bound must be non-negative");
  std::vector<AffineElement> all{identity()};
  std::vector<AffineElement> layer{identity()};
  for (int len = 1; len <= length_bound; ++len) {
    std::unordered_set<AffineElement, AffineElementHash> seen;
    std::vector<AffineElement> next;
    for (const auto& x : layer) {
      for (int s : gens_) {
        AffineElement y = multiply(x, gen_elems_[static_cast<std::size_t>(s)]);
        if (length(y) != len) continue;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    if (next.empty()) break;  // finite group exhausted
    next = sort_by_length_word(*this, std::move(next));
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

int CoxeterGroup::coxeter_matrix_entry(int s, int t) const {
  const AffineElement& gs = generator(s);
  const AffineElement& gt = generator(t);
  AffineElement st = multiply(gs, gt);
  AffineElement cur = st;
  const AffineElement e = identity();
  for (int k = 1; k <= 12; ++k) {
    if (cur == e) return k;
    cur = multiply(cur, st);
  }
  return 0;
}

}  // namespace klext
