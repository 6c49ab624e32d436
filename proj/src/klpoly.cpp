#include "klext/klpoly.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>

#include <json.hpp>

#include "klext/error.hpp"
#include "klext/kl_kernel.hpp"

namespace klext {

using nlohmann::json;

// ---------------------------------------------------------------------------
// KLTable

TableHeader TableHeader::for_group(const CoxeterGroup& g) {
  TableHeader h;
  h.type_label = g.root_system().type_label();
  h.rank = g.rank();
  h.ell = g.is_affine() ? g.ell() : 0;
  h.generator_count = static_cast<int>(g.generators().size());
  return h;
}

std::size_t KLTable::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto c : k.first.letters) h = (h ^ c) * 1099511628211ull;
  h = (h ^ 0xff) * 1099511628211ull;
  for (auto c : k.second.letters) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::optional<IntPoly> KLTable::find(const Word& x, const Word& w) const {
  std::shared_lock lock(mutex_);
  auto it = polys_.find(Key{x, w});
  if (it == polys_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> KLTable::find_mu(const Word& x, const Word& w) const {
  std::shared_lock lock(mutex_);
  auto it = mu_.find(Key{x, w});
  if (it == mu_.end()) return std::nullopt;
  return it->second;
}

void KLTable::insert(const Word& x, const Word& w, const IntPoly& p) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = polys_.emplace(Key{x, w}, p);
  if (!inserted) return;
  const int d = static_cast<int>(w.size()) - static_cast<int>(x.size());
  mu_.emplace(Key{x, w}, d > 0 && d % 2 == 1 ? p.coeff((d - 1) / 2) : 0);
}

std::size_t KLTable::size() const {
  std::shared_lock lock(mutex_);
  return polys_.size();
}

int KLTable::max_length() const {
  std::shared_lock lock(mutex_);
  int m = 0;
  for (const auto& [k, p] : polys_) m = std::max(m, static_cast<int>(k.second.size()));
  return m;
}

namespace {

json header_json(const TableHeader& h) {
  json j;
  j["format"] = "klext-kl-table";
  j["version"] = h.version;
  j["type"] = std::string(1, h.type_label);
  j["rank"] = h.rank;
  if (h.ell == 0)
    j["ell"] = "finite";
  else
    j["ell"] = h.ell;
  j["generators"] = h.generator_count;
  return j;
}

TableHeader parse_header(const std::string& line, const std::string& path) {
  TableHeader h;
  try {
    json j = json::parse(line);
    if (j.at("format").get<std::string>() != "klext-kl-table") throw InputError("bad format tag");
    h.version = j.at("version").get<int>();
    std::string t = j.at("type").get<std::string>();
    if (t.size() != 1) throw InputError("bad type label");
    h.type_label = t[0];
    h.rank = j.at("rank").get<int>();
    const json& ell = j.at("ell");
    if (ell.is_string()) {
      if (ell.get<std::string>() != "finite") throw InputError("bad ell");
      h.ell = 0;
    } else {
      h.ell = ell.get<std::int64_t>();
    }
    h.generator_count = j.at("generators").get<int>();
  } catch (const InputError& e) {
    throw InputError("cache file " + path + ": malformed header: " + e.what());
  } catch (const std::exception& e) {
    throw InputError("cache file " + path + ": malformed header: " + e.what());
  }
  return h;
}

std::string describe_header(const TableHeader& h) {
  return std::string(1, h.type_label) + std::to_string(h.rank) + " " +
         (h.ell == 0 ? std::string("finite") : "ell=" + std::to_string(h.ell)) + " generators=" +
         std::to_string(h.generator_count) + " version=" + std::to_string(h.version);
}

}  // namespace

void KLTable::save(const std::string& path) const {
  std::vector<std::pair<Key, IntPoly>> entries;
  {
    std::shared_lock lock(mutex_);
    entries.assign(polys_.begin(), polys_.end());
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    const Key& ka = a.first;
    const Key& kb = b.first;
    if (ka.second.size() != kb.second.size()) return ka.second.size() < kb.second.size();
    if (ka.second != kb.second) return ka.second < kb.second;
    if (ka.first.size() != kb.first.size()) return ka.first.size() < kb.first.size();
    return ka.first < kb.first;
  });
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write cache file " + path);
    out << header_json(header_).dump() << "\n";
    for (const auto& [key, p] : entries) {
      json rec;
      rec["x"] = format_word(key.first);
      rec["w"] = format_word(key.second);
      rec["p"] = p.coeffs();
      out << rec.dump() << "\n";
    }
    if (!out) throw InputError("error writing cache file " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw InputError("cannot replace cache file " + path);
}

TableHeader KLTable::read_header(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open cache file " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError("cache file " + path + " is empty");
  return parse_header(line, path);
}

void KLTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open cache file " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError("cache file " + path + " is empty");
  TableHeader h = parse_header(line, path);
  if (!(h == header_))
    throw InputError("cache file " + path + " was written for " + describe_header(h) +
                     ", active group is " + describe_header(header_) + "; refusing to load");
  std::vector<std::pair<Key, IntPoly>> staged;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json rec = json::parse(line);
      Word x = parse_word(rec.at("x").get<std::string>());
      Word w = parse_word(rec.at("w").get<std::string>());
      IntPoly p(rec.at("p").get<std::vector<std::int64_t>>());
      staged.emplace_back(Key{std::move(x), std::move(w)}, std::move(p));
    } catch (const std::exception& e) {
      throw InputError("cache file " + path + " line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  for (const auto& [k, p] : staged) insert(k.first, k.second, p);
}

// ---------------------------------------------------------------------------
// KLEngine

KLEngine::KLEngine(CoxeterGroup group)
    : KLEngine(group, std::make_shared<KLTable>(TableHeader::for_group(group))) {}

KLEngine::KLEngine(CoxeterGroup group, std::shared_ptr<KLTable> table)
    : group_(std::move(group)), table_(std::move(table)) {
  if (!(table_->header() == TableHeader::for_group(group_)))
    throw InputError("KL table header does not match the group " + group_.describe());
}

int KLEngine::intern(const AffineElement& e) {
  auto it = ids_.find(e);
  if (it != ids_.end()) return it->second;
  Node node;
  node.elem = e;
  node.word = group_.canonical_word(e);
  node.length = static_cast<int>(node.word.size());
  node.rdesc = group_.right_descents(e);
  node.rmul.assign(static_cast<std::size_t>(group_.rank() + 1), -1);
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
  ids_.emplace(e, id);
  return id;
}

int KLEngine::rmul(int id, int s) {
  auto idx = static_cast<std::size_t>(id);
  int cached = nodes_[idx].rmul[static_cast<std::size_t>(s)];
  if (cached >= 0) return cached;
  AffineElement prod = group_.multiply(nodes_[idx].elem, group_.generator(s));
  int other = intern(prod);
  nodes_[idx].rmul[static_cast<std::size_t>(s)] = other;
  nodes_[static_cast<std::size_t>(other)].rmul[static_cast<std::size_t>(s)] = id;
  return other;
}

bool KLEngine::leq_id(int x, int w) {
  while (true) {
    const int lx = nodes_[static_cast<std::size_t>(x)].length;
    const int lw = nodes_[static_cast<std::size_t>(w)].length;
    if (lx > lw) return false;
    if (lx == lw) return x == w;
    const int s = nodes_[static_cast<std::size_t>(w)].rdesc.first();
    w = rmul(w, s);
    if (nodes_[static_cast<std::size_t>(x)].rdesc.contains(s)) x = rmul(x, s);
  }
}

const std::vector<int>& KLEngine::lower_interval(int id) {
  auto idx = static_cast<std::size_t>(id);
  if (nodes_[idx].lower_done) return nodes_[idx].lower;
  std::vector<int> out;
  if (nodes_[idx].length == 0) {
    out.push_back(id);
  } else {
    const int s = nodes_[idx].rdesc.first();
    const int v = rmul(id, s);
    std::vector<int> below = lower_interval(v);  // copy: interning may grow nodes_
    out = below;
    for (int z : below) out.push_back(rmul(z, s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  nodes_[idx].lower = std::move(out);
  nodes_[idx].lower_done = true;
  return nodes_[idx].lower;
}

const std::vector<std::pair<int, std::int64_t>>& KLEngine::mu_list(int id) {
  auto idx = static_cast<std::size_t>(id);
  if (nodes_[idx].mu_done) return nodes_[idx].mu_list;
  std::vector<int> low = lower_interval(id);
  const int lw = nodes_[idx].length;
  std::vector<std::pair<int, std::int64_t>> out;
  for (int z : low) {
    const int d = lw - nodes_[static_cast<std::size_t>(z)].length;
    if (d % 2 == 0) continue;
    std::int64_t m = kl_id(z, id).coeff((d - 1) / 2);
    if (m != 0) out.emplace_back(z, m);
  }
  nodes_[idx].mu_list = std::move(out);
  nodes_[idx].mu_done = true;
  return nodes_[idx].mu_list;
}

IntPoly KLEngine::kl_id(int x, int w) {
  if (x == w) return IntPoly{1};
  if (!leq_id(x, w)) return {};
  const Word& wx = nodes_[static_cast<std::size_t>(x)].word;
  const Word& ww = nodes_[static_cast<std::size_t>(w)].word;
  if (auto hit = table_->find(wx, ww)) return *hit;

  const int s = nodes_[static_cast<std::size_t>(w)].rdesc.first();
  const int v = rmul(w, s);
  const int xs = rmul(x, s);
  const int c = nodes_[static_cast<std::size_t>(x)].rdesc.contains(s) ? 1 : 0;
  const int lw = nodes_[static_cast<std::size_t>(w)].length;

  IntPoly p = kl_id(xs, v).shifted(1 - c);
  p += kl_id(x, v).shifted(c);
  std::vector<std::pair<int, std::int64_t>> mus = mu_list(v);
  for (const auto& [z, m] : mus) {
    if (!nodes_[static_cast<std::size_t>(z)].rdesc.contains(s)) continue;
    if (!leq_id(x, z)) continue;
    const int lz = nodes_[static_cast<std::size_t>(z)].length;
    p -= kl_id(x, z).scaled(m).shifted((lw - lz) / 2);
  }
  const int d = lw - nodes_[static_cast<std::size_t>(x)].length;
  if (p.coeff(0) != 1 || p.degree() > (d - 1) / 2)
    throw InternalError("KL polynomial violates the degree bound or constant term: " + p.to_string());
  table_->insert(nodes_[static_cast<std::size_t>(x)].word, nodes_[static_cast<std::size_t>(w)].word, p);
  return p;
}

IntPoly KLEngine::kl(const AffineElement& x, const AffineElement& w) {
  const int ix = intern(x);
  const int iw = intern(w);
  return kl_id(ix, iw);
}

std::int64_t KLEngine::mu(const AffineElement& x, const AffineElement& w) {
  const int ix = intern(x);
  const int iw = intern(w);
  const int d = nodes_[static_cast<std::size_t>(iw)].length - nodes_[static_cast<std::size_t>(ix)].length;
  if (d <= 0 || d % 2 == 0) return 0;
  return kl_id(ix, iw).coeff((d - 1) / 2);
}

bool KLEngine::leq(const AffineElement& x, const AffineElement& w) {
  const int ix = intern(x);
  const int iw = intern(w);
  return leq_id(ix, iw);
}

int KLEngine::length(const AffineElement& x) { return nodes_[static_cast<std::size_t>(intern(x))].length; }

const Word& KLEngine::word(const AffineElement& x) { return nodes_[static_cast<std::size_t>(intern(x))].word; }

GeneratorSet KLEngine::right_descents(const AffineElement& x) {
  return nodes_[static_cast<std::size_t>(intern(x))].rdesc;
}

AffineElement KLEngine::times(const AffineElement& x, int s) {
  if (!group_.is_generator(s)) throw InputError("not a generator: " + std::to_string(s));
  return nodes_[static_cast<std::size_t>(rmul(intern(x), s))].elem;
}

const std::vector<AffineElement>& KLEngine::parabolic(GeneratorSet J) {
  auto it = parabolics_.find(J.bits());
  if (it != parabolics_.end()) return it->second;
  return parabolics_.emplace(J.bits(), group_.parabolic_subgroup(J)).first->second;
}

void KLEngine::prime(int length_bound, int threads) {
  BallKL ball(group_, length_bound, threads);
  ball.export_to(*table_);
}

// ---------------------------------------------------------------------------
// KLOracle

std::size_t KLOracle::PairHash::operator()(const std::pair<AffineElement, AffineElement>& p) const noexcept {
  AffineElementHash h;
  return h(p.first) * 31 + h(p.second);
}

KLOracle::KLOracle(CoxeterGroup group) : group_(std::move(group)) {}

IntPoly KLOracle::r_poly(const AffineElement& x, const AffineElement& w) {
  auto key = std::make_pair(x, w);
  if (auto it = r_memo_.find(key); it != r_memo_.end()) return it->second;
  IntPoly r;
  if (x == w) {
    r = IntPoly{1};
  } else if (group_.bruhat_leq(x, w)) {
    const int s = group_.right_descents(w).first();
    const AffineElement& g = group_.generator(s);
    AffineElement ws = group_.multiply(w, g);
    AffineElement xs = group_.multiply(x, g);
    if (group_.length(xs) < group_.length(x)) {
      r = r_poly(xs, ws);
    } else {
      r = IntPoly{-1, 1} * r_poly(x, ws);
      r += r_poly(xs, ws).shifted(1);
    }
  }
  r_memo_.emplace(std::move(key), r);
  return r;
}

std::vector<AffineElement> KLOracle::lower_interval(const AffineElement& w) {
  // Products of all subwords of one reduced word.
  Word word = group_.canonical_word(w);
  std::unordered_map<AffineElement, int, AffineElementHash> seen;
  std::vector<AffineElement> set{group_.identity()};
  seen.emplace(group_.identity(), 0);
  for (auto letter : word.letters) {
    const std::size_t n = set.size();
    for (std::size_t i = 0; i < n; ++i) {
      AffineElement y = group_.multiply(set[i], group_.generator(letter));
      if (seen.emplace(y, 0).second) set.push_back(std::move(y));
    }
  }
  return set;
}

IntPoly KLOracle::kl_via_r(const AffineElement& x, const AffineElement& w) {
  if (auto it = p_memo_.find({x, w}); it != p_memo_.end()) return it->second;
  if (!group_.bruhat_leq(x, w)) return {};

  struct Entry {
    AffineElement z;
    int length;
  };
  std::vector<Entry> interval;
  for (auto& z : lower_interval(w))
    if (group_.bruhat_leq(x, z)) interval.push_back({z, group_.length(z)});
  std::stable_sort(interval.begin(), interval.end(),
                   [](const Entry& a, const Entry& b) { return a.length > b.length; });

  const int lw = group_.length(w);
  for (std::size_t i = 0; i < interval.size(); ++i) {
    const AffineElement& z = interval[i].z;
    if (p_memo_.count({z, w})) continue;
    if (z == w) {
      p_memo_.emplace(std::make_pair(z, w), IntPoly{1});
      continue;
    }
    const int d = lw - interval[i].length;
    IntPoly rhs;
    for (std::size_t j = 0; j < i; ++j) {
      const AffineElement& u = interval[j].z;
      if (interval[j].length <= interval[i].length) continue;
      IntPoly r = r_poly(z, u);
      if (r.is_zero()) continue;
      rhs += r * p_memo_.at({u, w});
    }
    // rhs = q^d P(1/q) - P; the top half of rhs determines P.
    std::vector<std::int64_t> coeffs;
    for (int k = 0; 2 * k <= d - 1; ++k) coeffs.push_back(rhs.coeff(d - k));
    IntPoly p(coeffs);
    IntPoly mirrored;
    for (int k = 0; k <= p.degree(); ++k) mirrored += IntPoly::monomial(p.coeff(k), d - k);
    if (!(mirrored - p == rhs))
      throw InternalError("R-polynomial system is inconsistent for " + format_word(group_.canonical_word(z)) +
                          " <= " + format_word(group_.canonical_word(w)));
    p_memo_.emplace(std::make_pair(z, w), std::move(p));
  }
  return p_memo_.at({x, w});
}

// ---------------------------------------------------------------------------
// Parabolic KL

IntPoly alternating_kl_sum(KLEngine& engine, GeneratorSet J, const AffineElement& y, const AffineElement& w) {
  const auto& wj = engine.parabolic(J);
  const CoxeterGroup& g = engine.group();
  IntPoly sum;
  for (const auto& x : wj) {
    IntPoly p = engine.kl(g.multiply(y, x), w);
    if (engine.length(x) % 2 == 0)
      sum += p;
    else
      sum -= p;
  }
  return sum;
}

IntPoly parabolic_kl(KLEngine& engine, GeneratorSet J, const AffineElement& y, const AffineElement& w) {
  const CoxeterGroup& g = engine.group();
  if (!g.is_finite_parabolic(J))
    throw InputError("generator set " + format_generator_set(J) + " does not generate a finite parabolic subgroup");
  if (!engine.right_descents(y).intersect(J).empty())
    throw InputError("y = " + format_word(engine.word(y)) + " is not a minimal coset representative for " +
                     format_generator_set(J));
  if (!engine.right_descents(w).intersect(J).empty())
    throw InputError("w = " + format_word(engine.word(w)) + " is not a minimal coset representative for " +
                     format_generator_set(J));
  return alternating_kl_sum(engine, J, y, w);
}

}  // namespace klext
