#include "klext/alcove.hpp"

#include <algorithm>
#include <functional>

#include "klext/error.hpp"

namespace klext {

namespace {

IntVec shifted(const Weight& lambda, std::int64_t by) {
  IntVec v = lambda.coords;
  for (auto& c : v) c = checked::add(c, by);
  return v;
}

// <v, theta^vee> for the highest coroot
std::int64_t pair_highest(const CoxeterGroup& g, const IntVec& v) {
  return g.root_system().pair(v, g.root_system().highest_short_root());
}

void require_affine(const CoxeterGroup& g) {
  if (!g.is_affine()) throw InputError("alcove geometry needs the affine Weyl group, got " + g.describe());
}

void require_rank(const CoxeterGroup& g, const Weight& w) {
  if (w.rank() != static_cast<std::size_t>(g.rank()))
    throw InputError("weight " + format_weight(w) + " has rank " + std::to_string(w.rank()) + ", expected " +
                     std::to_string(g.rank()));
}

// Generator whose wall of C^- the rho-shifted point v violates strictly, or -1.
int violated_wall(const CoxeterGroup& g, const IntVec& v) {
  for (int s : g.generators()) {
    if (s == 0) {
      if (pair_highest(g, v) < -g.ell()) return 0;
    } else if (v[static_cast<std::size_t>(s - 1)] > 0) {
      return s;
    }
  }
  return -1;
}

}  // namespace

Weight dot_action(const CoxeterGroup& g, const AffineElement& w, const Weight& lambda) {
  require_rank(g, lambda);
  IntVec v = g.act(w, shifted(lambda, 1));
  for (auto& c : v) c = checked::sub(c, 1);
  return Weight{std::move(v)};
}

bool in_closure_of_antidominant_alcove(const CoxeterGroup& g, const Weight& lambda) {
  require_affine(g);
  require_rank(g, lambda);
  IntVec v = shifted(lambda, 1);
  return violated_wall(g, v) < 0;
}

bool maps_alcove_to_dominant(const CoxeterGroup& g, const AffineElement& w) {
  // Image of the interior point -(ell/h) rho, scaled by h.
  const std::int64_t h = g.root_system().coxeter_number();
  const auto n = static_cast<std::size_t>(g.rank());
  IntVec p(n, -g.ell());
  IntVec img = g.act(w, p);
  for (std::size_t i = 0; i < n; ++i) {
    // act() added trans once; the scaled point needs h * trans.
    std::int64_t scaled = checked::add(checked::sub(img[i], w.trans[i]), checked::mul(h, w.trans[i]));
    if (scaled <= 0) return false;
  }
  return true;
}

GeneratorSet stabilizer(const CoxeterGroup& g, const Weight& lambda) {
  if (!in_closure_of_antidominant_alcove(g, lambda))
    throw InputError("weight " + format_weight(lambda) + " is not in the closure of the antidominant alcove");
  IntVec v = shifted(lambda, 1);
  GeneratorSet J;
  if (pair_highest(g, v) == -g.ell()) J.insert(0);
  for (int i = 1; i <= g.rank(); ++i)
    if (v[static_cast<std::size_t>(i - 1)] == 0) J.insert(i);
  return J;
}

Classification classify(const CoxeterGroup& g, const Weight& weight) {
  require_affine(g);
  require_rank(g, weight);
  IntVec v = shifted(weight, 1);
  AffineElement full = g.identity();
  for (std::int64_t steps = 0;; ++steps) {
    if (steps > 100000000) throw InternalError("classify did not reach the antidominant alcove");
    int s = violated_wall(g, v);
    if (s < 0) break;
    v = g.act(g.generator(s), v);
    full = g.multiply(full, g.generator(s));
  }
  Classification c;
  for (auto& x : v) x = checked::sub(x, 1);
  c.lambda = Weight{std::move(v)};
  c.J = stabilizer(g, c.lambda);
  c.w = g.coset_decompose(full, c.J).minimal;
  c.word = g.canonical_word(c.w);
  c.regular = c.J.empty();
  c.weight_length = static_cast<int>(c.word.size());
  c.parity = c.weight_length % 2 == 0 ? Parity::even : Parity::odd;
  if (dot_action(g, c.w, c.lambda) != weight) throw InternalError("classify round trip failed");
  return c;
}

Weight facet_weight(const CoxeterGroup& g, GeneratorSet J) {
  require_affine(g);
  if (!J.is_subset_of(g.all_generators()) || J == g.all_generators())
    throw InputError("generator set " + format_generator_set(J) + " is not the stabilizer of a facet of C^-");
  const auto n = static_cast<std::size_t>(g.rank());
  const IntVec& co = g.root_system().positive_coroots()[g.root_system().highest_short_root()];
  const std::int64_t ell = g.ell();
  const bool on_affine_wall = J.contains(0);

  // v_i = 0 exactly for i in J, v_i < 0 otherwise, sum co_i |v_i| <= ell with
  // equality exactly when 0 is in J.
  IntVec v(n, 0);
  std::function<bool(std::size_t, std::int64_t)> search = [&](std::size_t i, std::int64_t used) -> bool {
    if (i == n) return on_affine_wall ? used == ell : used < ell;
    if (J.contains(static_cast<int>(i) + 1)) {
      v[i] = 0;
      return search(i + 1, used);
    }
    for (std::int64_t a = 1; used + co[i] * a <= ell; ++a) {
      v[i] = -a;
      if (search(i + 1, used + co[i] * a)) return true;
    }
    return false;
  };
  if (!search(0, 0))
    throw InputError("no integral weight with stabilizer " + format_generator_set(J) + " for " + g.describe());
  Weight lambda{v};
  for (auto& c : lambda.coords) c -= 1;
  if (stabilizer(g, lambda) != J) throw InternalError("facet_weight produced the wrong stabilizer");
  return lambda;
}

int BlockData::find(const AffineElement& w) const {
  for (std::size_t i = 0; i < dominant_reps.size(); ++i)
    if (dominant_reps[i].w == w) return static_cast<int>(i);
  return -1;
}

int BlockData::find(const Weight& weight) const {
  for (std::size_t i = 0; i < dominant_reps.size(); ++i)
    if (dominant_reps[i].weight == weight) return static_cast<int>(i);
  return -1;
}

BlockData dominant_orbit(const CoxeterGroup& g, const Weight& lambda, int length_bound) {
  BlockData block{g, lambda, stabilizer(g, lambda), length_bound, {}};
  for (auto& w : g.enumerate_ball(length_bound)) {
    if (!g.is_minimal_in_coset(w, block.J)) continue;
    Weight img = dot_action(g, w, lambda);
    if (!is_dominant(img)) continue;
    Word word = g.canonical_word(w);
    const int len = static_cast<int>(word.size());
    block.dominant_reps.push_back({std::move(w), std::move(word), len, std::move(img)});
  }
  return block;
}

std::vector<DominantRep> regular_dominant_elements(const CoxeterGroup& g, int length_bound) {
  require_affine(g);
  std::vector<DominantRep> out;
  for (auto& w : g.enumerate_ball(length_bound)) {
    if (!maps_alcove_to_dominant(g, w)) continue;
    Word word = g.canonical_word(w);
    const int len = static_cast<int>(word.size());
    out.push_back({std::move(w), std::move(word), len, Weight{}});
  }
  return out;
}

const char* to_string(KLGood k) {
  switch (k) {
    case KLGood::yes: return "yes";
    case KLGood::no: return "no";
    case KLGood::unknown: return "unknown";
  }
  return "unknown";
}

KLGood kl_good(char type_label, int rank, std::int64_t ell) {
  RootSystem::build(type_label, rank);  // validates
  if (ell < 1) throw InputError("ell must be a positive integer");
  switch (type_label) {
    case 'A': return KLGood::yes;
    case 'D': return ell >= 3 ? KLGood::yes : KLGood::unknown;
    case 'E': {
      const std::int64_t bound = rank == 6 ? 14 : rank == 7 ? 20 : 32;
      return ell >= bound ? KLGood::yes : KLGood::unknown;
    }
    default: return KLGood::unknown;
  }
}

bool wall_has_weight(char type_label, int rank, std::int64_t ell) {
  RootSystem rs = RootSystem::build(type_label, rank);
  const std::int64_t h = rs.coxeter_number();
  if (ell < h)
    throw InputError("no regular weight exists for " + rs.name() + " at ell=" + std::to_string(ell) +
                     " (need ell >= h = " + std::to_string(h) + ")");
  if (type_label == 'E' && rank == 8 && ell == 30) return false;
  if (type_label == 'F' && ell == 12) return false;
  if (type_label == 'G' && ell == 6) return false;
  return true;
}

}  // namespace klext
