#include "klext/kl_kernel.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "klext/error.hpp"
#include "klext/klpoly.hpp"

namespace klext {

BallKL::BallKL(const CoxeterGroup& group, int length_bound, int threads)
    : bound_(length_bound), gen_count_(group.rank() + 1) {
  elems_ = group.enumerate_ball(length_bound);
  const std::size_t n = elems_.size();
  const auto g = static_cast<std::size_t>(gen_count_);
  words_.resize(n);
  lengths_.resize(n);
  rdesc_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    index_.emplace(elems_[i], static_cast<int>(i));
    words_[i] = group.canonical_word(elems_[i]);
    lengths_[i] = static_cast<int>(words_[i].size());
  }
  rmul_.assign(n * g, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : group.generators()) {
      auto it = index_.find(group.multiply(elems_[i], group.generator(s)));
      if (it == index_.end()) continue;
      rmul_[i * g + static_cast<std::size_t>(s)] = it->second;
      if (lengths_[static_cast<std::size_t>(it->second)] < lengths_[i]) rdesc_[i] |= (1u << s);
    }
  }

  std::vector<std::size_t> layer_start(static_cast<std::size_t>(length_bound) + 2, n);
  for (std::size_t i = n; i-- > 0;) layer_start[static_cast<std::size_t>(lengths_[i])] = i;
  for (std::size_t l = layer_start.size() - 1; l-- > 0;)
    layer_start[l] = std::min(layer_start[l], layer_start[l + 1]);

#ifdef _OPENMP
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
#endif

  leq_.assign(n * n, 0);
  lower_.resize(n);
  polys_.resize(n);
  std::vector<std::vector<std::pair<int, std::int64_t>>> mu(n);

  for (std::size_t len = 0; len <= static_cast<std::size_t>(length_bound); ++len) {
    const auto begin = static_cast<std::ptrdiff_t>(layer_start[len]);
    const auto end = static_cast<std::ptrdiff_t>(layer_start[len + 1]);
    const std::size_t below = layer_start[len + 1];

    // Bruhat order: if ws < w then x <= w iff (xs < x ? xs <= ws : x <= ws).
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::ptrdiff_t wi = begin; wi < end; ++wi) {
      const auto w = static_cast<std::size_t>(wi);
      std::uint8_t* row = &leq_[w * n];
      row[w] = 1;
      if (len == 0) continue;
      const int s = __builtin_ctz(rdesc_[w]);
      const auto v = static_cast<std::size_t>(rmul_[w * g + static_cast<std::size_t>(s)]);
      const std::uint8_t* vrow = &leq_[v * n];
      for (std::size_t x = 0; x < layer_start[len]; ++x) {
        const auto xs = rmul_[x * g + static_cast<std::size_t>(s)];
        if ((rdesc_[x] >> s) & 1u)
          row[x] = vrow[static_cast<std::size_t>(xs)];
        else
          row[x] = vrow[x];
      }
    }

    // KL polynomials for every w of this length.
    std::vector<std::string> errors(static_cast<std::size_t>(end - begin));
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::ptrdiff_t wi = begin; wi < end; ++wi) {
      const auto w = static_cast<std::size_t>(wi);
      try {
        std::vector<int>& low = lower_[w];
        for (std::size_t x = 0; x < below; ++x)
          if (leq_[w * n + x]) low.push_back(static_cast<int>(x));
        std::vector<IntPoly>& col = polys_[w];
        col.resize(low.size());
        if (len == 0) {
          col[0] = IntPoly{1};
        } else {
          const int s = __builtin_ctz(rdesc_[w]);
          const auto v = static_cast<std::size_t>(rmul_[w * g + static_cast<std::size_t>(s)]);
          auto lookup = [this](std::size_t x, std::size_t z) -> const IntPoly& { return poly(x, z); };
          for (std::size_t k = 0; k < low.size(); ++k) {
            const auto x = static_cast<std::size_t>(low[k]);
            if (x == w) {
              col[k] = IntPoly{1};
              continue;
            }
            const auto xs = static_cast<std::size_t>(rmul_[x * g + static_cast<std::size_t>(s)]);
            const int c = ((rdesc_[x] >> s) & 1u) ? 1 : 0;
            IntPoly p = lookup(xs, v).shifted(1 - c);
            p += lookup(x, v).shifted(c);
            for (const auto& [z, m] : mu[v]) {
              const auto zi = static_cast<std::size_t>(z);
              if (!((rdesc_[zi] >> s) & 1u) || !leq_[zi * n + x]) continue;
              p -= lookup(x, zi).scaled(m).shifted((static_cast<int>(len) - lengths_[zi]) / 2);
            }
            col[k] = std::move(p);
          }
        }
        auto& ml = mu[w];
        for (std::size_t k = 0; k < low.size(); ++k) {
          const int d = static_cast<int>(len) - lengths_[static_cast<std::size_t>(low[k])];
          if (d % 2 == 0) continue;
          std::int64_t m = col[k].coeff((d - 1) / 2);
          if (m != 0) ml.emplace_back(low[k], m);
        }
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(wi - begin)] = e.what();
      }
    }
    for (const auto& e : errors)
      if (!e.empty()) throw InternalError("KL ball kernel: " + e);
  }
}

int BallKL::index_of(const AffineElement& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

const IntPoly& BallKL::poly(std::size_t x, std::size_t w) const {
  const auto& low = lower_[w];
  auto it = std::lower_bound(low.begin(), low.end(), static_cast<int>(x));
  if (it == low.end() || *it != static_cast<int>(x)) return zero_;
  return polys_[w][static_cast<std::size_t>(it - low.begin())];
}

void BallKL::export_to(KLTable& table) const {
  for (std::size_t w = 0; w < elems_.size(); ++w)
    for (std::size_t k = 0; k < lower_[w].size(); ++k)
      table.insert(words_[static_cast<std::size_t>(lower_[w][k])], words_[w], polys_[w][k]);
}

}  // namespace klext
