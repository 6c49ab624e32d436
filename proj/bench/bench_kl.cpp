// Serial KLEngine versus the OpenMP ball kernel on the same ball.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include "klext/kl_kernel.hpp"
#include "klext/klpoly.hpp"

using namespace klext;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void run(char type, int rank, std::int64_t ell, int bound) {
  CoxeterGroup g = CoxeterGroup::affine(RootSystem::build(type, rank), ell);
  std::vector<AffineElement> ball = g.enumerate_ball(bound);
  std::size_t pairs = 0;
  std::unique_ptr<KLEngine> serial;
  const double t_serial = seconds([&] {
    serial = std::make_unique<KLEngine>(g);
    for (const auto& w : ball)
      for (const auto& x : ball)
        if (serial->leq(x, w)) {
          serial->kl(x, w);
          ++pairs;
        }
  });
  std::unique_ptr<BallKL> one, all;
  const double t_one = seconds([&] { one = std::make_unique<BallKL>(g, bound, 1); });
  const int threads = omp_get_max_threads();
  const double t_all = seconds([&] { all = std::make_unique<BallKL>(g, bound, threads); });

  std::size_t mismatches = 0;
  for (std::size_t w = 0; w < all->size(); ++w)
    for (int x : all->lower(w)) {
      const auto xi = static_cast<std::size_t>(x);
      if (!(all->poly(xi, w) == one->poly(xi, w)) ||
          !(all->poly(xi, w) == serial->kl(all->element(xi), all->element(w))))
        ++mismatches;
    }
  std::cout << g.describe() << " radius " << bound << ": " << ball.size() << " elements, " << pairs << " pairs\n"
            << "  serial engine      " << t_serial << " s\n"
            << "  ball kernel x1     " << t_one << " s\n"
            << "  ball kernel x" << threads << "     " << t_all << " s\n"
            << "  mismatches         " << mismatches << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  run('A', 2, 5, 18 * scale);
  run('C', 2, 7, 14 * scale);
  run('G', 2, 7, 14 * scale);
  run('A', 3, 5, 10 * scale);
  return 0;
}
