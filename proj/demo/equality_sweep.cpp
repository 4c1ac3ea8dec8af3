// Prints Pr(t_3 = b_3) on G(10, p) for a few p, then one graph where the two differ.

#include <iostream>

#include "turan/experiments.hpp"

int main() {
  using namespace turan;
  ExperimentConfig cfg;
  cfg.n = 10;
  cfg.r = 3;
  cfg.p_grid = {0.2, 0.4, 0.6, 0.8};
  cfg.trials = 200;
  cfg.master_seed = 17;
  write_sweep_csv(std::cout, sweep(cfg));

  for (std::uint64_t k = 0; k < cfg.trials; ++k) {
    const Graph g = sample_gnp(cfg.n, 0.4, derive_seed(cfg.master_seed, k));
    const auto tg = turan_gap(g, cfg.r);
    if (*tg.gap() == 0) continue;
    std::cout << "\ntrial " << k << " at p=0.4: t_3=" << tg.t() << " > b_3=" << tg.b() << "\n" << write_graph(g);
    break;
  }
}
