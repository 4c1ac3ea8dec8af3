// Balanced 3-cuts of K_{2,2,2} plus noise: which vertex pairs every max cut keeps together.

#include <iostream>

#include "turan/cut_analysis.hpp"
#include "turan/generators.hpp"

int main() {
  using namespace turan;
  GraphBuilder b(6);
  for (const Edge& e : complete_multipartite(std::vector<int>{2, 2, 2}).edges()) b.add_edge(e.u, e.v);
  b.add_edge(0, 1);  // one edge inside a part
  const Graph g = b.build();

  const auto family = enumerate_balanced_cuts(6, 4, 0.1);
  const auto rep = rigidity_analysis(g, family, 0.6);
  std::cout << family.members.size() << " balanced cuts, max value " << rep.max_value << ", "
            << rep.max_cuts.size() << " attain it\n";
  std::cout << "components of the equivalence:";
  for (const auto& c : rep.components) {
    std::cout << " {";
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "") << c[i];
    std::cout << "}";
  }
  std::cout << "\nrigid: " << (rep.rigid ? "yes" : "no") << "\ncritical edges: " << crit(g, family).size() << " of "
            << g.size() << "\n";
}
