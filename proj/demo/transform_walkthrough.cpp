// Walks one covering pair through the k-transform: prints both transforms,
// the case each k falls into, and the rebuilt sequence.

#include <iostream>

#include "dominance/dominance.hpp"

int main() {
  using namespace dominance;
  const Partition lambda{4, 2, 1, 0};
  const Partition mu{4, 1, 1, 1};
  const auto move = find_cover_move(lambda, mu);
  if (!move) return 1;

  std::cout << "lambda = " << format(lambda) << ", mu = " << format(mu) << ", move " << format_move(*move) << "\n";
  for (part_t k = 1; k <= 5; ++k) {
    const auto lk = k_transform(lambda, k), mk = k_transform(mu, k);
    std::cout << "k=" << k << "  lambda^k=" << format(lk) << "  mu^k=" << format(mk)
              << "  case=" << to_string(classify_case(mu, *move, k))
              << "  rebuilt=" << format(apply_case_replacement(mu, *move, k))
              << "  dominates=" << (dominates(lk, mk) ? "yes" : "no") << "\n";
  }
  for (const auto& p : cover_chain(Partition{5}, Partition{1, 1, 1, 1, 1})) std::cout << format_stripped(p) << "\n";
}
