// Draws a noisy two-mode instance, solves it exactly and with the
// multi-start heuristic, and compares both against the ground truth.

#include "swreg/swreg.hpp"

#include <iostream>

int main() {
  using namespace swreg;
  GeneratorSpec spec;
  spec.n = 2;
  spec.d = 2;
  spec.N = 40;
  spec.noise_sigma = 0.05;
  spec.seed = 7;
  const Instance inst = generate_instance(spec);
  const LossModel loss{LossKind::squared};

  const SolveReport exact = enumeration_solve(inst.data, spec.n, loss);
  const SolveReport heuristic = altmin_solve(inst.data, spec.n, loss, 5, 1);

  for (const auto* r : {&exact, &heuristic}) {
    std::cout << r->method << ": cost " << r->cost << ", " << r->candidates_examined
              << " candidates, accuracy "
              << label_accuracy(inst.truth_labels.q, r->labeling.q, spec.n) << '\n';
  }
  std::cout << "true models:\n" << inst.truth_models.w() << "\nestimated:\n" << exact.models.w() << '\n';
}
