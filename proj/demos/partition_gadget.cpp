// Partition {3, 1, 1, 2, 2, 1} as a switching regression problem: a
// zero-error two-mode fit exists exactly when the multiset splits evenly.

#include "swreg/swreg.hpp"

#include <iostream>

int main() {
  using namespace swreg;
  const PartitionInstance p = make_partition_instance({3, 1, 1, 2, 2, 1});
  const DecisionInstance inst = partition_to_instance(p);
  std::cout << "instance: N=" << inst.data.size() << ", d=" << inst.data.dim() << '\n';

  const DecisionResult r = decide_threshold(inst, LossModel{LossKind::squared}, Method::brute);
  std::cout << "zero-error fit: " << (r.yes ? "yes" : "no") << " (best cost " << r.best_cost << ")\n";
  if (r.yes) {
    const PartitionSplit split = extract_partition_any(r.report.models, p);
    std::cout << "half:";
    for (long long v : split.values) std::cout << ' ' << v;
    std::cout << '\n';
  }
}
