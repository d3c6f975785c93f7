#pragma once

#include <vector>

namespace gray {

template <class Body>
AxiomReport for_each_index(std::size_t n, Exec exec, Body&& body) {
  std::vector<AxiomReport> parts(n);
  if (exec == Exec::Parallel) {
    const long long m = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < m; ++i) body(std::size_t(i), parts[std::size_t(i)]);
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i, parts[i]);
  }
  AxiomReport out;
  for (auto& p : parts) out.merge(p);
  return out;
}

}  // namespace gray
