// Walks through the main operations on the Cayley cubic net.

#include <iostream>
#include <vector>

#include "ponsyz/ponsyz.hpp"

int main() {
  using namespace ponsyz;

  const LinearSystem net({
      parse_form("u^5 + v^5"),
      parse_form("u^5 - u^4 v + u^3 v^2 - u^2 v^3 + u v^4"),
      parse_form("u^5 - v^5"),
  });

  std::cout << "linear syzygies: " << syzygy_count(net, 1) << "\n";
  for (const auto& s : syzygy_basis(net, 1)) {
    std::cout << "  (";
    for (std::size_t i = 0; i < s.entries.size(); ++i) std::cout << (i ? ", " : "") << s.entries[i];
    std::cout << ")\n";
  }
  std::cout << "splitting type: " << to_string(splitting_type(net)) << "\n";

  const auto surface = poncelet_polynomial(net);
  std::cout << "Poncelet surface: " << surface.equation << " = 0\n";

  if (auto shape = normalize_linear_syzygy(net)) {
    std::cout << "net = <u f, v f, ...> with f = " << shape->f << "\n";
  }
}
