// Builds two 64-point sets whose placements differ in one region and prints
// the triple that tells their order types apart.

#include <iostream>

#include "otg/otg.hpp"

int main() {
  const otg::ConstructionParams params = otg::derive_params(64);
  otg::PlacementVector placement = otg::random_placement(params, 7);

  const otg::LabeledPointSet a = otg::place_all(params, placement);
  placement.back().d_index = (placement.back().d_index + 1) % params.p;
  const otg::LabeledPointSet b = otg::place_all(params, placement);

  std::cout << otg::signature_hex(otg::compute_chirotope(a)).substr(0, 40) << "...\n";
  const auto w = otg::find_order_type_witness(a, b);
  std::cout << "differ on (" << w.triple[0] << ',' << w.triple[1] << ',' << w.triple[2] << "): " << w.in_a
            << " vs " << w.in_b << '\n';
}
