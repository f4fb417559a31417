// Writes gamma_0..gamma_N at the requested number of significant digits.
#include <cstdlib>
#include <iostream>
#include <string>

#include "pzeta/precision.hpp"
#include "pzeta/stieltjes.hpp"

int main(int argc, char** argv) {
  const std::size_t order = argc > 1 ? std::stoul(argv[1]) : 64;
  const int digits = argc > 2 ? std::stoi(argv[2]) : 50;
  const int working = argc > 3 ? std::stoi(argv[3]) : 2 * digits + 20;
  const pzeta::PrecisionPolicy policy(working, 20);
  const auto gamma = pzeta::stieltjes_oracle(order, policy);
  std::cout << "# Stieltjes constants gamma_n, n = 0.." << order << ", " << digits << " significant digits\n";
  for (std::size_t n = 0; n <= order; ++n) {
    std::cout << n << ' ' << pzeta::to_decimal(gamma.at(n), digits) << '\n';
  }
  return EXIT_SUCCESS;
}
