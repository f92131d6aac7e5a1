#include <stdexcept>

#include "vekua/experiments.hpp"

namespace vekua {

namespace {

// Rows are (N, P, Q, reference E).
std::vector<TableSpec> make_tables() {
  std::vector<TableSpec> t;
  t.push_back({1, "exponential", 1.0, std::nullopt, "exponential, sigma = exp(xy)", {
      {30, 1000, 1000, 1.9492e-8},
      {30, 1000, 800, 2.1979e-8},
      {30, 1000, 600, 2.2281e-8},
      {30, 1000, 400, 2.2156e-8},
      {30, 1000, 200, 1.7241e-8},
      {30, 800, 1000, 1.5221e-8},
      {30, 600, 1000, 1.7483e-8},
      {30, 400, 1000, 1.1651e-8},
      {30, 200, 1000, 2.6761e-8},
      {20, 1000, 1000, 3.2741e-8},
      {10, 1000, 1000, 1.9312e-7},
      {30, 500, 500, 1.1009e-8},
      {20, 500, 500, 1.0376e-8},
      {10, 500, 500, 1.7330e-7},
      {30, 100, 100, 6.6772e-7},
      {20, 100, 100, 6.9343e-7},
      {10, 100, 100, 8.3178e-7},
      {10, 100, 50, 7.8103e-7},
      {10, 50, 50, 8.8030e-6},
      {5, 50, 50, 0.0317},
  }});
  t.push_back({2, "exponential", 5.0, std::nullopt, "exponential, sigma = exp(5xy)", {
      {30, 1000, 1000, 3.3167e-7},
      {30, 1000, 800, 3.4754e-7},
      {30, 1000, 600, 3.0912e-7},
      {30, 1000, 400, 3.3658e-7},
      {30, 1000, 200, 3.3271e-7},
      {30, 800, 1000, 2.6301e-7},
      {30, 600, 1000, 2.2022e-7},
      {30, 400, 1000, 5.7358e-7},
      {30, 200, 1000, 6.4704e-6},
      {20, 1000, 1000, 1.6141e-6},
      {10, 1000, 1000, 0.1511},
      {30, 500, 500, 3.5765e-7},
      {20, 500, 500, 1.1817e-6},
      {10, 500, 500, 0.1067},
      {30, 100, 100, 7.2363e-5},
      {20, 100, 100, 1.1286e-4},
      {10, 100, 100, 0.0450},
      {10, 100, 50, 0.0210},
      {10, 50, 50, 0.0261},
      {5, 50, 50, 9.4212},
  }});
  t.push_back({3, "polynomial", 1.0, std::nullopt, "polynomial, sigma = x + y + 10", {
      {30, 1000, 1000, 3.6530e-8},
      {30, 1000, 800, 3.6528e-8},
      {30, 1000, 600, 3.6515e-8},
      {30, 1000, 400, 3.6482e-8},
      {30, 1000, 200, 3.6572e-8},
      {30, 800, 1000, 4.3271e-8},
      {30, 600, 1000, 3.5882e-8},
      {30, 400, 1000, 2.1136e-8},
      {30, 200, 1000, 1.1306e-8},
      {20, 1000, 1000, 3.2499e-8},
      {10, 1000, 1000, 5.9790e-8},
      {30, 500, 500, 2.0991e-8},
      {20, 500, 500, 3.1329e-8},
      {10, 500, 500, 4.4110e-8},
      {30, 100, 100, 2.8376e-8},
      {20, 100, 100, 6.5198e-8},
      {10, 100, 100, 1.1667e-7},
      {10, 100, 50, 1.1973e-7},
      {10, 50, 50, 1.1999e-7},
      {5, 50, 50, 1.6714e-7},
      {5, 15, 15, 4.0953e-5},
  }});
  t.push_back({4, "polynomial", 5.0, std::nullopt, "polynomial, sigma = 5(x + y) + 10", {
      {30, 1000, 1000, 1.5315e-7},
      {30, 1000, 800, 1.5330e-7},
      {30, 1000, 600, 1.6351e-7},
      {30, 1000, 400, 1.5171e-7},
      {30, 1000, 200, 1.5303e-7},
      {30, 800, 1000, 1.0403e-7},
      {30, 600, 1000, 9.3654e-8},
      {30, 400, 1000, 5.1980e-8},
      {30, 200, 1000, 3.3674e-8},
      {20, 1000, 1000, 2.3294e-7},
      {10, 1000, 1000, 2.8096e-4},
      {30, 500, 500, 6.6396e-8},
      {20, 500, 500, 9.4135e-8},
      {10, 500, 500, 1.9824e-4},
      {30, 100, 100, 2.6497e-7},
      {20, 100, 100, 4.1895e-7},
      {10, 100, 100, 8.3724e-5},
      {10, 100, 50, 3.1943e-5},
      {10, 50, 50, 4.7861e-5},
      {5, 50, 50, 0.0145},
      {5, 15, 15, 0.0039},
  }});
  t.push_back({5, "lorentzian", 1.0, std::nullopt, "Lorentzian, sigma = 1 / ((x + y)^2 + 1)", {
      {30, 1000, 1000, 1.1213e-8},
      {30, 1000, 800, 1.9372e-8},
      {30, 1000, 600, 1.7023e-8},
      {30, 1000, 400, 1.9995e-8},
      {30, 1000, 200, 1.9013e-8},
      {30, 800, 1000, 1.6567e-8},
      {30, 600, 1000, 1.8385e-8},
      {30, 400, 1000, 1.2829e-8},
      {30, 200, 1000, 3.7494e-8},
      {20, 1000, 1000, 1.1449e-7},
      {10, 1000, 1000, 4.7292e-4},
      {30, 500, 500, 1.3655e-8},
      {20, 500, 500, 7.4664e-8},
      {10, 500, 500, 5.5399e-4},
      {30, 100, 100, 5.9646e-7},
      {20, 100, 100, 6.8813e-7},
      {10, 100, 100, 4.5270e-4},
      {10, 100, 50, 4.5305e-4},
      {10, 50, 50, 4.1998e-4},
      {5, 50, 50, 0.0125},
  }});
  t.push_back({6, "lorentzian", 0.01, std::nullopt, "Lorentzian, sigma = 1 / ((x + y)^2 + 0.01)", {
      {30, 1000, 1000, 0.1671},
      {30, 1000, 800, 0.1671},
      {30, 1000, 600, 0.1671},
      {30, 1000, 400, 0.1671},
      {30, 1000, 200, 0.1672},
      {30, 800, 1000, 0.1491},
      {30, 600, 1000, 0.1283},
      {30, 400, 1000, 0.1030},
      {30, 200, 1000, 0.0662},
      {20, 1000, 1000, 0.6420},
      {10, 1000, 1000, 3.1839},
      {30, 500, 500, 0.1165},
      {20, 500, 500, 0.4509},
      {10, 500, 500, 2.2466},
      {30, 100, 100, 0.0265},
      {20, 100, 100, 0.1559},
      {10, 100, 100, 0.9435},
      {10, 100, 50, 0.0870},
      {10, 50, 50, 0.5879},
      {5, 50, 50, 120.3691},
  }});
  t.push_back({7, "sinusoidal", 1.0, std::nullopt, "sinusoidal, sigma = 1 + sin(xy)", {
      {30, 1000, 1000, 1.2451e-8},
      {30, 1000, 800, 1.2263e-8},
      {30, 1000, 600, 1.1838e-8},
      {30, 1000, 400, 1.3812e-8},
      {30, 1000, 200, 1.4932e-8},
      {30, 800, 1000, 9.4572e-9},
      {30, 600, 1000, 1.1218e-8},
      {30, 400, 1000, 9.7996e-9},
      {30, 200, 1000, 9.6253e-9},
      {20, 1000, 1000, 2.3682e-8},
      {10, 1000, 1000, 3.9153e-5},
      {30, 500, 500, 9.7774e-9},
      {20, 500, 500, 2.4493e-8},
      {10, 500, 500, 5.6988e-5},
      {30, 100, 100, 3.7062e-7},
      {20, 100, 100, 5.1172e-7},
      {10, 100, 100, 9.3918e-5},
      {10, 100, 50, 9.3414e-5},
      {10, 50, 50, 6.9851e-5},
      {5, 50, 50, 0.0497},
  }});
  t.push_back({8, "sinusoidal", 5.0, 1.0, "sinusoidal, sigma = 1 + sin(5xy), boundary condition with alpha = 1", {
      {30, 1000, 1000, 1.0338e4},
      {30, 1000, 800, 1.2828e5},
      {30, 1000, 600, 7.1245e3},
      {30, 1000, 400, 2.7315e4},
      {30, 1000, 200, 1.4515e4},
      {30, 800, 1000, 2.7273e4},
      {30, 600, 1000, 7.1022e3},
      {30, 400, 1000, 2.2060e3},
      {30, 200, 1000, 1.9391e3},
      {20, 1000, 1000, 3.6205e4},
      {10, 1000, 1000, 2.7627e5},
      {30, 500, 500, 2.3643e3},
      {20, 500, 500, 1.2936e4},
      {10, 500, 500, 7.0407e4},
      {30, 100, 100, 3.2401},
      {20, 100, 100, 116.1873},
      {10, 100, 100, 2.2541e3},
      {10, 100, 50, 0.1006},
      {10, 50, 50, 24.2426},
      {5, 50, 50, 47.5417},
  }});
  t.push_back({9, "concentric_disks", 0.0, std::nullopt, "concentric disks", {
      {40, 1000, 1000, 3.6234e-9},
      {40, 1000, 800, 2.7852e-9},
      {40, 1000, 600, 2.5213e-9},
      {40, 1000, 400, 2.3199e-9},
      {40, 1000, 200, 1.4331e-8},
      {40, 800, 1000, 3.6234e-9},
      {40, 600, 1000, 3.6234e-9},
      {40, 400, 1000, 3.6234e-9},
      {40, 200, 1000, 3.6234e-9},
      {20, 1000, 1000, 3.3615e-9},
      {20, 500, 500, 2.2764e-9},
      {40, 100, 100, 2.4841e-7},
      {20, 100, 100, 3.3996e-7},
      {10, 50, 50, 8.2633e-6},
      {5, 50, 50, 1.1721e-5},
  }});
  t.push_back({10, "offcenter_disk", 0.0, std::nullopt, "off-center disk", {
      {40, 1000, 1000, 7.8082e-4},
      {40, 1000, 800, 6.9845e-4},
      {40, 1000, 600, 5.9861e-4},
      {40, 1000, 400, 4.3758e-4},
      {40, 1000, 200, 3.1089e-4},
      {40, 800, 1000, 7.8048e-4},
      {40, 600, 1000, 7.7999e-4},
      {40, 400, 1000, 7.6313e-4},
      {40, 200, 1000, 7.8686e-4},
      {20, 1000, 1000, 1.6829e-3},
      {20, 500, 500, 1.8330e-3},
      {40, 100, 100, 6.1065e-5},
      {20, 100, 100, 7.7260e-4},
      {10, 50, 50, 1.5540e-3},
      {5, 50, 50, 3.9329e-3},
  }});
  t.push_back({11, "square_inclusion", 0.0, std::nullopt, "square inclusion", {
      {40, 1000, 1000, 1.4598e-2},
      {40, 1000, 800, 1.4603e-2},
      {40, 1000, 600, 1.4601e-2},
      {40, 1000, 400, 1.4619e-2},
      {40, 1000, 200, 1.4638e-2},
      {40, 800, 1000, 1.4160e-2},
      {40, 600, 1000, 4.0513e-2},
      {40, 400, 1000, 2.7287e-2},
      {40, 200, 1000, 1.4638e-2},
      {20, 1000, 1000, 2.3516e-2},
      {20, 500, 500, 1.6912e-2},
      {40, 100, 100, 3.2869e-3},
      {20, 100, 100, 3.4552e-2},
      {10, 50, 50, 6.8926e-2},
      {5, 50, 50, 1.9362e-1},
  }});
  return t;
}

}  // namespace

const TableSpec& table_spec(int id) {
  static const std::vector<TableSpec> tables = make_tables();
  if (id < 1 || id > static_cast<int>(tables.size()))
    throw std::invalid_argument("table id must be in 1..11");
  return tables[id - 1];
}

}  // namespace vekua
