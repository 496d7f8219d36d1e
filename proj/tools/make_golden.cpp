// Regenerates tests/data/spinors_golden.txt.
#include <fstream>
#include <iostream>

#include "majorana/spinors.hpp"

int main(int argc, char** argv) {
  using namespace majorana;
  if (argc != 2) {
    std::cerr << "usage: make_golden <output file>\n";
    return 2;
  }
  const double momenta[][4] = {
      {0, 0, 0, 2}, {1, 2, 3, 2}, {0, 0, 1, 1}, {0, 0, -2, 1}, {3, 4, 0, 0.5}, {-0.7, 0.2, 1.1, 0.3},
  };
  std::vector<GoldenRecord> records;
  for (const auto& k : momenta) {
    const auto p = make_momentum(k[0], k[1], k[2], k[3]);
    for (Family f : {Family::Lambda, Family::Rho})
      for (Kind kind : {Kind::S, Kind::A})
        for (Index i : {Index::Up, Index::Down})
          records.push_back({f, kind, i, k[0], k[1], k[2], k[3], elko_spinor(p, f, kind, i, Basis::Spinorial).components()});
  }
  std::ofstream out(argv[1]);
  write_golden(out, records);
  return out ? 0 : 1;
}
