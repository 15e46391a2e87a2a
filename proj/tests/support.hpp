#pragma once

#include <cstdint>
#include <vector>

#include "padicmf/q_series.hpp"

namespace testing_support {

inline std::vector<std::uint64_t> residues(const padicmf::QSeries<padicmf::PadicInt>& f) {
  std::vector<std::uint64_t> r;
  for (const auto& c : f.coefficients()) r.push_back(c.residue());
  return r;
}

inline std::vector<std::int64_t> signed_values(const padicmf::QSeries<padicmf::PadicInt>& f, int count) {
  std::vector<std::int64_t> r;
  for (int n = 0; n < count; ++n) r.push_back(f[n].signed_value());
  return r;
}

inline padicmf::QSeries<padicmf::PadicInt> series_of(const padicmf::Profile& prof,
                                                       const std::vector<std::int64_t>& values) {
  std::vector<padicmf::PadicInt> c;
  for (auto v : values) c.emplace_back(prof, v);
  return padicmf::QSeries<padicmf::PadicInt>(prof, std::move(c));
}

}  // namespace testing_support
