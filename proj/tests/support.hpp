#pragma once

#include <string>
#include <vector>

#include "dq/parser.hpp"
#include "dq/poisson.hpp"
#include "dq/star.hpp"

namespace test {

inline const std::vector<std::string> xyz{"x1", "x2", "x3"};
inline const std::vector<std::string> xy{"x", "y"};

inline dq::Poly P3(const std::string& s) { return dq::parse_poly(s, xyz); }
inline dq::Poly P2(const std::string& s) { return dq::parse_poly(s, xy); }
inline dq::HSeries H3(const std::string& s, std::size_t N) { return dq::parse_hseries(s, xyz, N); }
inline dq::HSeries H2(const std::string& s, std::size_t N) { return dq::parse_hseries(s, xy, N); }

// {x1,x2} = x3 and cyclic
inline dq::PoissonStructure su2() {
  return dq::PoissonStructure::from_upper(3, {{{0, 1}, P3("x3")}, {{1, 2}, P3("x1")}, {{0, 2}, P3("-x2")}});
}
inline dq::PoissonStructure plane() { return dq::PoissonStructure::from_upper(2, {{{0, 1}, P2("1")}}); }
// Moyal plane with a central third coordinate
inline dq::PoissonStructure plane3() {
  return dq::PoissonStructure::from_upper(3, {{{0, 1}, P3("1")}});
}

inline dq::MultiIndex mi(std::vector<std::uint32_t> one_based) {
  for (auto& i : one_based) --i;
  return dq::MultiIndex(std::move(one_based));
}

}  // namespace test
