#pragma once

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "splinereg/splinereg.hpp"

namespace fixtures {

inline std::string read_sample(const std::string& name) {
  std::ifstream in(std::string(SPLINEREG_SAMPLES_DIR) + "/" + name + ".json");
  if (!in) throw std::runtime_error("missing sample " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline splinereg::SimplicialComplex sample(const std::string& name) {
  return splinereg::parse_complex(read_sample(name));
}

/// s distinct rationals p/q with |p| <= 9, 1 <= q <= 5.
inline std::vector<splinereg::Rational> random_slopes(std::mt19937_64& rng, int s) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::set<splinereg::Rational> seen;
  while (static_cast<int>(seen.size()) < s) {
    splinereg::Rational q(num(rng), den(rng));
    q.canonicalize();
    seen.insert(q);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<splinereg::Rational> integer_slopes(int s) {
  std::vector<splinereg::Rational> out;
  for (int i = 0; i < s; ++i) out.emplace_back(i);
  return out;
}

}  // namespace fixtures
