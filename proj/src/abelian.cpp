#include "rh3/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rh3/integers.hpp"

namespace rh3 {

AbelianStructure::AbelianStructure(std::vector<long long> divs) {
  std::vector<long long> kept;
  for (long long d : divs) {
    if (d < 1) throw std::invalid_argument("AbelianStructure: divisor < 1");
    if (d > 1) kept.push_back(d);
  }
  std::sort(kept.begin(), kept.end(), std::greater<long long>());
  if (kept.empty()) kept.push_back(1);
  divs_ = std::move(kept);
}

long long AbelianStructure::order() const {
  long long o = 1;
  for (long long d : divs_) o *= d;
  return o;
}

int AbelianStructure::rank() const {
  if (trivial()) return 0;
  return static_cast<int>(divs_.size());
}

AbelianStructure AbelianStructure::p_part(long long p) const {
  std::vector<long long> part;
  for (long long d : divs_) {
    if (d == 1) continue;
    long long q = d;
    while (q % p == 0) q /= p;
    if (q == 1) part.push_back(d);
  }
  return AbelianStructure(part);
}

std::string AbelianStructure::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < divs_.size(); ++i) {
    if (i) os << ", ";
    os << divs_[i];
  }
  os << ']';
  return os.str();
}

AbelianStructure structure_from_invariant_factors(const std::vector<long long>& factors) {
  std::vector<long long> divs;
  for (long long c : factors) {
    if (c < 1) throw std::invalid_argument("invariant factor < 1");
    if (c == 1) continue;
    for (auto [p, e] : factor(c)) {
      long long q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      divs.push_back(q);
    }
  }
  return AbelianStructure(divs);
}

}  // namespace rh3
