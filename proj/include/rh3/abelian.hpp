#ifndef RH3_ABELIAN_HPP
#define RH3_ABELIAN_HPP

#include <string>
#include <vector>

namespace rh3 {

// Isomorphism type of a finite abelian group as a descending list of prime-power
// elementary divisors. The trivial group is rendered as [1].
struct AbelianStructure {
  AbelianStructure() = default;
  // Canonicalizes: sorts descending, drops 1s (trivial group keeps a single 1).
  explicit AbelianStructure(std::vector<long long> divs);

  // Descending prime powers; {1} for the trivial group.
  const std::vector<long long>& divisors() const { return divs_; }
  long long order() const;
  bool trivial() const { return divs_.size() == 1 && divs_[0] == 1; }
  // Number of nontrivial cyclic factors (0 for the trivial group).
  int rank() const;
  // Substructure formed by the divisors that are powers of p.
  AbelianStructure p_part(long long p) const;

  std::string to_string() const;  // e.g. "[9, 3]"

  bool operator==(const AbelianStructure& o) const { return divs_ == o.divs_; }
  bool operator!=(const AbelianStructure& o) const { return divs_ != o.divs_; }

 private:
  std::vector<long long> divs_{1};
};

// Build from invariant factors c_1 >= c_2 >= ... (each c_{i+1} | c_i), the shape
// class groups are usually printed in; splits each factor into prime powers.
AbelianStructure structure_from_invariant_factors(const std::vector<long long>& factors);

}  // namespace rh3

#endif
