#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace covlat {

// The extended binary Golay code [24, 12, 8], built from the length-23
// quadratic residue code: the generator polynomial is found by trial
// division of x^23 + 1 over GF(2) among all monic degree-11 polynomials
// (there are exactly two; the lexicographically smaller one is used), the
// twelve cyclic shifts are extended by an overall parity bit. Construction
// is self-verifying: rank, self-duality and the weight distribution
// 1/759/2576/759/1 are all checked.
class GolayCode {
  public:
    GolayCode();

    const std::array<uint32_t, 12>& basis() const { return basis_; }
    bool contains(uint32_t word24) const;
    // weights[w] = number of codewords of Hamming weight w
    std::array<int, 25> weight_distribution() const;

  private:
    std::array<uint32_t, 12> basis_{};
    std::array<uint32_t, 12> echelon_{};  // row-reduced copy for membership
};

}  // namespace covlat
