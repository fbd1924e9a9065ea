#include "covlat/golay.hpp"

#include <bit>
#include <stdexcept>

namespace covlat {

namespace {

// remainder of a mod b over GF(2)[x], bitmask coefficients
uint64_t poly_mod(uint64_t a, uint64_t b) {
    int db = 63 - std::countl_zero(b);
    while (a != 0) {
        int da = 63 - std::countl_zero(a);
        if (da < db) break;
        a ^= b << (da - db);
    }
    return a;
}

}  // namespace

GolayCode::GolayCode() {
    const uint64_t x23_plus_1 = (uint64_t{1} << 23) | 1;
    uint64_t gen = 0;
    for (uint64_t low = 1; low < (1u << 11); low += 2) {  // constant term 1
        uint64_t cand = (uint64_t{1} << 11) | low;
        if (poly_mod(x23_plus_1, cand) == 0) {
            gen = cand;
            break;  // candidates scanned in increasing order
        }
    }
    if (gen == 0) throw std::logic_error("golay: no degree-11 factor of x^23+1");

    for (int i = 0; i < 12; ++i) {
        uint32_t word = static_cast<uint32_t>(gen << i);  // degree <= 22
        uint32_t parity = static_cast<uint32_t>(std::popcount(word) & 1);
        basis_[static_cast<size_t>(i)] = word | (parity << 23);
    }

    // Row-reduce for membership testing and to confirm rank 12.
    echelon_ = basis_;
    int rank = 0;
    for (int bit = 23; bit >= 0 && rank < 12; --bit) {
        int pivot = -1;
        for (int r = rank; r < 12; ++r)
            if (echelon_[static_cast<size_t>(r)] >> bit & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(echelon_[static_cast<size_t>(rank)], echelon_[static_cast<size_t>(pivot)]);
        for (int r = 0; r < 12; ++r)
            if (r != rank && (echelon_[static_cast<size_t>(r)] >> bit & 1))
                echelon_[static_cast<size_t>(r)] ^= echelon_[static_cast<size_t>(rank)];
        ++rank;
    }
    if (rank != 12) throw std::logic_error("golay: generator rank is not 12");

    // Self-dual and doubly even.
    for (const uint32_t a : basis_) {
        if (std::popcount(a) % 4 != 0) throw std::logic_error("golay: not doubly even");
        for (const uint32_t b : basis_)
            if (std::popcount(a & b) % 2 != 0) throw std::logic_error("golay: not self-orthogonal");
    }

    auto wd = weight_distribution();
    const int expected[25] = {1, 0, 0, 0, 0, 0, 0, 0, 759, 0, 0, 0, 2576,
                              0, 0, 0, 759, 0, 0, 0, 0, 0, 0, 0, 1};
    for (int w = 0; w <= 24; ++w)
        if (wd[static_cast<size_t>(w)] != expected[w])
            throw std::logic_error("golay: weight distribution mismatch");
}

bool GolayCode::contains(uint32_t word24) const {
    uint32_t w = word24 & 0xFFFFFF;
    for (const uint32_t row : echelon_) {
        if (w == 0) return true;
        int top = 31 - std::countl_zero(w);
        int row_top = row == 0 ? -1 : 31 - std::countl_zero(row);
        if (row_top == top) w ^= row;
    }
    return w == 0;
}

std::array<int, 25> GolayCode::weight_distribution() const {
    std::array<int, 25> wd{};
    for (uint32_t m = 0; m < 4096; ++m) {
        uint32_t word = 0;
        for (int i = 0; i < 12; ++i)
            if (m >> i & 1) word ^= basis_[static_cast<size_t>(i)];
        wd[static_cast<size_t>(std::popcount(word))] += 1;
    }
    return wd;
}

}  // namespace covlat
