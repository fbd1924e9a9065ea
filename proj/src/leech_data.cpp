#include "covlat/leech.hpp"

namespace covlat {

// 1/sqrt(8)-scaled Leech generator, LLL-reduced; frozen output of
// construct_leech_generator() and cross-checked against it in tests.
namespace {
constexpr long kGenerator[24][24] = {
    {-1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, -1, -1, -1, 1, 1, 1, -1, 1, -3},
    {0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 2, 0, 2, 2},
    {0, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 2, 0, -2, 0, 0, -2, -2},
    {0, -2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, -2, 2, -2, -2},
    {0, -2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 2, 2, 2, -2, 0, 0, 0, 0, -2},
    {0, -2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 0, -2, 2, 2, 0, -2, 0, 0, 0, -2, 0},
    {0, -2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, -2, -2, 0, 2, -2, 0},
    {0, -2, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, -2, 0, 2, 0, 2, 0, -2, -2, 2, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 2, 0, 2, 2, 2, 0, 0, 0, 2, 2, 0},
    {0, -2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, -2, 0, 0, 2, 0, -2, 0, -2, 2, 0, 0},
    {0, 0, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 2, 0, 0, 2, 0, 2, 0, 0, 2, -2, 0, 2},
    {0, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, -2, 0, 2, 0, -2, 0, 0, -2, 2},
    {0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, -2, 0, 0, 0, -2, -2, -2, 0, -2, 2},
    {0, 2, 2, 0, -2, 0, 0, -2, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0},
    {1, -1, -1, -1, 1, 1, 1, -1, 1, -1, 1, 1, 1, -1, -1, -1, 1, 1, -3, -1, 1, -1, -1, -1},
    {0, 0, 2, 0, 0, 2, 0, 2, 0, 2, 0, 0, 2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 2},
    {-1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, -1, -1, -1, -1, -1, -3, 1, 1, -1, 1, -1, -1},
    {1, 1, 1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, 3, 1, -1, -1, 1, -1, 1, 1},
    {0, 0, 0, 0, 2, 0, 0, 0, 2, 2, 0, 0, 0, -2, 0, 0, 2, 0, 0, 0, -2, 0, 2, 2},
    {0, 0, 0, 2, 2, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 2, 2},
    {0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, -2, 0, 0, 2, -2, -2, 0, 0, -2, 0},
    {1, -1, 1, 1, -1, -1, 1, 1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, -3, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0},
    {-1, 1, -1, 1, -1, 1, 1, 1, 1, -1, -1, 1, 1, 1, -1, -1, 1, -1, -1, 1, -1, 3, -1, 1},
};
}  // namespace

const IntMat& embedded_leech_generator() {
    static const IntMat rows = [] {
        IntMat m(24, std::vector<Integer>(24));
        for (int i = 0; i < 24; ++i)
            for (int j = 0; j < 24; ++j) m[i][j] = kGenerator[i][j];
        return m;
    }();
    return rows;
}

}  // namespace covlat
