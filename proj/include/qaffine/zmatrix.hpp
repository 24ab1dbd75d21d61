#pragma once

#include <array>
#include <cstddef>

#include "qaffine/zratfunc.hpp"

namespace qaffine {

// Dense square matrix over ZRatFunc, used for the finite-dimensional
// representation matrices (3x3) and the R-matrix (9x9).
template <std::size_t N>
struct ZMat {
    std::array<std::array<ZRatFunc, N>, N> a{};

    ZRatFunc& operator()(std::size_t r, std::size_t c) { return a[r][c]; }
    const ZRatFunc& operator()(std::size_t r, std::size_t c) const { return a[r][c]; }

    static ZMat identity() {
        ZMat m;
        for (std::size_t i = 0; i < N; ++i)
            m.a[i][i] = ZRatFunc(1);
        return m;
    }

    ZMat operator*(const ZMat& o) const {
        ZMat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                if (a[i][k].is_zero())
                    continue;
                for (std::size_t j = 0; j < N; ++j) {
                    if (o.a[k][j].is_zero())
                        continue;
                    r.a[i][j] += a[i][k] * o.a[k][j];
                }
            }
        return r;
    }

    ZMat operator+(const ZMat& o) const {
        ZMat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                r.a[i][j] = a[i][j] + o.a[i][j];
        return r;
    }

    ZMat operator-(const ZMat& o) const {
        ZMat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                r.a[i][j] = a[i][j] - o.a[i][j];
        return r;
    }

    ZMat scaled(const ZRatFunc& c) const {
        ZMat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                r.a[i][j] = a[i][j] * c;
        return r;
    }

    bool operator==(const ZMat& o) const { return a == o.a; }
    bool operator!=(const ZMat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (!a[i][j].is_zero())
                    return false;
        return true;
    }
};

using Mat3 = ZMat<3>;
using Mat9 = ZMat<9>;

} // namespace qaffine
