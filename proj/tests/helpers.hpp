#pragma once

#include "lineup/linalg.hpp"
#include "lineup/rational.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace test {

inline lineup::Vector vec(std::initializer_list<long> xs)
{
    lineup::Vector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline lineup::IntVector ivec(std::initializer_list<long> xs)
{
    lineup::IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline lineup::Matrix mat(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows)
{
    lineup::Matrix m(cols);
    for (auto r : rows)
        m.push_back(vec(r));
    return m;
}

inline lineup::Vector random_vector(std::mt19937& rng, std::size_t n, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    lineup::Vector v;
    for (std::size_t i = 0; i < n; ++i)
        v.emplace_back(dist(rng));
    return v;
}

}  // namespace test
