#pragma once

#include <cstdint>
#include <vector>

#include "latmut/poset.hpp"

namespace latmut {

// d(x,y): fewest descending covers on a covering path from x to y.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(const Poset& p);

    std::size_t size() const { return n_; }
    int d(Elem x, Elem y) const { return d_[x * n_ + y]; }
    // D(x,y,z) = d(x,y) + d(y,z) - d(x,z)
    int big_d(Elem x, Elem y, Elem z) const { return d(x, y) + d(y, z) - d(x, z); }

    friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint16_t> d_;
};

// Throws Disconnected.
DistanceTable distance_table(const Poset& p);
int big_d(const DistanceTable& t, Elem x, Elem y, Elem z);

}  // namespace latmut
