#include "latmut/distance.hpp"

#include <deque>
#include <limits>

namespace latmut {

DistanceTable::DistanceTable(const Poset& p) : n_(p.size()) {
    if (!is_connected(p)) throw Disconnected("distance table needs a connected poset");
    constexpr auto inf = std::numeric_limits<std::uint16_t>::max();
    d_.assign(n_ * n_, inf);
    std::deque<Elem> dq;
    for (Elem s = 0; s < n_; ++s) {
        std::uint16_t* row = &d_[s * n_];
        row[s] = 0;
        dq.assign(1, s);
        while (!dq.empty()) {
            Elem x = dq.front();
            dq.pop_front();
            for (Elem y : p.upper_covers(x)) {
                if (row[x] < row[y]) {
                    row[y] = row[x];
                    dq.push_front(y);
                }
            }
            for (Elem y : p.lower_covers(x)) {
                if (row[x] + 1 < row[y]) {
                    row[y] = static_cast<std::uint16_t>(row[x] + 1);
                    dq.push_back(y);
                }
            }
        }
    }
}

DistanceTable distance_table(const Poset& p) { return DistanceTable(p); }

int big_d(const DistanceTable& t, Elem x, Elem y, Elem z) { return t.big_d(x, y, z); }

}  // namespace latmut
