#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latmut/poset.hpp"

namespace latmut {

struct CanonicalLabeling {
    std::string form;
    // order[i] is the element placed at canonical position i.
    std::vector<Elem> order;
};

// Label-independent; equal forms iff isomorphic.
CanonicalLabeling canonical_labeling(const Poset& p);
std::string canonical_form(const Poset& p);
bool are_isomorphic(const Poset& p, const Poset& q);

// iso[x] is the image in q of element x of p.
std::optional<std::vector<Elem>> find_isomorphism(const Poset& p, const Poset& q);

}  // namespace latmut
