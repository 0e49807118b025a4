#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latmut/errors.hpp"

namespace latmut {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Relation = std::vector<std::pair<Elem, Elem>>;

std::vector<Elem> members(const Bitset& s);
Bitset make_set(std::size_t n, const std::vector<Elem>& elems);

// Finite poset stored as its Hasse diagram plus reachability rows.
// Immutable after construction.
class Poset {
public:
    Poset() = default;

    std::size_t size() const { return up_covers_.size(); }
    bool leq(Elem x, Elem y) const;
    bool less(Elem x, Elem y) const { return x != y && leq(x, y); }
    bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }
    bool is_cover(Elem x, Elem y) const;

    // Elements covering x, and elements covered by x.
    const std::vector<Elem>& upper_covers(Elem x) const;
    const std::vector<Elem>& lower_covers(Elem x) const;
    // Reflexive principal filter / ideal as bitsets.
    const Bitset& up_set(Elem x) const;
    const Bitset& down_set(Elem x) const;

    Relation covers() const;
    std::size_t cover_count() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Elem x) const;

    // Labeled equality: same ground set, covers and labels.
    friend bool operator==(const Poset& a, const Poset& b);

    friend Poset poset_from_covers(std::size_t, const Relation&, std::vector<std::string>);

private:
    void check(Elem x) const;

    std::vector<std::vector<Elem>> up_covers_;
    std::vector<std::vector<Elem>> down_covers_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<std::string> labels_;
};

// Accepts any acyclic relation; the stored covers are its transitive reduction.
Poset poset_from_covers(std::size_t n, const Relation& relation,
                        std::vector<std::string> labels = {});

// Same covers, labels replaced (empty vector drops them).
Poset relabel(const Poset& p, std::vector<std::string> labels);

inline const std::vector<Elem>& covers_of(const Poset& p, Elem x) { return p.upper_covers(x); }
inline const std::vector<Elem>& covered_by(const Poset& p, Elem x) { return p.lower_covers(x); }
inline bool leq(const Poset& p, Elem x, Elem y) { return p.leq(x, y); }

bool is_connected(const Poset& p);
std::vector<Elem> minimal_elements(const Poset& p);
std::vector<Elem> maximal_elements(const Poset& p);
std::optional<Elem> least_element(const Poset& p);
std::optional<Elem> greatest_element(const Poset& p);

// Length of the longest chain ending at each element.
std::vector<std::size_t> heights(const Poset& p);
// Deterministic linear extension: smallest available index first.
std::vector<Elem> linear_extension(const Poset& p);

Poset dual(const Poset& p);

// Same order with elements renumbered: element x of p becomes perm[x].
Poset permute(const Poset& p, const std::vector<Elem>& perm);

struct SubPoset {
    Poset poset;
    std::vector<Elem> to_parent;
};

SubPoset induced_subposet(const Poset& p, const std::vector<Elem>& elems);
SubPoset interval(const Poset& p, Elem a, Elem b);

// Undirected Hasse graph as sorted (min, max) vertex pairs.
std::vector<std::pair<Elem, Elem>> hasse_edges(const Poset& p);
std::vector<std::size_t> hasse_degrees(const Poset& p);

}  // namespace latmut
