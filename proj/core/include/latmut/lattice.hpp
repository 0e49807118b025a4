#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latmut/poset.hpp"

namespace latmut {

class Lattice {
public:
    const Poset& poset() const { return poset_; }
    std::size_t size() const { return poset_.size(); }
    bool leq(Elem x, Elem y) const { return poset_.leq(x, y); }

    Elem join(Elem x, Elem y) const { return join_[x * size() + y]; }
    Elem meet(Elem x, Elem y) const { return meet_[x * size() + y]; }
    Elem bottom() const { return bottom_; }
    Elem top() const { return top_; }

    std::vector<Elem> atoms() const { return poset_.upper_covers(bottom_); }
    std::vector<Elem> coatoms() const { return poset_.lower_covers(top_); }

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.poset_ == b.poset_; }

private:
    friend std::optional<Lattice> try_as_lattice(const Poset&, std::optional<NotALattice>*);
    Poset poset_;
    std::vector<std::uint16_t> join_;
    std::vector<std::uint16_t> meet_;
    Elem bottom_ = 0;
    Elem top_ = 0;
};

// Builds join/meet tables; throws NotALattice with a witness pair.
Lattice as_lattice(const Poset& p);
std::optional<Lattice> try_as_lattice(const Poset& p, std::optional<NotALattice>* why = nullptr);
bool is_lattice(const Poset& p);

// Two maximal chain lengths (m <= n) when the undirected Hasse graph is one cycle.
std::optional<std::pair<std::size_t, std::size_t>> is_polygon(const Lattice& l);
bool is_semidistributive(const Lattice& l);

// |[0, a v b]|
std::size_t t_value(const Lattice& l, Elem a, Elem b);

// f maps elements of l to elements of m.
bool is_lattice_homomorphism(const Lattice& l, const Lattice& m, const std::vector<Elem>& f);
bool is_surjective(const std::vector<Elem>& f, std::size_t target_size);

// Quotient by the partition cls (class index per element), order induced by projected covers.
Poset quotient_poset(const Poset& p, const std::vector<Elem>& cls, std::size_t class_count);

}  // namespace latmut
