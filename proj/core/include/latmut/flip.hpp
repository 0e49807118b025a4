#pragma once

#include <memory>
#include <string>
#include <vector>

#include "latmut/poset.hpp"

namespace latmut {

// Partition (A, B) of a poset with no element of A above an element of B.
class FlipPair {
public:
    FlipPair(std::shared_ptr<const Poset> host, Bitset footwall);

    const Poset& host() const { return *host_; }
    std::shared_ptr<const Poset> host_ptr() const { return host_; }
    const Bitset& footwall() const { return a_; }
    const Bitset& hanging_wall() const { return b_; }
    bool in_a(Elem x) const { return a_.test(x); }
    bool in_b(Elem x) const { return b_.test(x); }
    std::vector<Elem> a() const { return members(a_); }
    std::vector<Elem> b() const { return members(b_); }

private:
    std::shared_ptr<const Poset> host_;
    Bitset a_;
    Bitset b_;
};

struct FaultPlanes {
    Bitset da;
    Bitset db;
};

// Throws NoDescentViolated or EmptySide.
FlipPair make_flip_pair(const Poset& p, const std::vector<Elem>& a);
FlipPair make_flip_pair(std::shared_ptr<const Poset> p, const Bitset& a);
// Pair with hanging wall B = {y >= x}.
FlipPair upset_flip_pair(std::shared_ptr<const Poset> p, Elem x);

Poset flip(const FlipPair& pair);
FlipPair dual_flip(const FlipPair& pair);
FaultPlanes fault_planes(const FlipPair& pair);

// Requires a least element and an atom a; B = {x >= a}.
Poset flip_on_atom(const Poset& p, Elem a);

struct FlipStep {
    std::vector<Elem> a;
    Elem u;
    Elem v;
};

struct Reroot {
    Poset poset;
    std::vector<FlipStep> steps;
};

// The unique flip-reachable poset with least element x.
Reroot reroot(const Poset& p, Elem x);

struct FlipGraph {
    // vertices[x] is the rerooted poset with least element x.
    std::vector<Poset> vertices;
    std::vector<std::pair<Elem, Elem>> edges;
};

FlipGraph flip_graph(const Poset& p);

// Linear extension of A whose successive sink reflections realise the flip.
std::vector<Elem> bgp_factorization(const FlipPair& pair);

// {"A":[...]}
std::string flip_pair_to_json(const FlipPair& pair);
FlipPair flip_pair_from_json(const Poset& p, const std::string& text);
std::string flip_steps_to_json(const std::vector<FlipStep>& steps);

}  // namespace latmut
