#include "latmut/mutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "latmut/distance.hpp"

namespace latmut {

std::optional<ACCorrespondence> ac_correspondence_for_atom(const Lattice& l, Elem a) {
    const Poset& p = l.poset();
    if (!p.is_cover(l.bottom(), a)) throw PreconditionFailed(std::to_string(a) + " is not an atom");
    Bitset rest = ~p.up_set(a);
    if (rest.none()) return std::nullopt;
    std::optional<Elem> top_of_rest;
    for (auto c = rest.find_first(); c != Bitset::npos; c = rest.find_next(c)) {
        if ((p.up_set(c) & rest).count() == 1) {
            if (top_of_rest) return std::nullopt;
            top_of_rest = c;
        }
    }
    if (!top_of_rest || p.down_set(*top_of_rest) != rest) return std::nullopt;
    if (!p.is_cover(*top_of_rest, l.top())) return std::nullopt;
    return ACCorrespondence{a, *top_of_rest};
}

std::optional<ACCorrespondence> ac_correspondence_for_coatom(const Lattice& l, Elem a_prime) {
    const Poset& p = l.poset();
    if (!p.is_cover(a_prime, l.top()))
        throw PreconditionFailed(std::to_string(a_prime) + " is not a coatom");
    Bitset rest = ~p.down_set(a_prime);
    if (rest.none()) return std::nullopt;
    std::optional<Elem> bottom_of_rest;
    for (auto c = rest.find_first(); c != Bitset::npos; c = rest.find_next(c)) {
        if ((p.down_set(c) & rest).count() == 1) {
            if (bottom_of_rest) return std::nullopt;
            bottom_of_rest = c;
        }
    }
    if (!bottom_of_rest || p.up_set(*bottom_of_rest) != rest) return std::nullopt;
    if (!p.is_cover(l.bottom(), *bottom_of_rest)) return std::nullopt;
    return ACCorrespondence{*bottom_of_rest, a_prime};
}

std::vector<ACCorrespondence> ac_correspondences(const Lattice& l) {
    std::vector<ACCorrespondence> out;
    if (l.size() < 2) return out;
    for (Elem a : l.atoms())
        if (auto ac = ac_correspondence_for_atom(l, a)) out.push_back(*ac);
    return out;
}

Elem partial_down(const Lattice& l, const ACCorrespondence& ac, Elem x) {
    return l.meet(l.join(x, ac.a), ac.a_prime);
}

Elem partial_up(const Lattice& l, const ACCorrespondence& ac, Elem x) {
    return l.join(l.meet(x, ac.a_prime), ac.a);
}

MutationVerdict check_mutation(const Lattice& l, const FlipPair& pair, bool verify) {
    MutationVerdict v;
    const Poset& p = l.poset();
    if (pair.host().size() != p.size()) throw PreconditionFailed("flip pair belongs to another poset");
    bool coatom_in_a = false;
    for (Elem c : l.coatoms()) coatom_in_a = coatom_in_a || pair.in_a(c);
    bool atom_in_b = false;
    for (Elem a : l.atoms()) atom_in_b = atom_in_b || pair.in_b(a);
    v.ac_ok = coatom_in_a && atom_in_b;

    auto closed = [&](const Bitset& s, bool use_join) {
        auto xs = members(s);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                Elem z = use_join ? l.join(xs[i], xs[j]) : l.meet(xs[i], xs[j]);
                if (!s.test(z)) return false;
            }
        return true;
    };
    FaultPlanes f = fault_planes(pair);
    v.d_sublattice_ok = closed(f.da, true) && closed(f.db, false);
    v.sublattice_ok = closed(pair.footwall(), true) && closed(pair.hanging_wall(), false);
    v.is_mutation = v.ac_ok && v.d_sublattice_ok;
    ensure(!v.is_mutation || v.sublattice_ok, "mutation criterion must imply the sublattice condition");
    if (verify) {
        v.flipped_is_lattice = is_lattice(flip(pair));
        ensure(*v.flipped_is_lattice == v.is_mutation,
               "mutation criterion disagrees with a direct lattice check");
    }
    return v;
}

FlipPair ac_flip_pair(const Lattice& l, const ACCorrespondence& ac) {
    return upset_flip_pair(std::make_shared<const Poset>(l.poset()), ac.a);
}

std::vector<Mutation> mutations(const Lattice& l) {
    std::vector<Mutation> out;
    for (const auto& ac : ac_correspondences(l)) {
        FlipPair pair = ac_flip_pair(l, ac);
        if (!check_mutation(l, pair).is_mutation) continue;
        out.push_back({ac, as_lattice(flip(pair))});
    }
    return out;
}

bool is_locally_mutable(const Lattice& l) {
    if (l.size() < 2) return true;
    for (Elem a : l.atoms())
        if (!ac_correspondence_for_atom(l, a)) return false;
    for (Elem c : l.coatoms())
        if (!ac_correspondence_for_coatom(l, c)) return false;
    for (const auto& ac : ac_correspondences(l))
        if (!check_mutation(l, ac_flip_pair(l, ac)).is_mutation) return false;
    return true;
}

std::size_t default_state_cap() {
    if (const char* env = std::getenv("LATMUT_STATE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

MutabilityReport is_mutable(const Lattice& l, std::size_t cap) {
    MutabilityReport r;
    std::set<Relation> seen{l.poset().covers()};
    std::deque<std::size_t> queue{0};
    r.closure.push_back(l);
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        if (!is_locally_mutable(r.closure[i])) {
            r.witness = r.closure[i].poset();
            r.states = r.closure.size();
            return r;
        }
        for (auto& m : mutations(r.closure[i])) {
            if (!seen.insert(m.result.poset().covers()).second) continue;
            if (seen.size() > cap)
                throw Overflow("mutation closure exceeds " + std::to_string(cap) + " states");
            r.closure.push_back(std::move(m.result));
            queue.push_back(r.closure.size() - 1);
        }
    }
    r.is_mutable = true;
    r.states = r.closure.size();
    return r;
}

std::vector<Elem> u_map(const Lattice& l) {
    const std::size_t n = l.size();
    DistanceTable t(l.poset());
    std::vector<Elem> u(n);
    for (Elem x = 0; x < n; ++x) {
        std::vector<Elem> found;
        for (Elem z = 0; z < n; ++z) {
            bool ok = true;
            for (Elem y = 0; y < n && ok; ++y) ok = t.big_d(x, y, z) == 0;
            if (ok) found.push_back(z);
        }
        if (found.size() != 1)
            throw MutabilityViolation("u(" + std::to_string(x) + ") has " +
                                      std::to_string(found.size()) + " candidates");
        u[x] = found.front();
    }
    std::vector<Elem> sorted = u;
    std::sort(sorted.begin(), sorted.end());
    for (Elem i = 0; i < n; ++i)
        if (sorted[i] != i) throw MutabilityViolation("u is not a bijection");
    if (u[l.bottom()] != l.top()) throw MutabilityViolation("u(0) differs from 1");
    return u;
}

namespace {

Elem atom_in_hanging_wall(const Lattice& l, const FlipPair& pair) {
    for (Elem a : l.atoms())
        if (pair.in_b(a)) return a;
    throw PreconditionFailed("hanging wall contains no atom");
}

}  // namespace

FlipPair quotient_flip(const Lattice& l, const FlipPair& pair, const Lattice& m,
                       const std::vector<Elem>& f) {
    if (!is_surjective(f, m.size()) || !is_lattice_homomorphism(l, m, f))
        throw PreconditionFailed("quotient_flip needs a surjective lattice homomorphism");
    if (!check_mutation(l, pair).is_mutation) throw PreconditionFailed("pair is not a mutation");
    Elem a = atom_in_hanging_wall(l, pair);
    if (f[a] == f[l.bottom()])
        throw PrerequisiteFailed("homomorphism sends the atom " + std::to_string(a) + " to 0");

    Bitset fa(m.size()), fb(m.size());
    for (Elem x = 0; x < l.size(); ++x) (pair.in_a(x) ? fa : fb).set(f[x]);
    ensure((fa & fb).none(), "pushed sides must be disjoint");
    FlipPair pushed(std::make_shared<const Poset>(m.poset()), fa);

    FaultPlanes src = fault_planes(pair);
    Bitset image(m.size());
    for (auto x = src.da.find_first(); x != Bitset::npos; x = src.da.find_next(x)) image.set(f[x]);
    ensure(image == fault_planes(pushed).da, "f must carry dA onto the pushed fault plane");
    ensure(check_mutation(m, pushed).is_mutation, "pushed pair must be a mutation");
    return pushed;
}

std::optional<IdealRestriction> restrict_mutation_to_ideal(const Lattice& l, const FlipPair& pair,
                                                           Elem x) {
    if (!check_mutation(l, pair).is_mutation) throw PreconditionFailed("pair is not a mutation");
    auto ac = ac_correspondence_for_atom(l, atom_in_hanging_wall(l, pair));
    ensure(ac.has_value(), "mutation pair must come from an AC-correspondence");
    Lattice flipped = as_lattice(flip(pair));

    if (pair.in_a(x)) {
        IdealRestriction r{interval(flipped.poset(), l.bottom(), x), std::nullopt, x, true};
        return r;
    }
    FaultPlanes f = fault_planes(pair);
    if (x != l.top() && !f.db.test(x)) return std::nullopt;

    Elem xp = partial_down(l, *ac, x);
    if (x == l.top()) xp = flipped.top();
    SubPoset ideal = interval(flipped.poset(), flipped.bottom(), xp);
    SubPoset s = interval(l.poset(), l.bottom(), x);
    Bitset sub_a(s.to_parent.size());
    for (Elem i = 0; i < s.to_parent.size(); ++i)
        if (pair.in_a(s.to_parent[i])) sub_a.set(i);
    FlipPair restricted(std::make_shared<const Poset>(s.poset), sub_a);
    ensure(ideal.to_parent == s.to_parent, "restricted ideal must keep the element set");
    ensure(flip(restricted) == ideal.poset, "flipping the restriction must give the ideal");
    return IdealRestriction{std::move(ideal), std::move(restricted), xp, false};
}

bool fault_plane_isomorphism_holds(const Lattice& l, const FlipPair& pair,
                                   const ACCorrespondence& ac) {
    FaultPlanes f = fault_planes(pair);
    auto da = members(f.da);
    std::vector<Elem> image;
    for (Elem x : da) {
        Elem y = l.join(x, ac.a);
        if (!f.db.test(y) || l.meet(y, ac.a_prime) != x) return false;
        image.push_back(y);
    }
    std::vector<Elem> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != members(f.db)) return false;
    for (Elem y : members(f.db))
        if (l.join(l.meet(y, ac.a_prime), ac.a) != y) return false;
    for (std::size_t i = 0; i < da.size(); ++i)
        for (std::size_t j = 0; j < da.size(); ++j)
            if (l.leq(da[i], da[j]) != l.leq(image[i], image[j])) return false;
    return true;
}

}  // namespace latmut
