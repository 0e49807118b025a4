#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latmut/lattice.hpp"

namespace latmut {

enum class CoxeterType { A, B };

char type_letter(CoxeterType t);

// One-line notation on {1..m}.
struct PermA {
    std::vector<int> images;
    friend bool operator==(const PermA&, const PermA&) = default;
    friend auto operator<=>(const PermA&, const PermA&) = default;
};

// Images of 1..n in {-n..-1, 1..n}; w(-i) = -w(i).
struct PermB {
    std::vector<int> images;
    friend bool operator==(const PermB&, const PermB&) = default;
    friend auto operator<=>(const PermB&, const PermB&) = default;
};

bool is_valid(const PermA& p);
bool is_valid(const PermB& p);

// Generators s_1..s_n. Type A rank n acts on n+1 points: s_i = (i, i+1).
// Type B rank n: s_1 negates 1, s_i swaps i-1 and i.
PermA generator_a(int n, int i);
PermB generator_b(int n, int i);
PermA identity_a(int n);
PermB identity_b(int n);

PermA mult(const PermA& p, const PermA& q);  // (pq)(i) = p(q(i))
PermB mult(const PermB& p, const PermB& q);
PermA inverse(const PermA& p);
PermB inverse(const PermB& p);
int length(const PermA& p);  // inversions
int length(const PermB& p);  // inv + neg + nsp
bool weak_leq(const PermA& p, const PermA& q);
bool weak_leq(const PermB& p, const PermB& q);

std::string to_string(const PermA& p);
std::string to_string(const PermB& p);
PermA parse_perm_a(const std::string& s);
PermB parse_perm_b(const std::string& s);

// Right weak order of a finite type-A or type-B Coxeter group.
class WeakOrder {
public:
    CoxeterType type() const { return type_; }
    int rank() const { return rank_; }
    const Lattice& lattice() const { return lattice_; }
    std::size_t size() const { return elements_.size(); }

    // Signed images (positive for type A).
    const std::vector<int>& images(Elem x) const { return elements_[x]; }
    std::optional<Elem> index_of(const std::vector<int>& images) const;
    int length(Elem x) const { return lengths_[x]; }
    Elem identity() const { return 0; }
    Elem w0() const { return w0_; }
    Elem generator(int i) const { return generators_.at(static_cast<std::size_t>(i - 1)); }
    Elem mult(Elem x, Elem y) const;
    std::string label(Elem x) const;

    friend WeakOrder build_weak_order(CoxeterType, int);

private:
    CoxeterType type_ = CoxeterType::A;
    int rank_ = 0;
    std::vector<std::vector<int>> elements_;
    std::map<std::vector<int>, Elem> index_;
    std::vector<int> lengths_;
    std::vector<Elem> generators_;
    Elem w0_ = 0;
    Lattice lattice_;
};

// Caps: A n <= 6, B n <= 4.
WeakOrder build_weak_order(CoxeterType type, int n);

struct WeakMutation {
    Lattice mutated;
    // iso[x] = index of a*x; an order isomorphism mutated -> weak order.
    std::vector<Elem> iso;
    std::optional<Elem> a_prime;
};

WeakMutation weak_order_mutation(const WeakOrder& w, int generator);

struct Parabolic {
    std::vector<int> generators;
    Elem longest;
    SubPoset interval;
};

Parabolic parabolic(const WeakOrder& w, const std::vector<int>& generators);

struct ParabolicFactorization {
    Parabolic parabolic;
    // f_prime[x] = x ^ w_{!a}, an element of the parabolic (index in w).
    std::vector<Elem> f_prime;
    // g[k] = f(k-th element of parabolic.interval).
    std::vector<Elem> g;
};

// f: w -> m surjective lattice homomorphism with f(id) = f(s_a).
ParabolicFactorization factor_through_parabolic(const WeakOrder& w, int a, const Lattice& m,
                                                const std::vector<Elem>& f);

}  // namespace latmut
