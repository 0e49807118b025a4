#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latmut/coxeter.hpp"
#include "latmut/lattice.hpp"
#include "latmut/quiver.hpp"

namespace latmut {

// Type A: labels 0..n+2, with 1..n+1 on a side. Type B: labels +-1..+-(n+1),
// with +-1..+-n on a side and -i opposite to i.
struct LabelledPolygon {
    CoxeterType type = CoxeterType::A;
    int n = 1;
    // upper[k] is the side of label k+1.
    std::vector<bool> upper;

    int left() const { return type == CoxeterType::A ? 0 : -(n + 1); }
    int right() const { return type == CoxeterType::A ? n + 2 : n + 1; }
    bool is_endpoint(int label) const { return label == left() || label == right(); }
    bool is_label(int label) const;
    bool is_upper(int label) const;
    // Boundary in cyclic order: left, upper ascending, right, lower descending.
    std::vector<int> cycle() const;
    friend bool operator==(const LabelledPolygon&, const LabelledPolygon&) = default;
};

// Type A: label i+1 is upper iff the edge i -- i+1 points to i; labels 1 and n+1
// go opposite to 2 and n. Type B: label i is upper iff the edge i -- i+1 points
// to i; label n goes opposite to n-1.
LabelledPolygon polygon_from_orientation(const CoxeterOrientation& o);
CoxeterOrientation orientation_from_polygon(const LabelledPolygon& p);

// "A3:UL" names the sides of labels 2..n (type A) or 1..n-1 (type B);
// a full assignment ("A3:LULU", "B3:ULU") is also accepted.
LabelledPolygon parse_polygon(const std::string& spec);
// Full assignment form.
std::string polygon_to_string(const LabelledPolygon& p);
// Short form naming only the sides that fix the orientation.
std::string orientation_spec(const CoxeterOrientation& o);

using Diagonal = std::pair<int, int>;

struct Triangulation {
    // Sorted, each with first < second.
    std::vector<Diagonal> diagonals;
    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend auto operator<=>(const Triangulation&, const Triangulation&) = default;
};

Triangulation make_triangulation(std::vector<Diagonal> diagonals);
// "0-3,2-3"; type B labels may be negative: "-3-1,-1-1".
std::string to_string(const Triangulation& t);
Triangulation parse_triangulation(const std::string& text);

bool is_boundary(const LabelledPolygon& p, Diagonal d);
bool crosses(const LabelledPolygon& p, Diagonal d, Diagonal e);
bool is_point_symmetric(const Triangulation& t);

Triangulation eta(const LabelledPolygon& p, const PermA& sigma);
Triangulation eta_b(const LabelledPolygon& p, const PermB& sigma);
// Dispatches on p.type; images in one-line notation.
Triangulation eta_images(const LabelledPolygon& p, const std::vector<int>& images);

// All triangulations (type A) or point-symmetric triangulations (type B), sorted.
std::vector<Triangulation> all_triangulations(const LabelledPolygon& p);

// Adjacent: the two swapped values sit in neighbouring positions.
// General: any positions, with the middle value before (upper) or after (lower) both.
enum class PatternMoves { Adjacent, General };

std::vector<PermA> pattern_class(const LabelledPolygon& p, const PermA& sigma,
                                 PatternMoves moves = PatternMoves::Adjacent);
bool pattern_kernel_equal(const LabelledPolygon& p, const PermA& sigma, const PermA& tau,
                          PatternMoves moves = PatternMoves::Adjacent);

struct Cambrian {
    CoxeterOrientation orientation;
    LabelledPolygon polygon;
    WeakOrder weak;
    Lattice lattice;
    // triangulations[k] is element k; sorted.
    std::vector<Triangulation> triangulations;
    // projection[x] is the element hit by weak-order element x.
    std::vector<Elem> projection;
};

// Caps: A n <= 5, B n <= 3.
Cambrian build_cambrian(const CoxeterOrientation& o, bool verify = true);

// For crossing diagonals d, e: the one lower in the Cambrian order.
Diagonal cover_orientation(const LabelledPolygon& p, Diagonal d, Diagonal e);

// Triangulations ordered by oriented flips, without the weak order.
// Same element numbering and labels as build_cambrian. Caps: A n <= 7, B n <= 4.
Lattice direct_cambrian(const CoxeterOrientation& o);

// 1-based quiver vertex; the image of the i-th simple generator.
Elem atom_for_vertex(const Cambrian& c, int vertex);
std::vector<Elem> atoms_by_vertex(const Cambrian& c);

}  // namespace latmut
