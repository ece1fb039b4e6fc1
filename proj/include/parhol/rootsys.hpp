#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace parhol {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Family { A, B, C, D, E };

char family_letter(Family f);

// Simple Lie algebra type. Admissible: A n>=1, B n>=2, C n>=2, D n>=3,
// E n in {6,7}.
struct DynkinType {
    Family family;
    int rank;

    bool operator==(const DynkinType&) const = default;
    bool operator<(const DynkinType& o) const {
        return family != o.family ? family < o.family : rank < o.rank;
    }
    std::string str() const;
};

bool admissible(DynkinType t);

// Resolves low-rank aliases: B1, C1 -> A1; D3 -> A3; C2 -> B2 (chosen
// representative). D2 is not simple and is rejected.
DynkinType canonicalize(DynkinType t);

// A marked Dynkin diagram (type + node, 1-based Bourbaki numbering).
// Used as the identity of a cominuscule presentation.
struct MarkedType {
    DynkinType type;
    int node;

    bool operator==(const MarkedType&) const = default;
    bool operator<(const MarkedType& o) const {
        return type != o.type ? type < o.type : node < o.node;
    }
};

// Canonical form of a marked diagram up to isomorphism: resolves the
// low-rank aliases with the matching node relabeling, then normalizes the
// node under diagram automorphisms (A_n reflection, D_n spinor swap, D4
// triality, E6 reflection). Two marked types denote isomorphic marked
// diagrams iff their canonical forms are equal.
MarkedType canonicalize_marked(MarkedType m);

// Dominant integral weight in the fundamental-weight basis.
using Weight = std::vector<int>;

struct RootSystem {
    DynkinType type;
    // cartan[i][j] = 2(a_i, a_j)/(a_i, a_i); row i pairs against coroot i.
    std::vector<std::vector<int>> cartan;
    // d_i = (a_i, a_i)/2; d_i * cartan[i][j] is symmetric.
    std::vector<Rational> symmetrizer;
    // Coordinates in the simple-root basis, sorted by height then lex.
    std::vector<std::vector<int>> positive_roots;

    int rank() const { return type.rank; }
};

RootSystem build_root_system(DynkinType t);

// Number of positive roots: A_n n(n+1)/2, B_n/C_n n^2, D_n n(n-1),
// E6 36, E7 63.
long expected_positive_root_count(DynkinType t);

// dim of the irreducible representation with highest weight lambda:
// prod over positive roots of <lambda+rho, a> / <rho, a>, exact.
// Rejects non-dominant weights.
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

}  // namespace parhol
