#pragma once

#include "parhol/rootsys.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace parhol {

// Lie-algebra data of the isotropy group K: multiset of canonical simple
// factors plus the rank of the center. Rank-0 factors are dropped.
struct IsotropyDescriptor {
    std::vector<DynkinType> simple_factors;  // sorted, canonical
    int center_rank = 0;

    bool operator==(const IsotropyDescriptor&) const = default;
    std::string str() const;
};

enum class HSSFamily { AIII, CI, DIII, Quadric, EIII, EVII };

// One irreducible Hermitian symmetric space of compact type.
//   AIII(a,b)  = SU(a+b)/S(U(a)xU(b)),  1 <= a <= b
//   CI(n)      = Sp(n)/U(n),            n >= 2
//   DIII(n)    = SO(2n)/U(n),           n >= 5
//   Quadric(n) = SO(n+2)/(T^1 SO(n)),   n >= 3
//   EIII       = E6/(T^1 Spin(10)),  EVII = E7/(T^1 E6)
// Low-parameter presentations outside these floors coincide with other
// families; the enumeration keeps one entry per isometry class and
// equality compares the canonical marked diagram, so e.g. Quadric(3) and
// CI(2) denote the same space.
struct HSSDescriptor {
    HSSFamily family;
    int a = 0;  // AIII only
    int b = 0;  // AIII only
    int n = 0;  // CI/DIII/Quadric

    long dim_c() const;
    int rank() const;
    std::string str() const;

    // Ambient group type and marked node of the cominuscule weight
    // (Bourbaki numbering), as presented.
    MarkedType cominuscule() const;
    // Isometry-class identity.
    MarkedType key() const { return canonicalize_marked(cominuscule()); }

    bool operator==(const HSSDescriptor& o) const { return key() == o.key(); }
};

HSSDescriptor make_aiii(int a, int b);
HSSDescriptor make_ci(int n);
HSSDescriptor make_diii(int n);
HSSDescriptor make_quadric(int n);
HSSDescriptor make_eiii();
HSSDescriptor make_evii();
HSSDescriptor make_cp(int n);  // CP^n = AIII(1, n)

// Segre orbit CP^{a-1} x CP^{b-1}; not a catalog entry, used by the
// orbit-consistency checks only.
struct ProductDescriptor {
    int a = 0;
    int b = 0;
    long dim_c() const { return a + b - 2; }
    std::string str() const;
    bool operator==(const ProductDescriptor&) const = default;
};

using OrbitDescriptor = std::variant<HSSDescriptor, ProductDescriptor>;

struct Bounds {
    int aiii_sum_max = 12;  // a + b
    int ci_max = 8;
    int diii_max = 12;
    int quadric_max = 12;

    bool operator==(const Bounds&) const = default;
};

// Deterministic, duplicate-free list of irreducible spaces within bounds.
std::vector<HSSDescriptor> enumerate(const Bounds& bounds = {});

IsotropyDescriptor isotropy(const HSSDescriptor& d);
// Isotropy of the Segre product: U(a-1) x U(b-1).
IsotropyDescriptor isotropy(const ProductDescriptor& p);

// Canonical type of so(n), n >= 2 (n = 2 is abelian: center only).
std::vector<DynkinType> so_factors(int n);

// The unique complex orbit of the isotropy action on P(T G/K).
OrbitDescriptor complex_orbit(const HSSDescriptor& d);

std::string to_string(const OrbitDescriptor& o);

// Parses the catalog serialization: "AIII(2,4)", "CI(3)", "Quadric(5)",
// "DIII(6)", "EIII", "EVII". Throws on malformed or out-of-floor input.
HSSDescriptor parse_space(const std::string& s);

}  // namespace parhol
