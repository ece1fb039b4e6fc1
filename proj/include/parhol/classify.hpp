#pragma once

#include "parhol/catalog.hpp"
#include "parhol/embed.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parhol {

struct MatchResult {
    IsotropyDescriptor target_K;
    Integer required_dim;
    std::vector<HSSDescriptor> candidates;  // catalog order
    Bounds search_bounds;
    std::string str() const;
};

// True iff S can be K/I for an ideal I: S's simple factors are a
// sub-multiset of K's and S's center rank does not exceed K's. Both sides
// canonical.
bool quotient_compatible(const IsotropyDescriptor& S,
                         const IsotropyDescriptor& K);

// All enumerated spaces with dim_c = c whose isotropy is a quotient of K.
MatchResult slice_match(const IsotropyDescriptor& K, const Integer& c,
                        const Bounds& bounds = {});

// Real dimension of the group described: sum of factor dimensions plus the
// center rank.
long group_dim(const IsotropyDescriptor& k);

// A parallel submanifold of projective space, given as the data its
// holonomy computation needs: the first canonical embedding of a rank <= 2
// space, the second Veronese embedding of CP^n, or a Segre product.
struct Submanifold {
    enum class Kind { First, Veronese, Segre };
    Kind kind = Kind::First;
    HSSDescriptor space;          // First
    int veronese_n = 0;           // Veronese
    ProductDescriptor product{};  // Segre

    static Submanifold first(HSSDescriptor d);
    static Submanifold veronese(int n);
    static Submanifold segre(int a, int b);

    IsotropyDescriptor isotropy_group() const;
    Integer codim() const;
    std::string str() const;
};

class ClassificationError : public std::runtime_error {
  public:
    ClassificationError(std::string msg, MatchResult r)
        : std::runtime_error(std::move(msg)), result(std::move(r)) {}
    MatchResult result;
};

// The space whose isotropy representation gives the normal holonomy of m.
// Matching is by dimension and quotient-compatible isotropy type; when that
// leaves several candidates, an effective-slice-dimension certificate
// (the real dimension of the image of the isotropy algebra in its action
// on the normal space, measured on a matrix model) disambiguates. Zero or
// several surviving candidates raise ClassificationError with the full
// MatchResult.
HSSDescriptor normal_holonomy(
    const Submanifold& m, const Bounds& bounds = {},
    std::optional<long> effective_slice_dim = std::nullopt);

// slice_match over every enumerated entry of rank >= 3, keyed by the entry.
std::vector<std::pair<HSSDescriptor, MatchResult>> exclusion_scan(
    const Bounds& bounds = {});

// ---- Stored Table 1 data (column 1 -> 2 -> 3) ----

// Column 2 as a Submanifold (the unique complex orbit with its parallel
// embedding). Rejects AIII(1,b) ambients (degenerate orbit).
Submanifold orbit_submanifold(const HSSDescriptor& ambient);

// Column 3.
HSSDescriptor stored_normal_holonomy(const HSSDescriptor& ambient);

struct OrbitConsistency {
    HSSDescriptor ambient;
    OrbitDescriptor orbit;
    Integer ambient_proj_dim_minus_orbit;  // dim(G/K) - 1 - dim(orbit)
    Integer orbit_codim;                   // codim of the parallel embedding
    bool ok = false;
};

OrbitConsistency orbit_consistency(const HSSDescriptor& ambient);

}  // namespace parhol
