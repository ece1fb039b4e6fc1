#include "parhol/classify.hpp"

#include <algorithm>
#include <sstream>

namespace parhol {

std::string MatchResult::str() const {
    std::ostringstream os;
    os << "target K = " << target_K.str() << ", required dim = "
       << required_dim << ", candidates = [";
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (i) os << ", ";
        os << candidates[i].str();
    }
    os << "]";
    return os.str();
}

bool quotient_compatible(const IsotropyDescriptor& S,
                         const IsotropyDescriptor& K) {
    if (S.center_rank > K.center_rank) return false;
    // Sub-multiset test on sorted factor lists.
    auto it = K.simple_factors.begin();
    for (const auto& f : S.simple_factors) {
        it = std::find(it, K.simple_factors.end(), f);
        if (it == K.simple_factors.end()) return false;
        ++it;
    }
    return true;
}

MatchResult slice_match(const IsotropyDescriptor& K, const Integer& c,
                        const Bounds& bounds) {
    MatchResult r;
    r.target_K = K;
    r.required_dim = c;
    r.search_bounds = bounds;
    for (const auto& d : enumerate(bounds))
        if (Integer(d.dim_c()) == c && quotient_compatible(isotropy(d), K))
            r.candidates.push_back(d);
    return r;
}

long group_dim(const IsotropyDescriptor& k) {
    long dim = k.center_rank;
    for (const auto& f : k.simple_factors) {
        long n = f.rank;
        switch (f.family) {
            case Family::A: dim += n * (n + 2); break;
            case Family::B:
            case Family::C: dim += n * (2 * n + 1); break;
            case Family::D: dim += n * (2 * n - 1); break;
            case Family::E: dim += n == 6 ? 78 : 133; break;
        }
    }
    return dim;
}

Submanifold Submanifold::first(HSSDescriptor d) {
    Submanifold m;
    m.kind = Kind::First;
    m.space = d;
    return m;
}

Submanifold Submanifold::veronese(int n) {
    Submanifold m;
    m.kind = Kind::Veronese;
    m.veronese_n = n;
    return m;
}

Submanifold Submanifold::segre(int a, int b) {
    Submanifold m;
    m.kind = Kind::Segre;
    m.product = {a, b};
    return m;
}

IsotropyDescriptor Submanifold::isotropy_group() const {
    switch (kind) {
        case Kind::First: return isotropy(space);
        case Kind::Veronese: return isotropy(make_cp(veronese_n));
        case Kind::Segre: return isotropy(product);
    }
    throw std::logic_error("bad kind");
}

Integer Submanifold::codim() const {
    switch (kind) {
        case Kind::First: return first_codim(space);
        case Kind::Veronese:
            return embedding_dim(make_cp(veronese_n), 2) - veronese_n;
        case Kind::Segre:
            return Integer(product.a - 1) * (product.b - 1);
    }
    throw std::logic_error("bad kind");
}

std::string Submanifold::str() const {
    switch (kind) {
        case Kind::First: return space.str();
        case Kind::Veronese:
            return "Veronese(CP^" + std::to_string(veronese_n) + ")";
        case Kind::Segre: return product.str();
    }
    return "?";
}

HSSDescriptor normal_holonomy(const Submanifold& m, const Bounds& bounds,
                              std::optional<long> effective_slice_dim) {
    if (m.kind == Submanifold::Kind::First && m.space.rank() > 2)
        throw std::invalid_argument(
            "normal_holonomy: first canonical embeddings are parallel only "
            "in rank <= 2; " + m.space.str() + " has rank " +
            std::to_string(m.space.rank()));
    Integer c = m.codim();
    if (c < 1)
        throw std::invalid_argument("normal_holonomy: " + m.str() +
                                    " has codimension 0");
    MatchResult r = slice_match(m.isotropy_group(), c, bounds);
    std::vector<HSSDescriptor> surviving = r.candidates;
    if (surviving.size() > 1 && effective_slice_dim) {
        std::erase_if(surviving, [&](const HSSDescriptor& cand) {
            return group_dim(isotropy(cand)) != *effective_slice_dim;
        });
    }
    if (surviving.size() != 1) {
        std::string why = surviving.empty()
            ? "no catalog space matches"
            : "several catalog spaces match";
        throw ClassificationError(
            "normal holonomy of " + m.str() + ": " + why + " (" + r.str() +
            ")", r);
    }
    return surviving.front();
}

std::vector<std::pair<HSSDescriptor, MatchResult>> exclusion_scan(
    const Bounds& bounds) {
    std::vector<std::pair<HSSDescriptor, MatchResult>> out;
    for (const auto& d : enumerate(bounds))
        if (d.rank() >= 3)
            out.emplace_back(d,
                             slice_match(isotropy(d), first_codim(d), bounds));
    return out;
}

Submanifold orbit_submanifold(const HSSDescriptor& ambient) {
    switch (ambient.family) {
        case HSSFamily::EVII: return Submanifold::first(make_eiii());
        case HSSFamily::EIII: return Submanifold::first(make_diii(5));
        case HSSFamily::CI: return Submanifold::veronese(ambient.n - 1);
        case HSSFamily::Quadric:
            if (ambient.n == 3) return Submanifold::veronese(1);
            if (ambient.n == 4) return Submanifold::segre(2, 2);
            return Submanifold::first(make_quadric(ambient.n - 2));
        case HSSFamily::DIII:
            return Submanifold::first(make_aiii(2, ambient.n - 2));
        case HSSFamily::AIII:
            if (ambient.a < 2)
                throw std::invalid_argument(
                    "the complex orbit of " + ambient.str() +
                    " is a linear subspace (codimension 0)");
            return Submanifold::segre(ambient.a, ambient.b);
    }
    throw std::logic_error("bad family");
}

HSSDescriptor stored_normal_holonomy(const HSSDescriptor& ambient) {
    switch (ambient.family) {
        case HSSFamily::EVII: return make_quadric(10);
        case HSSFamily::EIII: return make_cp(5);
        case HSSFamily::CI:  // Sp(n)/U(n) with n = ambient.n - 1
            return ambient.n - 1 >= 2 ? make_ci(ambient.n - 1) : make_cp(1);
        case HSSFamily::Quadric: return make_cp(1);  // U(2)/U(1)
        case HSSFamily::DIII: {
            int k = ambient.n - 2;  // SO(2k)/U(k)
            if (k >= 5) return make_diii(k);
            if (k == 4) return make_quadric(6);
            if (k == 3) return make_cp(3);
            return make_cp(1);
        }
        case HSSFamily::AIII:
            if (ambient.a < 2)
                throw std::invalid_argument(
                    "no Table 1 row for ambient " + ambient.str());
            return make_aiii(ambient.a - 1, ambient.b - 1);
    }
    throw std::logic_error("bad family");
}

OrbitConsistency orbit_consistency(const HSSDescriptor& ambient) {
    OrbitConsistency oc;
    oc.ambient = ambient;
    oc.orbit = complex_orbit(ambient);
    Submanifold m = orbit_submanifold(ambient);
    long orbit_dim = std::visit([](const auto& d) { return d.dim_c(); },
                                oc.orbit);
    oc.ambient_proj_dim_minus_orbit = Integer(ambient.dim_c()) - 1 - orbit_dim;
    oc.orbit_codim = m.codim();
    oc.ok = oc.ambient_proj_dim_minus_orbit == oc.orbit_codim;
    return oc;
}

}  // namespace parhol
