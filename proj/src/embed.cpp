#include "parhol/embed.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace parhol {

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

const RootSystem& cached_root_system(DynkinType t) {
    static std::mutex mu;
    static std::map<DynkinType, RootSystem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, build_root_system(t)).first;
    return it->second;
}

}  // namespace

Integer embedding_dim(const HSSDescriptor& d, int deg) {
    if (deg < 1) throw std::invalid_argument("embedding degree must be >= 1");
    MarkedType g = canonicalize_marked(d.cominuscule());
    const RootSystem& rs = cached_root_system(g.type);
    Weight lambda(g.type.rank, 0);
    lambda[g.node - 1] = deg;
    return weyl_dim(rs, lambda) - 1;
}

Integer first_codim(const HSSDescriptor& d) {
    return embedding_dim(d, 1) - d.dim_c();
}

Integer closed_form_codim(const HSSDescriptor& d) {
    int n = d.n;
    switch (d.family) {
        case HSSFamily::AIII:
            return binomial(d.a + d.b, d.b) - Integer(d.a) * d.b - 1;
        case HSSFamily::CI:
            return binomial(2 * n, n) - binomial(2 * n, n - 2) - 1 -
                   Integer(n) * (n + 1) / 2;
        case HSSFamily::DIII:
            return (Integer(1) << (n - 1)) - Integer(n) * (n - 1) / 2 - 1;
        case HSSFamily::Quadric: return 1;
        case HSSFamily::EIII: return 10;
        case HSSFamily::EVII: return 28;
    }
    throw std::logic_error("bad family");
}

IneqReport check_inequalities(const HSSDescriptor& d, int deg) {
    if (deg < 2)
        throw std::invalid_argument("check_inequalities requires deg >= 2");
    IneqReport r;
    r.n_deg = embedding_dim(d, deg);
    r.m = d.dim_c();
    r.codim = r.n_deg - r.m;
    r.n1 = embedding_dim(d, 1);
    r.star = r.codim > r.m * (r.m + 1) / 2;
    Integer ver = r.n1 * (r.n1 + 1) / 2;
    r.para0_weak = r.codim >= ver;
    r.para0_equality = r.codim == ver;
    return r;
}

EmbeddingReport embedding_report(const HSSDescriptor& d, int deg) {
    EmbeddingReport r;
    r.space = d;
    r.deg = deg;
    r.n_deg = embedding_dim(d, deg);
    r.codim = r.n_deg - d.dim_c();
    return r;
}

}  // namespace parhol
