#include "parhol/catalog.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <stdexcept>

namespace parhol {

std::string IsotropyDescriptor::str() const {
    std::string s = "{";
    for (size_t i = 0; i < simple_factors.size(); ++i) {
        if (i) s += ",";
        s += simple_factors[i].str();
    }
    s += "} + T^" + std::to_string(center_rank);
    return s;
}

long HSSDescriptor::dim_c() const {
    switch (family) {
        case HSSFamily::AIII: return static_cast<long>(a) * b;
        case HSSFamily::CI: return static_cast<long>(n) * (n + 1) / 2;
        case HSSFamily::DIII: return static_cast<long>(n) * (n - 1) / 2;
        case HSSFamily::Quadric: return n;
        case HSSFamily::EIII: return 16;
        case HSSFamily::EVII: return 27;
    }
    return 0;
}

int HSSDescriptor::rank() const {
    switch (family) {
        case HSSFamily::AIII: return std::min(a, b);
        case HSSFamily::CI: return n;
        case HSSFamily::DIII: return n / 2;
        case HSSFamily::Quadric: return 2;
        case HSSFamily::EIII: return 2;
        case HSSFamily::EVII: return 3;
    }
    return 0;
}

std::string HSSDescriptor::str() const {
    switch (family) {
        case HSSFamily::AIII:
            return "AIII(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case HSSFamily::CI: return "CI(" + std::to_string(n) + ")";
        case HSSFamily::DIII: return "DIII(" + std::to_string(n) + ")";
        case HSSFamily::Quadric: return "Quadric(" + std::to_string(n) + ")";
        case HSSFamily::EIII: return "EIII";
        case HSSFamily::EVII: return "EVII";
    }
    return "?";
}

MarkedType HSSDescriptor::cominuscule() const {
    switch (family) {
        case HSSFamily::AIII: return {{Family::A, a + b - 1}, a};
        case HSSFamily::CI: return {{Family::C, n}, n};
        case HSSFamily::DIII: return {{Family::D, n}, n};
        case HSSFamily::Quadric:
            if (n % 2 == 1) return {{Family::B, (n + 1) / 2}, 1};
            return {{Family::D, (n + 2) / 2}, 1};
        case HSSFamily::EIII: return {{Family::E, 6}, 1};
        case HSSFamily::EVII: return {{Family::E, 7}, 7};
    }
    throw std::logic_error("bad family");
}

HSSDescriptor make_aiii(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a < 1)
        throw std::invalid_argument("AIII requires 1 <= a <= b");
    HSSDescriptor d;
    d.family = HSSFamily::AIII;
    d.a = a;
    d.b = b;
    return d;
}

HSSDescriptor make_ci(int n) {
    if (n < 2)
        throw std::invalid_argument(
            "CI requires n >= 2 (CI(1) is CP^1 = AIII(1,1))");
    HSSDescriptor d;
    d.family = HSSFamily::CI;
    d.n = n;
    return d;
}

HSSDescriptor make_diii(int n) {
    if (n < 5)
        throw std::invalid_argument(
            "DIII requires n >= 5 (DIII(2), DIII(3), DIII(4) are CP^1, "
            "CP^3, Quadric(6))");
    HSSDescriptor d;
    d.family = HSSFamily::DIII;
    d.n = n;
    return d;
}

HSSDescriptor make_quadric(int n) {
    if (n < 3)
        throw std::invalid_argument(
            "Quadric requires n >= 3 (Quadric(1) is CP^1, Quadric(2) is "
            "reducible)");
    HSSDescriptor d;
    d.family = HSSFamily::Quadric;
    d.n = n;
    return d;
}

HSSDescriptor make_eiii() { return {HSSFamily::EIII}; }
HSSDescriptor make_evii() { return {HSSFamily::EVII}; }
HSSDescriptor make_cp(int n) { return make_aiii(1, n); }

std::string ProductDescriptor::str() const {
    return "CP^" + std::to_string(a - 1) + " x CP^" + std::to_string(b - 1);
}

std::vector<HSSDescriptor> enumerate(const Bounds& bounds) {
    std::vector<HSSDescriptor> out;
    std::set<MarkedType> seen;
    auto push = [&](HSSDescriptor d) {
        if (seen.insert(d.key()).second) out.push_back(d);
    };
    for (int s = 2; s <= bounds.aiii_sum_max; ++s)
        for (int a = 1; 2 * a <= s; ++a) push(make_aiii(a, s - a));
    for (int n = 2; n <= bounds.ci_max; ++n) push(make_ci(n));
    for (int n = 5; n <= bounds.diii_max; ++n) push(make_diii(n));
    for (int n = 3; n <= bounds.quadric_max; ++n) push(make_quadric(n));
    push(make_eiii());
    push(make_evii());
    return out;
}

std::vector<DynkinType> so_factors(int n) {
    switch (n) {
        case 2: return {};
        case 3: return {{Family::A, 1}};
        case 4: return {{Family::A, 1}, {Family::A, 1}};
        case 6: return {{Family::A, 3}};
        default:
            if (n % 2 == 1) return {{Family::B, (n - 1) / 2}};
            return {{Family::D, n / 2}};
    }
}

namespace {

IsotropyDescriptor normalized(std::vector<DynkinType> factors,
                              int center_rank) {
    std::vector<DynkinType> canon;
    for (auto f : factors)
        if (f.rank >= 1) canon.push_back(canonicalize(f));
    std::sort(canon.begin(), canon.end());
    return {std::move(canon), center_rank};
}

}  // namespace

IsotropyDescriptor isotropy(const HSSDescriptor& d) {
    switch (d.family) {
        case HSSFamily::AIII:
            return normalized({{Family::A, d.a - 1}, {Family::A, d.b - 1}}, 1);
        case HSSFamily::CI:
        case HSSFamily::DIII:
            return normalized({{Family::A, d.n - 1}}, 1);
        case HSSFamily::Quadric:
            return normalized(so_factors(d.n), 1);
        case HSSFamily::EIII:
            return normalized({{Family::D, 5}}, 1);
        case HSSFamily::EVII:
            return normalized({{Family::E, 6}}, 1);
    }
    throw std::logic_error("bad family");
}

IsotropyDescriptor isotropy(const ProductDescriptor& p) {
    int center = (p.a >= 2 ? 1 : 0) + (p.b >= 2 ? 1 : 0);
    return normalized({{Family::A, p.a - 2}, {Family::A, p.b - 2}}, center);
}

OrbitDescriptor complex_orbit(const HSSDescriptor& d) {
    switch (d.family) {
        case HSSFamily::EVII: return make_eiii();
        case HSSFamily::EIII: return make_diii(5);
        case HSSFamily::CI:  // Veronese row: CI(n+1) -> CP^n
            return make_cp(d.n - 1);
        case HSSFamily::Quadric:
            // Gr_2^+(R^{n+2}) -> Gr_2^+(R^n), i.e. Quadric(n-2); the two
            // lowest cases degenerate to CP^1 (a conic) and CP^1 x CP^1.
            if (d.n == 3) return make_cp(1);
            if (d.n == 4) return ProductDescriptor{2, 2};
            return make_quadric(d.n - 2);
        case HSSFamily::DIII:  // Pluecker row: SO(2n)/U(n) -> Gr_2(C^n)
            return make_aiii(2, d.n - 2);
        case HSSFamily::AIII:  // Segre row
            return ProductDescriptor{d.a, d.b};
    }
    throw std::logic_error("bad family");
}

std::string to_string(const OrbitDescriptor& o) {
    return std::visit([](const auto& d) { return d.str(); }, o);
}

HSSDescriptor parse_space(const std::string& s) {
    static const std::regex two(R"(^\s*AIII\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
    static const std::regex one(R"(^\s*(CI|DIII|Quadric)\(\s*(\d+)\s*\)\s*$)");
    static const std::regex zero(R"(^\s*(EIII|EVII)\s*$)");
    std::smatch m;
    if (std::regex_match(s, m, two))
        return make_aiii(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(s, m, one)) {
        int n = std::stoi(m[2]);
        if (m[1] == "CI") return make_ci(n);
        if (m[1] == "DIII") return make_diii(n);
        return make_quadric(n);
    }
    if (std::regex_match(s, m, zero))
        return m[1] == "EIII" ? make_eiii() : make_evii();
    throw std::invalid_argument(
        "unknown space '" + s +
        "' (expected e.g. AIII(2,4), CI(3), DIII(6), Quadric(5), EIII, EVII)");
}

}  // namespace parhol
