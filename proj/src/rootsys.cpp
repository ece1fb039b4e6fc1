#include "parhol/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace parhol {

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::E: return 'E';
    }
    return '?';
}

std::string DynkinType::str() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
}

bool admissible(DynkinType t) {
    switch (t.family) {
        case Family::A: return t.rank >= 1;
        case Family::B: return t.rank >= 2;
        case Family::C: return t.rank >= 2;
        case Family::D: return t.rank >= 3;
        case Family::E: return t.rank == 6 || t.rank == 7;
    }
    return false;
}

DynkinType canonicalize(DynkinType t) {
    if (t.rank == 1 && (t.family == Family::B || t.family == Family::C))
        return {Family::A, 1};
    if (t.family == Family::C && t.rank == 2) return {Family::B, 2};
    if (t.family == Family::D && t.rank == 2)
        throw std::invalid_argument("D2 is not simple (so(4) = su(2) + su(2))");
    if (t.family == Family::D && t.rank == 3) return {Family::A, 3};
    if (!admissible(t))
        throw std::invalid_argument("inadmissible Dynkin type " + t.str());
    return t;
}

MarkedType canonicalize_marked(MarkedType m) {
    DynkinType t = m.type;
    int j = m.node;
    if (j < 1 || j > t.rank)
        throw std::invalid_argument("node " + std::to_string(j) +
                                    " out of range for " + t.str());
    // Alias relabelings.
    if (t.rank == 1 && (t.family == Family::B || t.family == Family::C)) {
        t = {Family::A, 1};
    } else if (t.family == Family::C && t.rank == 2) {
        t = {Family::B, 2};
        j = 3 - j;  // short/long nodes swap under sp(4) = so(5)
    } else if (t.family == Family::D && t.rank == 3) {
        // D3 path is 2-1-3; A3 path is 1-2-3.
        static const int relabel[4] = {0, 2, 1, 3};
        t = {Family::A, 3};
        j = relabel[j];
    } else if (!admissible(t)) {
        throw std::invalid_argument("inadmissible Dynkin type " + t.str());
    }
    // Diagram automorphisms.
    switch (t.family) {
        case Family::A:
            j = std::min(j, t.rank + 1 - j);
            break;
        case Family::D:
            if (t.rank == 4 && (j == 3 || j == 4)) j = 1;  // triality
            if (j == t.rank) j = t.rank - 1;               // spinor swap
            break;
        case Family::E:
            if (t.rank == 6) {
                if (j == 6) j = 1;
                if (j == 5) j = 3;
            }
            break;
        default:
            break;
    }
    return {t, j};
}

long expected_positive_root_count(DynkinType t) {
    long n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : 63;
    }
    return 0;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(DynkinType t) {
    int n = t.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) {  // 1-based, single bond
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    switch (t.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case Family::B:
            // a_n short; <a_n, a_{n-1}^vee> = -1 but <a_{n-1}, a_n^vee> = -2.
            for (int i = 1; i < n; ++i) link(i, i + 1);
            a[n - 1][n - 2] = -2;
            break;
        case Family::C:
            // a_n long.
            for (int i = 1; i < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;
            break;
        case Family::D:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case Family::E:
            // Bourbaki: chain 1-3-4-5-6(-7), node 2 attached to 4.
            link(1, 3);
            link(3, 4);
            link(4, 5);
            link(5, 6);
            if (n == 7) link(6, 7);
            link(2, 4);
            break;
    }
    return a;
}

std::vector<Rational> symmetrizer_for(DynkinType t) {
    int n = t.rank;
    std::vector<Rational> d(n, 1);
    if (t.family == Family::B) d[n - 1] = Rational(1, 2);
    if (t.family == Family::C) d[n - 1] = 2;
    return d;
}

}  // namespace

RootSystem build_root_system(DynkinType t) {
    if (!admissible(t))
        throw std::invalid_argument("inadmissible Dynkin type " + t.str() +
                                    " (admissible: A n>=1, B n>=2, C n>=2, "
                                    "D n>=3, E n in {6,7})");
    RootSystem rs;
    rs.type = t;
    rs.cartan = cartan_matrix(t);
    rs.symmetrizer = symmetrizer_for(t);

    const int n = t.rank;
    std::set<std::vector<int>> roots;  // positive roots found so far
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(n, 0);
        a[i] = 1;
        roots.insert(a);
        frontier.push_back(a);
    }
    auto is_root = [&](const std::vector<int>& v) {
        bool nonneg = true, nonpos = true;
        for (int c : v) {
            if (c < 0) nonneg = false;
            if (c > 0) nonpos = false;
        }
        if (nonneg && !nonpos) return roots.count(v) > 0;
        if (nonpos && !nonneg) {
            std::vector<int> w(v);
            for (int& c : w) c = -c;
            return roots.count(w) > 0;
        }
        return false;
    };
    // Height-by-height closure: beta + a_i is a root iff the a_i-string
    // through beta extends upward, i.e. p - <beta, a_i^vee> >= 1 with
    // p = max k such that beta - k a_i is a root.
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < n; ++i) {
                long pairing = 0;
                for (int j = 0; j < n; ++j)
                    pairing += static_cast<long>(rs.cartan[i][j]) * beta[j];
                std::vector<int> down(beta);
                int p = 0;
                for (;;) {
                    down[i] -= 1;
                    if (!is_root(down)) break;
                    ++p;
                }
                if (p - pairing >= 1) {
                    std::vector<int> up(beta);
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }

    rs.positive_roots.assign(roots.begin(), roots.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                  long hx = 0, hy = 0;
                  for (int c : x) hx += c;
                  for (int c : y) hy += c;
                  if (hx != hy) return hx < hy;
                  return x < y;
              });
    if (static_cast<long>(rs.positive_roots.size()) !=
        expected_positive_root_count(t))
        throw std::logic_error("positive-root closure produced " +
                               std::to_string(rs.positive_roots.size()) +
                               " roots for " + t.str());
    return rs;
}

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
    const int n = rs.rank();
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("weight has wrong rank");
    for (int c : lambda)
        if (c < 0)
            throw std::invalid_argument(
                "weyl_dim requires a dominant integral weight");
    // (Lambda_i, a_j) = delta_ij d_j, so for a root a with simple-root
    // coordinates c_j: (lambda + rho, a) = sum_j (lambda_j + 1) d_j c_j.
    Rational prod = 1;
    for (const auto& alpha : rs.positive_roots) {
        Rational num = 0, den = 0;
        for (int j = 0; j < n; ++j) {
            if (alpha[j] == 0) continue;
            num += Rational(lambda[j] + 1) * rs.symmetrizer[j] * alpha[j];
            den += rs.symmetrizer[j] * alpha[j];
        }
        prod *= num / den;
    }
    if (denominator(prod) != 1)
        throw std::logic_error("Weyl product is not an integer");
    return numerator(prod);
}

}  // namespace parhol
