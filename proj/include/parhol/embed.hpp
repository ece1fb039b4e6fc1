#pragma once

#include "parhol/catalog.hpp"
#include "parhol/rootsys.hpp"

namespace parhol {

// N_deg: projective dimension of the deg-th canonical embedding, i.e.
// dim V(deg * Lambda_j) - 1 for the cominuscule weight of d.
Integer embedding_dim(const HSSDescriptor& d, int deg);

// N_1 - dim_c.
Integer first_codim(const HSSDescriptor& d);

// Closed-form codimension of the first canonical embedding:
//   AIII(a,b): C(a+b,b) - ab - 1
//   CI(n):     C(2n,n) - C(2n,n-2) - 1 - n(n+1)/2
//   DIII(n):   2^{n-1} - n(n-1)/2 - 1
//   Quadric:   1,  EIII: 10,  EVII: 28
// Evaluated per the entry's own presentation (alias presentations agree).
Integer closed_form_codim(const HSSDescriptor& d);

struct IneqReport {
    Integer n_deg;       // N_deg
    Integer codim;       // N_deg - dim_c
    Integer m;           // dim_c
    Integer n1;          // N_1
    bool star = false;        // codim > m(m+1)/2
    bool para0_weak = false;  // codim >= N_1(N_1+1)/2
    bool para0_equality = false;  // codim == N_1(N_1+1)/2 exactly
};

// Codimension inequalities for the deg-th embedding, deg >= 2.
IneqReport check_inequalities(const HSSDescriptor& d, int deg);

struct EmbeddingReport {
    HSSDescriptor space;
    int deg = 1;
    Integer n_deg;
    Integer codim;
};

EmbeddingReport embedding_report(const HSSDescriptor& d, int deg);

Integer binomial(int n, int k);

}  // namespace parhol
