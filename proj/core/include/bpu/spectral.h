#pragma once

// The E_3 page of the Serre spectral sequence of BU(n) -> BPU(n) -> K(Z,3),
// localized at p, in total degrees where H*(K(Z,3)) is
//
//     Z[x, y0, y1, y01] / (x^2, p y0, p y1, p y01),
//     |x| = 3, |y0| = 2p+2, |y1| = 2p^2+2, |y01| = 2p^2+2p+3,
//
// i.e. up to degree 2p^2+2p+3.  E_3^{s,t} = H^s(K(Z,3)) (x) Lambda_n^t and
// d_3(f xi) = nabla(f) x xi.  Bases are monomials of the page algebra, which
// has the K(Z,3) generators followed by sigma1..sigman.

#include "bpu/galgebra.h"
#include "bpu/linalg.h"
#include "bpu/report.h"

#include <cstdint>
#include <vector>

namespace bpu {

/// x, y0, y1, y01 over Z.
AlgebraPtr kz3_algebra(std::int64_t p);
int kz3_bound(std::int64_t p);

/// Monomials of degree d; throws PreconditionError above kz3_bound(p).
std::vector<Monomial> kz3_basis(std::int64_t p, int d);

/// Every monomial other than 1 and x is p-torsion.
bool kz3_is_torsion(const Monomial& m);

/// kz3_algebra generators followed by sigma1..sigman, over Z.
AlgebraPtr page_algebra(std::int64_t p, int n);

struct PageSlice {
    int s = 0;
    int t = 0;
    std::vector<Monomial> basis;  // page_algebra monomials, base part outer
    bool torsion = false;         // F_p rows; otherwise Z rows
};

PageSlice page_slice(std::int64_t p, int n, int s, int t);

/// d_3 : E_3^{s,t} -> E_3^{s+3,t-2} in page_slice bases.  Entries are reduced
/// mod p (ring F_p) when the target rows are torsion.
LinearSlice d3_matrix(std::int64_t p, int n, int s, int t);

/// dim E_4^{s,t}: over F_p for torsion rows; for the Z rows the number of
/// generators of the p-local group, dim_{F_p}(E_4^{s,t} (x) F_p).
std::size_t e4_rank(std::int64_t p, int n, int s, int t);

VerdictReport verify_e4_identities(std::int64_t p, int n, int kmax);

}  // namespace bpu
