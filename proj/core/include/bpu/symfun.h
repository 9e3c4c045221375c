#pragma once

// Symmetric functions Lambda_n = R[sigma_1, ..., sigma_n], |sigma_i| = 2i, and
// the derivation nabla = sum_i d/dt_i restricted to them:
//
//     nabla(sigma_k) = (n - k + 1) sigma_{k-1},   sigma_0 = 1.
//
// Graded pieces are indexed by half-degree k (Lambda_n^{2k}).

#include "bpu/galgebra.h"
#include "bpu/linalg.h"
#include "bpu/report.h"

#include <cstdint>
#include <vector>

namespace bpu {

class SymmetricFunctions {
public:
    SymmetricFunctions(int n, CoefficientRing ring);

    int rank() const { return n_; }
    const CoefficientRing& ring() const { return lambda_->ring(); }
    /// R[sigma_1, ..., sigma_n], generators named "sigma1", "sigma2", ...
    const AlgebraPtr& algebra() const { return lambda_; }
    /// R[t_1, ..., t_n], |t_i| = 2.
    const AlgebraPtr& t_algebra() const { return t_; }

    /// sigma_0 = 1 and sigma_i = 0 for i > n.
    Element sigma(int i) const;
    std::vector<Monomial> basis(int k) const;

    Element nabla(const Element& f) const;
    /// Substitutes sigma_i by the i-th elementary symmetric polynomial in t.
    Element expand_in_t(const Element& f) const;
    Element elementary_in_t(int i) const;

    /// Matrix of nabla: Lambda_n^{2k} -> Lambda_n^{2k-2} in graded-lex bases.
    LinearSlice nabla_matrix(int k) const;

private:
    void require_member(const Element& f) const;

    int n_;
    AlgebraPtr lambda_;
    AlgebraPtr t_;
};

LinearSlice nabla_matrix(int n, int k, CoefficientRing ring);

/// Z-basis (row Hermite normal form) of ker(nabla) in Lambda_n^{2k}.
std::vector<Element> kernel_K(int n, int k);

/// F_p-basis in reduced row-echelon form of ker(nabla mod p) in Lambda_n^{2k}.
std::vector<Element> kernel_L(std::int64_t p, int n, int k);

/// dim_{F_p} Lambda_n^{2k-2} / nabla(Lambda_n^{2k}) mod p.
std::size_t coker_dim(std::int64_t p, int n, int k);

/// nabla mod p from Lambda_n^{2p} onto Lambda_n^{2p-2}, for p | n.
VerdictReport check_nabla_onto_2p(std::int64_t p, int n);

/// In degree 2p^2 with p | n: every monomial of an echelon basis vector of L_n
/// that only involves sigma_p, sigma_2p, ... is sigma_p^p.
VerdictReport check_Ln_lemma(std::int64_t p, int n);

}  // namespace bpu
