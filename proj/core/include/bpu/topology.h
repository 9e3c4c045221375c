#pragma once

// Cohomology models used to test the restriction of classes from BPU(n).
//
// GammaModel(p, i) is F_p[xi_1, eta_1, ..., xi_i, eta_i] (x) Lambda[a_1, b_1, ...]
// with beta(a_j) = xi_j, beta(b_j) = eta_j and the unstable total powers
// P(xi) = xi + xi^p, P(a) = a.  The degree-3 class S = sum_j (xi_j b_j - eta_j a_j)
// plays the role of the image of the generator x of H^3(K(Z,3)), and the
// images of x_k = P^{p^k} ... P^1(x) and y_k = beta(x_k) follow by naturality.

#include "bpu/galgebra.h"
#include "bpu/report.h"
#include "bpu/steenrod.h"
#include "bpu/symfun.h"

#include <cstdint>
#include <map>
#include <vector>

namespace bpu {

struct GammaModel {
    std::int64_t p = 3;
    int blocks = 1;
    AlgebraPtr algebra;
    SteenrodAction action;
};

/// Shared per (p, blocks), so Milnor operation memos are reused across calls.
const GammaModel& gamma_model(std::int64_t p, int blocks = 1);

/// l * sum_j (xi_j b_j - eta_j a_j).
Element restrict_chi(const GammaModel& model, const Integer& l = 1);
Element restrict_chi(std::int64_t p, int blocks);

struct AlphaSummands {
    Element alpha1;  // P^1(S) (beta P^1(S))^(p-1) S
    Element alpha2;  // P^1(S) P^p P^1(S)
};

AlphaSummands alpha_summands(const GammaModel& model, const Integer& l = 1);
/// alpha1 + alpha2 evaluated on S = restrict_chi.
Element alpha_sum_image(std::int64_t p, int blocks);

/// Images of x, x_0, x_1, ... and y_0, y_1, ...
struct KZ3Images {
    Element xbar;
    std::vector<Element> x;     // x[k] = P^{p^k} x[k-1], x[0] = P^1(xbar)
    std::vector<Element> ybar;  // ybar[k] = beta(x[k])
};

KZ3Images kz3_images(const GammaModel& model, int kmax);

/// Z[eta]/(p eta) cut off above eta^bound: an integer constant term and F_p
/// coefficients on positive powers.
class EtaRing {
public:
    EtaRing(std::int64_t p, int bound);

    struct Element {
        Integer constant = 0;
        std::map<int, std::int64_t> powers;  // exponent -> coefficient in [0, p), no zeros

        friend bool operator==(const Element&, const Element&) = default;
    };

    std::int64_t prime() const { return p_; }
    int bound() const { return bound_; }

    Element constant(const Integer& c) const;
    /// c * eta^k, k >= 1.
    Element monomial(const Integer& c, int k) const;
    Element add(const Element& x, const Element& y) const;
    Element mul(const Element& x, const Element& y) const;
    std::string to_string(const Element& x) const;

private:
    std::int64_t p_;
    int bound_;
};

/// Image of delta = prod_{i != j} (t_i - t_j) in Z[eta]/(p eta) under
/// t_i -> i eta (so t_p -> 0).
EtaRing::Element theta_delta(std::int64_t p);
VerdictReport verify_theta(std::int64_t p);

/// Degree-2i components, i = 0..up_to, of (1 + sigma_1 + ... + sigma_p)^(n/p)
/// in Lambda_p over F_p, by repeated truncated multiplication.  Throws
/// PreconditionError unless p | n.
std::vector<bpu::Element> delta_star(std::int64_t p, int n, int up_to);
/// The same components from multinomial coefficients reduced by Lucas' theorem.
std::vector<bpu::Element> delta_star_multinomial(std::int64_t p, int n, int up_to);

VerdictReport check_delta_lemma(std::int64_t p, int n, int up_to);

/// beta(y) = s, beta(z) = f, beta(w) = e, P^1(s) = z, P^p(z) = w and
/// z (f^(p-1) s + w) = 0 in the one-block model.
VerdictReport verify_prop_s(std::int64_t p);

/// alpha1 + alpha2 vanishes on S; with one block also alpha1 = z f^(p-1) s and
/// alpha2 = z w; both summands scale by l^2 under S -> l S.
VerdictReport verify_main(std::int64_t p, int blocks);

/// Sampled checks that the SL_2(F_p) action commutes with beta and P^k
/// (k <= p) and is multiplicative, on random elements of degree <= max_degree.
VerdictReport verify_equivariance(std::int64_t p, std::uint64_t seed, int samples,
                                  int max_degree = 20);

/// Milnor operations on the images of x, x_j, y_j for i, j <= imax.
/// `samples` random products are also checked against the derivation rule.
VerdictReport verify_yagita(std::int64_t p, int imax, int blocks = 1, std::uint64_t seed = 0,
                            int samples = 0);

/// Q_i of lambda = y_0^p x + y_0 x_1 - x_0 y_1, both formally from the
/// Milnor-operation table and after restriction to the one-block model.
VerdictReport verify_lambda_formula(std::int64_t p, int imax);

}  // namespace bpu
