#pragma once

// Steenrod operations on an algebra presented by generators.
//
// The Bockstein is the degree +1 derivation extending its generator images;
// the total power P = P^0 + P^1 + ... is the ring homomorphism extending its
// generator images, and P^k is the degree |e| + 2k(p-1) part of P(e).  Milnor
// operations follow the inductive definition
//
//     Q_0 = beta,   Q_{i+1} = P^{p^i} Q_i - Q_i P^{p^i}.

#include "bpu/galgebra.h"

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

namespace bpu {

/// The odd-degree derivation D extending images[i] = D(generator i), with
/// D(xy) = D(x)y + (-1)^{|x|} x D(y).
Element apply_odd_derivation(const AlgebraPtr& alg, std::span<const Element> images,
                             const Element& e);

class SteenrodAction {
public:
    /// One image per generator, in descriptor order.  Throws Error when an
    /// image violates the degree or instability constraints.
    SteenrodAction(AlgebraPtr alg, std::vector<Element> beta_images,
                   std::vector<Element> total_power_images);

    const AlgebraPtr& algebra() const { return alg_; }
    std::int64_t prime() const { return p_; }
    const std::vector<Element>& beta_images() const { return beta_; }
    const std::vector<Element>& total_power_images() const { return power_; }

    Element bockstein(const Element& e) const;
    Element total_power(const Element& e) const;
    /// total_power(e) with every term of degree above max_degree discarded.
    Element total_power_truncated(const Element& e, int max_degree) const;
    /// P^k(e) for homogeneous e; throws Error otherwise.  P^k(0) = 0.
    Element power(std::int64_t k, const Element& e) const;
    /// Q_i(e), applied termwise (so non-homogeneous inputs act per component).
    Element milnor_Q(int i, const Element& e) const;

private:
    void require_member(const Element& e) const;
    Element milnor_Q_monomial(int i, const Monomial& m) const;

    struct QCache {
        std::shared_mutex mutex;
        std::map<std::pair<int, Monomial>, Element> values;
    };

    AlgebraPtr alg_;
    std::int64_t p_;
    std::vector<Element> beta_;
    std::vector<Element> power_;
    std::shared_ptr<QCache> qcache_;
};

}  // namespace bpu
