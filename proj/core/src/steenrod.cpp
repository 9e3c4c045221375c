#include "bpu/steenrod.h"

#include "bpu/arith.h"

#include <mutex>

namespace bpu {

Element apply_odd_derivation(const AlgebraPtr& alg, std::span<const Element> images,
                             const Element& e)
{
    const std::size_t n = alg->size();
    if (images.size() != n)
        throw Error("apply_odd_derivation: need one image per generator");
    Element out(alg);
    for (const auto& [m, c] : e.terms()) {
        int left_degree = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t k = m.exponent(j);
            if (k == 0)
                continue;
            if (!images[j].is_zero()) {
                std::vector<std::uint32_t> left(n, 0), right(n, 0), mid(n, 0);
                for (std::size_t i = 0; i < j; ++i)
                    left[i] = m.exponent(i);
                for (std::size_t i = j + 1; i < n; ++i)
                    right[i] = m.exponent(i);
                mid[j] = k - 1;
                // D(g^k) = k g^(k-1) D(g) for polynomial g; k = 1 otherwise
                Element term = Element::monomial(alg, Monomial::from_exponents(*alg, left),
                                                 (left_degree % 2 ? -c : c));
                term = term * Element::monomial(alg, Monomial::from_exponents(*alg, mid),
                                                static_cast<std::int64_t>(k));
                term = term * images[j];
                term = term * Element::monomial(alg, Monomial::from_exponents(*alg, right));
                out += term;
            }
            left_degree += static_cast<int>(k) * alg->degree(j);
        }
    }
    return out;
}

SteenrodAction::SteenrodAction(AlgebraPtr alg, std::vector<Element> beta_images,
                               std::vector<Element> total_power_images)
    : alg_(std::move(alg)),
      p_(alg_->ring().characteristic()),
      beta_(std::move(beta_images)),
      power_(std::move(total_power_images)),
      qcache_(std::make_shared<QCache>())
{
    if (!is_odd_prime(p_))
        throw Error("SteenrodAction: coefficients must be F_p with p an odd prime");
    if (beta_.size() != alg_->size() || power_.size() != alg_->size())
        throw Error("SteenrodAction: need one image per generator");
    for (std::size_t i = 0; i < alg_->size(); ++i) {
        const std::string& name = alg_->name(i);
        const int d = alg_->degree(i);
        if (!(*beta_[i].algebra() == *alg_) || !(*power_[i].algebra() == *alg_))
            throw Error("SteenrodAction: image of '" + name + "' lives in another algebra");
        if (!beta_[i].is_zero() && beta_[i].homogeneous_degree() != d + 1)
            throw Error("SteenrodAction: beta(" + name + ") must be homogeneous of degree " +
                        std::to_string(d + 1));
        for (const auto& [m, c] : power_[i].terms()) {
            int excess = m.degree() - d;
            if (excess < 0 || excess % (2 * (p_ - 1)) != 0)
                throw Error("SteenrodAction: P(" + name + ") has a term in degree " +
                            std::to_string(m.degree()));
        }
        Element g = Element::generator(alg_, i);
        if (!(homogeneous_component(power_[i], d) == g))
            throw Error("SteenrodAction: P^0(" + name + ") must be the identity");
        if (d == 1 && !(power_[i] == g))
            throw Error("SteenrodAction: instability requires P(" + name + ") = " + name);
        if (d == 2 && !(power_[i] == g + pow(g, static_cast<std::uint64_t>(p_))))
            throw Error("SteenrodAction: instability requires P(" + name + ") = " + name + " + " +
                        name + "^p");
    }
}

void SteenrodAction::require_member(const Element& e) const
{
    if (!(*e.algebra() == *alg_))
        throw Error("SteenrodAction: element lives in another algebra");
}

Element SteenrodAction::bockstein(const Element& e) const
{
    require_member(e);
    return apply_odd_derivation(alg_, beta_, e);
}

Element SteenrodAction::total_power(const Element& e) const
{
    require_member(e);
    return substitute(e, alg_, power_);
}

Element SteenrodAction::total_power_truncated(const Element& e, int max_degree) const
{
    require_member(e);
    return substitute(e, alg_, power_, max_degree);
}

Element SteenrodAction::power(std::int64_t k, const Element& e) const
{
    require_member(e);
    if (k < 0)
        throw Error("power: negative index");
    if (e.is_zero())
        return e;
    auto d = e.homogeneous_degree();
    if (!d)
        throw Error("power: input is not homogeneous");
    if (k == 0)
        return e;
    const std::int64_t target = *d + 2 * k * (p_ - 1);
    return homogeneous_component(total_power_truncated(e, static_cast<int>(target)),
                                 static_cast<int>(target));
}

Element SteenrodAction::milnor_Q(int i, const Element& e) const
{
    require_member(e);
    if (i < 0)
        throw Error("milnor_Q: negative index");
    Element out(alg_);
    for (const auto& [m, c] : e.terms())
        out += c * milnor_Q_monomial(i, m);
    return out;
}

Element SteenrodAction::milnor_Q_monomial(int i, const Monomial& m) const
{
    const auto key = std::make_pair(i, m);
    {
        std::shared_lock lock(qcache_->mutex);
        auto it = qcache_->values.find(key);
        if (it != qcache_->values.end())
            return it->second;
    }
    Element x = Element::monomial(alg_, m);
    Element result(alg_);
    if (i == 0) {
        result = bockstein(x);
    }
    else {
        const std::int64_t q = int_pow(p_, static_cast<unsigned>(i - 1));
        result = power(q, milnor_Q(i - 1, x)) - milnor_Q(i - 1, power(q, x));
    }
    std::unique_lock lock(qcache_->mutex);
    qcache_->values.emplace(key, result);
    return result;
}

}  // namespace bpu
