#include "bpu/symfun.h"

#include "bpu/arith.h"

#include <algorithm>

namespace bpu {

SymmetricFunctions::SymmetricFunctions(int n, CoefficientRing ring) : n_(n)
{
    if (n < 1)
        throw Error("SymmetricFunctions: rank must be >= 1");
    std::vector<GeneratorSpec> sig, ts;
    for (int i = 1; i <= n; ++i) {
        sig.push_back({"sigma" + std::to_string(i), 2 * i, Parity::Even});
        ts.push_back({"t" + std::to_string(i), 2, Parity::Even});
    }
    lambda_ = make_algebra(std::move(sig), ring);
    t_ = make_algebra(std::move(ts), ring);
}

Element SymmetricFunctions::sigma(int i) const
{
    if (i == 0)
        return Element::constant(lambda_, 1);
    if (i < 0 || i > n_)
        return Element(lambda_);
    return Element::generator(lambda_, static_cast<std::size_t>(i - 1));
}

std::vector<Monomial> SymmetricFunctions::basis(int k) const
{
    return bpu::basis(*lambda_, 2 * k);
}

void SymmetricFunctions::require_member(const Element& f) const
{
    if (!(*f.algebra() == *lambda_))
        throw Error("SymmetricFunctions: element is not in Lambda_" + std::to_string(n_));
}

Element SymmetricFunctions::nabla(const Element& f) const
{
    require_member(f);
    Element out(lambda_);
    for (const auto& [m, c] : f.terms()) {
        auto exps = m.exponents();
        for (int i = 1; i <= n_; ++i) {
            std::uint32_t e = exps[i - 1];
            if (e == 0)
                continue;
            std::vector<std::uint32_t> v(exps.begin(), exps.end());
            v[i - 1] -= 1;
            if (i > 1)
                v[i - 2] += 1;
            out.add_term(Monomial::from_exponents(*lambda_, std::move(v)),
                         c * static_cast<std::int64_t>(e) * (n_ - i + 1));
        }
    }
    return out;
}

Element SymmetricFunctions::elementary_in_t(int i) const
{
    if (i == 0)
        return Element::constant(t_, 1);
    Element e(t_);
    if (i < 0 || i > n_)
        return e;
    // one term per i-subset of {t_1, ..., t_n}
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n_), 0);
    std::fill(v.begin(), v.begin() + i, 1u);
    do {
        e.add_term(Monomial::from_exponents(*t_, v), 1);
    } while (std::prev_permutation(v.begin(), v.end()));
    return e;
}

Element SymmetricFunctions::expand_in_t(const Element& f) const
{
    require_member(f);
    std::vector<Element> images;
    for (int i = 1; i <= n_; ++i)
        images.push_back(elementary_in_t(i));
    return substitute(f, t_, images);
}

LinearSlice SymmetricFunctions::nabla_matrix(int k) const
{
    LinearSlice s;
    s.ring = ring();
    s.source = basis(k);
    s.target = basis(k - 1);
    std::vector<Vector> cols;
    for (const auto& m : s.source)
        cols.push_back(coords(nabla(Element::monomial(lambda_, m)), 2 * k - 2));
    s.matrix = Matrix::from_columns(s.target.size(), cols);
    return s;
}

LinearSlice nabla_matrix(int n, int k, CoefficientRing ring)
{
    return SymmetricFunctions(n, ring).nabla_matrix(k);
}

std::vector<Element> kernel_K(int n, int k)
{
    SymmetricFunctions sf(n, CoefficientRing::integers());
    auto slice = sf.nabla_matrix(k);
    std::vector<Element> out;
    for (const auto& v : integer_kernel(slice.matrix))
        out.push_back(from_coords(sf.algebra(), slice.source, v));
    return out;
}

std::vector<Element> kernel_L(std::int64_t p, int n, int k)
{
    SymmetricFunctions sf(n, CoefficientRing::prime_field(p));
    auto slice = sf.nabla_matrix(k);
    std::vector<Element> out;
    for (const auto& v : nullspace_mod_p(slice.matrix, p))
        out.push_back(from_coords(sf.algebra(), slice.source, v));
    return out;
}

std::size_t coker_dim(std::int64_t p, int n, int k)
{
    auto slice = nabla_matrix(n, k, CoefficientRing::prime_field(p));
    return slice.target.size() - rank_mod_p(slice.matrix, p);
}

VerdictReport check_nabla_onto_2p(std::int64_t p, int n)
{
    nlohmann::json params{{"p", p}, {"n", n}};
    if (!is_odd_prime(p))
        return precondition_failure("nabla-onto-2p", params, "p must be an odd prime");
    if (n < 1 || n % p != 0)
        return precondition_failure("nabla-onto-2p", params, "p must divide n");
    VerdictReport r;
    r.check = "nabla-onto-2p";
    r.params = params;
    auto slice = nabla_matrix(n, static_cast<int>(p), CoefficientRing::prime_field(p));
    std::size_t rank = rank_mod_p(slice.matrix, p);
    r.expect(rank == slice.target.size(), {{"source_dim", slice.source.size()},
                                           {"target_dim", slice.target.size()},
                                           {"rank_mod_p", rank}});
    return r;
}

VerdictReport check_Ln_lemma(std::int64_t p, int n)
{
    nlohmann::json params{{"p", p}, {"n", n}, {"degree", 2 * p * p}};
    if (!is_odd_prime(p))
        return precondition_failure("ln-lemma", params, "p must be an odd prime");
    if (n < 1 || n % p != 0)
        return precondition_failure("ln-lemma", params, "p must divide n");
    VerdictReport r;
    r.check = "ln-lemma";
    r.params = params;

    const int k = static_cast<int>(p * p);
    auto basis_vectors = kernel_L(p, n, k);
    SymmetricFunctions sf(n, CoefficientRing::prime_field(p));
    const Monomial sigma_p_to_p =
        pow(sf.sigma(static_cast<int>(p)), static_cast<std::uint64_t>(p)).terms().begin()->first;

    std::size_t with_sigma_p_p = 0;
    for (const auto& v : basis_vectors) {
        for (const auto& [m, c] : v.terms()) {
            bool concentrated = true;
            for (std::size_t i = 0; i < m.exponents().size(); ++i)
                if (m.exponent(i) != 0 && (i + 1) % static_cast<std::size_t>(p) != 0)
                    concentrated = false;
            if (!concentrated)
                continue;
            if (m == sigma_p_to_p) {
                ++with_sigma_p_p;
                continue;
            }
            Element bad = Element::monomial(sf.algebra(), m);
            r.fail({{"kernel_vector", v.to_string()}, {"offending_monomial", bad.to_string()}});
        }
    }
    r.details.push_back({{"kernel_dim", basis_vectors.size()},
                         {"lambda_dim", sf.basis(k).size()},
                         {"vectors_containing_sigma_p_pow_p", with_sigma_p_p}});
    return r;
}

}  // namespace bpu
