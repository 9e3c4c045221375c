#include "bpu/spectral.h"

#include "bpu/arith.h"
#include "bpu/symfun.h"

#include <map>
#include <mutex>

namespace bpu {

namespace {

void require_odd_prime(std::int64_t p, const char* who)
{
    if (!is_odd_prime(p))
        throw PreconditionError(std::string(who) + ": p must be an odd prime");
}

constexpr std::size_t kz3_size = 4;

Monomial base_part(const AlgebraDescriptor& kz3, const Monomial& m)
{
    auto e = m.exponents();
    return Monomial::from_exponents(kz3, {e.begin(), e.begin() + kz3_size});
}

Monomial fiber_part(const AlgebraDescriptor& lambda, const Monomial& m)
{
    auto e = m.exponents();
    return Monomial::from_exponents(lambda, {e.begin() + kz3_size, e.end()});
}

Monomial join(const AlgebraDescriptor& page, const Monomial& base, const Monomial& fiber)
{
    std::vector<std::uint32_t> e(base.exponents().begin(), base.exponents().end());
    e.insert(e.end(), fiber.exponents().begin(), fiber.exponents().end());
    return Monomial::from_exponents(page, std::move(e));
}

}  // namespace

AlgebraPtr kz3_algebra(std::int64_t p)
{
    require_odd_prime(p, "kz3_algebra");
    static std::mutex mutex;
    static std::map<std::int64_t, AlgebraPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[p];
    if (!slot)
        slot = make_algebra({{"x", 3, Parity::Odd},
                             {"y0", static_cast<int>(2 * p + 2), Parity::Even},
                             {"y1", static_cast<int>(2 * p * p + 2), Parity::Even},
                             {"y01", static_cast<int>(2 * p * p + 2 * p + 3), Parity::Odd}},
                            CoefficientRing::integers());
    return slot;
}

int kz3_bound(std::int64_t p)
{
    return static_cast<int>(2 * p * p + 2 * p + 3);
}

std::vector<Monomial> kz3_basis(std::int64_t p, int d)
{
    auto alg = kz3_algebra(p);
    if (d > kz3_bound(p))
        throw PreconditionError("kz3_basis: degree " + std::to_string(d) +
                                " is beyond the truncation bound " + std::to_string(kz3_bound(p)));
    return basis(*alg, d);
}

bool kz3_is_torsion(const Monomial& m)
{
    auto e = m.exponents();
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] != 0)
            return true;
    return false;
}

AlgebraPtr page_algebra(std::int64_t p, int n)
{
    require_odd_prime(p, "page_algebra");
    if (n < 1)
        throw PreconditionError("page_algebra: n must be positive");
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, int>, AlgebraPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{p, n}];
    if (!slot) {
        auto gens = kz3_algebra(p)->generators();
        for (int i = 1; i <= n; ++i)
            gens.push_back({"sigma" + std::to_string(i), 2 * i, Parity::Even});
        slot = make_algebra(std::move(gens), CoefficientRing::integers());
    }
    return slot;
}

PageSlice page_slice(std::int64_t p, int n, int s, int t)
{
    PageSlice slice{s, t, {}, !(s == 0 || s == 3)};
    if (s < 0 || t < 0 || t % 2 != 0)
        return slice;
    auto page = page_algebra(p, n);
    SymmetricFunctions sf(n, CoefficientRing::integers());
    for (const auto& b : kz3_basis(p, s))
        for (const auto& f : sf.basis(t / 2))
            slice.basis.push_back(join(*page, b, f));
    return slice;
}

LinearSlice d3_matrix(std::int64_t p, int n, int s, int t)
{
    if (s + 3 > kz3_bound(p))
        throw PreconditionError("d3_matrix: target base degree beyond the truncation bound");
    auto source = page_slice(p, n, s, t);
    auto target = page_slice(p, n, s + 3, t - 2);
    auto kz3 = kz3_algebra(p);
    auto page = page_algebra(p, n);
    SymmetricFunctions sf(n, CoefficientRing::integers());
    const Monomial x = Monomial::generator(*kz3, 0);

    std::map<Monomial, std::size_t> row_of;
    for (std::size_t i = 0; i < target.basis.size(); ++i)
        row_of.emplace(target.basis[i], i);

    LinearSlice out;
    out.source = source.basis;
    out.target = target.basis;
    out.ring = target.torsion ? CoefficientRing::prime_field(p) : CoefficientRing::integers();
    out.matrix = Matrix(target.basis.size(), source.basis.size());
    for (std::size_t j = 0; j < source.basis.size(); ++j) {
        Monomial base = base_part(*kz3, source.basis[j]);
        auto xb = multiply_monomials(*kz3, x, base);
        if (!xb)
            continue;
        Element grad = sf.nabla(Element::monomial(sf.algebra(), fiber_part(*sf.algebra(), source.basis[j])));
        for (const auto& [f, c] : grad.terms()) {
            auto it = row_of.find(join(*page, xb->first, f));
            if (it == row_of.end())
                throw Error("d3_matrix: image outside the target slice");
            out.matrix.at(it->second, j) += c * xb->second;
        }
    }
    out.matrix = out.matrix.reduced(out.ring);
    return out;
}

std::size_t e4_rank(std::int64_t p, int n, int s, int t)
{
    require_odd_prime(p, "e4_rank");
    if (s + 3 > kz3_bound(p))
        throw PreconditionError("e4_rank: (s, t) outside the truncated region");
    auto here = page_slice(p, n, s, t);
    if (here.basis.empty())
        return 0;
    auto outgoing = d3_matrix(p, n, s, t);
    std::optional<LinearSlice> incoming;
    if (s >= 3)
        incoming = d3_matrix(p, n, s - 3, t + 2);

    if (here.torsion) {
        std::size_t r = rank_mod_p(outgoing.matrix, p);
        if (incoming)
            r += rank_mod_p(incoming->matrix, p);
        return here.basis.size() - r;
    }

    if (outgoing.ring.is_field() && !outgoing.matrix.is_zero())
        throw Error("e4_rank: a Z row maps nontrivially into torsion rows");
    std::vector<Vector> kernel = outgoing.ring.is_field()
                                     ? integer_kernel(Matrix(0, here.basis.size()))
                                     : integer_kernel(outgoing.matrix);
    if (!incoming || incoming->matrix.cols() == 0)
        return kernel.size();
    std::vector<Vector> coordinates;
    for (std::size_t j = 0; j < incoming->matrix.cols(); ++j) {
        auto c = lattice_coordinates(kernel, incoming->matrix.column(j));
        if (!c)
            throw Error("e4_rank: image of d3 is not inside the kernel of d3");
        coordinates.push_back(std::move(*c));
    }
    return kernel.size() - rank_mod_p(Matrix::from_columns(kernel.size(), coordinates), p);
}

VerdictReport verify_e4_identities(std::int64_t p, int n, int kmax)
{
    nlohmann::json params{{"p", p}, {"n", n}, {"kmax", kmax}};
    if (!is_odd_prime(p))
        return precondition_failure("e4-identities", params, "p must be an odd prime");
    if (n < 1 || kmax < 0)
        return precondition_failure("e4-identities", params, "n >= 1 and kmax >= 0 required");
    VerdictReport r;
    r.check = "e4-identities";
    r.params = params;
    const int y0 = static_cast<int>(2 * p + 2);

    for (int k = 0; k <= kmax; ++k) {
        const int t = 2 * k;
        std::size_t e0 = e4_rank(p, n, 0, t), kk = kernel_K(n, k).size();
        std::size_t e3 = e4_rank(p, n, 3, t), ck = coker_dim(p, n, k + 1);
        std::size_t ey = e4_rank(p, n, y0, t), ll = kernel_L(p, n, k).size();
        r.expect(e0 == kk && e3 == ck && ey == ll, {{"k", k},
                                                    {"E4_0", e0},
                                                    {"K_rank", kk},
                                                    {"E4_3", e3},
                                                    {"coker_dim", ck},
                                                    {"E4_y0", ey},
                                                    {"L_dim", ll}});
    }

    std::size_t pairs = 0;
    const int bound = kz3_bound(p);
    for (int s = 0; s + 6 <= bound; ++s)
        for (int t = 4; t <= 2 * kmax + 4; t += 2) {
            auto first = d3_matrix(p, n, s, t);
            auto second = d3_matrix(p, n, s + 3, t - 2);
            if (first.source.empty() || second.target.empty())
                continue;
            ++pairs;
            Matrix composite = (second.matrix * first.matrix).reduced(second.ring);
            if (!composite.is_zero())
                r.fail({{"d3_squared_nonzero", {{"s", s}, {"t", t}}}});
        }
    r.details.push_back({{"composable_pairs_checked", pairs}});
    return r;
}

}  // namespace bpu
