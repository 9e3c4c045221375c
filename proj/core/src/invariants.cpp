#include "bpu/invariants.h"

#include "bpu/arith.h"
#include "bpu/linalg.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace bpu {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t p)
{
    x %= p;
    return x < 0 ? x + p : x;
}

Mat2 reduce(const Mat2& x, std::int64_t p)
{
    return {mod(x[0], p), mod(x[1], p), mod(x[2], p), mod(x[3], p)};
}

void require_odd_prime(std::int64_t p, const char* who)
{
    if (!is_odd_prime(p))
        throw PreconditionError(std::string(who) + ": p must be an odd prime");
}

}  // namespace

Mat2 mat_mul(const Mat2& x, const Mat2& y, std::int64_t p)
{
    return reduce({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                   x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]},
                  p);
}

std::int64_t mat_det(const Mat2& x, std::int64_t p)
{
    return mod(x[0] * x[3] - x[1] * x[2], p);
}

Mat2 mat_inverse(const Mat2& x, std::int64_t p)
{
    std::int64_t det = mat_det(x, p);
    if (det == 0)
        throw Error("mat_inverse: singular matrix");
    std::int64_t inv =
        CoefficientRing::prime_field(p).inverse(det).convert_to<std::int64_t>();
    return reduce({x[3] * inv, -x[1] * inv, -x[2] * inv, x[0] * inv}, p);
}

Mat2 mat_identity()
{
    return {1, 0, 0, 1};
}

AlgebraPtr gamma_algebra(std::int64_t p, int blocks)
{
    if (blocks < 1)
        throw Error("gamma_algebra: need at least one block");
    // shared descriptors keep element operations on the pointer fast path
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, int>, AlgebraPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{p, blocks}];
    if (slot)
        return slot;
    auto suffix = [&](int j) { return blocks == 1 ? std::string() : std::to_string(j + 1); };
    std::vector<GeneratorSpec> gens;
    for (int j = 0; j < blocks; ++j) {
        gens.push_back({"xi" + suffix(j), 2, Parity::Even});
        gens.push_back({"eta" + suffix(j), 2, Parity::Even});
    }
    for (int j = 0; j < blocks; ++j) {
        gens.push_back({"a" + suffix(j), 1, Parity::Odd});
        gens.push_back({"b" + suffix(j), 1, Parity::Odd});
    }
    slot = make_algebra(std::move(gens), CoefficientRing::prime_field(p));
    return slot;
}

std::vector<Mat2> generate_group(std::int64_t p, const std::vector<Mat2>& gens)
{
    std::vector<Mat2> seeds;
    for (const auto& g : gens) {
        Mat2 r = reduce(g, p);
        if (mat_det(r, p) == 0)
            throw Error("generate_group: generator is not invertible");
        seeds.push_back(r);
    }
    std::set<Mat2> seen{mat_identity()};
    std::vector<Mat2> frontier{mat_identity()};
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const auto& x : frontier)
            for (const auto& g : seeds) {
                Mat2 y = mat_mul(x, g, p);
                if (seen.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Mat2> sl2_generators(std::int64_t p)
{
    return {reduce({1, 1, 0, 1}, p), reduce({0, -1, 1, 0}, p)};
}

GroupAction sl2_action(std::int64_t p, int blocks)
{
    require_odd_prime(p, "sl2_action");
    return {p, gamma_algebra(p, blocks), sl2_generators(p), true};
}

Element act_blocks(const std::vector<Mat2>& per_block, const Element& e)
{
    const auto& alg = e.algebra();
    const std::size_t blocks = alg->size() / 4;
    if (alg->size() != 4 * blocks || per_block.size() != blocks)
        throw Error("act: matrix count does not match the number of blocks");
    const std::int64_t p = alg->ring().characteristic();
    std::vector<Element> images(alg->size(), Element(alg));
    for (std::size_t j = 0; j < blocks; ++j) {
        const Mat2& g = per_block[j];
        for (std::size_t offset : {2 * j, 2 * blocks + 2 * j}) {
            Element first = Element::generator(alg, offset);
            Element second = Element::generator(alg, offset + 1);
            images[offset] = Integer(mod(g[0], p)) * first + Integer(mod(g[2], p)) * second;
            images[offset + 1] = Integer(mod(g[1], p)) * first + Integer(mod(g[3], p)) * second;
        }
    }
    return substitute(e, alg, images);
}

Element act(const Mat2& g, const Element& e)
{
    return act_blocks(std::vector<Mat2>(e.algebra()->size() / 4, g), e);
}

namespace {

std::vector<Element> elements_from_rows(const AlgebraPtr& alg, const std::vector<Monomial>& b,
                                        const std::vector<Vector>& rows)
{
    std::vector<Element> out;
    for (const auto& v : rows)
        out.push_back(from_coords(alg, b, v));
    return out;
}

}  // namespace

InvariantBasis invariant_subspace(const GroupAction& action, int d)
{
    InvariantBasis result{d, {}};
    auto b = basis(*action.algebra, d);
    if (b.empty())
        return result;
    Matrix stacked;
    for (const auto& g : action.generators) {
        std::vector<Vector> cols;
        for (const auto& m : b) {
            Element x = Element::monomial(action.algebra, m);
            cols.push_back(coords(act(g, x) - x, d));
        }
        stacked = stacked.stacked(Matrix::from_columns(b.size(), cols));
    }
    if (stacked.rows() == 0)
        stacked = Matrix(0, b.size());
    result.basis = elements_from_rows(action.algebra, b, nullspace_mod_p(stacked, action.p));
    return result;
}

std::size_t span_rank(const std::vector<Element>& elems, int d)
{
    if (elems.empty())
        return 0;
    const auto& alg = elems.front().algebra();
    std::vector<Vector> rows;
    for (const auto& e : elems)
        rows.push_back(coords(e, d));
    return rank_mod_p(Matrix::from_rows(basis(*alg, d).size(), rows),
                      alg->ring().characteristic());
}

std::vector<Element> fixed_subspace(const GroupAction& action, const std::vector<Element>& spanning,
                                    int d)
{
    const auto& alg = action.algebra;
    auto b = basis(*alg, d);
    if (spanning.empty() || b.empty())
        return {};
    // independent spanning set first
    std::vector<Vector> rows;
    for (const auto& e : spanning)
        rows.push_back(coords(e, d));
    auto echelon = rref_mod_p(Matrix::from_rows(b.size(), rows), action.p);
    std::vector<Element> span;
    for (std::size_t i = 0; i < echelon.matrix.rows(); ++i)
        span.push_back(from_coords(alg, b, echelon.matrix.row(i)));
    if (span.empty())
        return {};

    Matrix stacked;
    for (const auto& g : action.generators) {
        std::vector<Vector> cols;
        for (const auto& v : span)
            cols.push_back(coords(act(g, v) - v, d));
        stacked = stacked.stacked(Matrix::from_columns(b.size(), cols));
    }
    std::vector<Vector> fixed_rows;
    for (const auto& c : nullspace_mod_p(stacked, action.p)) {
        Element x(alg);
        for (std::size_t j = 0; j < span.size(); ++j)
            x += c[j] * span[j];
        fixed_rows.push_back(coords(x, d));
    }
    if (fixed_rows.empty())
        return {};
    auto fixed = rref_mod_p(Matrix::from_rows(b.size(), fixed_rows), action.p);
    std::vector<Element> out;
    for (std::size_t i = 0; i < fixed.matrix.rows(); ++i)
        out.push_back(from_coords(alg, b, fixed.matrix.row(i)));
    return out;
}

DicksonElements dickson_elements(std::int64_t p, int blocks, int block)
{
    require_odd_prime(p, "dickson_elements");
    auto alg = gamma_algebra(p, blocks);
    Element xi = Element::generator(alg, static_cast<std::size_t>(2 * block));
    Element eta = Element::generator(alg, static_cast<std::size_t>(2 * block + 1));
    const auto up = static_cast<std::uint64_t>(p);
    Element f = pow(xi, up) * eta - pow(eta, up) * xi;
    Element h = pow(xi, up * up - up) + pow(eta, up - 1) * pow(pow(xi, up - 1) - pow(eta, up - 1), up - 1);
    return {f, h};
}

MuiElements mui_elements(std::int64_t p, int blocks, int block)
{
    require_odd_prime(p, "mui_elements");
    auto alg = gamma_algebra(p, blocks);
    const auto j = static_cast<std::size_t>(block);
    const auto B = static_cast<std::size_t>(blocks);
    Element xi = Element::generator(alg, 2 * j);
    Element eta = Element::generator(alg, 2 * j + 1);
    Element a = Element::generator(alg, 2 * B + 2 * j);
    Element b = Element::generator(alg, 2 * B + 2 * j + 1);
    const auto up = static_cast<std::uint64_t>(p);
    MuiElements m{xi * b - eta * a, a * b, pow(xi, up) * b - pow(eta, up) * a,
                  pow(xi, up * up) * b - pow(eta, up * up) * a,
                  pow(xi, up * up) * eta - pow(eta, up * up) * xi};
    return m;
}

std::vector<Element> mui_products(std::int64_t p, int d)
{
    auto [f, h] = dickson_elements(p);
    auto m = mui_elements(p);
    const int df = static_cast<int>(2 * p + 2), dh = static_cast<int>(2 * p * p - 2 * p);
    const int ds = 3, dy = 2, dz = static_cast<int>(2 * p + 1);
    std::vector<Element> out;
    for (int e1 = 0; e1 <= 1; ++e1)
        for (int e2 = 0; e2 <= 1; ++e2)
            for (int e3 = 0; e3 <= 1; ++e3) {
                int rest = d - e1 * ds - e2 * dy - e3 * dz;
                for (int a = 0; a * df <= rest; ++a) {
                    int r2 = rest - a * df;
                    if (r2 % dh != 0)
                        continue;
                    int b = r2 / dh;
                    Element x = pow(f, static_cast<std::uint64_t>(a)) *
                                pow(h, static_cast<std::uint64_t>(b));
                    if (e1)
                        x *= m.s;
                    if (e2)
                        x *= m.y;
                    if (e3)
                        x *= m.z;
                    out.push_back(std::move(x));
                }
            }
    return out;
}

VerdictReport verify_mui_presentation(std::int64_t p, int max_degree)
{
    nlohmann::json params{{"p", p}, {"max_degree", max_degree}};
    if (!is_odd_prime(p))
        return precondition_failure("mui-presentation", params, "p must be an odd prime");
    if (max_degree < 2 * p * p - 2 * p)
        return precondition_failure("mui-presentation", params,
                                    "max_degree must be at least 2p^2 - 2p");
    VerdictReport r;
    r.check = "mui-presentation";
    r.params = params;

    auto action = sl2_action(p);
    auto group = generate_group(p, action.generators);
    auto [f, h] = dickson_elements(p);
    auto m = mui_elements(p);
    const std::vector<std::pair<std::string, Element>> named{
        {"f", f}, {"h", h}, {"s", m.s}, {"y", m.y}, {"z", m.z}};

    std::size_t invariant_checks = 0;
    for (const auto& [name, x] : named)
        for (const auto& g : group) {
            ++invariant_checks;
            if (!(act(g, x) == x))
                r.fail({{"non_invariant", name},
                        {"matrix", {g[0], g[1], g[2], g[3]}},
                        {"image", act(g, x).to_string()}});
        }
    r.details.push_back({{"group_order", group.size()}, {"invariance_checks", invariant_checks}});

    const std::vector<std::pair<std::string, Element>> relations{
        {"ys", m.y * m.s}, {"yz", m.y * m.z}, {"fy+sz", f * m.y + m.s * m.z}};
    for (const auto& [name, value] : relations)
        r.expect(value.is_zero(), {{"relation", name}, {"value", value.to_string()}});

    for (int d = 0; d <= max_degree; ++d) {
        auto inv = invariant_subspace(action, d);
        auto products = mui_products(p, d);
        std::size_t product_rank = span_rank(products, d);
        auto together = inv.basis;
        together.insert(together.end(), products.begin(), products.end());
        std::size_t joint_rank = span_rank(together, d);
        r.expect(inv.basis.size() == product_rank && joint_rank == inv.basis.size(),
                 {{"degree", d},
                  {"invariant_dim", inv.basis.size()},
                  {"product_span_dim", product_rank},
                  {"joint_dim", joint_rank}});
    }
    return r;
}

VerdictReport verify_vistoli_integral(std::int64_t p, int max_degree)
{
    nlohmann::json params{{"p", p}, {"max_degree", max_degree}};
    if (!is_odd_prime(p))
        return precondition_failure("vistoli-integral", params, "p must be an odd prime");
    VerdictReport r;
    r.check = "vistoli-integral";
    r.params = params;

    auto action = sl2_action(p);
    auto alg = action.algebra;
    auto [f, h] = dickson_elements(p);
    Element s = mui_elements(p).s;
    Element xi = Element::generator(alg, "xi"), eta = Element::generator(alg, "eta");
    const int df = static_cast<int>(2 * p + 2), dh = static_cast<int>(2 * p * p - 2 * p);

    auto polynomials = [&](int deg) {
        std::vector<Element> out;
        if (deg < 0 || deg % 2 != 0)
            return out;
        for (int a = deg / 2; a >= 0; --a)
            out.push_back(pow(xi, static_cast<std::uint64_t>(a)) *
                          pow(eta, static_cast<std::uint64_t>(deg / 2 - a)));
        return out;
    };

    for (int d = 0; d <= max_degree; ++d) {
        // reductions of integral classes: polynomials in xi, eta, plus s times them
        std::vector<Element> integral = polynomials(d);
        for (const auto& q : polynomials(d - 3))
            integral.push_back(s * q);
        auto fixed = fixed_subspace(action, integral, d);

        std::vector<Element> products;
        for (int e = 0; e <= 1; ++e) {
            int rest = d - 3 * e;
            for (int a = 0; rest >= 0 && a * df <= rest; ++a) {
                if ((rest - a * df) % dh != 0)
                    continue;
                int b = (rest - a * df) / dh;
                Element x = pow(f, static_cast<std::uint64_t>(a)) * pow(h, static_cast<std::uint64_t>(b));
                products.push_back(e ? s * x : x);
            }
        }
        std::size_t product_rank = span_rank(products, d);
        auto together = fixed;
        together.insert(together.end(), products.begin(), products.end());
        std::size_t joint_rank = span_rank(together, d);
        r.expect(fixed.size() == product_rank && joint_rank == fixed.size(),
                 {{"degree", d},
                  {"integral_dim", span_rank(integral, d)},
                  {"fixed_dim", fixed.size()},
                  {"product_span_dim", product_rank}});
    }
    return r;
}

}  // namespace bpu
