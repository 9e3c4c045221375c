#include "bpu/topology.h"

#include "bpu/arith.h"
#include "bpu/invariants.h"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

namespace bpu {

namespace {

void require_odd_prime(std::int64_t p, const char* who)
{
    if (!is_odd_prime(p))
        throw PreconditionError(std::string(who) + ": p must be an odd prime");
}

SteenrodAction make_gamma_action(const AlgebraPtr& alg, std::int64_t p, int blocks)
{
    const auto B = static_cast<std::size_t>(blocks);
    std::vector<Element> beta(alg->size(), Element(alg)), power;
    for (std::size_t j = 0; j < B; ++j) {
        beta[2 * B + 2 * j] = Element::generator(alg, 2 * j);
        beta[2 * B + 2 * j + 1] = Element::generator(alg, 2 * j + 1);
    }
    for (std::size_t i = 0; i < alg->size(); ++i) {
        Element g = Element::generator(alg, i);
        power.push_back(alg->degree(i) == 2 ? g + pow(g, static_cast<std::uint64_t>(p)) : g);
    }
    return SteenrodAction(alg, std::move(beta), std::move(power));
}

}  // namespace

const GammaModel& gamma_model(std::int64_t p, int blocks)
{
    require_odd_prime(p, "gamma_model");
    if (blocks < 1)
        throw PreconditionError("gamma_model: need at least one block");
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, int>, std::unique_ptr<GammaModel>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{p, blocks}];
    if (!slot) {
        auto alg = gamma_algebra(p, blocks);
        slot = std::make_unique<GammaModel>(
            GammaModel{p, blocks, alg, make_gamma_action(alg, p, blocks)});
    }
    return *slot;
}

Element restrict_chi(const GammaModel& model, const Integer& l)
{
    const auto& alg = model.algebra;
    const auto B = static_cast<std::size_t>(model.blocks);
    Element s(alg);
    for (std::size_t j = 0; j < B; ++j)
        s += Element::generator(alg, 2 * j) * Element::generator(alg, 2 * B + 2 * j + 1) -
             Element::generator(alg, 2 * j + 1) * Element::generator(alg, 2 * B + 2 * j);
    return l * s;
}

Element restrict_chi(std::int64_t p, int blocks)
{
    return restrict_chi(gamma_model(p, blocks));
}

AlphaSummands alpha_summands(const GammaModel& model, const Integer& l)
{
    const auto& act = model.action;
    const std::int64_t p = model.p;
    Element s = restrict_chi(model, l);
    Element p1s = act.power(1, s);
    Element bp1s = act.bockstein(p1s);
    Element alpha1 = p1s * pow(bp1s, static_cast<std::uint64_t>(p - 1)) * s;
    Element alpha2 = p1s * act.power(p, p1s);
    return {alpha1, alpha2};
}

Element alpha_sum_image(std::int64_t p, int blocks)
{
    auto a = alpha_summands(gamma_model(p, blocks));
    return a.alpha1 + a.alpha2;
}

KZ3Images kz3_images(const GammaModel& model, int kmax)
{
    if (kmax < 0)
        throw PreconditionError("kz3_images: kmax must be non-negative");
    const auto& act = model.action;
    KZ3Images out{restrict_chi(model), {}, {}};
    Element cur = act.power(1, out.xbar);
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0)
            cur = act.power(int_pow(model.p, static_cast<unsigned>(k)), cur);
        out.x.push_back(cur);
        out.ybar.push_back(act.bockstein(cur));
    }
    return out;
}

// ---------------------------------------------------------------------------

EtaRing::EtaRing(std::int64_t p, int bound) : p_(p), bound_(bound)
{
    require_odd_prime(p, "EtaRing");
    if (bound < 0)
        throw Error("EtaRing: negative bound");
}

EtaRing::Element EtaRing::constant(const Integer& c) const
{
    Element x;
    x.constant = c;
    return x;
}

EtaRing::Element EtaRing::monomial(const Integer& c, int k) const
{
    if (k < 1)
        throw Error("EtaRing::monomial: exponent must be positive");
    Element x;
    Integer r = c % p_;
    if (r < 0)
        r += p_;
    if (r != 0 && k <= bound_)
        x.powers[k] = r.convert_to<std::int64_t>();
    return x;
}

EtaRing::Element EtaRing::add(const Element& x, const Element& y) const
{
    Element z = x;
    z.constant += y.constant;
    for (const auto& [k, c] : y.powers) {
        std::int64_t v = (z.powers[k] + c) % p_;
        if (v == 0)
            z.powers.erase(k);
        else
            z.powers[k] = v;
    }
    return z;
}

EtaRing::Element EtaRing::mul(const Element& x, const Element& y) const
{
    Element z = constant(x.constant * y.constant);
    auto accumulate = [&](int k, const Integer& c) { z = add(z, monomial(c, k)); };
    for (const auto& [k, c] : y.powers)
        accumulate(k, x.constant * c);
    for (const auto& [k, c] : x.powers)
        accumulate(k, y.constant * c);
    for (const auto& [i, a] : x.powers)
        for (const auto& [j, b] : y.powers)
            if (i + j <= bound_)
                accumulate(i + j, Integer(a) * b);
    return z;
}

std::string EtaRing::to_string(const Element& x) const
{
    std::ostringstream os;
    bool first = true;
    if (x.constant != 0) {
        os << x.constant;
        first = false;
    }
    for (const auto& [k, c] : x.powers) {
        // symmetric representative
        std::int64_t s = c > p_ / 2 ? c - p_ : c;
        if (first)
            os << (s < 0 ? "-" : "");
        else
            os << (s < 0 ? " - " : " + ");
        std::int64_t a = s < 0 ? -s : s;
        if (a != 1)
            os << a << "*";
        os << "eta^" << k;
        first = false;
    }
    return first ? "0" : os.str();
}

EtaRing::Element theta_delta(std::int64_t p)
{
    require_odd_prime(p, "theta_delta");
    const int bound = static_cast<int>(p * p - p);
    EtaRing ring(p, bound);
    EtaRing::Element acc = ring.constant(1);
    for (std::int64_t i = 1; i <= p; ++i)
        for (std::int64_t j = 1; j <= p; ++j)
            if (i != j)
                acc = ring.mul(acc, ring.monomial((i % p) - (j % p), 1));
    return acc;
}

VerdictReport verify_theta(std::int64_t p)
{
    nlohmann::json params{{"p", p}};
    if (!is_odd_prime(p))
        return precondition_failure("theta-delta", params, "p must be an odd prime");
    VerdictReport r;
    r.check = "theta-delta";
    r.params = params;
    EtaRing ring(p, static_cast<int>(p * p - p));
    auto value = theta_delta(p);
    auto expected = ring.monomial(-1, static_cast<int>(p * p - p));
    // the same product over Z before reduction
    Integer raw = 1;
    for (std::int64_t i = 1; i <= p; ++i)
        for (std::int64_t j = 1; j <= p; ++j)
            if (i != j)
                raw *= (i % p) - (j % p);
    r.expect(value == expected, {{"value", ring.to_string(value)},
                                 {"expected", ring.to_string(expected)},
                                 {"exponent", p * p - p},
                                 {"integer_coefficient", raw.str()}});
    return r;
}

// ---------------------------------------------------------------------------

namespace {

void require_delta_params(std::int64_t p, int n, int up_to)
{
    require_odd_prime(p, "delta_star");
    if (n < 1 || n % p != 0)
        throw PreconditionError("delta_star: p must divide n");
    if (up_to < 0)
        throw PreconditionError("delta_star: up_to must be non-negative");
}

}  // namespace

std::vector<Element> delta_star(std::int64_t p, int n, int up_to)
{
    require_delta_params(p, n, up_to);
    SymmetricFunctions sf(static_cast<int>(p), CoefficientRing::prime_field(p));
    Element total = Element::constant(sf.algebra(), 1);
    for (int i = 1; i <= p; ++i)
        total += sf.sigma(i);
    const int m = n / static_cast<int>(p);
    Element acc = Element::constant(sf.algebra(), 1);
    for (int k = 0; k < m; ++k)
        acc = mul_truncated(acc, total, 2 * up_to);
    std::vector<Element> out;
    for (int i = 0; i <= up_to; ++i)
        out.push_back(homogeneous_component(acc, 2 * i));
    return out;
}

std::vector<Element> delta_star_multinomial(std::int64_t p, int n, int up_to)
{
    require_delta_params(p, n, up_to);
    SymmetricFunctions sf(static_cast<int>(p), CoefficientRing::prime_field(p));
    const auto& alg = sf.algebra();
    const std::int64_t m = n / p;
    std::vector<Element> out(static_cast<std::size_t>(up_to) + 1, Element(alg));
    // k[0] copies of 1, k[j] copies of sigma_j
    std::vector<std::int64_t> k(static_cast<std::size_t>(p) + 1, 0);
    auto recurse = [&](auto&& self, std::size_t j, std::int64_t left, int weight) -> void {
        if (j == 0) {
            k[0] = left;
            std::int64_t c = multinomial_mod_p(m, k, p);
            if (c == 0)
                return;
            std::vector<std::uint32_t> e(static_cast<std::size_t>(p));
            for (std::size_t i = 1; i <= static_cast<std::size_t>(p); ++i)
                e[i - 1] = static_cast<std::uint32_t>(k[i]);
            out[static_cast<std::size_t>(weight)].add_term(Monomial::from_exponents(*alg, e), c);
            return;
        }
        for (std::int64_t c = 0; c <= left && weight + c * static_cast<std::int64_t>(j) <= up_to; ++c) {
            k[j] = c;
            self(self, j - 1, left - c, weight + static_cast<int>(c * static_cast<std::int64_t>(j)));
        }
        k[j] = 0;
    };
    recurse(recurse, static_cast<std::size_t>(p), m, 0);
    return out;
}

VerdictReport check_delta_lemma(std::int64_t p, int n, int up_to)
{
    nlohmann::json params{{"p", p}, {"n", n}, {"up_to", up_to}};
    if (!is_odd_prime(p))
        return precondition_failure("delta-lemma", params, "p must be an odd prime");
    if (n < 1 || n % p != 0)
        return precondition_failure("delta-lemma", params, "p must divide n");
    if (up_to < 0)
        return precondition_failure("delta-lemma", params, "up_to must be non-negative");
    VerdictReport r;
    r.check = "delta-lemma";
    r.params = params;

    const std::int64_t m = n / p;
    const std::int64_t q = p_primary_part(m, p);
    SymmetricFunctions sf(static_cast<int>(p), CoefficientRing::prime_field(p));
    auto by_product = delta_star(p, n, up_to);
    auto by_multinomial = delta_star_multinomial(p, n, up_to);

    const std::int64_t lucas = binomial_mod_p(m, q, p);
    Integer exact = binomial(m, q) % p;
    r.expect(Integer(lucas) == exact, {{"binomial", {m, q}},
                                       {"lucas", lucas},
                                       {"exact_mod_p", exact.convert_to<std::int64_t>()}});

    for (int i = 0; i <= up_to; ++i) {
        const auto& c = by_product[static_cast<std::size_t>(i)];
        nlohmann::json rec{{"i", i}, {"component", c.to_string()}};
        bool ok = c == by_multinomial[static_cast<std::size_t>(i)];
        if (!ok)
            rec["multinomial_route"] = by_multinomial[static_cast<std::size_t>(i)].to_string();
        if (i % q != 0) {
            rec["expected"] = "0";
            ok = ok && c.is_zero();
        }
        else if (i == q) {
            Element expected = Integer(lucas) * pow(sf.sigma(1), static_cast<std::uint64_t>(q));
            rec["expected"] = expected.to_string();
            ok = ok && c == expected;
        }
        r.expect(ok, rec);
    }
    r.details.push_back({{"m", m}, {"q", q}});
    return r;
}

// ---------------------------------------------------------------------------

VerdictReport verify_prop_s(std::int64_t p)
{
    nlohmann::json params{{"p", p}};
    if (!is_odd_prime(p))
        return precondition_failure("mui-steenrod-ledger", params, "p must be an odd prime");
    VerdictReport r;
    r.check = "mui-steenrod-ledger";
    r.params = params;
    const auto& model = gamma_model(p, 1);
    const auto& act = model.action;
    auto [f, h] = dickson_elements(p);
    auto m = mui_elements(p);
    auto record = [&](const char* name, const Element& got, const Element& want) {
        r.expect(got == want, {{"identity", name}, {"lhs", got.to_string()}, {"rhs", want.to_string()}});
    };
    record("beta(y) = s", act.bockstein(m.y), m.s);
    record("beta(z) = f", act.bockstein(m.z), f);
    record("beta(w) = e", act.bockstein(m.w), m.e);
    record("P^1(s) = z", act.power(1, m.s), m.z);
    record("P^p(z) = w", act.power(p, m.z), m.w);
    record("z(f^(p-1)s + w) = 0", m.z * (pow(f, static_cast<std::uint64_t>(p - 1)) * m.s + m.w),
           Element(model.algebra));
    return r;
}

VerdictReport verify_main(std::int64_t p, int blocks)
{
    nlohmann::json params{{"p", p}, {"blocks", blocks}};
    if (!is_odd_prime(p))
        return precondition_failure("alpha-vanishing", params, "p must be an odd prime");
    if (blocks < 1)
        return precondition_failure("alpha-vanishing", params, "blocks must be positive");
    VerdictReport r;
    r.check = "alpha-vanishing";
    r.params = params;
    const auto& model = gamma_model(p, blocks);
    auto base = alpha_summands(model);
    Element sum = base.alpha1 + base.alpha2;
    r.expect(sum.is_zero(), {{"alpha1_terms", base.alpha1.size()},
                             {"alpha2_terms", base.alpha2.size()},
                             {"degree", 2 * p * p + 2 * p + 2},
                             {"alpha_sum_image", sum.to_string()}});
    if (blocks == 1) {
        auto [f, h] = dickson_elements(p);
        auto m = mui_elements(p);
        r.expect(base.alpha1 == m.z * pow(f, static_cast<std::uint64_t>(p - 1)) * m.s,
                 {{"identity", "alpha1 = z f^(p-1) s"}});
        r.expect(base.alpha2 == m.z * m.w, {{"identity", "alpha2 = z w"}});
    }
    for (std::int64_t l = 2; l < p; ++l) {
        auto scaled = alpha_summands(model, l);
        Integer l2 = l * l;
        r.expect(scaled.alpha1 == l2 * base.alpha1 && scaled.alpha2 == l2 * base.alpha2,
                 {{"scalar", l}, {"summands_scale_by", l2.str()}});
    }
    return r;
}

VerdictReport verify_equivariance(std::int64_t p, std::uint64_t seed, int samples, int max_degree)
{
    nlohmann::json params{{"p", p}, {"seed", seed}, {"samples", samples}, {"max_degree", max_degree}};
    if (!is_odd_prime(p))
        return precondition_failure("sl2-equivariance", params, "p must be an odd prime");
    if (samples < 0 || max_degree < 0)
        return precondition_failure("sl2-equivariance", params, "samples and max_degree must be non-negative");
    VerdictReport r;
    r.check = "sl2-equivariance";
    r.params = params;
    const auto& model = gamma_model(p, 1);
    const auto& act = model.action;
    auto group = generate_group(p, sl2_generators(p));

    std::mt19937_64 rng(seed);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    auto random_element = [&](int d) {
        auto b = basis(*model.algebra, d);
        Element x(model.algebra);
        for (const auto& m : b)
            if (uniform(0, 2) == 0)
                x.add_term(m, uniform(1, p - 1));
        return x;
    };

    std::size_t failures = 0;
    for (int t = 0; t < samples; ++t) {
        const Mat2& g = group[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(group.size()) - 1))];
        const int d1 = static_cast<int>(uniform(0, max_degree));
        const int d2 = static_cast<int>(uniform(0, max_degree - d1));
        const std::int64_t k = uniform(0, p);
        Element x = random_element(d1), y = random_element(d2);
        bool ok = act.power(k, bpu::act(g, x)) == bpu::act(g, act.power(k, x)) &&
                  act.bockstein(bpu::act(g, x)) == bpu::act(g, act.bockstein(x)) &&
                  bpu::act(g, x * y) == bpu::act(g, x) * bpu::act(g, y);
        if (!ok) {
            ++failures;
            r.fail({{"sample", t}, {"matrix", {g[0], g[1], g[2], g[3]}}, {"k", k}, {"x", x.to_string()},
                    {"y", y.to_string()}});
        }
    }
    r.details.push_back({{"group_order", group.size()}, {"failures", failures}});
    return r;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json compare(const char* formula, int i, int j, const Element& got, const Element& want)
{
    nlohmann::json rec{{"formula", formula}, {"i", i}};
    if (j >= 0)
        rec["j"] = j;
    rec["ok"] = got == want;
    if (!(got == want)) {
        rec["lhs"] = got.to_string();
        rec["rhs"] = want.to_string();
        if (!want.is_zero() && got == -want)
            rec["sign_discrepancy"] = true;
    }
    return rec;
}

}  // namespace

VerdictReport verify_yagita(std::int64_t p, int imax, int blocks, std::uint64_t seed, int samples)
{
    nlohmann::json params{{"p", p}, {"imax", imax}, {"blocks", blocks}};
    if (samples > 0) {
        params["seed"] = seed;
        params["samples"] = samples;
    }
    if (!is_odd_prime(p))
        return precondition_failure("yagita-formulas", params, "p must be an odd prime");
    if (imax < 0 || blocks < 1)
        return precondition_failure("yagita-formulas", params, "imax >= 0 and blocks >= 1 required");
    VerdictReport r;
    r.check = "yagita-formulas";
    r.params = params;
    const auto& model = gamma_model(p, blocks);
    const auto& act = model.action;
    auto img = kz3_images(model, imax);
    const Element zero(model.algebra);

    auto push = [&](nlohmann::json rec) {
        bool ok = rec["ok"].get<bool>();
        rec.erase("ok");
        r.expect(ok, rec);
    };

    for (int i = 0; i <= imax; ++i) {
        Element want = i == 0 ? zero : -img.ybar[static_cast<std::size_t>(i - 1)];
        push(compare("Q_i(x)", i, -1, act.milnor_Q(i, img.xbar), want));
    }
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; j <= imax; ++j)
            push(compare("Q_i(y_j)", i, j, act.milnor_Q(i, img.ybar[static_cast<std::size_t>(j)]),
                         zero));
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; j <= imax; ++j) {
            Element want = zero;
            if (i <= j)
                want = pow(img.ybar[static_cast<std::size_t>(j - i)],
                           static_cast<std::uint64_t>(int_pow(p, static_cast<unsigned>(i))));
            else if (i >= j + 2)
                want = -pow(img.ybar[static_cast<std::size_t>(i - j - 2)],
                            static_cast<std::uint64_t>(int_pow(p, static_cast<unsigned>(j + 1))));
            push(compare("Q_i(x_j)", i, j, act.milnor_Q(i, img.x[static_cast<std::size_t>(j)]), want));
        }

    if (samples > 0) {
        std::vector<Element> pool{img.xbar};
        pool.insert(pool.end(), img.x.begin(), img.x.end());
        pool.insert(pool.end(), img.ybar.begin(), img.ybar.end());
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> index(0, imax);
        std::size_t failures = 0;
        for (int t = 0; t < samples; ++t) {
            const Element& u = pool[pick(rng)];
            const Element& v = pool[pick(rng)];
            const int i = index(rng);
            // keep products small: only the first few images are cheap at i > 1
            Element lhs = act.milnor_Q(i, u * v);
            const int du = *u.homogeneous_degree();
            Element rhs = act.milnor_Q(i, u) * v + (du % 2 ? -u : u) * act.milnor_Q(i, v);
            if (!(lhs == rhs)) {
                ++failures;
                r.fail({{"derivation_sample", t}, {"i", i}, {"u", u.to_string()}, {"v", v.to_string()}});
            }
        }
        r.details.push_back({{"derivation_samples", samples}, {"derivation_failures", failures}});
    }
    return r;
}

VerdictReport verify_lambda_formula(std::int64_t p, int imax)
{
    nlohmann::json params{{"p", p}, {"imax", imax}};
    if (!is_odd_prime(p))
        return precondition_failure("lambda-formula", params, "p must be an odd prime");
    if (imax < 0)
        return precondition_failure("lambda-formula", params, "imax must be non-negative");
    VerdictReport r;
    r.check = "lambda-formula";
    r.params = params;

    // formal ring on x, x_0..x_K, y_0..y_K with Q_i given by the Milnor table
    const int K = std::max(1, imax - 1);
    std::vector<GeneratorSpec> gens{{"x", 3, Parity::Odd}};
    for (int j = 0; j <= K; ++j)
        gens.push_back({"x" + std::to_string(j),
                        static_cast<int>(2 * int_pow(p, static_cast<unsigned>(j + 1)) + 1), Parity::Odd});
    for (int j = 0; j <= K; ++j)
        gens.push_back({"y" + std::to_string(j),
                        static_cast<int>(2 * int_pow(p, static_cast<unsigned>(j + 1)) + 2), Parity::Even});
    auto formal = make_algebra(std::move(gens), CoefficientRing::prime_field(p));
    auto X = [&](int j) { return Element::generator(formal, static_cast<std::size_t>(1 + j)); };
    auto Y = [&](int j) { return Element::generator(formal, static_cast<std::size_t>(2 + K + j)); };
    auto P = [&](int j) { return static_cast<std::uint64_t>(int_pow(p, static_cast<unsigned>(j))); };
    const Element x = Element::generator(formal, std::size_t{0});
    const Element zero(formal);

    auto table = [&](int i) {
        std::vector<Element> images(formal->size(), zero);
        images[0] = i == 0 ? zero : -Y(i - 1);
        for (int j = 0; j <= K; ++j) {
            Element v = zero;
            if (i <= j)
                v = pow(Y(j - i), P(i));
            else if (i >= j + 2)
                v = -pow(Y(i - j - 2), P(j + 1));
            images[static_cast<std::size_t>(1 + j)] = v;
        }
        return images;
    };
    auto rhs = [&](int i) {
        if (i <= 2)
            return zero;
        return pow(Y(i - 2), P(1)) * Y(1) - pow(Y(0), P(1)) * Y(i - 1) - Y(0) * pow(Y(i - 3), P(2));
    };

    const Element lambda = pow(Y(0), P(1)) * x + Y(0) * X(1) - X(0) * Y(1);

    const auto& model = gamma_model(p, 1);
    const auto& act = model.action;
    auto img = kz3_images(model, K);
    std::vector<Element> images{img.xbar};
    images.insert(images.end(), img.x.begin(), img.x.end());
    images.insert(images.end(), img.ybar.begin(), img.ybar.end());
    const Element lambda_image = substitute(lambda, model.algebra, images);
    r.details.push_back({{"lambda_image", lambda_image.to_string()}});

    for (int i = 0; i <= imax; ++i) {
        Element q_formal = apply_odd_derivation(formal, table(i), lambda);
        nlohmann::json rec = compare("formal Q_i(lambda)", i, -1, q_formal, rhs(i));
        bool ok = rec["ok"].get<bool>();
        rec.erase("ok");
        r.expect(ok, rec);

        Element q_model = act.milnor_Q(i, lambda_image);
        Element want = substitute(rhs(i), model.algebra, images);
        rec = compare("restricted Q_i(lambda)", i, -1, q_model, want);
        ok = rec["ok"].get<bool>();
        rec.erase("ok");
        rec["rhs_image_zero"] = want.is_zero();
        r.expect(ok, rec);

        if (i >= 3)
            for (int k = 0; k <= 2; ++k) {
                rec = compare("Q_k(Q_i(lambda))", i, -1, act.milnor_Q(k, q_model), Element(model.algebra));
                rec["k"] = k;
                Element formal_again = apply_odd_derivation(formal, table(k), q_formal);
                rec["formal_zero"] = formal_again.is_zero();
                ok = rec["ok"].get<bool>() && formal_again.is_zero();
                rec.erase("ok");
                r.expect(ok, rec);
            }
    }
    return r;
}

}  // namespace bpu
