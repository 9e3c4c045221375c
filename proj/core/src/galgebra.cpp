#include "bpu/galgebra.h"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace bpu {

CoefficientRing CoefficientRing::prime_field(std::int64_t p)
{
    if (p < 2)
        throw Error("prime_field: characteristic must be >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw Error("prime_field: " + std::to_string(p) + " is not prime");
    return CoefficientRing(p);
}

Integer CoefficientRing::normalize(Integer c) const
{
    if (p_ == 0)
        return c;
    c %= p_;
    if (c < 0)
        c += p_;
    return c;
}

Integer CoefficientRing::symmetric(const Integer& c) const
{
    if (p_ == 0)
        return c;
    Integer r = normalize(c);
    if (2 * r > p_)
        r -= p_;
    return r;
}

Integer CoefficientRing::inverse(const Integer& c) const
{
    if (p_ == 0) {
        if (c == 1 || c == -1)
            return c;
        throw Error("inverse: integer " + c.str() + " is not a unit");
    }
    Integer a = normalize(c);
    if (a == 0)
        throw Error("inverse: zero in F_" + std::to_string(p_));
    // Fermat: a^(p-2)
    Integer result = 1, base = a;
    std::int64_t e = p_ - 2;
    while (e > 0) {
        if (e & 1)
            result = (result * base) % p_;
        base = (base * base) % p_;
        e >>= 1;
    }
    return result;
}

std::string CoefficientRing::name() const
{
    return p_ == 0 ? std::string("Z") : "F_" + std::to_string(p_);
}

AlgebraDescriptor::AlgebraDescriptor(std::vector<GeneratorSpec> gens, CoefficientRing ring)
    : gens_(std::move(gens)), ring_(ring)
{
}

std::optional<std::size_t> AlgebraDescriptor::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

AlgebraPtr make_algebra(std::vector<GeneratorSpec> gens, CoefficientRing ring)
{
    std::set<std::string> names;
    for (const auto& g : gens) {
        if (g.name.empty())
            throw Error("make_algebra: empty generator name");
        if (!names.insert(g.name).second)
            throw Error("make_algebra: duplicate generator name '" + g.name + "'");
        if (g.degree < 1)
            throw Error("make_algebra: generator '" + g.name + "' has degree < 1");
        bool odd = g.degree % 2 != 0;
        if (g.parity == Parity::Odd && !odd)
            throw Error("make_algebra: exterior generator '" + g.name + "' has even degree");
        if (g.parity == Parity::Even && odd)
            throw Error("make_algebra: polynomial generator '" + g.name + "' has odd degree");
    }
    return std::make_shared<const AlgebraDescriptor>(std::move(gens), ring);
}

/* Monomial */

Monomial Monomial::one(const AlgebraDescriptor& alg)
{
    Monomial m;
    m.exps_.assign(alg.size(), 0);
    return m;
}

Monomial Monomial::from_exponents(const AlgebraDescriptor& alg, std::vector<std::uint32_t> exps)
{
    if (exps.size() != alg.size())
        throw Error("Monomial: exponent vector has wrong length");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (alg.is_exterior(i) && exps[i] > 1)
            throw Error("Monomial: exterior generator '" + alg.name(i) + "' with exponent > 1");
        m.degree_ += static_cast<int>(exps[i]) * alg.degree(i);
    }
    m.exps_ = std::move(exps);
    return m;
}

Monomial Monomial::generator(const AlgebraDescriptor& alg, std::size_t i)
{
    if (i >= alg.size())
        throw Error("Monomial: generator index out of range");
    Monomial m = one(alg);
    m.exps_[i] = 1;
    m.degree_ = alg.degree(i);
    return m;
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool operator<(const Monomial& a, const Monomial& b)
{
    if (a.degree_ != b.degree_)
        return a.degree_ < b.degree_;
    // descending lex: the larger exponent vector sorts first
    return std::lexicographical_compare(b.exps_.begin(), b.exps_.end(), a.exps_.begin(),
                                        a.exps_.end());
}

std::optional<std::pair<Monomial, int>> multiply_monomials(const AlgebraDescriptor& alg,
                                                           const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.exps_.resize(a.exps_.size());
    r.degree_ = a.degree_ + b.degree_;
    int swaps = 0;
    int ext_in_a_after = 0;  // exterior factors of a at indices > i
    for (std::size_t i = a.exps_.size(); i-- > 0;) {
        if (alg.is_exterior(i)) {
            if (a.exps_[i] && b.exps_[i])
                return std::nullopt;
            if (b.exps_[i])
                swaps += ext_in_a_after;
            if (a.exps_[i])
                ++ext_in_a_after;
        }
        r.exps_[i] = a.exps_[i] + b.exps_[i];
    }
    return std::make_pair(std::move(r), (swaps % 2) ? -1 : 1);
}

/* Element */

Element::Element(AlgebraPtr alg) : alg_(std::move(alg))
{
    if (!alg_)
        throw Error("Element: null algebra");
}

Element Element::constant(AlgebraPtr alg, const Integer& c)
{
    Element e(std::move(alg));
    e.add_term(Monomial::one(*e.alg_), c);
    return e;
}

Element Element::generator(AlgebraPtr alg, std::size_t i)
{
    Element e(std::move(alg));
    e.add_term(Monomial::generator(*e.alg_, i), 1);
    return e;
}

Element Element::generator(AlgebraPtr alg, std::string_view name)
{
    auto i = alg->index_of(name);
    if (!i)
        throw Error("Element: unknown generator '" + std::string(name) + "'");
    return generator(std::move(alg), *i);
}

Element Element::monomial(AlgebraPtr alg, Monomial m, const Integer& c)
{
    Element e(std::move(alg));
    if (m.exponents().size() != e.alg_->size())
        throw Error("Element: monomial does not belong to this algebra");
    e.add_term(m, c);
    return e;
}

Integer Element::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> Element::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    // terms are sorted by degree
    int lo = terms_.begin()->first.degree();
    int hi = terms_.rbegin()->first.degree();
    if (lo != hi)
        return std::nullopt;
    return lo;
}

bool Element::is_homogeneous() const
{
    return terms_.empty() || homogeneous_degree().has_value();
}

std::vector<int> Element::degrees() const
{
    std::vector<int> out;
    for (const auto& [m, c] : terms_)
        if (out.empty() || out.back() != m.degree())
            out.push_back(m.degree());
    return out;
}

void Element::add_term(const Monomial& m, const Integer& c)
{
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        Integer v = alg_->ring().normalize(c);
        if (v != 0)
            terms_.emplace(m, std::move(v));
        return;
    }
    it->second = alg_->ring().normalize(it->second + c);
    if (it->second == 0)
        terms_.erase(it);
}

void Element::require_same(const Element& o) const
{
    if (alg_ != o.alg_ && !(*alg_ == *o.alg_))
        throw Error("Element: algebra descriptor mismatch");
}

Element& Element::operator+=(const Element& o)
{
    require_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    require_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Element& o)
{
    *this = *this * o;
    return *this;
}

Element operator-(const Element& a)
{
    Element r(a.alg_);
    for (const auto& [m, c] : a.terms_)
        r.add_term(m, -c);
    return r;
}

Element operator*(const Element& a, const Element& b)
{
    a.require_same(b);
    Element r(a.alg_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto prod = multiply_monomials(*a.alg_, ma, mb);
            if (prod)
                r.add_term(prod->first, prod->second * ca * cb);
        }
    return r;
}

Element operator*(const Integer& c, const Element& e)
{
    Element r(e.alg_);
    for (const auto& [m, v] : e.terms_)
        r.add_term(m, c * v);
    return r;
}

bool operator==(const Element& a, const Element& b)
{
    a.require_same(b);
    return a.terms_ == b.terms_;
}

std::string Element::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer v = alg_->ring().symmetric(c);
        bool neg = v < 0;
        if (neg)
            v = -v;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.exponents().size(); ++i) {
            auto e = m.exponent(i);
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += alg_->name(i);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            os << v;
        else if (v == 1)
            os << mono;
        else
            os << v << "*" << mono;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& e)
{
    return os << e.to_string();
}

Element add(const Element& a, const Element& b)
{
    return a + b;
}

Element mul(const Element& a, const Element& b)
{
    return a * b;
}

Element scale(const Integer& c, const Element& e)
{
    return c * e;
}

Element pow(const Element& e, std::uint64_t k)
{
    Element result = Element::constant(e.algebra(), 1);
    Element base = e;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

Element mul_truncated(const Element& a, const Element& b, int max_degree)
{
    if (!(*a.algebra() == *b.algebra()))
        throw Error("Element: algebra descriptor mismatch");
    Element r(a.algebra());
    const auto& alg = *a.algebra();
    for (const auto& [ma, ca] : a.terms()) {
        if (ma.degree() > max_degree)
            break;
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.degree() + mb.degree() > max_degree)
                break;
            auto prod = multiply_monomials(alg, ma, mb);
            if (prod)
                r.add_term(prod->first, prod->second * ca * cb);
        }
    }
    return r;
}

Element pow_truncated(const Element& e, std::uint64_t k, int max_degree)
{
    Element result = Element::constant(e.algebra(), 1);
    Element base = e;
    while (k > 0) {
        if (k & 1)
            result = mul_truncated(result, base, max_degree);
        k >>= 1;
        if (k)
            base = mul_truncated(base, base, max_degree);
    }
    return result;
}

Element homogeneous_component(const Element& e, int d)
{
    Element r(e.algebra());
    for (const auto& [m, c] : e.terms())
        if (m.degree() == d)
            r.add_term(m, c);
    return r;
}

namespace {

void enumerate(const AlgebraDescriptor& alg, std::size_t i, int remaining,
               std::vector<std::uint32_t>& exps, std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.push_back(Monomial::from_exponents(alg, exps));
        return;
    }
    if (i == alg.size())
        return;
    int deg = alg.degree(i);
    int top = alg.is_exterior(i) ? std::min(1, remaining / deg) : remaining / deg;
    for (int e = top; e >= 0; --e) {
        exps[i] = static_cast<std::uint32_t>(e);
        enumerate(alg, i + 1, remaining - e * deg, exps, out);
    }
    exps[i] = 0;
}

}  // namespace

std::vector<Monomial> basis(const AlgebraDescriptor& alg, int d)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    std::vector<std::uint32_t> exps(alg.size(), 0);
    enumerate(alg, 0, d, exps, out);
    return out;
}

std::vector<Integer> coords(const Element& e, int d)
{
    auto b = basis(*e.algebra(), d);
    std::vector<Integer> v(b.size());
    auto it = e.terms().begin();
    for (std::size_t j = 0; j < b.size() && it != e.terms().end(); ++j) {
        if (it->first == b[j]) {
            v[j] = it->second;
            ++it;
        }
    }
    for (const auto& [m, c] : e.terms())
        if (m.degree() != d)
            throw Error("coords: element has a term of degree " + std::to_string(m.degree()) +
                        ", expected " + std::to_string(d));
    return v;
}

Element from_coords(const AlgebraPtr& alg, int d, std::span<const Integer> v)
{
    auto b = basis(*alg, d);
    return from_coords(alg, b, v);
}

Element from_coords(const AlgebraPtr& alg, std::span<const Monomial> b, std::span<const Integer> v)
{
    if (b.size() != v.size())
        throw Error("from_coords: coordinate vector does not match basis size");
    Element e(alg);
    for (std::size_t j = 0; j < b.size(); ++j)
        if (v[j] != 0)
            e.add_term(b[j], v[j]);
    return e;
}

Element substitute(const Element& e, const AlgebraPtr& target, std::span<const Element> images,
                   std::optional<int> max_degree)
{
    const auto& src = *e.algebra();
    if (images.size() != src.size())
        throw Error("substitute: need one image per generator");
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!(*images[i].algebra() == *target))
            throw Error("substitute: image of '" + src.name(i) + "' lives in another algebra");
        for (const auto& [m, c] : images[i].terms())
            if ((m.degree() % 2 != 0) != src.is_exterior(i))
                throw Error("substitute: image of '" + src.name(i) + "' has the wrong parity");
    }
    const int cap = max_degree.value_or(std::numeric_limits<int>::max());

    // powers[i][k] = images[i]^k, filled on demand
    std::vector<std::vector<Element>> powers(images.size());
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const Element& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Element::constant(target, 1));
        while (cache.size() <= k)
            cache.push_back(max_degree ? mul_truncated(cache.back(), images[i], cap)
                                       : cache.back() * images[i]);
        return cache[k];
    };

    Element result(target);
    for (const auto& [m, c] : e.terms()) {
        Element term = Element::constant(target, c);
        for (std::size_t i = 0; i < src.size() && !term.is_zero(); ++i) {
            auto k = m.exponent(i);
            if (k == 0)
                continue;
            const Element& f = power_of(i, k);
            term = max_degree ? mul_truncated(term, f, cap) : term * f;
        }
        result += term;
    }
    return result;
}

}  // namespace bpu
