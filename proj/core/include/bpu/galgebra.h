#pragma once

// Graded-commutative algebras F[x_1,...] (x) Lambda[y_1,...] over F_p or Z.
//
// An AlgebraDescriptor fixes an ordered list of generators.  Even-type
// generators are polynomial, odd-type generators are exterior.  Monomials are
// stored in normal form: one exponent per generator in descriptor order, with
// exterior exponents in {0, 1}.  Multiplication re-sorts exterior factors and
// applies the Koszul sign of the permutation.
//
// Ordering: monomials are compared by total degree first, then
// lexicographically on the exponent vector with larger exponents on earlier
// generators first.  basis() lists the monomials of one degree in this order,
// e.g. degree 2 of F_p[xi, eta] (x) Lambda[a, b] is [xi, eta, a*b].

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bpu {

using Integer = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its documented domain
/// (e.g. p does not divide n, or a degree beyond a truncation bound).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Z, or F_p for an odd or even prime p that fits in a machine word.
class CoefficientRing {
public:
    static CoefficientRing integers() { return CoefficientRing(0); }
    static CoefficientRing prime_field(std::int64_t p);

    bool is_field() const { return p_ != 0; }
    /// 0 for Z.
    std::int64_t characteristic() const { return p_; }

    /// Canonical representative: unchanged over Z, in [0, p) over F_p.
    Integer normalize(Integer c) const;
    /// Representative in (-p/2, p/2] over F_p, identity over Z.
    Integer symmetric(const Integer& c) const;
    Integer inverse(const Integer& c) const;

    std::string name() const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    explicit CoefficientRing(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

enum class Parity { Even, Odd };

struct GeneratorSpec {
    std::string name;
    int degree = 1;
    Parity parity = Parity::Even;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

class AlgebraDescriptor {
public:
    AlgebraDescriptor(std::vector<GeneratorSpec> gens, CoefficientRing ring);

    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    const CoefficientRing& ring() const { return ring_; }
    std::size_t size() const { return gens_.size(); }

    int degree(std::size_t i) const { return gens_[i].degree; }
    bool is_exterior(std::size_t i) const { return gens_[i].parity == Parity::Odd; }
    const std::string& name(std::size_t i) const { return gens_[i].name; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;

private:
    std::vector<GeneratorSpec> gens_;
    CoefficientRing ring_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraDescriptor>;

/// Validates and builds a descriptor.  Throws Error on duplicate names,
/// non-positive degrees, or a parity that disagrees with the degree.
AlgebraPtr make_algebra(std::vector<GeneratorSpec> gens, CoefficientRing ring);

class Monomial {
public:
    Monomial() = default;
    /// The unit monomial of an algebra.
    static Monomial one(const AlgebraDescriptor& alg);
    /// Throws if an exterior exponent exceeds 1 or the length is wrong.
    static Monomial from_exponents(const AlgebraDescriptor& alg, std::vector<std::uint32_t> exps);
    static Monomial generator(const AlgebraDescriptor& alg, std::size_t i);

    int degree() const { return degree_; }
    std::span<const std::uint32_t> exponents() const { return exps_; }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    bool is_one() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded order: degree, then exponent vectors in descending lex order.
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint32_t> exps_;
    int degree_ = 0;

    friend class Element;
    friend std::optional<std::pair<Monomial, int>> multiply_monomials(
        const AlgebraDescriptor&, const Monomial&, const Monomial&);
};

/// Product of monomials in normal form with its Koszul sign (+1 or -1), or
/// nullopt when an exterior generator repeats.
std::optional<std::pair<Monomial, int>> multiply_monomials(const AlgebraDescriptor& alg,
                                                           const Monomial& a, const Monomial& b);

class Element {
public:
    using Terms = std::map<Monomial, Integer>;

    explicit Element(AlgebraPtr alg);
    static Element constant(AlgebraPtr alg, const Integer& c);
    static Element generator(AlgebraPtr alg, std::size_t i);
    static Element generator(AlgebraPtr alg, std::string_view name);
    static Element monomial(AlgebraPtr alg, Monomial m, const Integer& c = 1);

    const AlgebraPtr& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of m (zero when absent).
    Integer coefficient(const Monomial& m) const;

    /// Degree when all terms share one degree; nullopt for zero or mixed.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;
    /// Sorted list of degrees present.
    std::vector<int> degrees() const;

    /// Adds c*m in place, dropping the term if the coefficient vanishes.
    void add_term(const Monomial& m, const Integer& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Element& o);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Integer& c, const Element& e);

    friend bool operator==(const Element& a, const Element& b);

    std::string to_string() const;

private:
    void require_same(const Element& o) const;

    AlgebraPtr alg_;
    Terms terms_;
};

Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element scale(const Integer& c, const Element& e);
Element pow(const Element& e, std::uint64_t k);

/// Product that drops every term of degree above max_degree.
Element mul_truncated(const Element& a, const Element& b, int max_degree);
Element pow_truncated(const Element& e, std::uint64_t k, int max_degree);

/// Sum of the terms of degree exactly d.
Element homogeneous_component(const Element& e, int d);

/// All monomials of degree d in graded-lex order.
std::vector<Monomial> basis(const AlgebraDescriptor& alg, int d);

/// Coordinates of a degree-d element in basis(alg, d).  Throws Error if e has
/// a term of another degree.
std::vector<Integer> coords(const Element& e, int d);
Element from_coords(const AlgebraPtr& alg, int d, std::span<const Integer> v);
Element from_coords(const AlgebraPtr& alg, std::span<const Monomial> basis,
                    std::span<const Integer> v);

/// The algebra homomorphism into target sending generator i to images[i].
/// Images of exterior generators must have odd degree and images of
/// polynomial generators even degree, so that Koszul signs are preserved.
/// With max_degree set, terms above it are discarded during expansion; the
/// terms of degree <= max_degree are unaffected since degrees never decrease
/// under multiplication.
Element substitute(const Element& e, const AlgebraPtr& target, std::span<const Element> images,
                   std::optional<int> max_degree = std::nullopt);

std::ostream& operator<<(std::ostream& os, const Element& e);

}  // namespace bpu
