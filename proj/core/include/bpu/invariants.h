#pragma once

// Linear group actions on H = F_p[xi_1, eta_1, ...] (x) Lambda[a_1, b_1, ...]
// and their invariant subspaces.
//
// A 2x2 matrix g acts on the column vectors (xi_j, eta_j)^T and (a_j, b_j)^T
// simultaneously: the j-th column of g is the image of the j-th basis vector,
// so g = [[1,1],[0,1]] sends xi to xi and eta to xi + eta.  Invariants are
// computed as common null spaces of (g - 1) over the group generators;
// averaging is unavailable since p divides |SL_2(F_p)|.

#include "bpu/galgebra.h"
#include "bpu/report.h"

#include <array>
#include <cstdint>
#include <vector>

namespace bpu {

/// Row-major 2x2 matrix over F_p: {a, b, c, d} is [[a, b], [c, d]].
using Mat2 = std::array<std::int64_t, 4>;

Mat2 mat_mul(const Mat2& x, const Mat2& y, std::int64_t p);
std::int64_t mat_det(const Mat2& x, std::int64_t p);
Mat2 mat_inverse(const Mat2& x, std::int64_t p);
Mat2 mat_identity();

/// F_p[xi_1, eta_1, ..., xi_i, eta_i] (x) Lambda[a_1, b_1, ..., a_i, b_i] in that
/// generator order.  With one block the names are xi, eta, a, b; otherwise
/// xi1, eta1, ..., a1, b1, ...
AlgebraPtr gamma_algebra(std::int64_t p, int blocks = 1);

/// Closure of `gens` under multiplication, sorted.  Throws Error on a
/// non-invertible generator.
std::vector<Mat2> generate_group(std::int64_t p, const std::vector<Mat2>& gens);

/// The standard generators [[1,1],[0,1]] and [[0,-1],[1,0]] of SL_2(F_p).
std::vector<Mat2> sl2_generators(std::int64_t p);

struct GroupAction {
    std::int64_t p = 3;
    AlgebraPtr algebra;          // a gamma_algebra
    std::vector<Mat2> generators;
    bool special_linear = true;  // every generator has determinant 1
};

GroupAction sl2_action(std::int64_t p, int blocks = 1);

/// The algebra automorphism induced by g acting on every block.
Element act(const Mat2& g, const Element& e);
/// Block j acted on by per_block[j].
Element act_blocks(const std::vector<Mat2>& per_block, const Element& e);

struct InvariantBasis {
    int degree = 0;
    std::vector<Element> basis;
};

/// Common fixed space of the action's generators in degree d, as the rows of a
/// reduced row-echelon basis.
InvariantBasis invariant_subspace(const GroupAction& action, int d);

/// Fixed vectors of the action inside span(spanning), all homogeneous of
/// degree d.  The span must be stable under the action.
std::vector<Element> fixed_subspace(const GroupAction& action, const std::vector<Element>& spanning,
                                    int d);

/// Rank over F_p of homogeneous degree-d elements.
std::size_t span_rank(const std::vector<Element>& elems, int d);

struct DicksonElements {
    Element f;  // xi^p eta - eta^p xi
    Element h;  // xi^(p^2-p) + eta^(p-1) (xi^(p-1) - eta^(p-1))^(p-1)
};

struct MuiElements {
    Element s;  // xi b - eta a
    Element y;  // a b
    Element z;  // xi^p b - eta^p a
    Element w;  // xi^(p^2) b - eta^(p^2) a
    Element e;  // xi^(p^2) eta - eta^(p^2) xi
};

/// In gamma_algebra(p, blocks), built on block `block` (0-based).
DicksonElements dickson_elements(std::int64_t p, int blocks = 1, int block = 0);
MuiElements mui_elements(std::int64_t p, int blocks = 1, int block = 0);

/// Products f^a h^b s^e1 y^e2 z^e3 of degree d.
std::vector<Element> mui_products(std::int64_t p, int d);

VerdictReport verify_mui_presentation(std::int64_t p, int max_degree);
VerdictReport verify_vistoli_integral(std::int64_t p, int max_degree);

}  // namespace bpu
