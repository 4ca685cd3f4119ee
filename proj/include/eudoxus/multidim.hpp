#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "eudoxus/core.hpp"

namespace eudoxus {

using Vec = std::vector<BigInt>;
using RatMatrix = std::vector<std::vector<Rat>>;

// A map f: Z^n -> Z^m whose defect d_f(u,v) = f(u+v) - f(u) - f(v) is
// bounded in sup norm by `cert`. Over Z^n bounded range and finite range
// coincide, so this is the natural several-variable analogue of Real; such
// an f represents an m x n real matrix (each coordinate section along a
// basis vector is an ordinary one-dimensional almost-additive sequence).
// Torsion plays no part: over a finite group every map is bounded and the
// whole construction collapses, so only free ranks appear here.
class MultiHom {
  public:
    MultiHom(int dim_in, int dim_out, std::function<Vec(const Vec&)> fn,
             BigInt cert, std::string label);

    int dim_in() const;
    int dim_out() const;
    Vec eval(const Vec& v) const;  // memoized; v.size() must equal dim_in
    Vec operator()(const Vec& v) const { return eval(v); }
    const BigInt& cert() const;
    const std::string& label() const;

    Vec defect(const Vec& u, const Vec& v) const;

  private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

// The 1-D real p -> eval(p * e_j)[i]; its defect is a coordinate of d_f on
// the e_j axis, so the certificate carries over.
Real coordinate_section(const MultiHom& f, int j, int i);

struct IntervalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Interval>> entries;
    // Per-entry width-target flag; false marks a partial result whose
    // refinement exceeded the budget (best enclosure kept).
    std::vector<std::vector<bool>> converged;

    bool all_converged() const;
};

// Entry (i, j) = refine(coordinate_section(f, j, i), eps). Entries that blow
// the budget are kept at their best enclosure and marked unconverged.
IntervalMatrix recover_matrix(const MultiHom& f, const Rat& eps,
                              const Budget& b = {});

// Lift of a rational matrix with bounded integer noise: eval(v)[i] is the
// nearest integer (ties to even) to (M v)[i] plus a seeded hash noise in
// [-k, k] depending only on (v, i). Each coordinate stays within 1/2 + k of
// the linear value, so by the triangle inequality cert = 3*(1 + 2k).
MultiHom from_matrix_noisy(const RatMatrix& m, const BigInt& k,
                           unsigned long seed);

// Composition with a genuine linear map on the output side:
// (L o f)(v) = L * f(v). d_{L o f} = L * d_f, so
// cert = max_i sum_j |L[i][j]| * f.cert.
MultiHom compose_linear(const std::vector<std::vector<BigInt>>& l,
                        const MultiHom& f);

// Pointwise sum; cert = sum of certs.
MultiHom add(const MultiHom& f, const MultiHom& g);

struct SplitResult {
    MultiHom left;   // x -> f(x, 0)
    MultiHom right;  // y -> f(0, y)
    // max over sampled (x, y) of |f(x,y) - f1(x) - f2(y)| in sup norm; this
    // equals |d_f((x,0),(0,y))| so it never exceeds f.cert.
    BigInt max_defect_sampled;
};

// Split along Z^n = Z^n1 + Z^(n-n1). Requires 1 <= n1 < dim_in.
SplitResult split_direct_sum(const MultiHom& f, int n1);

// Grid file format: first line `m n`, then m lines of n rationals
// (`num/den`, plain integers allowed) separated by spaces.
RatMatrix read_matrix_grid(std::istream& in);
void write_matrix_grid(std::ostream& out, const RatMatrix& m);

// Interval matrices use the same grid with `[lo,hi]` entries.
void write_interval_matrix(std::ostream& out, const IntervalMatrix& m);

}  // namespace eudoxus
