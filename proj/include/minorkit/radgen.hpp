#pragma once

#include <string>
#include <vector>

#include "minorkit/groebner.hpp"
#include "minorkit/linmatrix.hpp"
#include "minorkit/pencil.hpp"

namespace minorkit {

// How a witness family was built.
enum class Construction {
    schmitt_vogel,
    bruns_poset,
    scroll_sci,
    jordan_q,
    an_kn,
    maral_reduce,
    nilpotent_extend,
};

std::string construction_name(Construction c);

enum class WitnessStatus { unverified, verified, failed };

std::string witness_status_name(WitnessStatus s);

// Polynomials claimed to generate the target ideal up to radical.
struct WitnessSet {
    Construction tag;
    IdealPresentation target;
    std::vector<Polynomial> polys;
    WitnessStatus status = WitnessStatus::unverified;

    size_t count() const { return polys.size(); }
};

// Oracle check sqrt(target) == sqrt(polys); records and returns the verdict.
bool verify_witness(WitnessSet& w, const GBLimits& limits = {});

// Sum partition P_0 .. P_r of a generating set: |P_0| = 1, and the product of
// two distinct members of P_l lies in the principal ideal of some member of
// an earlier part. exps parallels parts; empty means e(p) = 1 throughout.
struct SVPartition {
    std::vector<std::vector<Polynomial>> parts;
    std::vector<std::vector<unsigned>> exps;
};

// Throws condition_violated naming the part and the offending pair.
void validate_partition(const SVPartition& p, const GBLimits& limits = {});

// q_l = sum over P_l of p^e(p); the target is generated by all of P together.
WitnessSet schmitt_vogel(const SVPartition& p, const GBLimits& limits = {});

// Rank-level sums over the 2-minor poset: 2n-3 polynomials for a 2xn matrix.
WitnessSet bruns_poset_polys(const LinMatrix& m);
WitnessSet bruns_poset_polys(int n, const Field& f, MonomialOrder o = MonomialOrder::degrevlex);

// The n power sums cutting out one scroll block of length n+1 (n+2 variables)
// set-theoretically.
WitnessSet scroll_sci(int n, const Field& f, MonomialOrder o = MonomialOrder::degrevlex);

// Jordan concatenation: the non-last variable of every block plus, when the
// eigenvalues are not all equal, the antidiagonal sums of the pair-product
// matrix of last variables.
WitnessSet jordan_generators(const KWForm& form);

// The 2n-5 polynomials for the zero-diagonal family: poset sums of the inner
// generic submatrix folded into the monomial sums.
WitnessSet an_generators(int n, const Field& f, MonomialOrder o = MonomialOrder::degrevlex);

// One syzygy reduction step q_i = f_k h_i + f_i, valid when g is a syzygy of
// f_1..f_{k-1} and f_k^r = sum h_i g_i; both hypotheses are checked exactly.
WitnessSet maral_reduce(const std::vector<Polynomial>& f, const std::vector<Polynomial>& g,
                        const std::vector<Polynomial>& h, unsigned r);

// [h,j1][j2,j3] - [h,j2][j1,j3] + [h,j3][j1,j2]; identically zero on any
// 2-row matrix.
Polynomial plucker_identity(const LinMatrix& m, int h, int j1, int j2, int j3);

// Witness for the concatenation (x | nilpotent block): the base polynomials
// plus the block's fresh variables w1..wk, in the extended ring. The target
// is the minor ideal of the concatenated matrix.
WitnessSet nilpotent_extend(const WitnessSet& base, const LinMatrix& x, const Block& block);

} // namespace minorkit
