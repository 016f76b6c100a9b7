#pragma once

#include <optional>
#include <string>

#include "minorkit/pencil.hpp"
#include "minorkit/radgen.hpp"

namespace minorkit {

enum class InvariantStatus { exact, upper_bound, lower_bound, unknown };

std::string invariant_status_name(InvariantStatus s);

// One classified invariant. When the status is `unknown` the value is the
// best available upper end of the bracket and the citation spells the
// bracket out; otherwise the value carries the stated status literally.
struct InvariantValue {
    long value = 0;
    InvariantStatus status = InvariantStatus::unknown;
    std::string citation;
};

// Classification of the 2-minor ideal of one pencil in normal form.
// `witness`, when present, generates the ideal up to radical with exactly
// ara.value polynomials (ara.status tells whether that count is sharp).
struct Report {
    std::string pattern;
    InvariantValue height;
    InvariantValue cd;
    InvariantValue ara;
    long characteristic = 0;
    size_t columns = 0;
    std::optional<WitnessSet> witness;
    bool generic_comparison = false; // ara (or its upper bound) < 2n-3
};

// Height of the 2-minor ideal from the block shape alone: nilpotent and
// scroll variables count once (scrolls lose 1 overall), Jordan variables
// lose the largest same-eigenvalue class.
long height_formula(const KWInvariants& inv);

// Change of coordinates from a two-distinct-eigenvalue pencil (two Jordan
// blocks of length 1 plus length-1 scrolls) onto the shape with eigenvalues
// 0 and 1. `normal` certifies the move out of the form's canonical ring;
// `std_images[k]` is the image in the form's canonical ring of variable
// x_{k+1} of the standard 2(n-1)-variable two-zero-corner matrix.
struct ANNormalization {
    KWForm normal;
    size_t n = 0;
    std::vector<Polynomial> std_images;
};

// nullopt when the block multiset does not match the pattern
std::optional<ANNormalization> an_normalization(const KWForm& form);

// Dispatch on the block shape and the coefficient characteristic. The
// characteristic must be 0 or prime and must agree with the form's field.
Report analyze(const KWForm& form, long characteristic);

// true iff the reported ara, exact or upper bound, is strictly below the
// generic-matrix value 2n-3
bool question1_flag(const Report& r, size_t n);

} // namespace minorkit
