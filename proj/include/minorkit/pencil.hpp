#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorkit/linalg.hpp"
#include "minorkit/linmatrix.hpp"

namespace minorkit {

enum class BlockKind { nilpotent, jordan, scroll };

// One canonical block. `vars` is the number of fresh variables the block
// introduces: a nilpotent block with v variables spans v+1 columns and is
// reported with length v+1 (so the zero column is N(1) with v = 0); a Jordan
// block of length m has m variables; a scroll block of length l has l+1.
struct Block {
    BlockKind kind;
    size_t vars = 0;
    std::optional<FieldElem> eigenvalue; // jordan only

    size_t columns() const;
    size_t length() const; // the reported length: nilpotent v+1, jordan m, scroll vars-1
    std::string token() const;
};

Block nilpotent_block(size_t vars);
Block jordan_block(FieldElem eigenvalue, size_t m);
Block scroll_block(size_t length);

// whitespace-separated tokens N(k), J(lambda,m), B(l); k, m, l >= 1 and
// lambda an integer or fraction literal; N(k) is the length-k block
std::vector<Block> parse_block_tokens(const std::string& text, const Field& field);

// the block alone in a fresh ring
LinMatrix make_block(const Block& b, const Field& field,
                     MonomialOrder order = MonomialOrder::degrevlex);
// horizontal concatenation over one ring holding every block's variables,
// plus `fillers` trailing unused variables; variable names are per-block
LinMatrix assemble_blocks(const std::vector<Block>& blocks, const Field& field,
                          MonomialOrder order = MonomialOrder::degrevlex, size_t fillers = 0);

// C (2x2) mixes the rows, Cp (n x n) recombines the columns, V (s x s) maps
// canonical variables to original ones: C * M(V z) * Cp = canonical matrix
struct Certificate {
    la::Mat C, Cp, V;
};

struct KWForm {
    std::vector<Block> blocks;
    LinMatrix canonical;  // assembled over the canonical ring
    RingPtr original_ring;
    Certificate cert;
    size_t fillers = 0; // variables of the original ring unused by the blocks
};

// identity certificate over the blocks' own ring, blocks kept in given order
KWForm kw_form_from_blocks(const std::vector<Block>& blocks, const Field& field,
                           MonomialOrder order = MonomialOrder::degrevlex);

// exact staircase reduction of the column pencil; block order is normalized
// to nilpotent, then Jordan (classes by ascending eigenvalue, lengths
// descending inside a class), then scroll (lengths descending)
KWForm kw_decompose(const LinMatrix& m);

bool verify_certificate(const KWForm& form, const LinMatrix& original);

struct JordanClass {
    FieldElem eigenvalue;
    std::vector<size_t> lengths; // descending
};

struct KWInvariants {
    size_t c = 0;
    std::vector<size_t> nilpotent_lengths; // reported lengths, vars+1 each
    size_t g = 0;
    std::vector<size_t> scroll_lengths;
    size_t d = 0;             // distinct eigenvalues, by first occurrence
    std::vector<JordanClass> classes;
    size_t gamma = 0;         // max blocks sharing one eigenvalue
    size_t alpha = 0;         // total Jordan blocks
    size_t jordan_vars = 0;   // total Jordan variable count
    size_t columns = 0;
    size_t block_vars = 0;    // variables used by blocks (fillers excluded)
};

KWInvariants kw_invariants(const KWForm& form);

} // namespace minorkit
