#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prism/braid.hpp"
#include "prism/families.hpp"
#include "prism/freegroup.hpp"

namespace prism {

// One pass of the knot through a torus block. Block 1 is the full-twist
// block on all B strands, block 2 the tail block on strands 1..T+1.
struct TraceStep {
    int from = 0;
    int to = 0;
    int block = 1;
    int inner_exponent = 0;
    int outer_exponent = 0;
};

struct TraceResult {
    std::vector<TraceStep> steps;
    CyclicWord inner; // class of the knot in the inner handlebody (letters x, y)
    CyclicWord outer; // class in the outer handlebody (printed primed)
};

// Walks the closed knot strand by strand. A block-1 pass moves position
// i -> i - k (mod B); a pass exiting at a position <= T+1 then crosses the
// tail block (i -> i - a ascending, i -> i + a descending, mod T+1). Each
// pass emits one generator on the "unit side" and the number of seam
// crossings on the "wrap side": under TypeA the inner word takes the units
// and the outer word the wraps for block 1, and switching x with x'
// (TypeB) swaps exactly the block-1 roles.
TraceResult trace(const TwistedTorusSpec& spec, EmbeddingType et, int start = 1);

// One line per step: "from -> to [block] inner=x^c outer=x'^d".
std::string trace_dump(const TraceResult& result);

struct ExpectedWords {
    CyclicWord inner;
    std::optional<CyclicWord> outer;      // absent where only x'^m y' is asserted
    FreeWord inner_literal;               // the formula words as written
    std::optional<FreeWord> outer_literal;
    std::optional<std::pair<FreeWord, FreeWord>> basis; // (A, B) with sf word A^2 B^2
    std::optional<FreeWord> primitive_partner; // stated basis partner of the primitive word
    bool sf_outer = false;
};

// Expands the per-family word formulas at concrete parameters. Throws
// std::invalid_argument for rows without stated words (Spor, 1A, 5*) and
// std::out_of_range for parameters outside the row's range.
ExpectedWords expected_words(FamilyId f, int s, int t);

struct EmbeddingCheck {
    bool inner_match = false;
    std::optional<bool> outer_match;   // set when the row states an outer word
    bool outer_shape_ok = false;       // otherwise: trace outer is x'^m y'
    long long outer_exponent = 0;      // m read from the trace
    bool sf_pass = false;
    bool primitive_pass = false;
    bool basis_pass = false;
    std::string detail;

    bool all_pass() const {
        return inner_match && (outer_match ? *outer_match : outer_shape_ok) && sf_pass &&
               primitive_pass && basis_pass;
    }
};

// Runs the five word certificates for one instance: trace words match the
// stated formulas, the Seifert-fibered side is (2,2) with certificate, the
// other side is primitive, and the claimed basis pair multiplies out to the
// Seifert-fibered word.
EmbeddingCheck verify_embedding(FamilyId f, int s, int t);

} // namespace prism
