#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prism {

// Word in the Artin generators of the braid group on `strands` strands.
// Letter g > 0 encodes sigma_g, g < 0 encodes sigma_g^-1, 1 <= |g| <= strands-1.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls);

    int length() const { return static_cast<int>(letters.size()); }
    BraidWord concat(const BraidWord& o) const;

    // "6 | 1 2 3 -1" (flat letters; parse-print-parse is the identity)
    std::string to_string() const;
};

// Thrown by parse_braid with a character position.
struct BraidParseError : std::runtime_error {
    size_t position;
    BraidParseError(const std::string& msg, size_t pos);
};

// Grammar (whitespace separated):
//   line := strands "|" term+
//   term := INT                       single signed generator
//         | "(" INT ".." INT ")" "^" INT
// A range term expands ascending when first <= second, descending otherwise.
// Negative exponents expand as the group-word inverse (letters inverted and
// reversed per repetition), so "(1..3)^-1" gives sigma_3^-1 sigma_2^-1 sigma_1^-1.
BraidWord parse_braid(const std::string& text);

// Bijection of {1,...,n}; images[i-1] is the image of i.
struct Permutation {
    std::vector<int> images;

    explicit Permutation(int n); // identity
    explicit Permutation(std::vector<int> imgs);

    int n() const { return static_cast<int>(images.size()); }
    int apply(int i) const { return images[static_cast<size_t>(i - 1)]; }
    // (this o other): apply `other` first.
    Permutation after(const Permutation& other) const;
    int cycle_count() const;
    bool operator==(const Permutation& o) const { return images == o.images; }
};

// Underlying permutation of the braid: letters act left to right, tracking a
// strand from the bottom of the braid to the top, so
// perm(u . v) = perm(v) after perm(u). Crossing signs are irrelevant.
Permutation braid_permutation(const BraidWord& b);

// Number of link components of the braid closure (= cycles of the permutation).
int closure_components(const BraidWord& b);

enum class TailOrder { Ascending, Descending };

// Two-block braid (sigma_1...sigma_{B-1})^k (sigma_1...sigma_T)^a, the
// descending variant replacing the tail with (sigma_T...sigma_1)^a.
// Constraints: B >= 3, k >= 1, 1 <= T <= B-1, a != 0. Family 5* torus knots
// sigma_1^e live in TorusKnotSpec instead (they have no tail block).
struct TwistedTorusSpec {
    int strands;       // B, strand count of the full-twist block
    int twists;        // k
    int tail_index;    // T, top generator index of the tail block
    int tail_exponent; // a
    TailOrder tail_order = TailOrder::Ascending;

    TwistedTorusSpec(int B, int k, int T, int a, TailOrder order);

    BraidWord expand() const;
    // Framing induced by the genus-2 surface the knot embeds in:
    // B*k + (T+1)*a.
    long long surface_slope() const;

    std::string to_text() const; // e.g. "14 | (1..13)^20 (1..7)^-3"
};

// sigma_1^exponent on two strands (the degenerate one-block rows).
struct TorusKnotSpec {
    int exponent;

    explicit TorusKnotSpec(int e);
    BraidWord expand() const;
};

} // namespace prism
