#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prism {

// Words in the rank-2 free group F(x, y). Letters are coded +1 = x, -1 = x^-1,
// +2 = y, -2 = y^-1. A FreeWord is always freely reduced.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<int8_t> letters); // reduces

    static FreeWord generator(int code) { return FreeWord({static_cast<int8_t>(code)}); }

    bool empty() const { return letters_.empty(); }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<int8_t>& letters() const { return letters_; }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const; // concatenate + reduce
    FreeWord pow(int e) const;                   // e may be negative
    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const FreeWord& o) const { return !(*this == o); }

    // Exponent sums (e_x, e_y).
    std::pair<long long, long long> abelianization() const;

    std::string to_string(bool primed = false) const;

private:
    std::vector<int8_t> letters_;
};

// Conjugacy class representative: cyclically reduced, stored as the
// lexicographically least rotation (order Y < X < x < y by letter code).
// Equality is equality up to rotation.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(const FreeWord& w); // cyclically reduces + canonicalizes

    bool empty() const { return word_.empty(); }
    int length() const { return word_.length(); }
    const FreeWord& rep() const { return word_; }

    CyclicWord inverse() const { return CyclicWord(word_.inverse()); }
    std::pair<long long, long long> abelianization() const { return word_.abelianization(); }

    bool operator==(const CyclicWord& o) const { return word_ == o.word_; }
    bool operator!=(const CyclicWord& o) const { return !(*this == o); }
    bool operator<(const CyclicWord& o) const; // for ordered containers

    std::string to_string(bool primed = false) const { return word_.to_string(primed); }

private:
    FreeWord word_;
};

inline CyclicWord cyclic_reduce(const FreeWord& w) { return CyclicWord(w); }

// Rank-2 automorphism given by generator images.
struct Automorphism {
    FreeWord image_x;
    FreeWord image_y;
    const char* name = "";

    FreeWord apply(const FreeWord& w) const;
    CyclicWord apply(const CyclicWord& w) const { return CyclicWord(apply(w.rep())); }
};

// The fixed enumeration of elementary Whitehead automorphisms of F(x, y):
// 7 letter permutations/inversions (type I) followed by 12 one-sided
// multiplications (type II). Order is fixed so minimization is deterministic.
const std::vector<Automorphism>& whitehead_automorphisms();

// Index of the inverse of whitehead_automorphisms()[i] within the same table.
size_t whitehead_inverse_index(size_t i);

struct AutomorphismSeq {
    std::vector<size_t> indices; // into whitehead_automorphisms()

    FreeWord apply(const FreeWord& w) const;
    CyclicWord apply(const CyclicWord& w) const { return CyclicWord(apply(w.rep())); }
    AutomorphismSeq inverse() const;
    AutomorphismSeq then(const AutomorphismSeq& next) const;
    std::string to_string() const;
};

// Greedy Whitehead minimization: repeatedly applies the first automorphism in
// table order that strictly shortens the cyclic word.
struct MinimizeResult {
    CyclicWord minimal;
    AutomorphismSeq trail; // trail.apply(input) == minimal up to rotation
};
MinimizeResult whitehead_minimize(const CyclicWord& w);

struct PrimitivityCertificate {
    bool primitive = false;
    CyclicWord minimal;
    AutomorphismSeq trail; // maps the input's class to `minimal`
};
// True iff w is part of a basis (minimal cyclic length 1).
PrimitivityCertificate is_primitive(const CyclicWord& w);

struct SeifertFiberedCertificate {
    bool fibered = false;
    CyclicWord minimal;
    // When fibered: transform.apply(w) equals the canonical class of
    // x^m y^n or of its inverse (inverted says which).
    AutomorphismSeq transform;
    bool inverted = false;
};
// True iff <x,y|w> presents the same group as <x,y|x^m y^n>, i.e. w is
// automorphically equivalent to (x^m y^n)^+-1. Decided by Whitehead
// minimization plus breadth-first closure under length-preserving moves with
// rotation/inversion folded into the node canonical form.
SeifertFiberedCertificate is_seifert_fibered(const CyclicWord& w, int m, int n);

// True iff x -> u, y -> v extends to an automorphism: the commutator [u, v]
// must be conjugate to [x, y] or its inverse.
bool is_basis_pair(const FreeWord& u, const FreeWord& v);

// Concrete word text: letters x X y Y, optional powers "x^3", groups
// "( ... )^2". Whitespace ignored.
FreeWord parse_word(const std::string& text);

// Template words additionally allow brace exponents that are linear forms in
// the family parameters, e.g. "(x^{s+1} y)^2 (x^{s+2} y)^2".
class WordTemplate {
public:
    // Expands at concrete (s, t); exponent 0 collapses to the empty word,
    // negative exponents raise std::invalid_argument.
    FreeWord substitute(int s, int t) const;

    friend WordTemplate parse_template(const std::string& text);

private:
    struct LinForm {
        int s = 0, t = 0, c = 1;
        long long eval(int ss, int tt) const {
            return static_cast<long long>(s) * ss + static_cast<long long>(t) * tt + c;
        }
    };
    struct Node {
        int8_t letter = 0;        // nonzero: letter node
        std::vector<Node> group;  // letter == 0: group node
        LinForm power;
    };
    std::vector<Node> nodes_;

    static void expand(const Node& n, int s, int t, std::vector<int8_t>& out);
};

WordTemplate parse_template(const std::string& text);

} // namespace prism
