#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prism/bigint.hpp"
#include "prism/braid.hpp"
#include "prism/laurent.hpp"

namespace prism {

// How the knot sits in the genus-2 surface: TypeA cuts both torus blocks
// along longitudes; TypeB (families 1A, 1B2, 3A) swaps the roles of x and x'.
enum class EmbeddingType { TypeA, TypeB };

// The 30 rows of the matching table: 6 sporadic knots, 22 parameterized
// subfamilies, and the 2 torus-knot rows.
enum class FamilyId {
    Spor1, Spor2, Spor3, Spor4, Spor5, Spor6,
    F1A_neg, F1A_pos,
    F1B1_neg, F1B1_pos, F1B2_neg, F1B2_pos,
    F2_1_neg, F2_1_pos, F2_2_neg, F2_2_pos,
    F3A_neg, F3A_pos, F3B_neg, F3B_pos,
    F4_1_neg, F4_1_pos, F4_2_neg, F4_2_pos,
    F5_1_neg, F5_1_pos, F5_2_neg, F5_2_pos,
    F5_star_neg, F5_star_pos,
};

constexpr int kFamilyCount = 30;
const std::vector<FamilyId>& all_families();

// Integer bivariate polynomial in the family parameters (s, t).
class Poly2 {
public:
    struct Term {
        int es = 0, et = 0;
        long long c = 0;
    };

    Poly2() = default;
    static Poly2 constant(long long c);
    // "16ts+8s+30t+11", "22s^2+75s+64", "8ts^2+40ts+...": terms joined by
    // +/-, each an optional coefficient times powers of s and t.
    static Poly2 parse(const std::string& text);

    Poly2 negated() const;
    long long eval(long long s, long long t) const;
    const std::vector<Term>& terms() const { return terms_; }
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

// One table row: braid construction polynomials, prism coefficients, ranges,
// embedding data, and the free-group word formulas (empty strings when the
// row has none).
struct FamilyRow {
    FamilyId id;
    std::string name; // e.g. "5+1", "1B2-", "Spor3", "5-*"
    int arity = 2;    // 0: sporadic, 1: s only, 2: (s, t)

    bool torus = false; // 5* rows: sigma_1^p on two strands
    Poly2 B, k, T, a;   // braid spec polynomials (unused for torus rows)
    TailOrder order = TailOrder::Ascending;

    Poly2 p, q; // q carries its sign
    std::optional<Poly2> r;

    int s_min = 0, t_min = 0;
    std::vector<std::pair<int, int>> excluded;

    std::optional<EmbeddingType> embedding; // absent for 5*

    // Word formulas (templates in s, t); empty when the row has none stated.
    std::string inner_word;     // w, the class in the inner handlebody
    std::string outer_word;     // w' (empty for families 2/4/5 and Spor/1A)
    std::string basis_first;    // claimed basis pair (A, B) with sf word A^2 B^2
    std::string basis_second;
    std::string primitive_with; // stated basis partner of the primitive word
    bool sf_outer = false;      // 3A: the Seifert-fibered word is the outer one
};

const std::vector<FamilyRow>& family_rows();
const FamilyRow& family_row(FamilyId id);
FamilyId family_from_name(const std::string& name);

// Coefficients of the prism manifold P(p, q); r is carried as metadata only.
struct PrismCoeffs {
    long long p = 0;
    long long q = 0;
    std::optional<long long> r;

    // P(p, q) = P(-p, -q): flip both signs so q > 0.
    PrismCoeffs normalized() const;
};

struct FamilyInstance {
    FamilyId family;
    int s = 0, t = 0;
    std::variant<TwistedTorusSpec, TorusKnotSpec> braid;
    PrismCoeffs coeffs;
    std::optional<EmbeddingType> embedding;

    BraidWord expand() const;
    std::string braid_text() const;
    bool is_torus_row() const { return std::holds_alternative<TorusKnotSpec>(braid); }
    const TwistedTorusSpec& spec() const { return std::get<TwistedTorusSpec>(braid); }
};

// Row instantiated at concrete parameters; throws std::out_of_range when
// (s, t) violates the row's declared range (including excluded pairs).
FamilyInstance instantiate(FamilyId f, int s, int t = 0);

// Row-level certificates. All exact.

// B*k + (T+1)*a == 4|q|; rejects the 5* rows (no two-block surface).
bool slope_certificate(const FamilyInstance& inst);

struct DeterminantCheck {
    BigInt burau_det;          // |det(I - b(K sigma))| at t = -1
    BigInt alexander_at_neg1;  // |Delta(-1)| from the Laurent pipeline
    long long expected = 0;    // |p|
    bool pass = false;
};
// Both determinant pipelines against |p|. A precomputed Alexander polynomial
// may be passed to avoid recomputation.
DeterminantCheck determinant_certificate(const FamilyInstance& inst,
                                         const LaurentPoly* alexander = nullptr);

// p = 3 (mod 4) for odd q and p = 1 (mod 4) for even q, after q > 0
// normalization.
bool sign_rule_check(const PrismCoeffs& coeffs);

// Dedekind sum s(a, b) = sum ((i/b))((ai/b)), computed by the reciprocity
// recursion; requires gcd(a, b) = 1, b >= 1.
BigRat dedekind_sum(const BigInt& a, const BigInt& b);

// 1 - 6q + 8q^2 + p(-1 + 6q - 2q^2) == 6*ddelta (mod 24q) with q > 0
// normalization; ddelta is Delta''(1) of the instance's Alexander polynomial.
bool casson_walker_congruence(const PrismCoeffs& coeffs, const BigInt& ddelta);

struct EnumerationCaps {
    int max_s = 4;
    int max_t = 4;
    std::map<FamilyId, std::pair<int, int>> per_family; // overrides (max_s, max_t)

    std::pair<int, int> caps_for(FamilyId f) const;
};

// Deterministic: family enum order, then lexicographic (s, t) within range.
std::vector<FamilyInstance> enumerate_instances(const EnumerationCaps& caps);

// Machine-readable catalogue of all rows (id, braid template, polynomial
// coefficient arrays, ranges, embedding type) as a JSON document.
std::string catalogue_json();

} // namespace prism
