#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biell/bielliptic.hpp"
#include "biell/descent2.hpp"

namespace biell {
namespace families {

enum class FamilyTag { G2NoTwoTorsion, G2Partial, G2Full, G3 };
std::string tag_name(FamilyTag t);

// Where a reported value comes from: stated by the defining theorem or table,
// imported from published computations, or computed here with a certificate.
enum class Provenance { Stated, Literature, Computed };
std::string provenance_name(Provenance p);

struct ExpectedRank {
    std::optional<int> value;
    Provenance provenance = Provenance::Stated;
    std::string note;
};

struct Factor {
    std::string label;
    TargetModel model;
    QuotientMap map;
    std::string matched;  // outcome of the isomorphism matching
    std::optional<descent2::RankCertificate> rank;  // when resolved
};

struct FamilyInstance {
    FamilyTag tag = FamilyTag::G2Partial;
    std::vector<std::pair<std::string, Int>> params;  // ordered named parameters
    HyperellipticModel curve;
    std::vector<Factor> factors;
    ExpectedRank expected_rank;
    bool congruence_class_checked = false;
    std::vector<std::string> notes;
};

struct FamilyOptions {
    bool resolve_ranks = true;       // run descents/searches on elliptic factors
    Int search_height = 100;
    double precision = 1e-8;
    std::optional<int> literature_hint;  // rank imported from published tables
    std::string literature_ref;
};

// y^2 = x^6 + a m^3 for a not a perfect cube, m squarefree: quotients
// y^2 = x^3 + a m^3 and the m-independent y^2 = x^3 + a^2.
FamilyInstance g2_no_two_torsion(const Int& a, const Int& m,
                                 const FamilyOptions& opt = {});

// y^2 = d^3 x^6 + p^3 for squarefree d, prime p = 5 (mod 12) or
// p = 3 (mod 4), p > 3, p not dividing d: quotients y^2 = x^3 + p^3 and
// y^2 = x^3 + d^3; the Jacobian rank is rank(E_d) plus 0 or 1 by class.
FamilyInstance g2_partial(const Int& d, const Int& p,
                          const FamilyOptions& opt = {});

// d y^2 = x^6 + 3dkp x^4 + (3k^2p^2 - 1)d^2 x^2 + (k^3p^3 - kp)d^3 for
// squarefree d, k outside {-1, 0, 1}, prime p = 3 (mod 8); both quotients
// have full rational 2-torsion.
FamilyInstance g2_full(const Int& d, const Int& k, const Int& p,
                       const FamilyOptions& opt = {});

// D y^2 = (x^2 - Da)(x^2 - Db)(x^2 - Dc)(x^2 - Dd) for distinct nonzero
// a, b, c, d and squarefree D: an elliptic factor with full 2-torsion plus a
// D-independent genus-2 factor.
FamilyInstance g3(const Int& a, const Int& b, const Int& c, const Int& dd,
                  const Int& D, const FamilyOptions& opt = {});

// Parameter table rows for the rank-r genus-2 families, r = 0..11. Rows with
// r >= 5 use a = 4k and carry the k factorization; their ranks rest on
// published computations (literature provenance), as do r = 3, 4.
struct Corollary22Row {
    int r = 0;
    Int a;
    std::vector<Int> k_factors;  // nonempty iff a = 4k
    Provenance rank_provenance = Provenance::Literature;
    std::string note;
};
Corollary22Row corollary22_params(int r);

struct Corollary32Row {
    int r = 0;
    Int a, b, c, d;
};
Corollary32Row corollary32_params(int r);

// None of (d-a)(d-b)(c-b)(c-a), (d-a)(d-c)(b-c)(b-a), (d-b)(d-c)(a-c)(a-b)
// is a perfect square.
bool square_triple_check(const Int& a, const Int& b, const Int& c, const Int& d);

// Primes where the reduced model (after naive per-prime scaling) is singular.
std::vector<Int> bad_reduction_set(const HyperellipticModel& c,
                                   const ntheory::Config& cfg = ntheory::default_config());

struct DistinguishedPair {
    size_t i = 0, j = 0;
    std::optional<Int> prime;  // a prime of bad reduction for exactly one curve
};

struct NonIsomorphyCertificate {
    std::vector<DistinguishedPair> pairs;
    bool all_distinguished = true;
};

NonIsomorphyCertificate non_isomorphy_certificate(
    const std::vector<FamilyInstance>& instances,
    const ntheory::Config& cfg = ntheory::default_config());

}  // namespace families
}  // namespace biell
