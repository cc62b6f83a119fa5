#pragma once

#include <set>

#include "qsnake/tsystem.hpp"

namespace qsnake {

// A q-string on a single node: Y_{j,start} Y_{j,start+2r} ... (len factors).
struct QString {
    int start = 0;
    int len = 0;
    auto operator<=>(const QString&) const = default;
};

// Allowed A-variable indices of a truncation.
using TruncationRegion = std::set<Lp>;

// Greedy longest-run extraction from the least shift; the result is pairwise
// in general position and multiplies back to the input.
std::vector<QString> string_decompose(const YMonomial& m, int node = 1, int r = 1);

// Exact single-node characters from the closed forms: simple modules via the
// string normal form, Weyl modules as products of two-term factors.
Character sl2_simple_qchar(const YMonomial& m, int node = 1, int r = 1);
Character sl2_weyl_qchar(const YMonomial& m, int node = 1, int r = 1);

enum class TrichotomyCase { I, II, III };

// Classification of a lowering from a term of a truncated rank-1 character,
// with the membership cross-checks.
TrichotomyCase sl2_trichotomy(const YMonomial& M, const YMonomial& m, int a_shift,
                              const TruncationRegion& region);

struct ThmAIvRow {
    YMonomial m;
    int node = 0;
    std::vector<YMonomial> witnesses; // i-dominant class members matching the equation
    Character lhs;                    // truncated projected simple character
    Character rhs;                    // projected class sum
    bool ok = false;
};

struct ThmACertificate {
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool cond_iv = false;
    std::vector<ThmAIvRow> iv_rows;
    std::vector<std::string> notes;
    bool verdict = false;
};

// Checks the four sufficiency conditions for a candidate truncated character.
ThmACertificate thmA_verify(const Algebra& alg, const YMonomial& m_plus,
                            const std::vector<YMonomial>& candidate_set,
                            const TruncationRegion& region);

struct ExclusionCertificate {
    YMonomial dominant; // the non-highest dominant monomial under test
    TruncationRegion region;
    std::vector<YMonomial> candidate_set;
    ThmACertificate cert;
    YMonomial witness;
    bool witness_absent = false;

    bool ok() const { return cert.verdict && witness_absent; }
};

// Certifies that the dominant monomial of the T*B side at split position R
// heads a simple module whose character leaves the T*B character.
ExclusionCertificate exclusion_certificate(const Algebra& alg, const RelationInstance& rel, int R,
                                           const QCharOptions& opts = {});

// Membership of a node-i projected monomial in beta_i(base * Q^-_region).
bool in_beta_region(const Algebra& alg, int node, const YMonomial& beta_base, const YMonomial& mu,
                    const TruncationRegion& region);

} // namespace qsnake
