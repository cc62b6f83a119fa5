#pragma once

#include <array>
#include <string>

#include "qsnake/qchar.hpp"

namespace qsnake {

// The six participants of the 3-term relation attached to a prime snake:
// [L][R] = [B][T] + [X][Y].
struct RelationInstance {
    Snake top;
    Snake left;
    Snake right;
    Snake bottom;
    NeighbourPair nbrs;
};

struct VerificationReport {
    bool identity_holds = false;
    bool catalog_lr_ok = false; // dominant terms of chi(L)chi(R) match the catalog
    bool catalog_tb_ok = false; // ... of chi(T)chi(B) match the catalog minus one
    bool xy_special = false;
    // dims of L, R, T, B, X, Y
    std::array<long long, 6> dims{};
    std::vector<std::pair<YMonomial, long long>> lhs_dominant;
    std::vector<std::pair<YMonomial, long long>> tb_dominant;
    std::vector<std::string> notes;

    bool ok() const { return identity_holds && catalog_lr_ok && catalog_tb_ok && xy_special; }
};

struct NonPrimeReport {
    bool identity_holds = false;
    long long dominant_count = 0;

    bool ok() const { return identity_holds && dominant_count == 1; }
};

RelationInstance extended_relation(const Algebra& alg, const Snake& s);

VerificationReport verify_relation(const Algebra& alg, const RelationInstance& r,
                                   const QCharOptions& opts = {});

// Character-level check of the tensor-factorization identity for non-prime
// snakes: chi(L)chi(R) = chi(B)chi(T), plus a dominant-term count.
NonPrimeReport verify_nonprime(const Algebra& alg, const Snake& s, const QCharOptions& opts = {});

// The dominant-monomial catalog of chi(L)chi(R): one entry per split position.
std::vector<YMonomial> dominant_catalog(const Algebra& alg, const Snake& s);

enum class Family {
    KR,
    TwoNode,
    TwoNodeTilde,
    AMinAff,
    AMinAffTilde,
    BMinAff,
    BMinAffTilde,
    BWrapping,
};

struct FamilyParams {
    int i = 0;
    int k = 0;
    int m = 0;
    int n = 0;
    std::vector<int> lambda;     // weights lambda_a..lambda_b (min-aff families)
    int mid = 0;                 // spinor-string length parameter (wrapping)
    std::vector<int> lambda_bar; // descending weights (wrapping)
};

// Builds the top snake from the family's printed index recurrences, forms the
// extended relation, and checks the derived participants against the printed
// ones. A disagreement raises FamilyMismatch with diagnostics.
RelationInstance family_instance(const Algebra& alg, Family fam, const FamilyParams& params);

const char* family_name(Family f);

} // namespace qsnake
