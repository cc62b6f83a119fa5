#pragma once

#include <map>

#include "qsnake/snake.hpp"

namespace qsnake {

struct QCharOptions {
    long long max_visits = 10'000'000; // cap on enumeration work
};

struct QCharReport {
    Character character;
    bool thin = false;
    bool special = false;
    bool antispecial = false;
    long long dim = 0;
    std::vector<std::pair<YMonomial, long long>> dominant;
};

// q-character of the snake module via non-overlapping path tuples.
QCharReport qchar_snake(const Algebra& alg, const Snake& s, const QCharOptions& opts = {});

Character qchar_tensor(const Algebra& alg, const std::vector<Snake>& factors,
                       const QCharOptions& opts = {});

std::vector<std::pair<YMonomial, long long>> dominant_terms(const Character& c);
std::vector<std::pair<YMonomial, long long>> antidominant_terms(const Character& c);

// Pushforward of the coefficients along wt.
std::map<Weight, long long> restrict_weights(const Character& c, const Algebra& alg);

} // namespace qsnake
