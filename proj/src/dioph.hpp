#pragma once

// Bounded exhaustive solvers for the exponential Diophantine equations that
// drive the classification, plus the Pell generator for x^2 - 125 y^2 = +-4.
// Nothing here proves completeness; every result is "complete up to the
// recorded bounds".

#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace ecq {

using IntTuple = std::vector<Int>;

struct SearchBound {
    std::string name;
    Int value;
};

/// One-parameter symbolic family, e.g. h -> (2^(h-2)-1, 2^(h-2)+1, h, 2).
struct SolutionFamily {
    std::string parameter;
    std::vector<std::string> tuple;
    std::string range;
};

struct RejectedTuple {
    IntTuple tuple;
    std::string reason;
};

struct SolutionSet {
    std::string equation_id;
    std::vector<std::string> variables;
    std::vector<IntTuple> solutions;  // sorted, verified by substitution
    std::vector<SolutionFamily> families;
    std::vector<IntTuple> flagged;  // members of an unresolved family, kept apart
    std::vector<RejectedTuple> rejected;
    std::vector<SearchBound> bounds;
};

/// x^m - y^n = 1 with 2 <= |x|,|y| <= bound and 2 <= m,n <= max_exponent.
/// max_exponent = 0 selects the bit length of `bound`.
SolutionSet catalan_search(long bound, unsigned max_exponent = 0);

/// 16 p^m + 1 = y^n with |p| prime <= prime_bound, 1 < m <= exponent_bound,
/// n prime and |y| a prime power.
SolutionSet lemma22_search(long prime_bound, unsigned exponent_bound);

/// x^2 + 2^h = y^n in positive integers, y odd, n > 1, 3 <= h <= h_bound,
/// x, y <= bound.
SolutionSet lemma23_search(unsigned h_bound, long bound);

/// x^2 - 125 = sign * 4 y^l with |x| <= bound, y > 0, 2 <= l <= exponent_bound.
/// Tuples are (x, y, l, sign). Members of the shape "l odd, 5 does not
/// divide x, sign = +1" are reported in `flagged`.
SolutionSet lemma24_search(long bound, unsigned exponent_bound);

/// s^2 - 11 s - 1 = sign * y^l obtained from lemma24_search via x = 2s - 11,
/// keeping |s| a prime power and y a prime power or 1. Tuples (s, y, l, sign).
SolutionSet cor25_filter(long bound, unsigned exponent_bound);

/// First `count` solutions (x, y), y > 0, of x^2 - 125 y^2 = sign, sign = +-4,
/// in increasing y, from powers of (11 + sqrt(125)) / 2.
std::vector<std::pair<Int, Int>> pell_125(int sign, unsigned count);

/// X^2 - k = Y^3 with |Y| <= bound. Tuples (X, Y).
SolutionSet mordell_search(const Int& k, long bound);

/// Identifiers accepted by the dioph CLI command.
const std::vector<std::string>& equation_ids();

}  // namespace ecq
