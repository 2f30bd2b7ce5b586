#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcalab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial_coeff(std::uint64_t n, std::uint64_t k);

// Number of non-decreasing sequences of length t over {1..L}: C(t+L-1, t).
BigInt count_legal_sequences(std::uint64_t L, std::uint64_t t);

// Number of ways to write L as an ordered sum of t+1 non-negative integers:
// C(t+L, t). Counts level-gap vectors (a_0,...,a_t) with sum L; one more "gap"
// than the sequence count above, so the two differ (a_0 = 0 is allowed here).
BigInt count_compositions(std::uint64_t L, std::uint64_t t);

// Exact probability that t independent uniform levels in {1..L} are
// non-decreasing: count_legal_sequences(L, t) / L^t.
BigRat legal_path_probability(std::uint64_t L, std::uint64_t t);

// Checks legal_path_probability(L, t) <= (e*(t+L)/(L*t))^t using a rational
// lower bound for e; true means the inequality certainly holds.
bool legal_probability_bound_holds(std::uint64_t L, std::uint64_t t);

// Brute force over all L^t level tuples; for cross-checking the closed form.
BigInt enumerate_legal_sequences(std::uint64_t L, std::uint64_t t);

}  // namespace lcalab
