#pragma once

#include "partq/rational.hpp"

#include <optional>
#include <vector>

namespace partq::occupancy {

/// n(n-1)...(n-k+1); 1 for k=0, 0 once a factor hits zero.
BigInt falling_factorial(long long n, long long k);
/// n(n+1)...(n+k-1); 1 for k=0. Requires n >= 1.
BigInt rising_factorial(long long n, long long k);
BigInt factorial(long long k);
/// C(n,k); 0 outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

struct OccupancyProfile {
    long long k = 0;  // balls
    long long n = 1;  // boxes
    std::optional<std::vector<long long>> theta;  // occupation numbers, sum k
};

enum class Balls { distinguishable, indistinguishable };
enum class Boxes { distinguishable, indistinguishable };
enum class MapKind { arbitrary, injective, surjective };

struct RegimeSpec {
    Balls balls = Balls::distinguishable;
    Boxes boxes = Boxes::distinguishable;
    MapKind map_kind = MapKind::arbitrary;
};

/// Number of functions realizing the occupation numbers: the multinomial
/// coefficient k!/(theta_1!...theta_n!).
BigInt mb_count(const OccupancyProfile& profile);
/// multinomial / n^k, exact. Throws MissingTheta / ThetaSumMismatch.
Rational mb_probability(const OccupancyProfile& profile);

/// At most one ball per box: C(n,k), 0 when k > n (exclusion).
BigInt fd_count(long long k, long long n);
/// Combinations with repetition: C(n+k-1, k).
BigInt be_count(long long k, long long n);

/// 1 / fd_count; throws ExclusionViolated when the count is zero.
Rational fd_probability_each(long long k, long long n);
Rational be_probability_each(long long k, long long n);

/// Closed-form count of distributions of k balls into n boxes under the
/// regime. Every branch is cross-checked against twelvefold_bruteforce in
/// the tests before being trusted.
BigInt twelvefold_count(long long k, long long n, const RegimeSpec& regime);

/// Independent oracle: enumerates all n^k functions, filters by map kind,
/// and counts orbits under ball and/or box permutations via canonical forms.
/// Throws SizeCapExceeded when n^k exceeds the cap.
BigInt twelvefold_bruteforce(long long k, long long n, const RegimeSpec& regime,
                             long long cap = 100000000);

}  // namespace partq::occupancy
