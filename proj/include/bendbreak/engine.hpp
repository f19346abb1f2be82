#pragma once

// Generic boundary-recursion engine: exact integers, binomials, the
// marked-boundary evaluation formula and product-type boundary degrees.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "bendbreak/errors.hpp"

namespace bendbreak {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& v) { return v.str(); }

inline Integer integer_from_decimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bare sign is not an integer: '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("bad integer literal: '" + s + "'");
    return Integer(s);
}

// C(n, k); out-of-range arguments give 0 so printed sums are total.
inline Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n - k < k) k = n - k;
    Integer acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

// One marked boundary component's contribution. Each unordered boundary
// enters twice, once per ordering of its two curve components.
struct BoundaryTerm {
    long long ell = 1;   // multiplicity of the component (A_{ell-1} fibre)
    long long c1L = 0;   // first component degree against L
    long long c2L = 0;   // second component degree against L
    Integer d11;         // one distinguished point on each component
    Integer d02;         // both distinguished points on the second component
};

// L^2 d(Y) = sum ell(Z) [ (C1.L)(C2.L) d11(Z) - (C1.L)^2 d02(Z) ].
// Divides by L^2 exactly; a remainder or a negative quotient is an error.
inline Integer theorem1_sum(long long l_squared, const std::vector<BoundaryTerm>& terms) {
    if (l_squared <= 0) throw PreconditionError("theorem1_sum: L^2 must be positive");
    Integer total = 0;
    for (const BoundaryTerm& t : terms) {
        if (t.ell < 1) throw PreconditionError("theorem1_sum: ell < 1");
        if (t.d11 < 0 || t.d02 < 0)
            throw PreconditionError("theorem1_sum: negative boundary degree");
        total += t.ell * (Integer(t.c1L) * t.c2L * t.d11 - Integer(t.c1L) * t.c1L * t.d02);
    }
    if (total % l_squared != 0)
        throw DivisibilityError("theorem1_sum: sum " + to_decimal(total) +
                                " not divisible by " + std::to_string(l_squared));
    Integer q = total / l_squared;
    if (q < 0)
        throw NegativeCountError("theorem1_sum: negative count " + to_decimal(q));
    return q;
}

// Degrees of a product-type boundary: two independently varying families of
// dimensions n1 and n-1-n1 meeting transversely, n-1 points to distribute.
struct ProductDegrees {
    Integer d11;
    Integer d02;
};

inline ProductDegrees product_type_degrees(long long n, long long n1,
                                           const Integer& count1, const Integer& count2,
                                           long long c1c2) {
    if (n < 3) throw PreconditionError("product_type_degrees: requires n >= 3");
    if (n1 < 1 || n - 1 - n1 < 0)
        throw PreconditionError("product_type_degrees: marking needs 1 <= n1 <= n-1");
    ProductDegrees out;
    out.d11 = binomial(n - 1, n1 - 1) * count1 * count2 * c1c2;
    out.d02 = binomial(n - 1, n1) * count1 * count2 * c1c2;
    return out;
}

}  // namespace bendbreak
