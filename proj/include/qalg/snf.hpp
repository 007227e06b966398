#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "qalg/field.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 6,
        MulCost = 8
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qalg {

using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Unimodular transforms of a Smith reduction outgrow 64 bits even for small
// inputs, so they are kept in arbitrary precision.
using BigMat = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;

BigMat to_big(const IMat& m);
BigMat big_mul(const BigMat& a, const BigMat& b);

// Overflow-checked 64-bit integer matrix product.
IMat imat_mul(const IMat& a, const IMat& b);

// Exact |det| = 1 test via modular determinants under the Hadamard bound;
// safe for matrices whose entries would overflow a direct expansion.
bool is_unimodular(const BigMat& m);
bool is_unimodular(const IMat& m);

// Exact determinant by fraction-free (Bareiss) elimination. Intermediate
// values are minors of the input, so this is for small-entry matrices; it
// throws loudly on 64-bit overflow instead of returning a wrong value.
std::int64_t det_exact(IMat a);

// D = U * C * V with U, V unimodular, D diagonal with non-negative entries
// d_1 | d_2 | ... | d_r followed by zeros.
struct SNFDecomposition {
    BigMat u;
    BigMat v;
    IMat d;

    std::vector<std::int64_t> diagonal() const {
        std::vector<std::int64_t> out;
        const Eigen::Index k = std::min(d.rows(), d.cols());
        for (Eigen::Index i = 0; i < k; ++i) out.push_back(d(i, i));
        return out;
    }
    std::vector<std::int64_t> invariant_factors() const {
        std::vector<std::int64_t> out;
        for (const std::int64_t x : diagonal()) {
            if (x != 0) out.push_back(x);
        }
        return out;
    }
};

// Pivot rule: smallest absolute value among the nonzero entries of the
// trailing submatrix, ties broken by lowest (row, column). The result is
// verified before it is returned: U*C*V = D re-multiplied exactly,
// |det U| = |det V| = 1, and the divisibility chain.
SNFDecomposition smith_normal_form(const IMat& c);

}  // namespace qalg
