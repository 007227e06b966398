#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qalg/exact_linalg.hpp"

using namespace qalg;

namespace {

Mat<Rational> qmat(std::initializer_list<std::initializer_list<int>> rows) {
    const Index m = static_cast<Index>(rows.size());
    const Index n = m > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
    Mat<Rational> a(m, n);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (int v : row) a(i, j++) = Rational(v);
        ++i;
    }
    return a;
}

// 64-bit mix of a rational matrix, used to pin determinism.
std::uint64_t fingerprint(const Mat<Rational>& a) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::int64_t x) {
        h ^= static_cast<std::uint64_t>(x);
        h *= 1099511628211ull;
    };
    mix(a.rows());
    mix(a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) {
            mix(a(i, j).num());
            mix(a(i, j).den());
        }
    return h;
}

}  // namespace

TEST_CASE("reduced echelon over the rationals") {
    auto a = qmat({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    auto e = reduced_row_echelon(a);
    CHECK(e.rank() == 2);
    CHECK(e.pivots == std::vector<Index>{0, 1});
    // rows are fully reduced with unit pivots
    CHECK(e.rows(0, 0) == Rational(1));
    CHECK(e.rows(0, 1) == Rational(0));
    CHECK(e.rows(1, 1) == Rational(1));
    CHECK(rank_of(qmat({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("kernels over the rationals") {
    auto a = qmat({{1, 2, 3}, {2, 4, 6}});
    auto k = right_kernel(a);
    CHECK(k.cols() == 2);
    CHECK(is_zero_mat<Rational>(a * k));

    auto lk = left_kernel(a);
    CHECK(lk.rows() == 1);
    CHECK(is_zero_mat<Rational>(lk * a));
    // the dependent row 2*row0 - row1 = 0
    CHECK(lk(0, 0) == Rational(-2));
    CHECK(lk(0, 1) == Rational(1));
}

TEST_CASE("rank-nullity on random-ish rational matrices") {
    std::uint64_t s = 12345;
    auto next = [&s]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const Index m = 1 + static_cast<Index>(next() % 5);
        const Index n = 1 + static_cast<Index>(next() % 5);
        Mat<Rational> a(m, n);
        for (Index i = 0; i < m; ++i)
            for (Index j = 0; j < n; ++j) a(i, j) = Rational(static_cast<std::int64_t>(next() % 7) - 3);
        const Index r = rank_of(a);
        CHECK(right_kernel(a).cols() == n - r);
        CHECK(left_kernel(a).rows() == m - r);
        CHECK(is_zero_mat<Rational>(a * right_kernel(a)));
        CHECK(is_zero_mat<Rational>(left_kernel(a) * a));
    }
}

TEST_CASE("express rows and membership") {
    auto a = qmat({{1, 0, 1}, {0, 1, 1}});
    auto e = reduced_row_echelon(a);
    auto b = qmat({{2, 3, 5}, {1, -1, 0}});
    auto x = express_rows(e, b);
    REQUIRE(x.has_value());
    CHECK(Mat<Rational>(*x * e.rows) == b);
    auto outside = qmat({{0, 0, 1}});
    CHECK_FALSE(express_rows(e, outside).has_value());
    RowVec<Rational> v = outside.row(0);
    CHECK_FALSE(in_row_space(e, v));
}

TEST_CASE("echelon over a prime field") {
    Mat<Fp> a(2, 3);
    a << Fp(1, 5), Fp(2, 5), Fp(3, 5), Fp(3, 5), Fp(1, 5), Fp(0, 5);
    auto e = reduced_row_echelon(a);
    CHECK(e.rank() == 2);
    auto k = right_kernel(a);
    CHECK(k.cols() == 1);
    CHECK(is_zero_mat<Fp>(a * k));

    // mod 2 the second row of {{1,1},{1,1}} is dependent
    Mat<Fp> b(2, 2);
    b << Fp(1, 2), Fp(1, 2), Fp(3, 2), Fp(5, 2);
    CHECK(rank_of(b) == 1);
}

TEST_CASE("echelon is deterministic") {
    auto a = qmat({{2, 4, 1}, {3, 1, 0}, {5, 5, 1}});
    auto e1 = reduced_row_echelon(a);
    auto e2 = reduced_row_echelon(a);
    CHECK(fingerprint(e1.rows) == fingerprint(e2.rows));
    CHECK(e1.pivots == e2.pivots);
}
