#include <doctest.h>

#include "strands/bigint.hpp"
#include "strands/counting.hpp"

using namespace strands;

TEST_CASE("big integers: arithmetic basics") {
    BigUInt a(123456789012345ULL), b(987654321ULL);
    CHECK((a + b).str() == "123457776666666");
    CHECK((a * b).str() == "121932631124827861592745");
    BigUInt c = a * b;
    c.exact_div(987654321ULL);
    CHECK(c == a);
    CHECK_THROWS(BigUInt(10).exact_div(3));
    CHECK(BigUInt(0).str() == "0");
    CHECK(BigUInt(7) < BigUInt(10));
    CHECK(BigUInt(1000000000ULL).str() == "1000000000");
}

TEST_CASE("binomials") {
    CHECK(binomial(0, 0).to_ull() == 1);
    CHECK(binomial(5, 2).to_ull() == 10);
    CHECK(binomial(3, 7).to_ull() == 0);
    CHECK(binomial(52, 26).str() == "495918532948104");
    CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("catalan and k-catalan values") {
    const unsigned long long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n) CHECK(catalan(n).to_ull() == cat[n]);
    // E(n) = A_n(1,3) = (1/(2n+1)) C(3n,n)
    const unsigned long long e[] = {1, 1, 3, 12, 55, 273, 1428, 7752};
    for (int n = 0; n <= 7; ++n) CHECK(exceptional_count(n).to_ull() == e[n]);
    for (int n = 0; n <= 7; ++n) {
        BigUInt direct = binomial(3 * n, n);
        direct.exact_div(2 * n + 1);
        CHECK(exceptional_count(n) == direct);
    }
    CHECK(k_catalan(3, 4) == exceptional_count(4));
}

TEST_CASE("rothe A_n(4,3) values") {
    CHECK(rothe(4, 3, 0).to_ull() == 1);
    CHECK(rothe(4, 3, 1).to_ull() == 4);
    CHECK(rothe(4, 3, 2).to_ull() == 18);
    CHECK(rothe(4, 3, 3).to_ull() == 88);
    CHECK(rothe(4, 3, 4).to_ull() == 455);
    CHECK(rothe(4, 3, 5).to_ull() == 2448);
    CHECK(rothe(1, 2, 6) == catalan(6));
}

TEST_CASE("recursions agree with closed forms") {
    CHECK(check_k_fold_recursion(3, 12).ok);
    CHECK(check_k_fold_recursion(2, 12).ok);
    CHECK(check_four_three_recursion(8).ok);
    CHECK(check_generating_function(10).ok);
}
