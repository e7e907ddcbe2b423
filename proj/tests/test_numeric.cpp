#include "doctest.h"
#include "roundsleek/bounded_real.hpp"
#include "roundsleek/lazy_real.hpp"
#include "roundsleek/rational.hpp"

using namespace roundsleek;

TEST_CASE("rational parse and print round-trip") {
    CHECK(rat_str(*rat_parse("3/4")) == "3/4");
    CHECK(rat_str(*rat_parse("-6/8")) == "-3/4");
    CHECK(rat_str(*rat_parse("5")) == "5");
    CHECK(!rat_parse("1/0"));
    CHECK(!rat_parse(""));
    CHECK(!rat_parse("a/b"));
    CHECK(!rat_parse("1.5"));
}

TEST_CASE("rat_decimal truncates exactly") {
    CHECK(rat_decimal(rat(1, 3), 3) == "0.333");
    CHECK(rat_decimal(rat(-1, 3), 3) == "-0.333");
    CHECK(rat_decimal(Rat(2), 2) == "2.00");
    CHECK(rat_decimal(rat(7, 2), 1) == "3.5");
}

TEST_CASE("rat_sqrt_exact recognizes perfect squares only") {
    CHECK(*rat_sqrt_exact(Rat(4)) == 2);
    CHECK(*rat_sqrt_exact(rat(9, 16)) == rat(3, 4));
    CHECK(!rat_sqrt_exact(Rat(2)));
    CHECK(!rat_sqrt_exact(rat(1, 3)));
}

TEST_CASE("bounded real arithmetic keeps enclosures") {
    BoundedReal a(rat(1, 2), Rat(1));
    BoundedReal b(Rat(2));
    CHECK((a + b).lo() == rat(5, 2));
    CHECK((a + b).hi() == Rat(3));
    CHECK((a - b).lo() == rat(-3, 2));
    CHECK(br_square(BoundedReal(Rat(-2), Rat(1))).lo() == 0);
    CHECK(br_square(BoundedReal(Rat(-2), Rat(1))).hi() == 4);
    CHECK(a.meet(BoundedReal(rat(3, 4), Rat(5))).lo() == rat(3, 4));
    CHECK(a.meet(BoundedReal(rat(3, 4), Rat(5))).hi() == 1);
}

TEST_CASE("lazy sqrt refines and compares exactly") {
    LazyReal r2 = LazyReal::sqrt_of(Rat(2));
    BoundedReal coarse = r2.enclosure(4);
    BoundedReal fine = r2.enclosure(64);
    CHECK(fine.width() <= rat_pow2(-64));
    CHECK(coarse.lo() <= fine.lo());
    CHECK(fine.hi() <= coarse.hi());

    CHECK(compare(r2, rat(3, 2), 64) == Ordering::Less);
    CHECK(compare(r2, rat(7, 5), 64) == Ordering::Greater);
    // sqrt(2) vs sqrt(2): structural equality, no refinement loop
    CHECK(compare(r2, LazyReal::sqrt_of(Rat(2)), 8) == Ordering::Equal);
    CHECK(compare(LazyReal::sqrt_of(Rat(4)), Rat(2), 8) == Ordering::Equal);
}

TEST_CASE("lazy arithmetic tracks exact rational forms") {
    LazyReal a(rat(1, 3));
    LazyReal b(rat(2, 3));
    CHECK(*(a + b).exact_rat() == 1);
    CHECK(compare(a + b, Rat(1), 8) == Ordering::Equal);
    CHECK(*lz_exact_square(LazyReal::sqrt_of(rat(9, 16))) == rat(9, 16));
    CHECK(compare(lz_min(a, b), a, 8) == Ordering::Equal);
    CHECK(compare(lz_max(a, b), b, 8) == Ordering::Equal);
    CHECK(compare(lz_abs(LazyReal(rat(-5, 7))), rat(5, 7), 8) == Ordering::Equal);
}

TEST_CASE("dyadic helpers") {
    CHECK(rat_pow2(-3) == rat(1, 8));
    CHECK(rat_pow2(2) == 4);
    CHECK(ceil_log2_inverse(rat(1, 5)) == 3);  // 2^-3 = 1/8 <= 1/5
    CHECK(rat_floor(rat(7, 2)) == 3);
    CHECK(rat_floor(rat(-7, 2)) == -4);
}
