#include "doctest.h"
#include "ncq/error.hpp"
#include "ncq/scalar.hpp"

using namespace ncq;

namespace {

std::vector<Scalar> sample_elements(const FieldMode& m) {
    Scalar a = alpha(m);
    return {
        Scalar(0L),          Scalar(3L),
        Scalar(Rat(-2, 7)),  a,
        a * a - Scalar(1L),  a.inverse() + Scalar(2L),
        a.pow(3) - a,        (a + Scalar(1L)) * (a - Scalar(1L)),
    };
}

}  // namespace

TEST_SUITE("scalar") {
    TEST_CASE("mode construction") {
        CHECK_THROWS_AS((void)FieldMode::cyclotomic(6, 0), NcqError);
        CHECK_THROWS_AS((void)FieldMode::cyclotomic(6, 6), NcqError);
        CHECK_THROWS_AS((void)FieldMode::cyclotomic(1, 1), NcqError);
        CHECK_THROWS_AS((void)FieldMode::cyclotomic(0, 1), NcqError);
        FieldMode m = FieldMode::cyclotomic(6, 7);
        CHECK(m.exponent() == 1);
        CHECK(m == FieldMode::cyclotomic(6, 1));
        CHECK(m != FieldMode::cyclotomic(3, 1));
        CHECK(FieldMode::generic() == FieldMode::generic());
        CHECK(m.str() == "cyclotomic(6,1)");
        CHECK(FieldMode::generic().str() == "generic");
    }

    TEST_CASE("field axioms on samples") {
        for (FieldMode m : {FieldMode::cyclotomic(6, 1), FieldMode::cyclotomic(5, 2),
                            FieldMode::generic()}) {
            auto xs = sample_elements(m);
            for (const auto& x : xs)
                for (const auto& y : xs) {
                    CHECK(x + y == y + x);
                    CHECK(x * y == y * x);
                    for (const auto& z : xs) {
                        CHECK((x + y) + z == x + (y + z));
                        CHECK((x * y) * z == x * (y * z));
                        CHECK(x * (y + z) == x * y + x * z);
                    }
                    if (!y.is_zero()) CHECK((x / y) * y == x);
                }
            for (const auto& x : xs) {
                CHECK(x + Scalar(0L) == x);
                CHECK(x * Scalar(1L) == x);
                CHECK((x - x).is_zero());
                if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
            }
        }
    }

    TEST_CASE("alpha powers and orders") {
        struct Row {
            unsigned n, e;
            long ord, ord3;
        };
        for (Row r : {Row{2, 1, 2, 2}, Row{3, 1, 3, 1}, Row{4, 1, 4, 4}, Row{5, 1, 5, 5},
                      Row{6, 1, 6, 2}, Row{7, 1, 7, 7}, Row{9, 1, 9, 3}, Row{6, 2, 3, 1},
                      Row{12, 2, 6, 2}}) {
            FieldMode m = FieldMode::cyclotomic(r.n, r.e);
            CHECK(order_of_alpha(m) == ExtOrder::of(r.ord));
            CHECK(order_of_alpha_cubed(m) == ExtOrder::of(r.ord3));
            CHECK(alpha(m).pow(r.ord).is_one());
            for (long k = 1; k < r.ord; ++k) CHECK(!alpha(m).pow(k).is_one());
        }
        FieldMode g = FieldMode::generic();
        CHECK(order_of_alpha(g) == ExtOrder::inf());
        CHECK(order_of_alpha_cubed(g) == ExtOrder::inf());
        CHECK(order_of_alpha(g).str() == "infinite");
    }

    TEST_CASE("alpha_pow matches pow") {
        for (FieldMode m : {FieldMode::cyclotomic(6, 1), FieldMode::cyclotomic(9, 2),
                            FieldMode::generic()}) {
            for (long k = -7; k <= 7; ++k) CHECK(alpha_pow(m, k) == alpha(m).pow(k));
        }
    }

    TEST_CASE("power sum telescopes") {
        for (FieldMode m : {FieldMode::cyclotomic(6, 1), FieldMode::cyclotomic(5, 1),
                            FieldMode::cyclotomic(2, 1), FieldMode::cyclotomic(3, 1),
                            FieldMode::generic()}) {
            Scalar a3 = alpha_pow(m, 3);
            CHECK(power_sum(m, 0).is_zero());
            for (long j = 1; j <= 50; ++j) {
                CHECK(power_sum(m, j) * (Scalar(1L) - a3) == Scalar(1L) - alpha_pow(m, 3 * j));
            }
        }
    }

    TEST_CASE("strings") {
        FieldMode c6 = FieldMode::cyclotomic(6, 1);
        Scalar z = zeta(c6);
        // zeta6^2 reduces mod Phi_6 = x^2 - x + 1
        CHECK((z * z - Scalar(1L)).str() == "zeta6 - 2");
        CHECK(Scalar(Rat(-2, 3)).str() == "-2/3");
        CHECK((z + z).str() == "2*zeta6");
        FieldMode c5 = FieldMode::cyclotomic(5, 1);
        CHECK((zeta(c5).pow(2) - Scalar(1L)).str() == "zeta5^2 - 1");
        FieldMode g = FieldMode::generic();
        Scalar a = alpha(g);
        CHECK(((a.pow(3) - Scalar(1L)) / a).str() == "(a^3 - 1)/a");
        CHECK((a.pow(2) + Scalar(1L)).str() == "a^2 + 1");
        CHECK((Scalar(1L) / (Scalar(1L) - a.pow(3))).str() == "(-1)/(a^3 - 1)");
        CHECK(alpha_pow(g, -2).str() == "(1)/a^2");
        CHECK(Scalar(0L).str() == "0");
    }

    TEST_CASE("rationality predicates") {
        FieldMode c6 = FieldMode::cyclotomic(6, 1);
        Scalar z = zeta(c6);
        // zeta6 satisfies z^2 = z - 1, so z^2 - z is rational
        CHECK((z * z - z).as_rational() == Rat(-1));
        CHECK(!z.is_rational());
        FieldMode g = FieldMode::generic();
        Scalar a = alpha(g);
        CHECK((a / a).as_rational() == Rat(1));
        CHECK(!(a + Scalar(1L)).is_rational());
    }

    TEST_CASE("multiplicative orders") {
        FieldMode c6 = FieldMode::cyclotomic(6, 1);
        CHECK(mult_order(alpha(c6)) == ExtOrder::of(6));
        CHECK(mult_order(-alpha(c6)) == ExtOrder::of(3));
        CHECK(mult_order(Scalar(1L)) == ExtOrder::of(1));
        CHECK(mult_order(Scalar(-1L)) == ExtOrder::of(2));
        CHECK(mult_order(Scalar(2L)) == ExtOrder::inf());
        CHECK(mult_order(alpha(c6) + Scalar(1L)) == ExtOrder::inf());
        FieldMode g = FieldMode::generic();
        CHECK(mult_order(alpha(g)) == ExtOrder::inf());
        CHECK(mult_order(alpha(g) / alpha(g)) == ExtOrder::of(1));
        CHECK_THROWS_AS((void)mult_order(Scalar(0L)), NcqError);
        FieldMode c9 = FieldMode::cyclotomic(9, 4);
        CHECK(mult_order(alpha(c9)) == ExtOrder::of(9));
        CHECK(mult_order(alpha_pow(c9, 3)) == ExtOrder::of(3));
    }
}
