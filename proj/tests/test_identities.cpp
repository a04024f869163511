#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thyp/identities.hpp"

using namespace thyp;

namespace {

IdentityParams with(int p, int l, int kappa)
{
    IdentityParams ip;
    ip.p = p;
    ip.l = l;
    ip.kappa = kappa;
    return ip;
}

}  // namespace

TEST_CASE("kernel ladder")
{
    for (int l = -2; l <= 3; ++l)
        CHECK(first_mismatch(kernel_ladder_sides(with(1, l, 0), 6)) == -1);
    for (int l = 0; l <= 1; ++l)
        CHECK(first_mismatch(kernel_interp_sides(with(1, l, 0), 5)) == -1);
}

TEST_CASE("sample on the root pair curve")
{
    CHECK(first_mismatch(pair_sample_sides(with(1, 0, 0), 10)) == -1);
    CHECK(first_mismatch(pair_sample_sides(with(3, 0, 0), 8)) == -1);
}

TEST_CASE("families")
{
    struct F { LineFamily f; int p; int kmax; };
    for (F f : {F{LineFamily::SLine, 1, 1}, F{LineFamily::SLine, 2, 1}, F{LineFamily::SPair, 1, 2},
                F{LineFamily::TPair, 1, 2}, F{LineFamily::TTriple, 1, 3}, F{LineFamily::UConic, 1, 3}})
        for (int k = 0; k < f.kmax; ++k) {
            for (int l = -1; l <= 1; ++l) {
                INFO("family " << int(f.f) << " p=" << f.p << " k=" << k << " l=" << l);
                CHECK(first_mismatch(family_sides(f.f, with(f.p, l, k), false, 6)) == -1);
            }
            for (int l = 0; l <= 1; ++l) {
                INFO("interp family " << int(f.f) << " p=" << f.p << " k=" << k << " l=" << l);
                CHECK(first_mismatch(family_sides(f.f, with(f.p, l, k), true, 5)) == -1);
            }
        }
}

TEST_CASE("fixed-parameter identities")
{
    for (int p = 1; p <= 4; ++p) {
        CHECK(first_mismatch(degenerate_line_sides(with(p, 0, 0), 12)) == -1);
        CHECK(first_mismatch(degenerate_line_limit_sides(with(p, 0, 0), 12)) == -1);
    }
    for (int a = -1; a >= -8; --a) {
        IdentityParams ip;
        ip.ia = a;
        INFO("a=" << a);
        CHECK(first_mismatch(integral_pair_sides(ip, 16)) == -1);
    }
    for (int w = 0; w < 3; ++w)
        CHECK(first_mismatch(integral_reduction_sides(w, IdentityParams{}, 16)) == -1);
    for (int w = 0; w < 2; ++w)
        CHECK(first_mismatch(v_line_sides(w, IdentityParams{}, 16)) == -1);
    CHECK(first_mismatch(radical_v_sides(IdentityParams{}, 20)) == -1);
    CHECK(first_mismatch(radical_v_quadratic_sides(IdentityParams{}, 20, false)) == -1);
    CHECK(first_mismatch(radical_v_quadratic_sides(IdentityParams{}, 20, true)) == -1);
    CHECK(first_mismatch(radical_x_sides(IdentityParams{}, 20)) == -1);
    CHECK(first_mismatch(radical_x_quadratic_sides(IdentityParams{}, 20)) == -1);
}
