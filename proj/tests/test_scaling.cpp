#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "cvpk/oracle.hpp"
#include "cvpk/pb.hpp"
#include "cvpk/scaling.hpp"

using namespace cvpk;

TEST_SUITE("scaling") {

TEST_CASE("subchannel functions of the Arikan kernel") {
    const SubchannelFamily fam(pb_oracle(arikan_power(1)));
    REQUIRE(fam.n() == 2);
    for (double z : {0.0, 0.2, 0.5, 0.77, 1.0}) {
        CHECK(fam.eval(0, z) == doctest::Approx(2 * z - z * z).epsilon(1e-13));
        CHECK(fam.eval(1, z) == doctest::Approx(z * z).epsilon(1e-13));
    }
}

TEST_CASE("subchannel functions pin the endpoints") {
    const SubchannelFamily fam(pb_from_gpb(gpb(3)));
    for (int i = 0; i < 8; ++i) {
        CHECK(fam.eval(i, 0.0) == 0.0);
        CHECK(fam.eval(i, 1.0) == 1.0);
    }
    // last phase of Q(4) is the pure fourth power
    const SubchannelFamily f4(pb_from_gpb(gpb(2)));
    for (double z : {0.1, 0.6}) CHECK(f4.eval(3, z) == doctest::Approx(z * z * z * z));
}

TEST_CASE("scaling exponent of the Arikan kernel") {
    const ScalingResult r = scaling_exponent(pb_oracle(arikan_power(1)));
    CHECK(r.converged);
    CHECK(std::abs(r.mu - 3.627) < 0.005);
    CHECK(r.lambda > 0.0);
    CHECK(r.lambda < 1.0);
    CHECK(r.mu > 2.0);
    CHECK(std::abs(r.mu - std::log(2.0) / std::log(1.0 / r.lambda)) < 1e-12);
}

TEST_CASE("scaling exponents for small CvPK sizes") {
    CHECK(std::abs(scaling_exponent(pb_from_gpb(gpb(2))).mu - 3.627) < 0.015);
    CHECK(std::abs(scaling_exponent(pb_from_gpb(gpb(3))).mu - 3.577) < 0.015);
}

TEST_CASE("sup-norm and Rayleigh read-outs agree at convergence") {
    const ScalingResult r = scaling_exponent(pb_from_gpb(gpb(2)));
    CHECK(r.converged);
    CHECK(std::abs(r.lambda - r.lambda_rayleigh) < 1e-9);
}

TEST_CASE("grid refinement moves the estimate only slightly") {
    for (int m : {2, 3}) {
        const Pb pb = pb_from_gpb(gpb(m));
        ScalingConfig coarse, fine;
        coarse.grid_size = 4096;
        fine.grid_size = 8192;
        const double a = scaling_exponent(pb, coarse).mu;
        const double b = scaling_exponent(pb, fine).mu;
        CHECK(std::abs(a - b) < 5e-3);
    }
}

TEST_CASE("linear interpolation cross-checks the cubic default") {
    const Pb pb = pb_from_gpb(gpb(3));
    ScalingConfig lin;
    lin.interpolation = Interp::linear;
    const double a = scaling_exponent(pb).mu;
    const double b = scaling_exponent(pb, lin).mu;
    CHECK(std::abs(a - b) < 5e-3);
}

TEST_CASE("identical results for any worker count") {
    const Pb pb = pb_from_gpb(gpb(4));
    ScalingConfig one, four;
    one.threads = 1;
    four.threads = 4;
    const ScalingResult a = scaling_exponent(pb, one);
    const ScalingResult b = scaling_exponent(pb, four);
    CHECK(a.mu == b.mu);
    CHECK(a.lambda == b.lambda);
    CHECK(a.iters_used == b.iters_used);
}

TEST_CASE("configuration validation") {
    const Pb pb = pb_from_gpb(gpb(2));
    ScalingConfig bad;
    bad.grid_size = 64;
    CHECK_THROWS_AS(scaling_exponent(pb, bad), std::invalid_argument);
    bad = ScalingConfig{};
    bad.tol = 0.0;
    CHECK_THROWS_AS(scaling_exponent(pb, bad), std::invalid_argument);
}

TEST_CASE("non-convergence is reported, not hidden") {
    ScalingConfig cramped;
    cramped.max_iters = 2;
    const ScalingResult r = scaling_exponent(pb_from_gpb(gpb(2)), cramped);
    CHECK_FALSE(r.converged);
    CHECK(r.iters_used == 2);
    CHECK(r.mu > 0.0);  // best estimate still reported
}

}  // TEST_SUITE
