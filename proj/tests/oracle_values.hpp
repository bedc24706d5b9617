#pragma once

// Reference values computed with mpmath by the scripts in tests/oracles and
// frozen here. Each block names the script that produced it.

#include <array>
#include <complex>
#include <utility>

namespace oracle {

using cd = std::complex<double>;

// kernel_identity.py: i * int_{-0.3+iR} e^{a t}/(e^{2 pi i t} - 1) dt.
inline const std::array<std::pair<cd, cd>, 10> kKernel{{
    {{0.0, 3.14159265358979323846}, {-0.5, 0.0}},
    {{1.0, 1.0}, {0.085972572262175699, -0.41956978951241555}},
    {{0.0, 1.88495559215387594308}, {-0.5, -0.36327126400268044}},
    {{-0.5, 0.3}, {-2.0122667888590054, -0.85762698158879518}},
    {{0.25, 5.9}, {0.71524568707072007, 1.7986138212586089}},
    {{1.5, 2.5}, {-0.1623999502679574, -0.094888543224938404}},
    {{-1.2, 4.0}, {-0.80626584682724509, 0.15355328990397661}},
    {{0.7, 0.9}, {0.098668519511748861, -0.61819567193865005}},
    {{0.0, 6.0}, {-0.5, 3.5076262757172667}},
    {{2.0, 3.3}, {-0.11819913406366223, 0.016605944494393487}},
}};

// omega_values.py: Z_omega of single monomials.
inline const cd kOmega1_G1{-1.0, 0.0};
inline const cd kOmega1_G2{0.0, 3.141592653589793};
inline const cd kOmega1_G3{13.15947253478581, 0.0};
inline const cd kOmega1_EG1{0.0, 3.141592653589793};
inline const cd kOmega1_EG2{9.869604401, -3.141592654};
inline const cd kOmega03_G2{-0.5757269233968792, -0.8818665022450522};
inline const cd kOmega03_G1{-0.03215529006846643, -1.099557428756428};
inline const cd kOmega17_G2{8.635903850953188, 6.227527149952999};
inline const cd kOmega17_G1{-1.083024546561178, 1.099557428756428};
inline const cd kOmega05_G1G2{0.4112335167, -0.5762470646};

// q_series.py at q = 1/2.
inline constexpr double kQ_G1 = 0.80334757620764588189;
inline constexpr double kQ_G2 = 0.28433468408604914917;
inline constexpr double kQ_EG1 = 0.28433468408604914917;
inline constexpr double kQ_G1G1 = 0.18051632205632512932;
inline constexpr double kQ_EG2 = 0.021400630158271438582;
inline constexpr double kQ_Zeta2 = 0.68600847218987209012;
inline constexpr double kZeta2 = 1.6449340668482264365;
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZeta13 = 0.27058080842778454788;
inline constexpr double kZeta22 = 0.81174242528335364364;
inline constexpr double kZeta4 = 1.0823232337111381915;

// hyperbolic_gamma.py: log G(z | 1, 1/omega) as (z, omega, value).
struct LogG {
    cd z;
    double omega;
    cd value;
};
inline const std::array<LogG, 6> kLogG{{
    {{0.2, 0.3}, 1.0, {0.31256850286396302, -0.14923618597937258}},
    {{0.3, 0.1}, 1.0, {0.12721362033150869, -0.31973959697195945}},
    {{-1.2, 0.4}, 1.0, {1.5085608831819785, 2.2728781403768531}},
    {{0.5, -0.2}, 0.3, {-0.16497434268692483, -0.37341291228034015}},
    {{1.1, 0.25}, 1.7, {1.4692102509213529, -3.3637563590439734}},
    {{-0.4, 0.6}, 0.3, {0.44914509448964242, 0.24005576840690423}},
}};

// saalschutz.py: closed-form side at the three preset points, omega = 1.
inline const std::array<cd, 3> kSaalschutzRhs{{
    {0.143166091681869, -0.0204738144757166},
    {0.232331246419034, -0.0414360026726317},
    {0.253907295987757, 0.0136584016340346},
}};

// r1_coefficients.py: (alpha, beta, coefficient).
struct R1 {
    int alpha;
    int beta;
    cd value;
};
inline const std::array<R1, 5> kR1{{
    {0, 0, {-1.0, 0.0}},
    {0, 1, {0.0, 3.14159265358979}},
    {1, 0, {0.0, 3.14159265358979}},
    {1, 1, {9.86960440108936, -3.14159265358979}},
    {0, 2, {13.1594725347858, 0.0}},
}};

}  // namespace oracle
