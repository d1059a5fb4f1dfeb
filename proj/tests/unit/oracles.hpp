#pragma once

// Reference values computed once with mpmath at 40 significant digits and
// frozen here. Fit parameters and SER use the same moment formulas and
// closed form as the library, evaluated independently.

#include <array>

namespace oracle {

struct Fit {
  unsigned n;
  double a1, a2, a3, a4, a5;
};

inline constexpr std::array<Fit, 4> kFits{{
    {4, 0.01024175783828576, 0.99904985278964132, 7.9826413368920244, 6.7299978207196798, 6.3083173252314314},
    {5, 0.00066211753216981249, 0.99891447637859707, 10.281854195542919, 8.8867272904636975, 7.9720048986773332},
    {10, 1.3838234730148585e-11, 0.99861893929885758, 21.776802313323299, 19.385809879595342, 16.574576215141202},
    {50, 8.3337650125102399e-109, 0.99835520580182157, 113.73023902440985, 102.91082440868433, 85.86041549024767},
}};

// QPSK (A = 2, B = 2) closed-form SER for alpha = l/k.
struct Ser {
  unsigned n, l, k;
  int snr_db;
  double value;
};

inline constexpr std::array<Ser, 40> kSer{{
    {5, 1, 2, 0, 0.00086440707260860517},  {5, 1, 2, 10, 5.2431767834350744e-6},
    {5, 1, 2, 20, 4.7530490508983037e-9},  {5, 1, 2, 40, 7.685469330224226e-17},
    {5, 1, 1, 0, 0.0001575574791205272},   {5, 1, 1, 10, 1.0411739459137258e-7},
    {5, 1, 1, 20, 1.4499378975936565e-11}, {5, 1, 1, 40, 4.0930405325508037e-20},
    {5, 2, 1, 0, 2.8088307178492291e-5},   {5, 2, 1, 10, 6.1919579471404701e-9},
    {5, 2, 1, 20, 4.7741799271804028e-13}, {5, 2, 1, 40, 8.9010298741255843e-22},
    {5, 1, 3, 0, 0.0015074512386845328},   {5, 1, 3, 10, 3.4190619325527398e-5},
    {5, 1, 3, 20, 1.8249473325026632e-7},  {5, 1, 3, 40, 5.9030930783774343e-14},
    {5, 3, 2, 0, 5.3755636635129425e-5},   {5, 3, 2, 10, 1.65555399997262e-8},
    {5, 3, 2, 20, 1.5078091340446799e-12}, {5, 3, 2, 40, 3.1497836499983701e-21},
    {10, 1, 2, 0, 1.387100352919489e-5},   {10, 1, 2, 10, 3.3166278989045272e-9},
    {10, 1, 2, 20, 1.8668807687630554e-14}, {10, 1, 2, 40, 5.0663836374673104e-29},
    {10, 1, 1, 0, 2.4831892978849835e-8},  {10, 1, 1, 10, 1.0898402488428423e-14},
    {10, 1, 1, 20, 2.1808791102195869e-22}, {10, 1, 1, 40, 2.3228862176297564e-39},
    {10, 2, 1, 0, 2.3120104780700514e-11}, {10, 2, 1, 10, 5.5761964885254662e-19},
    {10, 2, 1, 20, 2.6145871689923941e-27}, {10, 2, 1, 40, 1.1723554695854713e-44},
    {10, 1, 3, 0, 9.9341438215133771e-5},  {10, 1, 3, 10, 4.7186457983196609e-7},
    {10, 1, 3, 20, 2.3003479850401574e-10}, {10, 1, 3, 40, 1.050297322925363e-20},
    {10, 3, 2, 0, 3.2505324801156901e-10}, {10, 3, 2, 10, 1.7723460255846973e-17},
    {10, 3, 2, 20, 1.2017795063526308e-25}, {10, 3, 2, 40, 6.6195692425163118e-43},
}};

// a1 a2 G^{2,1}_{2,3}[x/a2 | 1, a3+1; a5+1, a4+1, 0]
struct Cdf {
  unsigned n;
  double x, value;
};

inline constexpr std::array<Cdf, 6> kCdf{{
    {5, 1.0, 8.4269602056014915e-6},
    {5, 8.0, 0.56826507026996785},
    {5, 20.0, 0.99938986823190604},
    {10, 1.0, 7.2473661989757283e-15},
    {10, 8.0, 0.0092412017548812663},
    {10, 20.0, 0.86248741602233004},
}};

struct Q {
  double alpha, x, value;
};

inline constexpr std::array<Q, 9> kQ{{
    {0.5, 0.5, 0.16082801569117754},
    {0.5, 2, 0.026337320943573812},
    {0.5, 4, 0.0050825710779827869},
    {1.5, 0.5, 0.28662082836711454},
    {1.5, 2, 0.026611826455812109},
    {1.5, 4, 0.00032496655597346422},
    {3, 0.5, 0.33016152974010847},
    {3, 2, 0.015866255090606673},
    {3, 4, 1.3726942816731435e-8},
}};

// Generic Meijer G instances at z = 0.1, 1, 10.
inline constexpr std::array<double, 3> kZ{0.1, 1.0, 10.0};
// G^{2,1}_{2,3}[z | 0.25, 0.5; 0, 0.75, -0.3]
inline constexpr std::array<double, 3> kMeijerA{0.98426584341833247, 0.75568271148533706, 0.13823527856624226};
// G^{2,2}_{3,3}[z | -4.5, -3.2, 1; 0, 0.5, -1.7]
inline constexpr std::array<double, 3> kMeijerB{92.322116511143292, -0.51760630564717525, 6.9182574093960875e-5};
// G^{2,0}_{1,2}[z | 1; 0, 2] = Gamma(2, z)
inline constexpr std::array<double, 3> kMeijerC{0.99532115983955553, 0.73575888234288464, 0.00049939922738733337};

}  // namespace oracle
