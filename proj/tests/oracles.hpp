/* SPDX-License-Identifier: Apache-2.0 */
// Generated by tools/oracles.py (mpmath). Do not edit by hand.

#pragma once

namespace oracle {

inline constexpr const char* kZeta3 = "1.20205690315959428539973816151144999076498629";
inline constexpr const char* kZeta5 = "1.03692775514336992633136548645703416805708092";
inline constexpr const char* kZeta7 = "1.00834927738192282683979754984979675959986356";
inline constexpr const char* kPi = "3.1415926535897932384626433832795028841971694";
inline constexpr const char* kEulerGamma = "0.577215664901532860606512090082402431042159336";
inline constexpr const char* kDirectSumAt0_1 = "1.21252802775312329207880330138580309001420211";
inline constexpr const char* kDirectSumAt0_25 = "1.27106466687737485202714182999247526762400645";
inline constexpr const char* kDirectSumAt0_5 = "1.54517744447956247533785697166541254460400107";
inline constexpr const char* kPowerShiftLhs = "0.25409171519136614849178562614249478898410646";
inline constexpr const char* kTailK1C1 = "0.114583333333333333333333333333333333333333333";
inline constexpr const char* kTailK2C3 = "0.00107787698412698412698412698412698412698412698";
inline constexpr const char* kPsiGenfunHalf = "-0.349762131525267452516981943985718853674914897";
inline constexpr const char* kPsiLemma43At3_7 = "-1.74436920426304424648037605622744931221590812";
inline constexpr const char* kPsiLemma43At10 = "-2.82896825396825396825396825396825396825396825";
inline constexpr const char* kAltZeta2Bar1 = "0.150257112894949285674967270188931248845623287";

inline constexpr const char* kOddHarmonic3_2 = "83/11025";
inline constexpr const char* kOddHarmonic6_3 = "6015892/18261468225";

}  // namespace oracle
