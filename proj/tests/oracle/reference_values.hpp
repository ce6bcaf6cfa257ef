#pragma once
// Generated by gen_reference_values.py (mpmath, 60-digit precision).
// Do not edit by hand; regenerate with:
//   python3 tests/oracle/gen_reference_values.py > tests/oracle/reference_values.hpp

namespace svi::testref {

inline constexpr double kDigammaGrid[][2] = {
    {0.000001000000000000000000000, -1000000.577214019968668},
    {0.00001000000000000000000000, -100000.5771992156810690},
    {0.0001000000000000000000000, -10000.57705118351433485},
    {0.001000000000000000000000, -1000.575571931810300471},
    {0.01000000000000000000000, -100.5608854578686744975},
    {0.1000000000000000000000, -10.42375494041107679517},
    {0.2500000000000000000000, -4.227453533376265408090},
    {0.5000000000000000000000, -1.963510026021423479441},
    {0.7500000000000000000000, -1.085860879786472169627},
    {1.000000000000000000000, -0.5772156649015328606065},
    {1.500000000000000000000, 0.03648997397857652055902},
    {2.000000000000000000000, 0.4227843350984671393935},
    {3.000000000000000000000, 0.9227843350984671393935},
    {4.500000000000000000000, 1.388870926359528901511},
    {6.000000000000000000000, 1.706117668431800472727},
    {7.990000000000000000000, 2.014309222046223771092},
    {8.000000000000000000000, 2.015641477955609996536},
    {8.010000000000000000000, 2.016971963906519314095},
    {10.00000000000000000000, 2.251752589066721107647},
    {25.00000000000000000000, 3.198742512851974008528},
    {100.0000000000000000000, 4.600161852738087400199},
    {1234.500000000000000000, 7.118016231827997843305},
    {100000.0000000000000000, 11.51292046496189508676},
    {100000000.0000000000000, 18.42068073895236546381},
};

inline constexpr double kTrigammaGrid[][2] = {
    {0.000001000000000000000000000, 1000000000001.644931663},
    {0.00001000000000000000000000, 10000000001.64491002603},
    {0.0001000000000000000000000, 100000001.6446936879331},
    {0.001000000000000000000000, 1000001.642533195868978},
    {0.01000000000000000000000, 10001.62121352831322012},
    {0.1000000000000000000000, 101.4332991507927588172},
    {0.2500000000000000000000, 17.19732915450711073927},
    {0.5000000000000000000000, 4.934802200544679309417},
    {0.7500000000000000000000, 2.541879647671606498398},
    {1.000000000000000000000, 1.644934066848226436472},
    {1.500000000000000000000, 0.9348022005446793094172},
    {2.000000000000000000000, 0.6449340668482264364724},
    {3.000000000000000000000, 0.3949340668482264364724},
    {4.500000000000000000000, 0.2487251030390103751769},
    {6.000000000000000000000, 0.1813229557371153253613},
    {7.990000000000000000000, 0.1333142456598576001306},
    {8.000000000000000000000, 0.1331370146940314251345},
    {8.010000000000000000000, 0.1329602536530094377584},
    {10.00000000000000000000, 0.1051663356816857461222},
    {25.00000000000000000000, 0.04081066325722557918736},
    {100.0000000000000000000, 0.01005016666333357139525},
    {1234.500000000000000000, 0.0008103727271269666526951},
    {100000.0000000000000000, 0.00001000005000016666666666},
    {100000000.0000000000000, 1.000000005000000016667e-8},
};

inline constexpr double kDigammaOne = -0.5772156649015328606065;
inline constexpr double kDigammaHalf = -1.963510026021423479441;

inline constexpr double kDirExpectLogHalfThreeHalves[2] = {
    -2.386294361119890618834, -0.3862943611198906188345};
inline constexpr double kBetaLogs2p5_3p5[2] = {
    -1.002961027786557285501, -0.6029610277865572855011};
inline constexpr double kSoftmaxM1M2M4[3] = {
    0.7053845126982411583285, 0.2594964603424191174836, 0.03511902695933972418784};

inline constexpr double kTwoPowMinus0p9 = 0.5358867312681465821065;
inline constexpr double kEbAlphaStepExample = 1.272588722239781237669;

// LDA local fixed point: K=2, V=3, doc {0:2,1:1}, alpha=0.5,
// lambda rows (2,1,1),(1,1,2), gamma init all-ones, converged to 1e-30.
inline constexpr double kLdaLocalGamma[2] = {
    3.360277819680811495717, 0.6397221803191885042828};
inline constexpr double kLdaLocalPhi[2][2] = {  // rows: unique terms 0,1
    {0.9695127512733618255494, 0.03048724872663817445058},
    {0.9212523171340878446183, 0.07874768286591215538166},
};

// HDP local fixed point: K=2, T=2, V=3, doc {0:1,2:2}, alpha=1,
// sticks a=b=(1,1), lambda rows (2,1,1),(1,1,2), converged to 1e-30.
inline constexpr double kHdpLocalGamma1[2] = {
    3.675865540411210919991, 1.324134459588789080009};
inline constexpr double kHdpLocalGamma2[2] = {
    1.324134459588789080009, 1.000000000000000000000};
inline constexpr double kHdpLocalZeta[2][2] = {  // rows: i = 0,1
    {0.5130595678590639400818, 0.4869404321409360599182},
    {0.7206624285144416172815, 0.2793375714855583827185},
};
inline constexpr double kHdpLocalPhi[2][2] = {  // rows: unique terms 0,2
    {0.8640578479281393297017, 0.1359421520718606702983},
    {0.9059038462415357951445, 0.09409615375846420485548},
};

inline constexpr double kChi2Crit999Df99 = 148.2303591651017165057;
inline constexpr double kPiSqOver6 = 1.644934066848226436472;

}  // namespace svi::testref
