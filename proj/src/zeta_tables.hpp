// Double-double constant tables for the Euler-Maclaurin zeta core.
// Values: Bernoulli numbers B_n (B_1 = -1/2 convention) and B_{2j}/(2j)!.
#pragma once

namespace mathieu::detail {

struct DdConst { double hi, lo; };

inline constexpr int kBernoulliMax = 82;
inline constexpr DdConst kBernoulli[83] = {
    {1.0, 0.0},  // B_0
    {-0.5, 0.0},  // B_1
    {0.16666666666666666, 9.25185853854297e-18},  // B_2
    {0.0, 0.0},  // B_3
    {-0.03333333333333333, -4.625929269271486e-19},  // B_4
    {0.0, 0.0},  // B_5
    {0.023809523809523808, 1.32169407693471e-18},  // B_6
    {0.0, 0.0},  // B_7
    {-0.03333333333333333, -4.625929269271486e-19},  // B_8
    {0.0, 0.0},  // B_9
    {0.07575757575757576, -2.10269512239613e-18},  // B_10
    {0.0, 0.0},  // B_11
    {-0.2531135531135531, -1.1061562736192037e-17},  // B_12
    {0.0, 0.0},  // B_13
    {1.1666666666666667, -7.401486830834377e-17},  // B_14
    {0.0, 0.0},  // B_15
    {-7.092156862745098, -3.274069468698501e-16},  // B_16
    {0.0, 0.0},  // B_17
    {54.971177944862156, -1.9588897477095493e-16},  // B_18
    {0.0, 0.0},  // B_19
    {-529.1242424242424, 6.890111377067638e-16},  // B_20
    {0.0, 0.0},  // B_21
    {6192.123188405797, 9.226757844073186e-14},  // B_22
    {0.0, 0.0},  // B_23
    {-86580.25311355312, 3.5926706461242705e-12},  // B_24
    {0.0, 0.0},  // B_25
    {1425517.1666666667, -7.761021455128987e-11},  // B_26
    {0.0, 0.0},  // B_27
    {-27298231.067816094, 1.610010519795034e-09},  // B_28
    {0.0, 0.0},  // B_29
    {601580873.9006424, -2.6635227381825164e-08},  // B_30
    {0.0, 0.0},  // B_31
    {-15116315767.092157, 5.011465035232843e-07},  // B_32
    {0.0, 0.0},  // B_33
    {429614643061.1667, -2.0345052083333332e-05},  // B_34
    {0.0, 0.0},  // B_35
    {-13711655205088.332, -0.0007409090879485616},  // B_36
    {0.0, 0.0},  // B_37
    {488332318973593.2, -0.020833333333333332},  // B_38
    {0.0, 0.0},  // B_39
    {-1.9296579341940068e+16, -0.14863266814486326},  // B_40
    {0.0, 0.0},  // B_41
    {8.416930475736826e+17, 55.000553709856035},  // B_42
    {0.0, 0.0},  // B_43
    {-4.0338071854059454e+19, -949.0768115942029},  // B_44
    {0.0, 0.0},  // B_45
    {2.1150748638081993e+21, -101647.85460992908},  // B_46
    {0.0, 0.0},  // B_47
    {-1.2086626522296526e+23, 2678676.6880629174},  // B_48
    {0.0, 0.0},  // B_49
    {7.500866746076964e+24, 200814120.07575756},  // B_50
    {0.0, 0.0},  // B_51
    {-5.038778101481069e+26, -6426303095.052201},  // B_52
    {0.0, 0.0},  // B_53
    {3.6528776484818122e+28, 1059544567930.9712},  // B_54
    {0.0, 0.0},  // B_55
    {-2.849876930245088e+30, 13495687303844.932},  // B_56
    {0.0, 0.0},  // B_57
    {2.3865427499683627e+32, 1966830746857344.2},  // B_58
    {0.0, 0.0},  // B_59
    {-2.1399949257225335e+34, 1.1936757789605181e+18},  // B_60
    {0.0, 0.0},  // B_61
    {2.0500975723478097e+36, 1.7982331506232715e+19},  // B_62
    {0.0, 0.0},  // B_63
    {-2.093800591134638e+38, 8.921695562739829e+21},  // B_64
    {0.0, 0.0},  // B_65
    {2.2752696488463515e+40, 6.967910420880353e+23},  // B_66
    {0.0, 0.0},  // B_67
    {-2.6257710286239577e+42, 1.1599947627916584e+26},  // B_68
    {0.0, 0.0},  // B_69
    {3.212508210271803e+44, 7.753612571252424e+27},  // B_70
    {0.0, 0.0},  // B_71
    {-4.159827816679471e+46, 1.0642832018302506e+30},  // B_72
    {0.0, 0.0},  // B_73
    {5.692069548203528e+48, -3.1496744483983085e+32},  // B_74
    {0.0, 0.0},  // B_75
    {-8.218362941978458e+50, 1.972697016250366e+34},  // B_76
    {0.0, 0.0},  // B_77
    {1.2502904327166994e+53, -9.874858173094332e+36},  // B_78
    {0.0, 0.0},  // B_79
    {-2.001558323324837e+55, -2.2313276083262987e+38},  // B_80
    {0.0, 0.0},  // B_81
    {3.3674982915364376e+57, -1.3228407897308492e+41},  // B_82
};

inline constexpr int kEmCoeffMax = 40;
inline constexpr DdConst kEmCoeff[41] = {
    {1.0, 0.0},  // unused j=0 slot
    {0.08333333333333333, 4.625929269271485e-18},  // B_2/(2)!
    {-0.001388888888888889, 5.300543954373577e-20},  // B_4/(4)!
    {3.306878306878307e-05, -2.2300719288557665e-21},  // B_6/(6)!
    {-8.267195767195768e-07, 3.457597454003665e-23},  // B_8/(8)!
    {2.08767569878681e-08, -1.2073450591132599e-24},  // B_10/(10)!
    {-5.284190138687493e-10, 3.517096671929869e-27},  // B_12/(12)!
    {1.3382536530684679e-11, -2.828354019907999e-29},  // B_14/(14)!
    {-3.3896802963225827e-13, -1.4986928409964295e-29},  // B_16/(16)!
    {8.586062056277845e-15, -6.05252374381974e-31},  // B_18/(18)!
    {-2.174868698558062e-16, 4.961617782549996e-33},  // B_20/(20)!
    {5.5090028283602295e-18, -1.49827152194499e-35},  // B_22/(22)!
    {-1.3954464685812522e-19, -1.0350590497256251e-35},  // B_24/(24)!
    {3.534707039629467e-21, 1.894231142684204e-37},  // B_26/(26)!
    {-8.953517427037546e-23, -5.728752743153026e-39},  // B_28/(28)!
    {2.267952452337683e-24, 1.3043458462619563e-40},  // B_30/(30)!
    {-5.744790668872202e-26, 1.663242973708004e-43},  // B_32/(32)!
    {1.455172475614865e-27, -5.613265715443096e-44},  // B_34/(34)!
    {-3.6859949406653103e-29, 1.0778256413554197e-45},  // B_36/(36)!
    {9.336734257095045e-31, -3.9347970210731877e-47},  // B_38/(38)!
    {-2.36502241570063e-32, 2.0347170931532494e-49},  // B_40/(40)!
    {5.990671762482134e-34, 1.6265467158179092e-50},  // B_42/(42)!
    {-1.5174548844682903e-35, 5.493014407946745e-52},  // B_44/(44)!
    {3.843758125454189e-37, -3.685053096067968e-53},  // B_46/(46)!
    {-9.736353072646691e-39, 2.258059165188444e-55},  // B_48/(48)!
    {2.466247044200681e-40, -1.505641802268162e-56},  // B_50/(50)!
    {-6.247076741820743e-42, -2.7106815859687654e-58},  // B_52/(52)!
    {1.5824030244644914e-43, 2.545428531496969e-60},  // B_54/(54)!
    {-4.008273685948936e-45, -2.2124211668946826e-61},  // B_56/(56)!
    {1.0153075855569557e-46, -9.404269751258486e-63},  // B_58/(58)!
    {-2.5718041582418717e-48, -6.537655454012542e-65},  // B_60/(60)!
    {6.514456035233815e-50, -2.763626172529861e-66},  // B_62/(62)!
    {-1.6501309906896525e-51, 3.1794529475063687e-68},  // B_64/(64)!
    {4.179830628539476e-53, 2.617556823159939e-69},  // B_66/(66)!
    {-1.058763466770291e-54, 6.6915528436035195e-71},  // B_68/(68)!
    {2.6818791912607708e-56, -8.70695425146146e-73},  // B_70/(70)!
    {-6.793279351107421e-58, 2.795667911354165e-74},  // B_72/(72)!
    {1.7207577616681404e-59, 4.65433497191727e-76},  // B_74/(74)!
    {-4.358730329348894e-61, 2.8840522874209336e-77},  // B_76/(76)!
    {1.1040792903684666e-62, 6.624841731022409e-79},  // B_78/(78)!
    {-2.7966655133781345e-64, 2.628041826403209e-81},  // B_80/(80)!
};

inline constexpr DdConst kDdLn2 = {0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DdConst kDdPi = {3.141592653589793, 1.2246467991473532e-16};
inline constexpr DdConst kDdTwoPi = {6.283185307179586, 2.4492935982947064e-16};
inline constexpr DdConst kDdEuler = {0.5772156649015329, -4.942915152430645e-18};

}  // namespace mathieu::detail
