#include "mainprob/tables.hpp"

#include "json.hpp"

namespace mainprob {

namespace {

using P = IntPoly;

// Recurrent factors, in x = s^2.
const IntPoly x{1, 0};
const IntPoly d{5, -4};    // critical-inclination divisor
const IntPoly t32{3, -2};
const IntPoly q{15, -14};

TheoryTables build() {
  TheoryTables t;
  t.gamma2 = {"gamma2", 2, {
      {{0, 0, 0}, -8 * P{200, -455, 345, -88}},
      {{0, 1, 0}, P{375, -930, 780, -224}},
      {{1, 0, 0}, 5 * P{805, -1878, 1464, -384}},
      {{2, 0, 0}, P{-825, 1990, -1616, 448}},
  }};
  t.Gamma2 = {"Gamma2", 3, {
      {{1, -1, 1}, -12 * d * P{7, -6} * q},
      {{0, 1, 1}, -48 * d * P{195, -340, 148}},
      {{1, 1, 1}, 24 * pow(d, 2) * q},
      {{1, 1, 2}, -3 * P{225, -430, 208}},
      {{0, 2, 1}, -96 * pow(d, 2) * P{9, -8}},
      {{1, 2, 1}, -24 * d * P{65, -116, 52}},
      {{1, 2, 2}, -60 * P{50, -87, 38}},
      {{0, 3, 1}, -64 * pow(d, 2) * P{8, -7}},
      {{1, 3, 1}, 4 * t32 * d * q},
      {{0, 3, 2}, -4 * d * P{135, -122}},
      {{1, 3, 2}, -8 * P{75, -135, 61}},
      {{1, 4, 1}, -12 * pow(d, 2) * P{7, -6}},
      {{0, 4, 2}, 24 * pow(d, 2)},
      {{1, 4, 2}, -12 * d * P{25, -23}},
      {{0, 5, 2}, 24 * pow(d, 2)},
      {{1, 5, 2}, -3 * d * q},
      {{1, 6, 2}, 6 * pow(d, 2)},
      {{0, 0, 2}, pow(q, 2) * P{15, -13}},
      {{0, 0, 1}, 8 * pow(d, 2) * P{1215, -1997, 824}},
      {{1, 0, 1}, -2 * d * q * P{45, 36, -56}},
  }};
  t.gamma3 = {"gamma3", 2, {
      {{0, 0, 0}, -8 * d * P{313525, -899030, 933656, -409296, 61824}},
      {{0, 1, 0}, 4 * P{1551625, -5675700, 8148960, -5706408, 1930272, -248064}},
      {{0, 2, 0}, -2 * P{40500, -99525, 64840, 18788, -33936, 9408}},
      {{1, 0, 0}, 2 * d * P{2631475, -7558270, 7872692, -3470616, 530304}},
      {{1, 1, 0}, P{-3457125, 12282750, -17085020, 11554040, -3756000, 459648}},
      {{2, 0, 0}, -2 * d * P{1584375, -4536150, 4716436, -2082712, 321408}},
      {{2, 1, 0}, P{138375, -128250, -351900, 612440, -326368, 56448}},
      {{3, 0, 0}, 8 * d * P{93300, -259915, 264982, -116928, 18816}},
      {{4, 0, 0}, -20 * x * d * q * P{45, 36, -56}},
  }};
  t.Gamma3 = {"Gamma3", 3, {
      {{2, -3, 1}, 35 * q * P{87375, -335550, 505080, -371184, 132096, -17920}},
      {{2, -2, 1}, 105 * q * P{399375, -1863400, 3389440, -3023632, 1328128, -230400}},
      {{1, -1, 1}, -840 * d * P{228125, -549325, 255940, 324664, -352992, 93824}},
      {{2, -1, 1}, 210 * q * P{100875, -275600, 228220, -6408, -70272, 23296}},
      {{2, -1, 2}, -105 * d * q * P{13725, -37680, 34228, -10304}},
      {{0, 1, 1}, -1680 * pow(d, 2) * P{486525, -1594290, 1955772, -1064576, 216960}},
      {{1, 1, 1}, 840 * d * P{1531125, -6503075, 10982780, -9224760, 3855648, -641920}},
      {{2, 1, 1}, -420 * q * P{61875, -138825, 51640, 92200, -89088, 22400}},
      {{1, 1, 2}, 1680 * d * P{240750, -775475, 932445, -495822, 98320}},
      {{2, 1, 2}, 105 * d * P{226125, -787950, 1015020, -572056, 118944}},
      {{2, 1, 3}, -840 * q * P{1125, -3300, 3235, -1058}},
      {{0, 2, 1}, -1680 * pow(d, 3) * P{41615, -97838, 76016, -19488}},
      {{1, 2, 1}, -1680 * d * P{666875, -2586600, 4014940, -3117320, 1210368, -187904}},
      {{2, 2, 1}, 210 * P{5398125, -27480750, 57999400, -64973520, 40757888, -13579264, 1878016}},
      {{1, 2, 2}, -3360 * pow(d, 2) * P{42850, -108830, 92099, -25958}},
      {{2, 2, 2}, 840 * d * P{123750, -359475, 378010, -167724, 25624}},
      {{2, 2, 3}, -105 * P{639375, -2259750, 2991200, -1757840, 387104}},
      {{0, 3, 1}, -1120 * pow(d, 2) * P{270650, -828285, 945816, -477232, 89664}},
      {{1, 3, 1}, 280 * d * P{634500, -2623725, 4300340, -3496152, 1412352, -227584}},
      {{2, 3, 1}, -70 * q * P{76875, -202950, 167700, -16544, -37376, 12544}},
      {{0, 3, 2}, -560 * pow(d, 2) * P{605775, -1524950, 1277728, -356256}},
      {{1, 3, 2}, 560 * pow(d, 2) * P{9150, -6435, -9741, 7154}},
      {{2, 3, 2}, 35 * d * P{104625, -68850, -286620, 378936, -127232}},
      {{1, 3, 3}, -280 * d * P{52875, -129225, 102900, -26456}},
      {{2, 3, 3}, -140 * q * P{7875, -21225, 19120, -5756}},
      {{1, 4, 1}, -840 * d * P{516875, -1956050, 2950940, -2217472, 829440, -123392}},
      {{2, 4, 1}, 420 * d * P{173625, -668250, 1023720, -780120, 295872, -44800}},
      {{0, 4, 2}, -6720 * pow(d, 3) * P{730, -1153, 444}},
      {{1, 4, 2}, -3360 * pow(d, 2) * P{66050, -166215, 139230, -38808}},
      {{2, 4, 2}, 420 * pow(d, 2) * P{20925, -38700, 19984, -1976}},
      {{1, 4, 3}, 840 * d * P{10125, -32150, 33500, -11456}},
      {{2, 4, 3}, -2100 * d * P{3525, -9240, 7996, -2280}},
      {{1, 5, 1}, -168 * d * P{115000, -434875, 663700, -512080, 199936, -31488}},
      {{2, 5, 1}, -105 * x * d * q * P{825, -1990, 1616, -448}},
      {{0, 5, 2}, -336 * pow(d, 3) * P{15425, -24050, 9112}},
      {{1, 5, 2}, -84 * pow(d, 2) * P{551625, -1390850, 1167040, -325728}},
      {{2, 5, 2}, 105 * pow(d, 2) * q * P{225, 288, -364}},
      {{0, 5, 3}, 3360 * pow(d, 2) * P{1575, -2795, 1256}},
      {{1, 5, 3}, 840 * d * P{8250, -24975, 25080, -8336}},
      {{2, 5, 3}, -420 * d * pow(q, 2) * P{15, -13}},
      {{2, 6, 1}, 35 * d * P{171375, -616950, 871680, -600128, 199168, -25088}},
      {{1, 6, 2}, -280 * pow(d, 3) * P{8265, -12874, 4872}},
      {{2, 6, 2}, -280 * pow(d, 2) * P{11475, -29280, 24828, -6992}},
      {{0, 6, 3}, 560 * pow(d, 3) * P{1335, -1166}},
      {{1, 6, 3}, 560 * pow(d, 2) * P{8325, -14910, 6764}},
      {{2, 6, 3}, 70 * d * P{21375, -61950, 59960, -19328}},
      {{1, 7, 2}, -60 * pow(d, 3) * P{8385, -13226, 5080}},
      {{0, 7, 3}, 10080 * pow(d, 3) * P{90, -79}},
      {{1, 7, 3}, 12600 * pow(d, 2) * P{105, -191, 88}},
      {{2, 8, 2}, -840 * t32 * pow(d, 3) * q},
      {{1, 8, 3}, 4200 * pow(d, 3) * P{96, -85}},
      {{2, 8, 3}, 210 * pow(d, 2) * P{525, -990, 472}},
      {{1, 9, 3}, 7560 * pow(d, 3) * P{10, -9}},
      {{2, 10, 3}, 315 * pow(d, 3) * q},
      {{0, 0, 3}, 2 * pow(q, 3) * P{825, -1445, 634}},
      {{0, 0, 2}, -6 * pow(d, 2) * P{2171250, -7719525, 10225470, -5983260, 1305248}},
      {{1, 0, 2}, -3 * d * pow(q, 2) * P{1800, 2655, -8208, 3928}},
      {{0, 0, 1}, 48 * pow(d, 2) * P{9060750, -34431275, 51858720, -38675200, 14258176, -2072064}},
      {{1, 0, 1}, -12 * d * P{93223125, -421210500, 784654200, -771469840, 422629664, -122600960, 14780416}},
      {{2, 0, 1}, 6 * q * P{2328750, -8703375, 13317150, -10848180, 5157560, -1450624, 200704}},
  }};
  t.lambda2 = {"lambda2", 1, {
      {{0, 0, 0}, 5 * P{7, -16, 8}},
      {{1, 0, 0}, 4 * pow(t32, 2)},
      {{2, 0, 0}, P{5, 8, -8}},
  }};
  t.Phi2 = {"Phi2", 1, {
      {{0, 0, 0}, 8 * P{1, -1} * d},
      {{1, 0, 0}, P{-5, -8, 8}},
  }};
  t.Lambda2 = {"Lambda2", 2, {
      {{1, 0, 0}, 15 * t32 * P{805, -2448, 2400, -768}},
      {{1, 1, 0}, 3 * t32 * P{2225, -8160, 8928, -3072}},
      {{1, 2, 0}, 3 * P{825, -3030, 4064, -2368, 512}},
      {{1, 3, 0}, -3 * x * P{975, -2250, 1728, -448}},
      {{2, 0, 0}, 6 * P{1925, -6210, 7452, -3936, 768}},
      {{2, 1, 0}, 6 * P{125, -930, 1660, -1120, 256}},
      {{3, 0, 0}, P{2625, -7270, 7408, -3264, 512}},
      {{3, 1, 0}, x * P{825, -1990, 1616, -448}},
  }};
  t.lambda3 = {"lambda3", 1, {
      {{0, 0, 0}, 5 * P{28700, -107205, 158960, -118492, 45152, -7168}},
      {{1, 0, 0}, 60 * t32 * pow(d, 2) * P{7, -16, 8}},
      {{2, 0, 0}, -2 * P{28675, -98005, 130852, -87164, 30176, -4608}},
      {{3, 0, 0}, 20 * t32 * pow(d, 2) * P{5, 8, -8}},
      {{4, 0, 0}, -1 * x * q * P{450, -925, 590, -112}},
  }};
  t.Phi3 = {"Phi3", 2, {
      {{0, 0, 0}, 5 * P{89100, -323615, 466320, -337684, 125216, -19456}},
      {{0, 2, 0}, -2 * P{112125, -374775, 488460, -314932, 103840, -14848}},
      {{0, 3, 0}, 8 * t32 * pow(d, 2) * P{5, 8, -8}},
      {{0, 4, 0}, -3 * x * q * P{450, -925, 590, -112}},
  }};
  t.Lambda3 = {"Lambda3", 2, {
      {{1, 0, 0}, -864 * pow(t32, 3) * pow(d, 3)},
      {{1, 1, 0}, 3 * P{22218875, -104346550, 202703740, -209869352, 123038240, -39033472, 5275648}},
      {{1, 2, 0}, 12 * P{10925500, -50711075, 97386820, -99715748, 57863024, -18199872, 2445312}},
      {{1, 3, 0}, 3 * P{27560125, -119080550, 212650740, -202245448, 109190304, -32208768, 4128768}},
      {{1, 4, 0}, 12 * P{3155125, -10820800, 13899620, -7620256, 944256, 613248, -167936}},
      {{1, 5, 0}, 3 * P{5410625, -17331450, 19448180, -6842968, -2742560, 2556544, -491520}},
      {{1, 6, 0}, -12 * P{59625, -415275, 942920, -994980, 529776, -134592, 12288}},
      {{1, 7, 0}, -3 * x * P{77625, -568950, 1256420, -1222216, 550816, -94080}},
      {{2, 0, 0}, -1044 * pow(t32, 3) * pow(d, 3)},
      {{2, 1, 0}, 24 * P{131000, -1121875, 3061340, -3989664, 2758768, -983648, 143360}},
      {{2, 2, 0}, 96 * P{51625, -437800, 1183290, -1528682, 1049344, -372240, 54144}},
      {{2, 3, 0}, -12 * d * P{16375, 64070, -257508, 297320, -145792, 26624}},
      {{2, 4, 0}, -12 * P{263625, -1000750, 1526820, -1206712, 539616, -142592, 19968}},
      {{2, 5, 0}, -12 * x * P{162375, -576100, 787020, -506248, 145984, -12992}},
      {{3, 0, 0}, -656 * pow(t32, 3) * pow(d, 3)},
      {{3, 1, 0}, P{-934875, 605000, 4973120, -10412952, 8554272, -3281280, 491520}},
      {{3, 2, 0}, P{-2080125, 3562000, 2881300, -11103360, 10155456, -4038912, 614400}},
      {{3, 3, 0}, -1 * d * P{254925, -526480, 318084, -10672, -40064, 8192}},
      {{3, 4, 0}, 3 * P{28875, -147800, 254260, -160992, -11968, 54016, -16384}},
      {{3, 5, 0}, -12 * x * P{4500, -4125, -16075, 31670, -20664, 4704}},
      {{4, 0, 0}, -240 * pow(t32, 3) * pow(d, 3)},
      {{4, 1, 0}, 6 * d * P{50325, -157660, 180520, -90312, 18112, -1024}},
      {{4, 2, 0}, 12 * d * P{47475, -147000, 164852, -79056, 14208, -512}},
      {{4, 3, 0}, 6 * x * d * P{44625, -136340, 149184, -67800, 10304}},
      {{5, 0, 0}, -48 * pow(t32, 3) * pow(d, 3)},
      {{5, 1, 0}, 6 * x * pow(d, 2) * P{180, -609, 530, -112}},
      {{5, 2, 0}, 3 * x * d * P{1125, -7440, 11516, -6144, 896}},
      {{5, 3, 0}, -3 * pow(x, 2) * d * q * P{45, 36, -56}},
      {{6, 0, 0}, -4 * pow(t32, 3) * pow(d, 3)},
  }};
  const InclinationPolynomial phi03 = *t.Phi3.find({0, 3, 0});
  t.Phi3.entries.push_back({{1, 0, 0}, Rational(15, 2) * phi03});
  t.Phi3.entries.push_back({{1, 2, 0}, Rational(-3, 2) * phi03});
  t.Phi3.entries.push_back({{2, 0, 0}, Rational(3) * phi03});
  t.Phi3.entries.push_back({{3, 0, 0}, Rational(1, 2) * phi03});
  t.Psi = {"Psi", 2, {
      {{1, 0, 0}, -3 * pow(d, 2)},
      {{1, 1, 0}, -3 * t32 * d},
      {{2, 0, 0}, Rational(15, 8) * pow(d, 2) * P{77, -172, 88}},
      {{2, 1, 0}, Rational(9, 8) * pow(d, 2) * P{155, -256, 104}},
      {{2, 2, 0}, Rational(3, 8) * pow(d, 2) * P{189, -156, 8}},
      {{2, 3, 0}, Rational(15, 8) * pow(d, 2) * P{5, 8, -8}},
      {{3, 0, 0}, Rational(-15, 32) * P{2439500, -11312175, 21772080, -22346500, 12956400, -4043136, 533248}},
      {{3, 1, 0}, Rational(-45, 32) * d * P{62300, -260365, 431504, -356508, 147552, -24576}},
      {{3, 2, 0}, Rational(3, 16) * P{1835625, -7723875, 13291500, -12015300, 6064176, -1644928, 192256}},
      {{3, 3, 0}, Rational(15, 16) * d * P{18175, -85105, 153172, -136540, 61408, -11264}},
      {{3, 4, 0}, Rational(3, 32) * P{213750, -1441125, 3537000, -4313100, 2835280, -967808, 135424}},
      {{3, 5, 0}, Rational(21, 32) * x * d * q * P{450, -925, 590, -112}},
  }};
  t.omega = {"omega", 2, {
      {{1, 0, 0}, -3 * pow(d, 2)},
      {{2, 0, 0}, Rational(15, 8) * pow(d, 2) * P{77, -172, 88}},
      {{2, 1, 0}, 9 * t32 * pow(d, 3)},
      {{2, 2, 0}, Rational(3, 8) * pow(d, 2) * P{45, 36, -56}},
      {{3, 0, 0}, Rational(-15, 32) * P{2439500, -11312175, 21772080, -22346500, 12956400, -4043136, 533248}},
      {{3, 1, 0}, Rational(-45, 4) * pow(d, 3) * P{168, -497, 460, -136}},
      {{3, 2, 0}, Rational(3, 16) * P{2150625, -9409875, 16968300, -16218180, 8729136, -2535808, 315136}},
      {{3, 3, 0}, Rational(-15, 4) * pow(d, 3) * P{105, 39, -228, 104}},
      {{3, 4, 0}, Rational(3, 32) * P{438750, -1771125, 2865000, -2345100, 999760, -199808, 12544}},
  }};
  t.Omega = {"Omega", 2, {
      {{1, 0, 0}, -6 * d},
      {{2, 0, 0}, Rational(15, 2) * pow(d, 2) * P{7, -8}},
      {{2, 1, 0}, 18 * t32 * pow(d, 2)},
      {{2, 2, 0}, Rational(3, 2) * pow(d, 2) * P{5, 4}},
      {{3, 0, 0}, Rational(-15, 8) * P{215250, -823025, 1255040, -953760, 361088, -54464}},
      {{3, 1, 0}, Rational(-45, 4) * pow(d, 3) * P{63, -124, 56}},
      {{3, 2, 0}, Rational(3, 8) * P{430125, -1553550, 2222340, -1570224, 546432, -74624}},
      {{3, 3, 0}, Rational(-15, 4) * pow(d, 3) * P{45, 28, -40}},
      {{3, 4, 0}, Rational(3, 8) * P{50625, -168375, 215900, -130800, 35840, -3136}},
  }};
  return t;
}

}  // namespace

const InclinationPolynomial* InclinationTable::find(std::array<int, 3> index) const {
  for (const auto& e : entries) {
    if (e.index == index) return &e.poly;
  }
  return nullptr;
}

std::vector<const InclinationTable*> TheoryTables::all() const {
  return {&gamma2, &Gamma2, &gamma3, &Gamma3, &lambda2, &Phi2, &Lambda2,
          &lambda3, &Phi3, &Lambda3, &Psi, &omega, &Omega};
}

const TheoryTables& theory_tables() {
  static const TheoryTables tables = build();
  return tables;
}

std::string tables_json() {
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  root["variable"] = "s^2";
  root["order"] = "descending";
  nlohmann::ordered_json list = nlohmann::ordered_json::object();
  for (const InclinationTable* table : theory_tables().all()) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& e : table->entries) {
      nlohmann::ordered_json row;
      row["index"] = std::vector<int>(e.index.begin(), e.index.begin() + table->arity);
      row["coefficients"] = e.poly.numerator().descending();
      row["denominator"] = e.poly.denominator();
      rows.push_back(std::move(row));
    }
    list[table->name] = std::move(rows);
  }
  root["tables"] = std::move(list);
  return root.dump(1) + "\n";
}

}  // namespace mainprob
