#include "mainprob/oracle.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <initializer_list>
#include <istream>
#include <limits>
#include <ostream>
#include <utility>

#include "mainprob/format.hpp"

namespace mainprob {

namespace {

// The local error test runs this much tighter than the requested tolerance.
constexpr double kLocalTolScale = 1e-2;





// Dormand-Prince 8(5,3) coefficients with the dense output of order 7.
namespace dp {
constexpr long double c2 = 0.526001519587677318785587544488e-01L;
constexpr long double c3 = 0.789002279381515978178381316732e-01L;
constexpr long double c4 = 0.118350341907227396726757197510e+00L;
constexpr long double c5 = 0.281649658092772603273242802490e+00L;
constexpr long double c6 = 0.333333333333333333333333333333e+00L;
constexpr long double c7 = 0.25e+00L;
constexpr long double c8 = 0.307692307692307692307692307692e+00L;
constexpr long double c9 = 0.651282051282051282051282051282e+00L;
constexpr long double c10 = 0.6e+00L;
constexpr long double c11 = 0.857142857142857142857142857142e+00L;
constexpr long double c14 = 0.1e+00L;
constexpr long double c15 = 0.2e+00L;
constexpr long double c16 = 0.777777777777777777777777777778e+00L;

constexpr long double a21 = 5.26001519587677318785587544488e-2L;
constexpr long double a31 = 1.97250569845378994544595329183e-2L;
constexpr long double a32 = 5.91751709536136983633785987549e-2L;
constexpr long double a41 = 2.95875854768068491816892993775e-2L;
constexpr long double a43 = 8.87627564304205475450678981324e-2L;
constexpr long double a51 = 2.41365134159266685502369798665e-1L;
constexpr long double a53 = -8.84549479328286085344864962717e-1L;
constexpr long double a54 = 9.24834003261792003115737966543e-1L;
constexpr long double a61 = 3.7037037037037037037037037037e-2L;
constexpr long double a64 = 1.70828608729473871279604482173e-1L;
constexpr long double a65 = 1.25467687566822425016691814123e-1L;
constexpr long double a71 = 3.7109375e-2L;
constexpr long double a74 = 1.70252211019544039314978060272e-1L;
constexpr long double a75 = 6.02165389804559606850219397283e-2L;
constexpr long double a76 = -1.7578125e-2L;
constexpr long double a81 = 3.70920001185047927108779319836e-2L;
constexpr long double a84 = 1.70383925712239993810214054705e-1L;
constexpr long double a85 = 1.07262030446373284651809199168e-1L;
constexpr long double a86 = -1.53194377486244017527936158236e-2L;
constexpr long double a87 = 8.27378916381402288758473766002e-3L;
constexpr long double a91 = 6.24110958716075717114429577812e-1L;
constexpr long double a94 = -3.36089262944694129406857109825e0L;
constexpr long double a95 = -8.68219346841726006818189891453e-1L;
constexpr long double a96 = 2.75920996994467083049415600797e1L;
constexpr long double a97 = 2.01540675504778934086186788979e1L;
constexpr long double a98 = -4.34898841810699588477366255144e1L;
constexpr long double a101 = 4.77662536438264365890433908527e-1L;
constexpr long double a104 = -2.48811461997166764192642586468e0L;
constexpr long double a105 = -5.90290826836842996371446475743e-1L;
constexpr long double a106 = 2.12300514481811942347288949897e1L;
constexpr long double a107 = 1.52792336328824235832596922938e1L;
constexpr long double a108 = -3.32882109689848629194453265587e1L;
constexpr long double a109 = -2.03312017085086261358222928593e-2L;
constexpr long double a111 = -9.3714243008598732571704021658e-1L;
constexpr long double a114 = 5.18637242884406370830023853209e0L;
constexpr long double a115 = 1.09143734899672957818500254654e0L;
constexpr long double a116 = -8.14978701074692612513997267357e0L;
constexpr long double a117 = -1.85200656599969598641566180701e1L;
constexpr long double a118 = 2.27394870993505042818970056734e1L;
constexpr long double a119 = 2.49360555267965238987089396762e0L;
constexpr long double a1110 = -3.0467644718982195003823669022e0L;
constexpr long double a121 = 2.27331014751653820792359768449e0L;
constexpr long double a124 = -1.05344954667372501984066689879e1L;
constexpr long double a125 = -2.00087205822486249909675718444e0L;
constexpr long double a126 = -1.79589318631187989172765950534e1L;
constexpr long double a127 = 2.79488845294199600508499808837e1L;
constexpr long double a128 = -2.85899827713502369474065508674e0L;
constexpr long double a129 = -8.87285693353062954433549289258e0L;
constexpr long double a1210 = 1.23605671757943030647266201528e1L;
constexpr long double a1211 = 6.43392746015763530355970484046e-1L;

constexpr long double a141 = 5.61675022830479523392909219681e-2L;
constexpr long double a147 = 2.53500210216624811088794765333e-1L;
constexpr long double a148 = -2.46239037470802489917441475441e-1L;
constexpr long double a149 = -1.24191423263816360469010140626e-1L;
constexpr long double a1410 = 1.5329179827876569731206322685e-1L;
constexpr long double a1411 = 8.20105229563468988491666602057e-3L;
constexpr long double a1412 = 7.56789766054569976138603589584e-3L;
constexpr long double a1413 = -8.298e-3L;
constexpr long double a151 = 3.18346481635021405060768473261e-2L;
constexpr long double a156 = 2.83009096723667755288322961402e-2L;
constexpr long double a157 = 5.35419883074385676223797384372e-2L;
constexpr long double a158 = -5.49237485713909884646569340306e-2L;
constexpr long double a1511 = -1.08347328697249322858509316994e-4L;
constexpr long double a1512 = 3.82571090835658412954920192323e-4L;
constexpr long double a1513 = -3.40465008687404560802977114492e-4L;
constexpr long double a1514 = 1.41312443674632500278074618366e-1L;
constexpr long double a161 = -4.28896301583791923408573538692e-1L;
constexpr long double a166 = -4.69762141536116384314449447206e0L;
constexpr long double a167 = 7.68342119606259904184240953878e0L;
constexpr long double a168 = 4.06898981839711007970213554331e0L;
constexpr long double a169 = 3.56727187455281109270669543021e-1L;
constexpr long double a1613 = -1.39902416515901462129418009734e-3L;
constexpr long double a1614 = 2.9475147891527723389556272149e0L;
constexpr long double a1615 = -9.15095847217987001081870187138e0L;

constexpr long double b1 = 5.42937341165687622380535766363e-2L;
constexpr long double b6 = 4.45031289275240888144113950566e0L;
constexpr long double b7 = 1.89151789931450038304281599044e0L;
constexpr long double b8 = -5.8012039600105847814672114227e0L;
constexpr long double b9 = 3.1116436695781989440891606237e-1L;
constexpr long double b10 = -1.52160949662516078556178806805e-1L;
constexpr long double b11 = 2.01365400804030348374776537501e-1L;
constexpr long double b12 = 4.47106157277725905176885569043e-2L;

constexpr long double bhh1 = 0.244094488188976377952755905512e+00L;
constexpr long double bhh2 = 0.733846688281611857341361741547e+00L;
constexpr long double bhh3 = 0.220588235294117647058823529412e-01L;

constexpr long double er1 = 0.1312004499419488073250102996e-01L;
constexpr long double er6 = -0.1225156446376204440720569753e+01L;
constexpr long double er7 = -0.4957589496572501915214079952e+00L;
constexpr long double er8 = 0.1664377182454986536961530415e+01L;
constexpr long double er9 = -0.3503288487499736816886487290e+00L;
constexpr long double er10 = 0.3341791187130174790297318841e+00L;
constexpr long double er11 = 0.8192320648511571246570742613e-01L;
constexpr long double er12 = -0.2235530786388629525884427845e-01L;

constexpr long double d41 = -0.84289382761090128651353491142e+01L;
constexpr long double d46 = 0.56671495351937776962531783590e+00L;
constexpr long double d47 = -0.30689499459498916912797304727e+01L;
constexpr long double d48 = 0.23846676565120698287728149680e+01L;
constexpr long double d49 = 0.21170345824450282767155149946e+01L;
constexpr long double d410 = -0.87139158377797299206789907490e+00L;
constexpr long double d411 = 0.22404374302607882758541771650e+01L;
constexpr long double d412 = 0.63157877876946881815570249290e+00L;
constexpr long double d413 = -0.88990336451333310820698117400e-01L;
constexpr long double d414 = 0.18148505520854727256656404962e+02L;
constexpr long double d415 = -0.91946323924783554000451984436e+01L;
constexpr long double d416 = -0.44360363875948939664310572000e+01L;
constexpr long double d51 = 0.10427508642579134603413151009e+02L;
constexpr long double d56 = 0.24228349177525818288430175319e+03L;
constexpr long double d57 = 0.16520045171727028198505394887e+03L;
constexpr long double d58 = -0.37454675472269020279518312152e+03L;
constexpr long double d59 = -0.22113666853125306036270938578e+02L;
constexpr long double d510 = 0.77334326684722638389603898808e+01L;
constexpr long double d511 = -0.30674084731089398182061213626e+02L;
constexpr long double d512 = -0.93321305264302278729567221706e+01L;
constexpr long double d513 = 0.15697238121770843886131091075e+02L;
constexpr long double d514 = -0.31139403219565177677282850411e+02L;
constexpr long double d515 = -0.93529243588444783865713862664e+01L;
constexpr long double d516 = 0.35816841486394083752465898540e+02L;
constexpr long double d61 = 0.19985053242002433820987653617e+02L;
constexpr long double d66 = -0.38703730874935176555105901742e+03L;
constexpr long double d67 = -0.18917813819516756882830838328e+03L;
constexpr long double d68 = 0.52780815920542364900561016686e+03L;
constexpr long double d69 = -0.11573902539959630126141871134e+02L;
constexpr long double d610 = 0.68812326946963000169666922661e+01L;
constexpr long double d611 = -0.10006050966910838403183860980e+01L;
constexpr long double d612 = 0.77771377980534432092869265740e+00L;
constexpr long double d613 = -0.27782057523535084065932004339e+01L;
constexpr long double d614 = -0.60196695231264120758267380846e+02L;
constexpr long double d615 = 0.84320405506677161018159903784e+02L;
constexpr long double d616 = 0.11992291136182789328035130030e+02L;
constexpr long double d71 = -0.25693933462703749003312586129e+02L;
constexpr long double d76 = -0.15418974869023643374053993627e+03L;
constexpr long double d77 = -0.23152937917604549567536039109e+03L;
constexpr long double d78 = 0.35763911791061412378285349910e+03L;
constexpr long double d79 = 0.93405324183624310003907691704e+02L;
constexpr long double d710 = -0.37458323136451633156875139351e+02L;
constexpr long double d711 = 0.10409964950896230045147246184e+03L;
constexpr long double d712 = 0.29840293426660503123344363579e+02L;
constexpr long double d713 = -0.43533456590011143754432175058e+02L;
constexpr long double d714 = 0.96324553959188282948394950600e+02L;
constexpr long double d715 = -0.39177261675615439165231486172e+02L;
constexpr long double d716 = -0.14972683625798562581422125276e+03L;
}  // namespace dp

template <class Real>
using Vec = std::array<Real, 6>;

template <class Real>
struct Rhs {
  Real mu, Re2J2;
  long* evaluations;

  Vec<Real> operator()(const Vec<Real>& y) const {
    ++*evaluations;
    const Real r2 = y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
    const Real r = std::sqrt(r2);
    const Real k = -mu / (r2 * r);
    const Real q = Real(1.5) * Re2J2 / r2;
    const Real z2 = y[2] * y[2] / r2;
    const Real fxy = k * (1 + q * (1 - 5 * z2));
    const Real fz = k * (1 + q * (3 - 5 * z2));
    return {y[3], y[4], y[5], fxy * y[0], fxy * y[1], fz * y[2]};
  }
};

template <class Real>
Vec<Real> combine(const Vec<Real>& y, Real h,
                  std::initializer_list<std::pair<long double, const Vec<Real>*>> terms) {
  Vec<Real> out;
  for (int i = 0; i < 6; ++i) {
    Real acc = 0;
    for (const auto& [coef, k] : terms) acc += Real(coef) * (*k)[i];
    out[i] = y[i] + h * acc;
  }
  return out;
}

template <class Real>
ReferenceTrajectory run(const CartesianState& initial, double t0,
                        const std::vector<double>& times, const GravityField& field,
                        const OracleOptions& options) {
  using std::abs;
  ReferenceTrajectory traj;
  traj.tol = options.tol;
  Rhs<Real> f{Real(field.mu), Real(field.Re) * Real(field.Re) * Real(field.J2),
              &traj.stats.evaluations};

  Vec<Real> y;
  for (int i = 0; i < 3; ++i) {
    y[i] = initial.position[i];
    y[i + 3] = initial.velocity[i];
  }
  Vec<Real> comp{};  // Kahan compensation of y
  Real t = t0;
  Vec<Real> k1 = f(y);

  const Real rtol = options.tol * kLocalTolScale;
  const Real atol_pos = rtol * std::hypot(initial.position[0], initial.position[1],
                                                 initial.position[2]);
  const Real atol_vel = rtol * std::hypot(initial.velocity[0], initial.velocity[1],
                                                 initial.velocity[2]);
  auto scale = [&](int i, Real a, Real b) {
    return (i < 3 ? atol_pos : atol_vel) + rtol * std::max(abs(a), abs(b));
  };

  // Initial step from the orbital time scale.
  const Real r0 = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
  const Real v0 = std::sqrt(y[3] * y[3] + y[4] * y[4] + y[5] * y[5]);
  Real h = Real(1e-3) * r0 / v0;

  auto emit = [&](double tout, const Vec<Real>& yv) {
    CartesianState s;
    for (int i = 0; i < 3; ++i) {
      s.position[i] = static_cast<double>(yv[i]);
      s.velocity[i] = static_cast<double>(yv[i + 3]);
    }
    const Conserved c = conserved(s, field);
    traj.times.push_back(tout);
    traj.states.push_back(s);
    traj.energy.push_back(c.energy);
    traj.N.push_back(c.N);
  };

  std::size_t next = 0;
  while (next < times.size() && times[next] <= t0) {
    if (times[next] < t0) throw UsageError("output times precede the initial epoch");
    emit(times[next++], y);
  }
  bool reject = false;
  const Real eps = std::numeric_limits<Real>::epsilon();

  while (next < times.size()) {
    if (traj.stats.accepted + traj.stats.rejected >= options.max_steps) {
      throw IntegrationFailure("oracle exceeded the maximum number of steps");
    }
    if (h < 10 * eps * abs(t)) throw IntegrationFailure("oracle step size underflow");
    using namespace dp;
    const Vec<Real> k2 = f(combine<Real>(y, h, {{a21, &k1}}));
    const Vec<Real> k3 = f(combine<Real>(y, h, {{a31, &k1}, {a32, &k2}}));
    const Vec<Real> k4 = f(combine<Real>(y, h, {{a41, &k1}, {a43, &k3}}));
    const Vec<Real> k5 = f(combine<Real>(y, h, {{a51, &k1}, {a53, &k3}, {a54, &k4}}));
    const Vec<Real> k6 = f(combine<Real>(y, h, {{a61, &k1}, {a64, &k4}, {a65, &k5}}));
    const Vec<Real> k7 =
        f(combine<Real>(y, h, {{a71, &k1}, {a74, &k4}, {a75, &k5}, {a76, &k6}}));
    const Vec<Real> k8 = f(
        combine<Real>(y, h, {{a81, &k1}, {a84, &k4}, {a85, &k5}, {a86, &k6}, {a87, &k7}}));
    const Vec<Real> k9 = f(combine<Real>(
        y, h, {{a91, &k1}, {a94, &k4}, {a95, &k5}, {a96, &k6}, {a97, &k7}, {a98, &k8}}));
    const Vec<Real> k10 = f(combine<Real>(y, h,
                                          {{a101, &k1},
                                           {a104, &k4},
                                           {a105, &k5},
                                           {a106, &k6},
                                           {a107, &k7},
                                           {a108, &k8},
                                           {a109, &k9}}));
    const Vec<Real> k11 = f(combine<Real>(y, h,
                                          {{a111, &k1},
                                           {a114, &k4},
                                           {a115, &k5},
                                           {a116, &k6},
                                           {a117, &k7},
                                           {a118, &k8},
                                           {a119, &k9},
                                           {a1110, &k10}}));
    const Vec<Real> k12 = f(combine<Real>(y, h,
                                          {{a121, &k1},
                                           {a124, &k4},
                                           {a125, &k5},
                                           {a126, &k6},
                                           {a127, &k7},
                                           {a128, &k8},
                                           {a129, &k9},
                                           {a1210, &k10},
                                           {a1211, &k11}}));
    Vec<Real> inc;
    Real err5 = 0, err3 = 0;
    Vec<Real> ynew;
    for (int i = 0; i < 6; ++i) {
      inc[i] = b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] + b10 * k10[i] +
               b11 * k11[i] + b12 * k12[i];
      ynew[i] = y[i] + h * inc[i];
    }
    for (int i = 0; i < 6; ++i) {
      const Real sk = scale(i, y[i], ynew[i]);
      const Real e3 = inc[i] - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k12[i];
      const Real e5 = er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] + er9 * k9[i] +
                      er10 * k10[i] + er11 * k11[i] + er12 * k12[i];
      err3 += (e3 / sk) * (e3 / sk);
      err5 += (e5 / sk) * (e5 / sk);
    }
    Real deno = err5 + Real(0.01) * err3;
    if (deno <= 0) deno = 1;
    const Real err = abs(h) * err5 / std::sqrt(6 * deno);

    if (!(err <= 1)) {
      traj.stats.rejected++;
      reject = true;
      const Real shrink = std::isfinite(static_cast<double>(err))
                              ? std::max(Real(0.2), Real(0.9) * std::pow(err, Real(-0.125)))
                              : Real(0.2);
      h *= shrink;
      continue;
    }
    traj.stats.accepted++;

    // Compensated update of the state.
    Vec<Real> yacc;
    for (int i = 0; i < 6; ++i) {
      const Real dy = h * inc[i] - comp[i];
      const Real sum = y[i] + dy;
      comp[i] = (sum - y[i]) - dy;
      yacc[i] = sum;
    }
    const Real tnew = t + h;
    const Vec<Real> k13 = f(yacc);

    if (next < times.size() && Real(times[next]) <= tnew) {
      const Vec<Real> k14 = f(combine<Real>(y, h,
                                            {{a141, &k1},
                                             {a147, &k7},
                                             {a148, &k8},
                                             {a149, &k9},
                                             {a1410, &k10},
                                             {a1411, &k11},
                                             {a1412, &k12},
                                             {a1413, &k13}}));
      const Vec<Real> k15 = f(combine<Real>(y, h,
                                            {{a151, &k1},
                                             {a156, &k6},
                                             {a157, &k7},
                                             {a158, &k8},
                                             {a1511, &k11},
                                             {a1512, &k12},
                                             {a1513, &k13},
                                             {a1514, &k14}}));
      const Vec<Real> k16 = f(combine<Real>(y, h,
                                            {{a161, &k1},
                                             {a166, &k6},
                                             {a167, &k7},
                                             {a168, &k8},
                                             {a169, &k9},
                                             {a1613, &k13},
                                             {a1614, &k14},
                                             {a1615, &k15}}));
      std::array<Vec<Real>, 8> rc;
      for (int i = 0; i < 6; ++i) {
        const Real ydiff = yacc[i] - y[i];
        const Real bspl = h * k1[i] - ydiff;
        rc[0][i] = y[i];
        rc[1][i] = ydiff;
        rc[2][i] = bspl;
        rc[3][i] = ydiff - h * k13[i] - bspl;
        rc[4][i] = h * (d41 * k1[i] + d46 * k6[i] + d47 * k7[i] + d48 * k8[i] + d49 * k9[i] +
                        d410 * k10[i] + d411 * k11[i] + d412 * k12[i] + d413 * k13[i] +
                        d414 * k14[i] + d415 * k15[i] + d416 * k16[i]);
        rc[5][i] = h * (d51 * k1[i] + d56 * k6[i] + d57 * k7[i] + d58 * k8[i] + d59 * k9[i] +
                        d510 * k10[i] + d511 * k11[i] + d512 * k12[i] + d513 * k13[i] +
                        d514 * k14[i] + d515 * k15[i] + d516 * k16[i]);
        rc[6][i] = h * (d61 * k1[i] + d66 * k6[i] + d67 * k7[i] + d68 * k8[i] + d69 * k9[i] +
                        d610 * k10[i] + d611 * k11[i] + d612 * k12[i] + d613 * k13[i] +
                        d614 * k14[i] + d615 * k15[i] + d616 * k16[i]);
        rc[7][i] = h * (d71 * k1[i] + d76 * k6[i] + d77 * k7[i] + d78 * k8[i] + d79 * k9[i] +
                        d710 * k10[i] + d711 * k11[i] + d712 * k12[i] + d713 * k13[i] +
                        d714 * k14[i] + d715 * k15[i] + d716 * k16[i]);
      }
      while (next < times.size() && Real(times[next]) <= tnew) {
        Vec<Real> yout;
        if (Real(times[next]) == tnew) {
          yout = yacc;
        } else {
          const Real s = (Real(times[next]) - t) / h;
          const Real s1 = 1 - s;
          for (int i = 0; i < 6; ++i) {
            const Real conpar = rc[4][i] + s * (rc[5][i] + s1 * (rc[6][i] + s * rc[7][i]));
            yout[i] =
                rc[0][i] + s * (rc[1][i] + s1 * (rc[2][i] + s * (rc[3][i] + s1 * conpar)));
          }
        }
        emit(times[next++], yout);
      }
    }

    y = yacc;
    k1 = k13;
    t = tnew;
    Real grow = err == 0 ? Real(6) : Real(0.9) * std::pow(err, Real(-0.125));
    grow = std::clamp(grow, Real(0.333), Real(6));
    if (reject) grow = std::min(grow, Real(1));
    reject = false;
    h *= grow;
  }
  return traj;
}

}  // namespace

Conserved conserved(const CartesianState& s, const GravityField& field) {
  const auto& x = s.position;
  const auto& v = s.velocity;
  Conserved c;
  c.energy = main_problem_energy(s, field);
  const double hx = x[1] * v[2] - x[2] * v[1];
  const double hy = x[2] * v[0] - x[0] * v[2];
  const double hz = x[0] * v[1] - x[1] * v[0];
  c.Theta = std::hypot(hx, hy, hz);
  c.N = hz;
  return c;
}

std::array<double, 3> main_problem_acceleration(const std::array<double, 3>& x,
                                                const GravityField& field) {
  long count = 0;
  Rhs<double> f{field.mu, field.Re * field.Re * field.J2, &count};
  const Vec<double> d = f({x[0], x[1], x[2], 0.0, 0.0, 0.0});
  return {d[3], d[4], d[5]};
}

ReferenceTrajectory integrate(const CartesianState& initial, double t0,
                              const std::vector<double>& times, const GravityField& field,
                              const OracleOptions& options) {
  field.validate();
  if (!(options.tol >= 1e-14 && options.tol <= 1e-10)) {
    throw UsageError("oracle tolerance must lie in [1e-14, 1e-10]");
  }
  if (!std::is_sorted(times.begin(), times.end())) {
    throw UsageError("oracle output times must be non-decreasing");
  }
  const double r = std::hypot(initial.position[0], initial.position[1], initial.position[2]);
  if (!(r > 0.0)) throw UsageError("oracle needs a non-degenerate initial state");

  ReferenceTrajectory traj = options.precision == OraclePrecision::Extended
                                 ? run<long double>(initial, t0, times, field, options)
                                 : run<double>(initial, t0, times, field, options);
  const Conserved c0 = conserved(initial, field);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    traj.energy_drift =
        std::max(traj.energy_drift, std::abs(traj.energy[i] - c0.energy) / std::abs(c0.energy));
    if (c0.N != 0.0) {
      traj.N_drift = std::max(traj.N_drift, std::abs(traj.N[i] - c0.N) / std::abs(c0.N));
    }
  }
  if (options.check_drift) {
    if (traj.energy_drift > options.max_drift) {
      throw AccuracyError("oracle energy drift " + format_double(traj.energy_drift) +
                              " exceeds " + format_double(options.max_drift),
                          traj.energy_drift);
    }
    if (traj.N_drift > options.max_drift) {
      throw AccuracyError("oracle polar angular momentum drift " +
                              format_double(traj.N_drift) + " exceeds " +
                              format_double(options.max_drift),
                          traj.N_drift);
    }
  }
  return traj;
}

void write_trajectory_csv(std::ostream& out, const ReferenceTrajectory& traj) {
  out << "t,x,y,z,vx,vy,vz,energy,N\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const auto& s = traj.states[i];
    out << format_double(traj.times[i]);
    for (double v : s.position) out << ',' << format_double(v);
    for (double v : s.velocity) out << ',' << format_double(v);
    out << ',' << format_double(traj.energy[i]) << ',' << format_double(traj.N[i]) << '\n';
  }
}

ReferenceTrajectory read_trajectory_csv(std::istream& in) {
  ReferenceTrajectory traj;
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,x,y,z,vx,vy,vz", 0) != 0) {
    throw UsageError("trajectory CSV header missing");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 9> v{};
    std::size_t pos = 0;
    for (int k = 0; k < 9; ++k) {
      const std::size_t end = k < 8 ? line.find(',', pos) : line.size();
      if (end == std::string::npos) throw UsageError("trajectory CSV row is short");
      const auto res = std::from_chars(line.data() + pos, line.data() + end, v[k]);
      if (res.ec != std::errc()) throw UsageError("trajectory CSV has a bad number");
      pos = end + 1;
    }
    traj.times.push_back(v[0]);
    traj.states.push_back({{v[1], v[2], v[3]}, {v[4], v[5], v[6]}});
    traj.energy.push_back(v[7]);
    traj.N.push_back(v[8]);
  }
  return traj;
}

}  // namespace mainprob
