#include "mvl/bessel.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mvl/specfun.hpp"

namespace mvl {

namespace {

using c50 = boost::multiprecision::cpp_complex_50;
using c100 = boost::multiprecision::cpp_complex_100;

// Stirling series coefficients B_{2n}/(2n(2n-1)), n = 1..40, to 115 digits.
const char* const STIRLING_COEFF[40] = {
    "0.08333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333",
    "-0.002777777777777777777777777777777777777777777777777777777777777777777777777777777777777777777777777777777777777778",
    "0.0007936507936507936507936507936507936507936507936507936507936507936507936507936507936507936507936507936507936507936508",
    "-0.0005952380952380952380952380952380952380952380952380952380952380952380952380952380952380952380952380952380952380952381",
    "0.0008417508417508417508417508417508417508417508417508417508417508417508417508417508417508417508417508417508417508417508",
    "-0.001917526917526917526917526917526917526917526917526917526917526917526917526917526917526917526917526917526917526917527",
    "0.006410256410256410256410256410256410256410256410256410256410256410256410256410256410256410256410256410256410256410256",
    "-0.02955065359477124183006535947712418300653594771241830065359477124183006535947712418300653594771241830065359477124183",
    "0.1796443723688305731649384900158893966943502547217717496355267253100070437531737841335364555178796664864776319884679",
    "-1.392432216905901116427432216905901116427432216905901116427432216905901116427432216905901116427432216905901116427432",
    "13.40286404416839199447895100069013112491373360938578329882677708764665286404416839199447895100069013112491373360939",
    "-156.8482846260020173063651324520889738281042628868715825237564367999150607846260020173063651324520889738281042628869",
    "2193.103333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333",
    "-36108.77125372498935717326521924223073648361004682843763303533418475947211579395487441464452958705832269050659855258",
    "691472.2688513130671083952507756734675533340716877980504231894665710016099337567635676645687769158291961406533152918",
    "-15238221.53940741619228336495888678051865907653383934218848829854522454142947501581277672359266287160025300442757748",
    "382900751.3914141414141414141414141414141414141414141414141414141414141414141414141414141414141414141414141414141414",
    "-10882266035.78439108901514916552510537472943487981081966044372059409653394615800630838224823187229202266796251758658",
    "347320283765.0022522522522522522522522522522522522522522522522522522522522522522522522522522522522522522522522522523",
    "-12369602142269.27445425171034927132488108097864195425171034927132488108097864195425171034927132488108097864195425171",
    "488788064793079.3350758151625180229021084705389056738218070362953273576399741216206656608568933340021582465468698351",
    "-21320333960919373.89697505898213683855746545331985170205594876980114593865857768790023592854735422986181327940680822",
    "1021775296525700077.56528762805358550039401103230890464933018124507486209613869188337273443656422379826635145784082",
    "-53575472173300203610.82770919196920448484904054365881649986781401049235842727707558746357244479897796543603802677645",
    "3061578263704883415043.15105132962275819418676561533704390847247990105132962275819418676561533704390847247990105133",
    "-189999174263992040502937.1429306942902947342458996177087187076088296954001726476754223702059440128252558885189295844",
    "12763374033828834149234951.37769782597654163360882990144823974681637707125956050153335820333503219964656575050484352",
    "-925284717612041630723024234.8347622779519331243469174503657262277951933124346917450365726227795193312434691745036573",
    "72188225951856102978360501873.01637922489840420259688769947467538903756566557637030429180295371196352463078600455942",
    "-6045183405995856967743148238754.547286066144395967196207406301608096013351953622100347445201302455557669819696009767",
    "542067047157009454519347781482610.0013661202185792349726775956284153005464480874316939890710382513661202185792349727",
    "-51929578153140819467001947643918576.84699706271397447868036103330220977279800809212573918456271397447868036103330221",
    "5303658855119700596654839243069758643.699292635405549097956625536119371291337547015678099389974795555587249292635406",
    "-576332534816496401389443585078099255519.0737562189054726368159203980099502487562189054726368159203980099502487562189",
    "66511557148484539375165201458105559510397.3935945492895890936307347819901402265149968762951004224733557250397421861",
    "-8137378358136680538716172632093575691840689.164973879262367945004499733015020848728211868843691502789566296781179444",
    "1053696695335714180375480492764181018964837337.501141552511415525114155251141552511415525114155251141552511415525114",
    "-144181805999622062618053778015118128095703320636.6421111111111111111111111111111111111111111111111111111111111111111",
    "20817356522089565462424808241263562311317343264149.97918933588011345696698318759801580778072640640452575353117848597",
    "-3167022663488666182741349556774256134291806983042075.303039154461638706957705196086686379623560670724828144511053179",
};

template <class C>
using real_t = typename C::value_type;

template <class C>
const std::vector<C>& stirling_coeffs() {
    static const std::vector<C> v = [] {
        std::vector<C> out;
        out.reserve(40);
        for (const char* s : STIRLING_COEFF) out.emplace_back(real_t<C>(s));
        return out;
    }();
    return v;
}

template <class C>
const real_t<C>& pi_const() {
    static const real_t<C> p = acos(real_t<C>(-1));
    return p;
}

inline cplx to_cplx(const cplx& v) { return v; }
template <class C>
cplx to_cplx(const C& v) {
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

inline double abs_d(const cplx& v) { return std::abs(v); }
template <class C>
double abs_d(const C& v) {
    return std::abs(to_cplx(v));
}

template <class C>
constexpr double digit_cap() {
    if constexpr (std::is_same_v<C, cplx>) return 15.5;
    else if constexpr (std::is_same_v<C, c50>) return 48.0;
    else return 98.0;
}

// Principal-branch log Gamma in extended precision: recurrence-shift the
// argument until its real part supports the Stirling tail, then sum it.
template <class C>
C mp_log_gamma(C z) {
    const double target = digit_cap<C>() > 60 ? 120.0 : 40.0;
    const real_t<C> pi_r = pi_const<C>();
    C shift(0);
    while (static_cast<double>(z.real()) < target) {
        shift += log(z);
        z += C(1);
    }
    C lz = log(z);
    C res = (z - C(real_t<C>(1) / 2)) * lz - z + log(2 * pi_r) / 2;
    C zinv = C(1) / z, z2 = zinv * zinv, p = zinv;
    for (const C& coeff : stirling_coeffs<C>()) {
        res += coeff * p;
        p *= z2;
    }
    return res - shift;
}

template <class C>
C lgamma_c(const C& z) {
    if constexpr (std::is_same_v<C, cplx>)
        return log_gamma(z);
    else
        return mp_log_gamma<C>(z);
}

template <class C>
C sin_c(const C& z) {
    if constexpr (std::is_same_v<C, cplx>) {
        return std::sin(z);
    } else {
        const C i(0, 1);
        return (exp(i * z) - exp(-i * z)) / C(0, 2);
    }
}

// sum_{k>=0} u_k with u_0 = 1, u_{k+1} = u_k q / ((k+1)(mu+k+1));
// reports the peak |term| so callers can measure cancellation.
template <class C>
C ji_series_sum(const C& mu, const C& q, double& maxterm) {
    C term(1), sum(1);
    maxterm = 1.0;
    const double floor_rel = std::pow(10.0, -digit_cap<C>() - 2.0);
    int consecutive = 0;
    for (int k = 0; k < 20000; ++k) {
        term *= q / (C(k + 1) * (mu + C(k + 1)));
        sum += term;
        double at = abs_d(term);
        maxterm = std::max(maxterm, at);
        if (at < floor_rel * maxterm) {
            if (++consecutive >= 3) break;
        } else {
            consecutive = 0;
        }
    }
    return sum;
}

template <class C>
cplx bessel_eval(BesselKind kind, cplx nu_, cplx z_, double& cancel) {
    C nu(nu_.real(), nu_.imag()), z(z_.real(), z_.imag());
    C lz = log(z / C(2));
    C q = z * z / C(4);
    if (kind == BesselKind::J) q = -q;
    if (kind != BesselKind::K) {
        double maxterm = 0;
        C sum = ji_series_sum<C>(nu, q, maxterm);
        cancel = maxterm / (abs_d(sum) + 1e-300);
        // the prefactor is a common factor of every term: double suffices
        cplx t0 = std::exp(nu_ * std::log(z_ / 2.0) - log_gamma(nu_ + 1.0));
        return t0 * to_cplx(sum);
    }
    // K = pi (I_{-nu} - I_nu) / (2 sin pi nu): the two series cancel to
    // e^{-x} against e^{+x}, so the prefactors must carry full precision too.
    double max_p = 0, max_m = 0;
    C sp = ji_series_sum<C>(nu, q, max_p);
    C sm = ji_series_sum<C>(C(0) - nu, q, max_m);
    C tp = exp(nu * lz - lgamma_c<C>(C(1) + nu));
    C tm = exp(C(0) - nu * lz - lgamma_c<C>(C(1) - nu));
    C diff = tm * sm - tp * sp;
    const real_t<C> pi_r = pi_const<C>();
    C spi = sin_c<C>(C(pi_r) * nu);
    cancel = (abs_d(tm) * max_m + abs_d(tp) * max_p) / (abs_d(diff) + 1e-300);
    return to_cplx(C(pi_r) * diff / (C(2) * spi));
}

bool near_integer(cplx z, double tol = 1e-6) {
    return std::abs(z.imag()) < tol && std::abs(z.real() - std::round(z.real())) < tol;
}

double smooth_step(double t, double p) {
    // 0 at t <= 0, 1 at t >= 1, C^infinity exp(-p/t) glue in between
    if (t <= 0) return 0.0;
    if (t >= 1) return 1.0;
    double f = std::exp(-p / t), g = std::exp(-p / (1 - t));
    return f / (f + g);
}

void check_profile(int profile) {
    if (profile != 0 && profile != 1)
        throw std::invalid_argument("mollifier: profile must be 0 or 1");
}

}  // namespace

cplx bessel_cz(BesselKind kind, cplx nu, cplx z) {
    if (!(z.real() > 0))
        throw std::domain_error("bessel: argument must have positive real part");
    if (kind == BesselKind::K) {
        if (near_integer(nu))
            throw PoleSignal("bessel: K of near-integer order (sin pi nu ~ 0)");
    } else if (nu.real() < -0.5 && near_integer(nu)) {
        throw std::domain_error("bessel: order at a negative integer");
    }
    const double az = std::abs(z);
    const double need = (kind == BesselKind::K ? 0.8686 : 0.4343) * az + 14.0;
    int level = need <= 15.5 ? 0 : need <= 48.0 ? 1 : need <= 98.0 ? 2 : 3;
    for (; level <= 2; ++level) {
        double cancel = 0, cap = level == 0 ? 15.5 : level == 1 ? 48.0 : 98.0;
        cplx v = level == 0   ? bessel_eval<cplx>(kind, nu, z, cancel)
                 : level == 1 ? bessel_eval<c50>(kind, nu, z, cancel)
                              : bessel_eval<c100>(kind, nu, z, cancel);
        if (cancel < std::pow(10.0, cap - 13.5)) return v;
    }
    throw std::domain_error("bessel: argument too large for available precision");
}

cplx bessel(BesselKind kind, cplx nu, double x) {
    return bessel_cz(kind, nu, cplx(x, 0.0));
}

cplx B_pm_cz(int sign, cplx nu, cplx z) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("B_pm: sign must be +1 or -1");
    if (near_integer(nu) || near_integer(2.0 * nu))
        throw PoleSignal("B_pm: nu at a half-integer (sin pi nu or Bessel order degenerate)");
    if (sign > 0) {
        cplx jm = bessel_cz(BesselKind::J, -2.0 * nu, z);
        cplx jp = bessel_cz(BesselKind::J, 2.0 * nu, z);
        return PI * (jm - jp) / (2.0 * std::sin(PI * nu));
    }
    return 2.0 * std::cos(PI * nu) * bessel_cz(BesselKind::K, 2.0 * nu, z);
}

cplx B_pm(int sign, cplx nu, double x) {
    return B_pm_cz(sign, nu, cplx(x, 0.0));
}

double mollifier_w(double x, int profile) {
    check_profile(profile);
    if (!(x > 0)) throw std::domain_error("mollifier_w: x must be positive");
    if (x <= 1.0) return 1.0;
    if (x >= 2.0) return 0.0;
    return smooth_step(2.0 - x, profile == 0 ? 1.0 : 2.0);
}

cplx mellin_w(cplx s, int profile) {
    check_profile(profile);
    if (std::abs(s) < 1e-8) throw PoleSignal("mellin_w: pole at s = 0");
    // 1/s is the transform of the sharp cutoff; the rest lives on [1, 2]
    auto f = [&](cplx u) -> cplx {
        double x = u.real();
        return mollifier_w(x, profile) * std::exp((s - 1.0) * std::log(x));
    };
    double scale = std::exp(std::max(0.0, s.real() - 1.0) * std::log(2.0));
    auto r = integrate_line_centered(f, 0.0, 1.5, 0.5, 1e-14 * (scale + 1.0));
    return 1.0 / s + r.value;
}

cplx P_nu(cplx nu, double x) {
    if (!(x > 0)) throw std::domain_error("P_nu: x must be positive");
    return std::exp(nu * std::log(x / 2.0)) * recip_gamma(nu + 1.0);
}

cplx R_nu(cplx nu, double x) {
    if (near_integer(nu) || near_integer(2.0 * nu))
        throw PoleSignal("R_nu: nu at a half-integer");
    return PI * (P_nu(-2.0 * nu, x) - P_nu(2.0 * nu, x)) / (2.0 * std::sin(PI * nu));
}

cplx regularized_M(int sign, cplx nu, double x, int profile) {
    double w = x * x / 4.0 >= 2.0 ? 0.0 : mollifier_w(x * x / 4.0, profile);
    cplx b = B_pm(sign, nu, x);
    return w == 0.0 ? b : b - w * R_nu(nu, x);
}

namespace {

// ---- closed-form Fourier transforms -------------------------------------

void require_strip(cplx s, double lo, double hi, const char* who) {
    if (!(s.real() > lo && s.real() < hi))
        throw std::domain_error(std::string(who) + ": Re s outside validity strip");
}

// cos(pi nu) Gamma(1-s, 2nu) (iy)^{s-1} Psi_kind(1-s, 1+2nu; -i/y)
cplx closed_A_like(PsiKind kind, cplx s, cplx nu, double y) {
    return std::cos(PI * nu) * gamma_pair(1.0 - s, 2.0 * nu) * iy_pow(y, s - 1.0) *
           psi_variant(kind, 1.0 - s, 1.0 + 2.0 * nu, cplx(0.0, -1.0 / y));
}

cplx closed_A_zero(int sign, cplx s, cplx nu) {
    cplx trig = sign > 0 ? -std::cos(PI * (s + nu)) : std::cos(PI * nu);
    return trig * gamma_pair(1.0 - s, 2.0 * nu);
}

cplx closed_W_zero(cplx s, cplx nu, int profile) {
    if (near_integer(2.0 * nu)) throw PoleSignal("W: Gamma(+-2nu) at a pole");
    return std::cos(PI * nu) * (mellin_w(1.0 - s - 2.0 * nu, profile) * gamma_fn(2.0 * nu) +
                                mellin_w(1.0 - s, profile) * gamma_fn(-2.0 * nu));
}

// W_{s,nu}(y) = int_0^infty w(x) R_nu(2 sqrt x) e^{-ixy} x^{-s-nu} dx.
// Split w = [x <= 1] + (w - [x <= 1]): the sharp part integrates termwise
// against the Taylor series of e^{-ixy} into an entire, absolutely
// convergent series; the remainder is a smooth integral over [1, 2].  (The
// equivalent vertical-contour representation converges too slowly to
// truncate at useful accuracy.)
template <class C>
cplx w_sharp_series(cplx s_, cplx nu_, double y) {
    C s(s_.real(), s_.imag()), nu(nu_.real(), nu_.imag());
    const real_t<C> pi_r = pi_const<C>();
    C rg_m = exp(C(0) - lgamma_c<C>(C(1) - C(2) * nu));  // 1/Gamma(1-2nu)
    C rg_p = exp(C(0) - lgamma_c<C>(C(1) + C(2) * nu));  // 1/Gamma(1+2nu)
    C pref = C(pi_r) / (C(2) * sin_c<C>(C(pi_r) * nu));
    C pw(1), fact(1), sum(0);
    const C miy(0, real_t<C>(-y));
    const double floor_rel = std::pow(10.0, -digit_cap<C>() - 2.0);
    double maxterm = 0;
    int consecutive = 0;
    for (int j = 0; j < 1000; ++j) {
        C cj = rg_m / (C(j + 1) - s - C(2) * nu) - rg_p / (C(j + 1) - s);
        C term = pw * cj / fact;
        sum += term;
        double at = abs_d(term);
        maxterm = std::max(maxterm, at);
        if (at < floor_rel * (maxterm + 1.0)) {
            if (++consecutive >= 3) break;
        } else {
            consecutive = 0;
        }
        pw *= miy;
        fact *= C(j + 1);
    }
    return to_cplx(C(pref) * sum);
}

cplx closed_W(cplx s, cplx nu, double y, int profile) {
    if (near_integer(nu) || near_integer(2.0 * nu))
        throw PoleSignal("W: nu at a half-integer");
    cplx sharp = std::abs(y) <= 20.0 ? w_sharp_series<cplx>(s, nu, y)
               : std::abs(y) <= 110.0
                   ? w_sharp_series<c50>(s, nu, y)
                   : throw std::domain_error("W: |y| too large for the cutoff series");
    auto f = [&](cplx u) -> cplx {
        double x = u.real();
        return mollifier_w(x, profile) * R_nu(nu, 2.0 * std::sqrt(x)) *
               std::exp(cplx(0.0, -x * y) + (-s - nu) * std::log(x));
    };
    auto r = integrate_line_centered(f, 0.0, 1.5, 0.5, 1e-13);
    return sharp + r.value;
}

}  // namespace

cplx fourier_closed(FourierKind kind, cplx s, cplx nu, double y, int profile) {
    check_profile(profile);
    switch (kind) {
        case FourierKind::A_plus:
        case FourierKind::A_minus: {
            int sign = kind == FourierKind::A_plus ? +1 : -1;
            if (y == 0) {
                require_strip(s, 0.25, 1.0, "fourier_closed[A at y=0]");
                return closed_A_zero(sign, s, nu);
            }
            require_strip(s, 0.75, 1.0, "fourier_closed[A]");
            return closed_A_like(sign > 0 ? PsiKind::plus : PsiKind::minus, s, nu, y);
        }
        case FourierKind::A_zero_plus:
            require_strip(s, 0.25, 1.0, "fourier_closed[A_zero]");
            return closed_A_zero(+1, s, nu);
        case FourierKind::A_zero_minus:
            require_strip(s, 0.25, 1.0, "fourier_closed[A_zero]");
            return closed_A_zero(-1, s, nu);
        case FourierKind::A0:
            if (y == 0) throw std::domain_error("fourier_closed[A0]: y must be nonzero");
            return closed_A_like(PsiKind::zero, s, nu, y);
        case FourierKind::A_breve_plus:
        case FourierKind::A_breve_minus: {
            if (y == 0) throw std::domain_error("fourier_closed[A_breve]: y must be nonzero");
            bool plus = kind == FourierKind::A_breve_plus;
            return closed_A_like(plus ? PsiKind::breve_plus : PsiKind::breve_minus, s, nu, y);
        }
        case FourierKind::W:
            if (y == 0) {
                require_strip(s, -1e308, 1.0, "fourier_closed[W at y=0]");
                return closed_W_zero(s, nu, profile);
            }
            require_strip(s, 0.0, 1.0, "fourier_closed[W]");
            return closed_W(s, nu, y, profile);
        case FourierKind::W_zero:
            require_strip(s, -1e308, 1.0, "fourier_closed[W_zero]");
            return closed_W_zero(s, nu, profile);
        case FourierKind::N_plus:
        case FourierKind::N_minus: {
            int sign = kind == FourierKind::N_plus ? +1 : -1;
            if (y == 0) {
                require_strip(s, 0.25, 1.0, "fourier_closed[N at y=0]");
                return closed_A_zero(sign, s, nu) - closed_W_zero(s, nu, profile);
            }
            require_strip(s, 0.75, 1.0, "fourier_closed[N]");
            // N = A - W with A = A_breve + A0 (Phi = 1 + Phi_breve termwise)
            cplx breve = closed_A_like(sign > 0 ? PsiKind::breve_plus : PsiKind::breve_minus,
                                       s, nu, y);
            return breve + closed_A_like(PsiKind::zero, s, nu, y) - closed_W(s, nu, y, profile);
        }
    }
    throw std::logic_error("fourier_closed: unknown kind");
}

// ---- direct-quadrature oracle -------------------------------------------

OracleResult fourier_oracle(OracleKind kind, int sign, cplx s, cplx nu, double y,
                            int profile) {
    check_profile(profile);
    if (kind != OracleKind::W && sign != 1 && sign != -1)
        throw std::invalid_argument("fourier_oracle: sign must be +1 or -1");
    if (kind == OracleKind::A && sign > 0)
        throw std::domain_error(
            "fourier_oracle: oscillatory-kernel A integral is only conditionally "
            "convergent; refused");
    const double sigma = s.real();
    if (kind != OracleKind::W && sign > 0) {
        if (!(sigma > 0.75 && sigma < 1.0))
            throw std::domain_error("fourier_oracle: Re s outside (3/4, 1) for the "
                                    "oscillatory kernel");
        if (y == 0 || std::abs(y) < 0.5)
            throw std::domain_error("fourier_oracle: oscillatory-kernel tail needs "
                                    "|y| >= 1/2");
    } else if (!(sigma > 0.0 && sigma < 1.0)) {
        throw std::domain_error("fourier_oracle: Re s outside (0, 1)");
    }
    const double r0 = 1.0 - sigma - 2.0 * std::abs(nu.real());
    if (r0 < 0.05)
        throw std::domain_error("fourier_oracle: order too far from the imaginary axis");

    // integrand pieces; near x = 0 everything is bounded times x^{-s-nu}-type
    // powers, so the head is integrated on a logarithmic scale
    auto kernel_real = [&](double x) -> cplx {
        double rt = 2.0 * std::sqrt(x);
        switch (kind) {
            case OracleKind::A:
                return B_pm(sign, nu, rt);
            case OracleKind::N:
                return regularized_M(sign, nu, rt, profile);
            case OracleKind::W: {
                double w = x >= 2.0 ? 0.0 : mollifier_w(x, profile);
                return w == 0.0 ? cplx(0, 0) : w * R_nu(nu, rt);
            }
        }
        return {};
    };
    auto kernel_complex = [&](cplx x) -> cplx {
        // only used on the rotated tail, where x is far outside the cutoff
        // support and the regularized kernel coincides with B
        return B_pm_cz(sign, nu, 2.0 * std::sqrt(x));
    };
    auto f_real = [&](double x) -> cplx {
        return kernel_real(x) * std::exp(cplx(0.0, -x * y) + (-s - nu) * std::log(x));
    };

    OracleResult out;
    CompensatedAccumulator acc;

    const double x0 = std::min(0.25, 0.25 / std::max(1.0, std::abs(y)));
    const double u0 = std::log(x0);
    const double umin = u0 - 47.0 / r0;
    auto f_head = [&](cplx w) -> cplx {
        double x = std::exp(w.real());
        return f_real(x) * x;  // dx = x du
    };
    auto head = integrate_line_centered(f_head, 0.0, 0.5 * (u0 + umin),
                                        0.5 * (u0 - umin), 1e-10);
    acc.add(head.value);
    out.error_budget += head.quadrature_error + std::abs(f_head(cplx(umin, 0))) / r0;

    double X1;
    bool rotate;
    if (kind == OracleKind::W) {
        X1 = 2.0;
        rotate = false;
    } else if (y == 0 || (sign < 0 && std::abs(y) <= 0.5)) {
        X1 = 256.0;  // exp(-2 sqrt x) kernel: plain truncation suffices
        rotate = false;
    } else {
        X1 = std::clamp(25.0 / (y * y), 4.0, 256.0);
        rotate = true;
    }

    auto f_mid = [&](cplx w) -> cplx { return f_real(w.real()); };
    auto mid = integrate_line_centered(f_mid, 0.0, 0.5 * (x0 + X1), 0.5 * (X1 - x0),
                                       3e-10);
    acc.add(mid.value);
    out.error_budget += mid.quadrature_error;

    if (kind != OracleKind::W) {
        if (!rotate) {
            // |kernel| <~ |f(X1)| e^{2 sqrt X1 - 2 sqrt x} beyond X1
            out.error_budget += std::abs(f_real(X1)) * (std::sqrt(X1) + 1.0);
        } else {
            const double sy = y > 0 ? 1.0 : -1.0;
            const double rate = std::abs(y);
            double vmax = 47.0 / rate;
            for (int it = 0; it < 40; ++it)
                vmax = (47.0 + std::sqrt(2.0 * vmax)) / rate;  // offset J growth
            auto f_tail = [&](cplx w) -> cplx {
                cplx xc(X1, -sy * w.real());
                return kernel_complex(xc) *
                       std::exp(cplx(0.0, -1.0) * xc * y + (-s - nu) * std::log(xc)) *
                       cplx(0.0, -sy);
            };
            auto tail = integrate_line_centered(f_tail, 0.0, 0.5 * vmax, 0.5 * vmax,
                                                1e-10);
            acc.add(tail.value);
            out.error_budget +=
                tail.quadrature_error + std::abs(f_tail(cplx(vmax, 0))) / (0.5 * rate);
        }
    }
    out.value = acc.value();
    return out;
}

}  // namespace mvl
