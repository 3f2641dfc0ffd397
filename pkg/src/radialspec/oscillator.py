"""Oscillator-like radial closed forms.

Solutions O1/O3/O4 (plus the logarithmic O2 channel at m=0 and Bessel
forms at lambda=0), coefficient functions, Green kernels and the full
spectral measure for every (m, sign lambda, zeta) cell of

    h_m = -d^2/du^2 + u^{-2}(m^2 - 1/4) + lambda u^2   on (0, inf).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from . import specfun as sf
from .core import (
    ComplexEnergy,
    ProblemSpec,
    RadialWave,
    RegimeClass,
    SpectralMeasure,
    Theory,
    ValidationError,
    as_energy,
    classify,
)

__all__ = [
    "OscCoefficients",
    "osc_parameters",
    "osc_solution",
    "osc_coefficients",
    "osc_family_function",
    "osc_spectrum",
    "osc_density",
    "osc_green",
    "osc_spectral_omega",
    "osc_eigenfunction",
]

_EULER = -float(sf.digamma(1.0).real)  # Euler-Mascheroni gamma


@dataclass(frozen=True)
class OscCoefficients:
    """Confluent-hypergeometric bookkeeping for one (m, W, lambda) point."""

    varkappa: complex  # lambda^{1/4}, e^{-i pi/4}|lambda|^{1/4} for lambda < 0
    w: complex  # W / (4 varkappa^2)
    alpha: complex  # (1 + |m|)/2 - w
    alpha_minus: complex  # alpha - |m|
    beta: int  # 1 + |m|

    def rho(self, u: float) -> complex:
        return (self.varkappa * u) ** 2


def _varkappa(lam: complex) -> complex:
    """lambda^{1/4} on the branch fixed by the energy half-plane convention:
    real positive for lambda > 0, e^{-i pi/4}|lambda|^{1/4} for lambda < 0,
    continuous across the lower half lambda-plane (Im lambda <= 0)."""
    if lam == 0:
        raise ValidationError("varkappa undefined at lambda = 0 (Bessel regime)")
    # sqrt(lambda) with arg in [-pi, 0] equals the forward root of -lambda
    # reflected: as_energy(-lam).sqrt_minus() is exactly that branch.
    return cmath.sqrt(as_energy(-lam).sqrt_minus())


def osc_parameters(m: int, W: complex, lam: complex) -> OscCoefficients:
    vk = _varkappa(lam)
    w = complex(W) / (4.0 * vk * vk)
    n = abs(m)
    alpha = 0.5 * (1 + n) - w
    return OscCoefficients(vk, w, alpha, alpha - n, 1 + n)


def _energy(W) -> ComplexEnergy:
    return as_energy(W)


# --- solutions ---------------------------------------------------------------


def osc_solution(
    kind: str,
    m: int,
    u: float,
    W: ComplexEnergy | complex | float,
    lam: float,
    kappa0: float = 1.0,
    ctl: sf.SeriesControl = sf.DEFAULT_CONTROL,
) -> complex:
    """Evaluate a named solution O1 | O3 | O4 | O2_0 at radius u.

    O1, O4 and O2_0 are real-entire in W (real values on the real axis);
    O3 is the decaying-at-infinity channel for Im W > 0.
    """
    if u <= 0:
        raise ValidationError("u must be positive")
    if kind == "O2_0" and m != 0:
        raise ValidationError("O2_0 exists only for m = 0")
    if kind == "O4" and m == 0:
        raise ValidationError("O4 exists only for |m| >= 1")
    Wv = _energy(W).value
    if lam == 0:
        return _osc_solution_free(kind, m, u, _energy(W), kappa0, ctl)
    par = osc_parameters(m, Wv, lam)
    n = abs(m)
    rho = par.rho(u)
    pre = cmath.exp(-0.5 * rho)
    if kind == "O1":
        return (kappa0 * u) ** (0.5 + n) * pre * sf.kummer_m(par.alpha, par.beta, rho, ctl)
    if kind == "O3":
        return (kappa0 * u) ** (0.5 + n) * pre * sf.tricomi_u(par.alpha, par.beta, rho, ctl)
    if kind == "O4":
        rest = (par.varkappa / kappa0) ** (2 * n) / (
            math.factorial(n - 1) * math.factorial(n)
        )
        l0 = sf.degenerate_log_index(par.alpha, n)
        if l0 is not None:
            # alpha = l0 in [1, n]: (1-alpha)_n = 0 kills the log channel and
            # leaves the residue of (1-alpha)_n sigma_alpha / 2 times Phi
            lim = 0.5 * (-1.0) ** l0 * math.factorial(l0 - 1) * math.factorial(n - l0)
            p = sf.frobenius_poly(par.alpha, n, rho)
            phi = sf.kummer_m(par.alpha, par.beta, rho, ctl)
            return pre * (
                (kappa0 * u) ** (0.5 - n) * p
                - rest * lim * (kappa0 * u) ** (0.5 + n) * phi
            )
        s1, s0, p = sf.kummer_log_companion(par.alpha, n, rho, ctl)
        pref = sf.pochhammer(1 - par.alpha, n) * rest
        lg = math.log(kappa0 * u)
        return pre * (
            (kappa0 * u) ** (0.5 - n) * p
            - pref * (kappa0 * u) ** (0.5 + n) * (2.0 * lg * s1 + s0)
        )
    if kind == "O2_0":
        dphi = sf.kummer_m_param_derivative(par.alpha, 1.0, rho, 0.5, 1.0, ctl)
        o1 = (kappa0 * u) ** 0.5 * pre * sf.kummer_m(par.alpha, 1.0, rho, ctl)
        return (kappa0 * u) ** 0.5 * pre * dphi + o1 * math.log(kappa0 * u)
    raise ValidationError(f"unknown oscillator solution kind {kind!r}")


def _osc_solution_free(
    kind: str, m: int, u: float, W: ComplexEnergy, kappa0: float, ctl: sf.SeriesControl
) -> complex:
    if W.value == 0:
        raise ValidationError("lambda = 0 Bessel solutions need W != 0")
    K = W.sqrt_forward()
    n = abs(m)
    if n == 0:
        root = (kappa0 * u) ** 0.5
        if kind == "O1":
            return root * sf.bessel("J", 0, K * u, ctl)
        if kind == "O3":
            return -0.5j * math.pi * root * sf.bessel("H1", 0, K * u, ctl)
        if kind == "O2_0":
            om00 = _omega00(W, kappa0)
            o1 = root * sf.bessel("J", 0, K * u, ctl)
            o3 = -0.5j * math.pi * root * sf.bessel("H1", 0, K * u, ctl)
            return o3 + om00 * o1
        raise ValidationError(f"unknown m=0 solution kind {kind!r}")
    d1 = kappa0**0.5 * math.factorial(n) * (K / (2 * kappa0)) ** (-n)
    d3 = math.pi * kappa0**0.5 * (K / (2 * kappa0)) ** n / math.factorial(n - 1)
    if kind == "O1":
        return d1 * u**0.5 * sf.bessel("J", n, K * u, ctl)
    if kind == "O3":
        return 1j * d3 * u**0.5 * sf.bessel("H1", n, K * u, ctl)
    if kind == "O4":
        return d3 * u**0.5 * (
            sf.bessel("Y", n, K * u, ctl)
            - (2.0 / math.pi) * sf.bessel("J", n, K * u, ctl) * cmath.log(K / kappa0)
        )
    raise ValidationError(f"unknown oscillator solution kind {kind!r}")


# --- coefficient functions ----------------------------------------------------


def osc_coefficients(
    m: int, W: ComplexEnergy | complex | float, lam: float, kappa0: float = 1.0
) -> tuple[complex, complex, complex, complex]:
    """(A_m, B_m, C_m, omega) for |m| >= 1, lambda != 0.

    O3 = B_m O1 + C_m O4 pointwise; Wr(O1, O3) = -2 kappa0 |m| C_m = -omega.
    """
    n = abs(m)
    if n < 1 or lam == 0:
        raise ValidationError("coefficients defined for |m| >= 1, lambda != 0")
    par = osc_parameters(m, _energy(W).value, lam)
    if sf._nonpositive_int(par.alpha) is not None:
        raise sf.PoleError(int(round(par.alpha.real)), "Gamma(alpha)")
    if sf._nonpositive_int(par.alpha_minus) is not None:
        raise sf.PoleError(int(round(par.alpha_minus.real)), "Gamma(alpha_minus)")
    ratio = (par.varkappa / kappa0) ** (2 * n)
    a_m = ratio * (-1.0) ** n * sf.pochhammer(1 - par.alpha, n) / math.factorial(n)
    b_m = (
        (-1.0) ** (n + 1)
        / (2.0 * math.factorial(n))
        * sf.rgamma(par.alpha_minus)
        * (
            sf.digamma(par.alpha_minus)
            + sf.digamma(par.alpha)
            - 4.0 * cmath.log(kappa0 / par.varkappa)
        )
    )
    c_m = (1.0 / ratio) * math.factorial(n - 1) * sf.rgamma(par.alpha)
    omega = 2.0 * kappa0 * n * c_m
    return a_m, b_m, c_m, omega


def _omega0(W: complex, lam: float, kappa0: float) -> complex:
    """m=0 boundary coefficient omega_0(W) = 2 ln(kappa0/vk) + 2 psi(1) - psi(alpha)."""
    par = osc_parameters(0, W, lam)
    return (
        2.0 * cmath.log(kappa0 / par.varkappa)
        + 2.0 * sf.digamma(1.0)
        - sf.digamma(par.alpha)
    )


def _omega00(W: ComplexEnergy, kappa0: float) -> complex:
    """m=0, lambda=0 analogue: i pi/2 + psi(1) - ln(K / 2 kappa0)."""
    K = W.sqrt_forward()
    return 0.5j * math.pi + sf.digamma(1.0) - cmath.log(K / (2.0 * kappa0))


def osc_family_function(
    W: ComplexEnergy | complex | float, lam: float, kappa0: float = 1.0
) -> complex:
    """m=0 eigenvalue function f(W): discrete levels solve f(E) + tan(zeta) = 0."""
    e = _energy(W)
    if lam == 0:
        return _omega00(e, kappa0)
    return 0.5 * _omega0(e.value, lam, kappa0)


# --- spectral data -------------------------------------------------------------


def _tan(zeta: float) -> float:
    return math.tan(zeta)


def _osc_m0_root(lam: float, kappa0: float, zeta: float, n: int) -> float:
    """n-th root of f(E) = -tan(zeta), bracketed inside the pole ladder."""
    sq = 2.0 * math.sqrt(lam)
    target = -_tan(zeta)

    def f(E: float) -> float:
        return osc_family_function(E, lam, kappa0).real - target

    db = 1e-6 * sq
    hi = sq * (1 + 2 * n) - db
    if n >= 1:
        lo = sq * (1 + 2 * (n - 1)) + db
    else:
        # no finite left pole: expand downwards until f changes sign
        lo = sq * (1 + 2 * n) - 2.0 * sq
        span = 2.0 * sq
        for _ in range(200):
            if f(lo) < 0:
                break
            span *= 2.0
            lo -= span
        else:
            raise ValidationError("failed to bracket the lowest family level")
    return brentq(f, lo, hi, xtol=1e-14, rtol=8.9e-16, maxiter=200)


def _osc_m0_weight(E: float, lam: float, kappa0: float, zeta: float) -> float:
    """Atom weight from the residue of -(1/(pi k0 cos^2 z)) Im 1/(f + tan z)."""
    par = osc_parameters(0, E, lam)
    fprime = sf.trigamma(par.alpha.real) / (8.0 * math.sqrt(lam))
    return 1.0 / (kappa0 * math.cos(zeta) ** 2 * fprime)


def _density_m_neg(m: int, lam: float, kappa0: float):
    """|m|>=1, lambda<0: continuous density on the whole real axis."""
    n = abs(m)
    beta = 1 + n
    gb2 = math.factorial(n) ** 2  # Gamma(beta)^2
    root = math.sqrt(-lam)
    scale = (root / kappa0**2) ** n

    def density(E: float) -> float:
        et = E / (4.0 * root)
        if n % 2 == 1:
            j = (n - 1) // 2
            q = scale * math.prod((l * l + et * et) for l in range(1, j + 1))
            # e~ (coth(pi e~) + 1) = 2 e~ / (1 - exp(-2 pi e~)), regular at 0
            if et == 0.0:
                core = 1.0 / math.pi
            else:
                core = 2.0 * et / (-math.expm1(-2.0 * math.pi * et))
            return q * core / (4.0 * kappa0 * gb2)
        j = n // 2
        q = scale * math.prod(((l + 0.5) ** 2 + et * et) for l in range(j))
        return q * (1.0 + math.tanh(math.pi * et)) / (4.0 * kappa0 * gb2)

    return density


def _density_m_free(m: int, kappa0: float):
    n = abs(m)

    def density(E: float) -> float:
        if E <= 0:
            return 0.0
        p = math.sqrt(E)
        rho = (p / (2 * kappa0)) ** n / (math.sqrt(2 * kappa0) * math.factorial(n))
        return rho * rho

    return density


def _density_m0_neg(lam: float, kappa0: float, zeta: float):
    def density(E: float) -> float:
        om0 = _omega0(complex(E), lam, kappa0)
        a, b = om0.real, om0.imag / math.pi
        c, s = math.cos(zeta), math.sin(zeta)
        return (2.0 / kappa0) * b / ((a * c + 2.0 * s) ** 2 + math.pi**2 * b * b * c * c)

    return density


def _density_m0_free(kappa0: float, zeta: float):
    def density(E: float) -> float:
        if E <= 0:
            return 0.0
        c, s = math.cos(zeta), math.sin(zeta)
        g = -2.0 * _EULER - math.log(E / (4.0 * kappa0**2))
        return (2.0 / kappa0) / ((g * c + 2.0 * s) ** 2 + math.pi**2 * c * c)

    return density


def osc_spectrum(spec: ProblemSpec, levels: int = 12) -> SpectralMeasure:
    """Full spectral measure (atoms with weights Q_n^2 and/or density) for a cell."""
    if spec.theory is not Theory.OSCILLATOR:
        raise ValidationError("osc_spectrum needs an oscillator spec")
    cell = classify(spec)
    lam, k0 = spec.coupling, spec.kappa0
    if cell is RegimeClass.OSC_M_POS_LAMBDA_POS:
        n = abs(spec.m)
        sq = 2.0 * math.sqrt(lam)
        vk = lam**0.25
        atoms = []
        for k in range(levels):
            e = sq * (1 + n + 2 * k)
            q = ((vk / k0) ** n / math.factorial(n)) * math.sqrt(
                sq * sf.pochhammer(1.0 + k, n).real / k0
            )
            atoms.append((e, q * q))
        return SpectralMeasure(tuple(atoms), None, "empty")
    if cell is RegimeClass.OSC_M_POS_LAMBDA_NEG:
        return SpectralMeasure((), _density_m_neg(spec.m, lam, k0), "R")
    if cell is RegimeClass.OSC_M_POS_LAMBDA_ZERO:
        return SpectralMeasure((), _density_m_free(spec.m, k0), "R+")
    zeta = spec.zeta
    if cell is RegimeClass.OSC_M0_LAMBDA_POS:
        sq = 2.0 * math.sqrt(lam)
        if spec.extension.is_half_pi:
            atoms = tuple((sq * (1 + 2 * k), sq / k0) for k in range(levels))
            return SpectralMeasure(atoms, None, "empty")
        atoms = []
        for k in range(levels):
            e = _osc_m0_root(lam, k0, zeta, k)
            atoms.append((e, _osc_m0_weight(e, lam, k0, zeta)))
        return SpectralMeasure(tuple(atoms), None, "empty")
    if cell is RegimeClass.OSC_M0_LAMBDA_NEG:
        return SpectralMeasure((), _density_m0_neg(lam, k0, zeta), "R")
    # m = 0, lambda = 0
    atoms = ()
    if not spec.extension.is_half_pi:
        e_b = -4.0 * k0 * k0 * math.exp(2.0 * (-_EULER + _tan(zeta)))
        atoms = ((e_b, 2.0 * abs(e_b) / (k0 * math.cos(zeta) ** 2)),)
    return SpectralMeasure(atoms, _density_m0_free(k0, zeta), "R+")


def osc_density(spec: ProblemSpec, E: float) -> float:
    """Continuous spectral density sigma'(E); zero off the support."""
    return osc_spectrum(spec, levels=0).density_at(E)


# --- Green function and resolvent diagonal ------------------------------------


def _u_zeta(u: float, W, lam: float, kappa0: float, zeta: float) -> complex:
    o1 = osc_solution("O1", 0, u, W, lam, kappa0)
    o2 = osc_solution("O2_0", 0, u, W, lam, kappa0)
    return o1 * math.sin(zeta) + o2 * math.cos(zeta)


def _u_zeta_tilde(u: float, W, lam: float, kappa0: float, zeta: float) -> complex:
    o1 = osc_solution("O1", 0, u, W, lam, kappa0)
    o2 = osc_solution("O2_0", 0, u, W, lam, kappa0)
    return o1 * math.cos(zeta) - o2 * math.sin(zeta)


def osc_spectral_omega(spec: ProblemSpec, W: ComplexEnergy | complex) -> complex:
    """Resolvent diagonal coefficient: sigma'(E) = (1/pi) Im of this at E + i0."""
    cell = classify(spec)
    lam, k0 = spec.coupling, spec.kappa0
    e = _energy(W)
    if cell is RegimeClass.OSC_M_POS_LAMBDA_POS or cell is RegimeClass.OSC_M_POS_LAMBDA_NEG:
        _, b, _, omega = osc_coefficients(spec.m, e, lam, k0)
        return b / omega
    if cell is RegimeClass.OSC_M_POS_LAMBDA_ZERO:
        n = abs(spec.m)
        K = e.sqrt_forward()
        om = (e.value / (4.0 * k0 * k0)) ** n / math.factorial(n) ** 2
        return (math.pi / (2.0 * k0)) * om * (1j - (2.0 / math.pi) * cmath.log(K / k0))
    zeta = spec.zeta
    f = osc_family_function(e, lam, k0)
    if cell is RegimeClass.OSC_M0_LAMBDA_ZERO:
        om_z = f * math.cos(zeta) + math.sin(zeta)
        om_zt = f * math.sin(zeta) - math.cos(zeta)
        return om_zt / (k0 * om_z)
    # lambda != 0 families share the halved convention
    om_z = f * math.cos(zeta) + math.sin(zeta)
    om_zt = f * math.sin(zeta) - math.cos(zeta)
    return om_zt / (k0 * om_z)


def osc_green(
    spec: ProblemSpec, u: float, v: float, W: ComplexEnergy | complex
) -> complex:
    """Green function G(u, v; W) of the cell's self-adjoint operator, Im W > 0."""
    e = _energy(W)
    if e.value.imag <= 0:
        raise ValidationError("Green function requires Im W > 0 (use the density path)")
    cell = classify(spec)
    lam, k0 = spec.coupling, spec.kappa0
    hi, lo = max(u, v), min(u, v)
    if cell is RegimeClass.OSC_M_POS_LAMBDA_POS or cell is RegimeClass.OSC_M_POS_LAMBDA_NEG:
        _, _, _, omega = osc_coefficients(spec.m, e, lam, k0)
        return (
            osc_solution("O3", spec.m, hi, e, lam, k0)
            * osc_solution("O1", spec.m, lo, e, lam, k0)
            / omega
        )
    if cell is RegimeClass.OSC_M_POS_LAMBDA_ZERO:
        return (
            osc_solution("O3", spec.m, hi, e, lam, k0)
            * osc_solution("O1", spec.m, lo, e, lam, k0)
            / (2.0 * k0 * abs(spec.m))
        )
    zeta = spec.zeta
    om = osc_spectral_omega(spec, e)
    uu_hi = _u_zeta(hi, e, lam, k0, zeta)
    uu_lo = _u_zeta(lo, e, lam, k0, zeta)
    ut_hi = _u_zeta_tilde(hi, e, lam, k0, zeta)
    uv = _u_zeta(u, e, lam, k0, zeta) * _u_zeta(v, e, lam, k0, zeta)
    return om * uv + (1.0 / k0) * ut_hi * uu_lo


# --- eigenfunctions -------------------------------------------------------------


def _osc_m0_bound_wave(spec: ProblemSpec, energy: float, amp: float):
    """m = 0 bound state for |zeta| < pi/2.

    Beyond u_switch the sin/cos combination of the two regular solutions
    cancels catastrophically, so continue with the decaying solution O3
    scaled to match at the switch point."""
    lam, k0 = spec.coupling, spec.kappa0
    zeta = spec.zeta
    if lam > 0:
        u_switch = math.sqrt(8.0) / lam**0.25
    else:  # lam == 0 atom, energy < 0
        u_switch = 4.0 / math.sqrt(-energy)
    ratio = _u_zeta(u_switch, energy, lam, k0, zeta) / osc_solution(
        "O3", 0, u_switch, energy, lam, k0
    )

    def ev(u: float) -> float:
        if u < u_switch:
            return (amp * _u_zeta(u, energy, lam, k0, zeta)).real
        return (amp * ratio * osc_solution("O3", 0, u, energy, lam, k0)).real

    return ev


def osc_eigenfunction(spec: ProblemSpec, index_or_energy: int | float) -> RadialWave:
    """Normalized eigenfunction (int index -> discrete level, float -> energy)."""
    cell = classify(spec)
    lam, k0 = spec.coupling, spec.kappa0
    n = abs(spec.m)
    discrete = isinstance(index_or_energy, int) and not isinstance(index_or_energy, bool)
    if discrete:
        idx = index_or_energy
        if idx < 0:
            raise ValidationError("level index must be >= 0")
        measure = osc_spectrum(spec, levels=idx + 1)
        if idx >= len(measure.discrete):
            raise ValidationError(f"cell has no discrete level with index {idx}")
        energy, weight = measure.discrete[idx]
        q = math.sqrt(weight)
        if n >= 1:
            ev = lambda u: (q * osc_solution("O1", spec.m, u, energy, lam, k0)).real
            tag = f"u^({1 + 2 * n}/2)"
        elif spec.extension.is_half_pi:
            ev = lambda u: (q * osc_solution("O1", 0, u, energy, lam, k0)).real
            tag = "u^(1/2)"
        else:
            ev = _osc_m0_bound_wave(spec, energy, q)
            tag = "u^(1/2)*(sin z + cos z ln(k0 u))"
        return RadialWave(ev, q, tag, energy)
    energy = float(index_or_energy)
    measure = osc_spectrum(spec, levels=0)
    dens = measure.density_at(energy)
    if measure.support == "empty" or dens <= 0:
        raise ValidationError(f"E={energy} is not in the continuous spectrum")
    rho = math.sqrt(dens)
    if n >= 1:
        ev = lambda u: (rho * osc_solution("O1", spec.m, u, energy, lam, k0)).real
        tag = f"u^({1 + 2 * n}/2)"
    elif spec.extension.is_half_pi:
        ev = lambda u: (rho * osc_solution("O1", 0, u, energy, lam, k0)).real
        tag = "u^(1/2)"
    else:
        zeta = spec.zeta
        ev = lambda u: (rho * _u_zeta(u, energy, lam, k0, zeta)).real
        tag = "u^(1/2)*(sin z + cos z ln(k0 u))"
    return RadialWave(ev, rho, tag, energy)
