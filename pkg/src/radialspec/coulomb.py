"""Coulomb-like radial closed forms.

Solutions C1/C3/C4 (plus the logarithmic C2 channel at m=0), coefficient
and extension-family functions, critical angles, Green kernels and full
spectral measures for every (m-class, sign g, zeta) cell of

    h_m = -d^2/dx^2 + (2x)^{-2}(m^2 - 1) + g/x   on (0, inf).
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
    "CoulCoefficients",
    "coul_parameters",
    "coul_solution",
    "coul_coefficients",
    "coul_family_function",
    "coul_critical_zeta",
    "coul_spectrum",
    "coul_density",
    "coul_green",
    "coul_spectral_omega",
    "coul_eigenfunction",
]

_EULER = -float(sf.digamma(1.0).real)


@dataclass(frozen=True)
class CoulCoefficients:
    """Confluent-hypergeometric bookkeeping for one (m, energy, g) point."""

    K: complex  # sqrt(-E), branch sqrt(|E|) e^{i(phi_E - pi)/2}
    w: complex  # -g / 2K
    alpha: complex  # (1 + |m|)/2 - w
    alpha_minus: complex  # alpha - |m|
    beta: int  # 1 + |m|

    def z(self, x: float) -> complex:
        return 2.0 * self.K * x


def coul_parameters(m: int, energy: ComplexEnergy | complex | float, g: float) -> CoulCoefficients:
    e = as_energy(energy)
    if e.value == 0:
        raise ValidationError("Coulomb closed forms need a nonzero energy")
    K = e.sqrt_minus()
    w = -g / (2.0 * K)
    n = abs(m)
    alpha = 0.5 * (1 + n) - w
    return CoulCoefficients(K, w, alpha, alpha - n, 1 + n)


# --- solutions ---------------------------------------------------------------


def coul_solution(
    kind: str,
    m: int,
    x: float,
    energy: ComplexEnergy | complex | float,
    g: float,
    kappa0: float = 1.0,
    ctl: sf.SeriesControl = sf.DEFAULT_CONTROL,
) -> complex:
    """Evaluate a named solution C1 | C3 | C4 | C2_0 at radius x.

    C1, C4 and C2_0 are real-entire in the energy; C3 decays at infinity
    for Im(energy) > 0.
    """
    if x <= 0:
        raise ValidationError("x must be positive")
    if kind == "C2_0" and m != 0:
        raise ValidationError("C2_0 exists only for m = 0")
    if kind == "C4" and m == 0:
        raise ValidationError("C4 exists only for |m| >= 1")
    par = coul_parameters(m, energy, g)
    n = abs(m)
    z = par.z(x)
    pre = cmath.exp(-0.5 * z)
    if kind == "C1":
        return (kappa0 * x) ** (0.5 * (1 + n)) * pre * sf.kummer_m(par.alpha, par.beta, z, ctl)
    if kind == "C3":
        return (kappa0 * x) ** (0.5 * (1 + n)) * pre * sf.tricomi_u(par.alpha, par.beta, z, ctl)
    if kind == "C4":
        rest = (2.0 * par.K / kappa0) ** n / (math.factorial(n - 1) * math.factorial(n))
        l0 = sf.degenerate_log_index(par.alpha, n)
        if l0 is not None:
            # alpha = l0 in [1, n]: (1-alpha)_n = 0 kills the log channel and
            # leaves the residue of (1-alpha)_n sigma_alpha / 2 times Phi
            lim = 0.5 * (-1.0) ** l0 * math.factorial(l0 - 1) * math.factorial(n - l0)
            p = sf.frobenius_poly(par.alpha, n, z)
            phi = sf.kummer_m(par.alpha, par.beta, z, ctl)
            return pre * (
                (kappa0 * x) ** (0.5 * (1 - n)) * p
                - rest * lim * (kappa0 * x) ** (0.5 * (1 + n)) * phi
            )
        s1, s0, p = sf.kummer_log_companion(par.alpha, n, z, ctl)
        pref = sf.pochhammer(1 - par.alpha, n) * rest
        lg = math.log(kappa0 * x)
        return pre * (
            (kappa0 * x) ** (0.5 * (1 - n)) * p
            - pref * (kappa0 * x) ** (0.5 * (1 + n)) * (lg * s1 + s0)
        )
    if kind == "C2_0":
        dphi = sf.kummer_m_param_derivative(par.alpha, 1.0, z, 0.5, 1.0, ctl)
        c1 = (kappa0 * x) ** 0.5 * pre * sf.kummer_m(par.alpha, 1.0, z, ctl)
        return (kappa0 * x) ** 0.5 * pre * dphi + 0.5 * c1 * math.log(kappa0 * x)
    raise ValidationError(f"unknown Coulomb solution kind {kind!r}")


# --- coefficient and family functions -----------------------------------------


def coul_coefficients(
    m: int, energy: ComplexEnergy | complex | float, g: float, kappa0: float = 1.0
) -> tuple[complex, complex, complex, complex]:
    """(A_m, B_m, C_m, omega) for |m| >= 1.

    C3 = B_m C1 + C_m C4 pointwise; Wr(C1, C3) = -kappa0 |m| C_m = -omega.
    """
    n = abs(m)
    if n < 1:
        raise ValidationError("coefficients defined for |m| >= 1")
    par = coul_parameters(m, energy, g)
    if sf._nonpositive_int(par.alpha) is not None:
        raise sf.PoleError(int(round(par.alpha.real)), "Gamma(alpha)")
    if sf._nonpositive_int(par.alpha_minus) is not None:
        raise sf.PoleError(int(round(par.alpha_minus.real)), "Gamma(alpha_minus)")
    ratio = 2.0 * par.K / kappa0
    a_m = ratio**n * (-1.0) ** n * sf.pochhammer(1 - par.alpha, n) / math.factorial(n)
    b_m = (
        (-1.0) ** (n + 1)
        / (2.0 * math.factorial(n))
        * sf.rgamma(par.alpha_minus)
        * (
            sf.digamma(par.alpha_minus)
            + sf.digamma(par.alpha)
            + 2.0 * cmath.log(ratio)
        )
    )
    c_m = ratio ** (-n) * math.factorial(n - 1) * sf.rgamma(par.alpha)
    omega = kappa0 * n * c_m
    return a_m, b_m, c_m, omega


def coul_family_function(
    m: int, energy: ComplexEnergy | complex | float, g: float, kappa0: float = 1.0
) -> complex:
    """f_1 (|m| = 1) or f_0 (m = 0): discrete family levels solve
    f_1(E) = tan(zeta), respectively f_0(E) = -tan(zeta)."""
    if abs(m) not in (0, 1):
        raise ValidationError("family function defined for m in {0, +-1}")
    e = as_energy(energy)
    if abs(m) == 1:
        if g == 0.0:
            return -e.sqrt_minus() / kappa0
        par = coul_parameters(m, e, g)
        return (g / (2.0 * kappa0)) * (
            sf.digamma(par.alpha)
            + sf.digamma(par.alpha_minus)
            + 2.0 * cmath.log(2.0 * par.K / kappa0)
        )
    par = coul_parameters(0, e, g)
    return (
        sf.digamma(1.0)
        - 0.5 * sf.digamma(par.alpha)
        - 0.5 * cmath.log(2.0 * par.K / kappa0)
    )


def coul_critical_zeta(m: int, g: float, kappa0: float = 1.0) -> float:
    """Extension angle at which a zero-energy atom appears (g > 0)."""
    if g <= 0:
        raise ValidationError("critical zeta is defined for g > 0")
    if m == 1:
        return math.atan((g / kappa0) * math.log(g / kappa0))
    if m == 0:
        return math.atan(0.5 * math.log(g / kappa0) + _EULER)
    raise ValidationError("critical zeta exists for m in {0, 1}")


# --- family root finding -------------------------------------------------------


def _family_root(
    m: int, g: float, kappa0: float, target: float, lo: float, hi: float
) -> float:
    def h(E: float) -> float:
        return coul_family_function(m, E, g, kappa0).real - target

    return brentq(h, lo, hi, xtol=5e-16, rtol=8.9e-16, maxiter=200)


def _family_root_ladder(m: int, g: float, kappa0: float, target: float, n: int) -> float:
    """n-th root for g < 0, bracketed in the pole ladder of the family function."""
    n_m = abs(m)
    scale = 2.0 if n_m == 1 else 1.0  # ladder -g^2/(scale(1+...)^2)

    def pole(k: int) -> float:
        if n_m == 1:
            return -g * g / (4.0 * (1 + k) ** 2)
        return -g * g / (1 + 2 * k) ** 2

    hi = pole(n)
    hi -= 1e-6 * abs(hi)
    if n >= 1:
        lo = pole(n - 1)
        lo += 1e-6 * abs(lo)
    else:
        lo = 2.0 * pole(0)
        span = abs(pole(0))

        def h(E: float) -> float:
            return coul_family_function(m, E, g, kappa0).real - target

        for _ in range(300):
            if h(lo) < 0:
                break
            span *= 2.0
            lo -= span
        else:
            raise ValidationError("failed to bracket the lowest family level")
    return _family_root(m, g, kappa0, target, lo, hi)


def _family_root_single(m: int, g: float, kappa0: float, target: float) -> float:
    """The single negative root for g >= 0 (family function is pole-free)."""
    hi = -1e-12
    lo = -1e4 * max(abs(g), kappa0) ** 2

    def h(E: float) -> float:
        return coul_family_function(m, E, g, kappa0).real - target

    for _ in range(300):
        if h(lo) < 0:
            break
        lo *= 2.0
    else:
        raise ValidationError("failed to bracket the family level")
    return _family_root(m, g, kappa0, target, lo, hi)


def _f1_prime(E: float, g: float, kappa0: float) -> float:
    """d f_1 / dE on E < 0 (analytic)."""
    tau = math.sqrt(-E)
    if g == 0.0:
        return 1.0 / (2.0 * kappa0 * tau)
    a = 1.0 + g / (2.0 * tau)
    am = g / (2.0 * tau)
    return (g / (2.0 * kappa0)) * (
        (sf.trigamma(a) + sf.trigamma(am)) * g / (4.0 * tau**3) - 1.0 / tau**2
    )


def _f0_prime(E: float, g: float, kappa0: float) -> float:
    """d f_0 / dE on E < 0 (analytic)."""
    tau = math.sqrt(-E)
    a = 0.5 + g / (2.0 * tau)
    return -g * sf.trigamma(a) / (8.0 * tau**3) + 1.0 / (4.0 * tau**2)


# --- spectral data -------------------------------------------------------------


def _density_unique(m: int, g: float, kappa0: float):
    n = abs(m)
    gb2 = math.factorial(n) ** 2

    def density(E: float) -> float:
        if E <= 0:
            return 0.0
        p = math.sqrt(E)
        a = 0.5 * (1 + n) + (0.5j * g / p)
        gam = abs(sf.gamma_fn(a)) ** 2
        return (
            kappa0 ** (-1 - n)
            * gam
            * (2.0 * p) ** n
            * math.exp(-math.pi * g / (2.0 * p))
            / (2.0 * math.pi * gb2)
        )

    return density


def _density_m1(g: float, kappa0: float, zeta: float, half_pi: bool):
    def density(E: float) -> float:
        if E <= 0:
            return 0.0
        p = math.sqrt(E)
        # B_1 = Im f_1 = (pi g / kappa0) / expm1(pi g / p), regular at g = 0
        if g == 0.0:
            b1 = p / kappa0
        elif math.pi * g / p > 700.0:
            b1 = 0.0  # exponentially suppressed below the repulsive barrier
        else:
            b1 = math.pi * g / (kappa0 * math.expm1(math.pi * g / p))
        if half_pi:
            return b1 / (math.pi * kappa0)
        a1 = coul_family_function(1, E, g, kappa0).real
        c, s = math.cos(zeta), math.sin(zeta)
        return (1.0 / (math.pi * kappa0)) * b1 / ((a1 * c - s) ** 2 + b1 * b1 * c * c)

    return density


def _density_m0(g: float, kappa0: float, zeta: float, half_pi: bool):
    def density(E: float) -> float:
        if E <= 0:
            return 0.0
        p = math.sqrt(E)
        b0 = 1.0 - math.tanh(math.pi * g / (2.0 * p))
        if half_pi:
            return b0 / (2.0 * kappa0)
        a0 = coul_family_function(0, E, g, kappa0).real
        c, s = math.cos(zeta), math.sin(zeta)
        return (
            (8.0 / kappa0)
            * b0
            / (16.0 * (a0 * c + s) ** 2 + math.pi**2 * b0 * b0 * c * c)
        )

    return density


def _m1_atoms(g: float, kappa0: float, zeta: float, half_pi: bool, levels: int):
    if half_pi:
        if g >= 0:
            return ()
        return tuple(
            (
                -g * g / (4.0 * (1 + n) ** 2),
                4.0 * (abs(g) / (2.0 * (1 + n))) ** 3 / kappa0**2,
            )
            for n in range(levels)
        )
    t = math.tan(zeta)
    cos2 = math.cos(zeta) ** 2
    if g < 0:
        atoms = []
        for n in range(levels):
            e = _family_root_ladder(1, g, kappa0, t, n)
            atoms.append((e, 1.0 / (kappa0 * cos2 * _f1_prime(e, g, kappa0))))
        return tuple(atoms)
    if g == 0.0:
        if zeta >= 0:
            return ()
        e = -(kappa0 * t) ** 2
        return ((e, 1.0 / (kappa0 * cos2 * _f1_prime(e, g, kappa0))),)
    t1 = (g / kappa0) * math.log(g / kappa0)
    if abs(t - t1) <= 1e-12 * max(1.0, abs(t1)):
        return ((0.0, 3.0 * g * g / (kappa0 * cos2)),)
    if t > t1:
        return ()
    e = _family_root_single(1, g, kappa0, t)
    return ((e, 1.0 / (kappa0 * cos2 * _f1_prime(e, g, kappa0))),)


def _m0_atoms(g: float, kappa0: float, zeta: float, half_pi: bool, levels: int):
    if half_pi:
        if g >= 0:
            return ()
        return tuple(
            (
                -g * g / (1 + 2 * n) ** 2,
                4.0 * (g / (1 + 2 * n)) ** 2 / (kappa0 * (1 + 2 * n)),
            )
            for n in range(levels)
        )
    t = math.tan(zeta)
    cos2 = math.cos(zeta) ** 2
    if g < 0:
        atoms = []
        for n in range(levels):
            e = _family_root_ladder(0, g, kappa0, -t, n)
            atoms.append((e, 2.0 / (kappa0 * cos2 * _f0_prime(e, g, kappa0))))
        return tuple(atoms)
    if g == 0.0:
        e = -0.25 * kappa0**2 * math.exp(
            4.0 * sf.digamma(1.0).real - 2.0 * sf.digamma(0.5).real + 4.0 * t
        )
        return ((e, 8.0 * abs(e) / (kappa0 * cos2)),)
    t0 = 0.5 * math.log(g / kappa0) + _EULER
    if abs(t - t0) <= 1e-12 * max(1.0, abs(t0)):
        return ((0.0, 24.0 * g * g / (kappa0 * cos2)),)
    if t < t0:
        return ()
    e = _family_root_single(0, g, kappa0, -t)
    return ((e, 2.0 / (kappa0 * cos2 * _f0_prime(e, g, kappa0))),)


def coul_spectrum(spec: ProblemSpec, levels: int = 12) -> SpectralMeasure:
    """Full spectral measure for a Coulomb cell: R+ continuum plus the
    cell's negative atoms per the case tables."""
    if spec.theory is not Theory.COULOMB:
        raise ValidationError("coul_spectrum needs a Coulomb spec")
    cell = classify(spec)
    g, k0 = spec.coupling, spec.kappa0
    if cell is RegimeClass.COUL_UNIQUE:
        n = abs(spec.m)
        atoms = []
        if g < 0:
            for k in range(levels):
                tau = abs(g) / (1 + n + 2 * k)
                # residue of the resolvent diagonal: Q^2 = 8 tau^3 D_m / |g|
                q2 = (
                    (2.0 * tau / k0) ** n
                    * 4.0
                    * tau
                    * tau
                    * sf.pochhammer(1.0 + k, n).real
                    / ((1 + n + 2 * k) * k0 * math.factorial(n) ** 2)
                )
                atoms.append((-g * g / (1 + n + 2 * k) ** 2, q2))
        return SpectralMeasure(tuple(atoms), _density_unique(spec.m, g, k0), "R+")
    half_pi = spec.extension.is_half_pi
    zeta = spec.zeta
    if cell is RegimeClass.COUL_M1_FAMILY:
        atoms = _m1_atoms(g, k0, zeta, half_pi, levels)
        return SpectralMeasure(atoms, _density_m1(g, k0, zeta, half_pi), "R+")
    atoms = _m0_atoms(g, k0, zeta, half_pi, levels)
    return SpectralMeasure(atoms, _density_m0(g, k0, zeta, half_pi), "R+")


def coul_density(spec: ProblemSpec, E: float) -> float:
    """Continuous spectral density sigma'(E) on R+; zero for E < 0."""
    return coul_spectrum(spec, levels=0).density_at(E)


# --- Green function and resolvent diagonal ------------------------------------


def _u_zeta_m1(x, energy, g, k0, zeta):
    c1 = coul_solution("C1", 1, x, energy, g, k0)
    c4 = coul_solution("C4", 1, x, energy, g, k0)
    return c1 * math.sin(zeta) + c4 * math.cos(zeta)


def _u_zeta_m1_tilde(x, energy, g, k0, zeta):
    c1 = coul_solution("C1", 1, x, energy, g, k0)
    c4 = coul_solution("C4", 1, x, energy, g, k0)
    return c1 * math.cos(zeta) - c4 * math.sin(zeta)


def _u_zeta_m0(x, energy, g, k0, zeta):
    c1 = coul_solution("C1", 0, x, energy, g, k0)
    c2 = coul_solution("C2_0", 0, x, energy, g, k0)
    return c1 * math.sin(zeta) + c2 * math.cos(zeta)


def _u_zeta_m0_tilde(x, energy, g, k0, zeta):
    c1 = coul_solution("C1", 0, x, energy, g, k0)
    c2 = coul_solution("C2_0", 0, x, energy, g, k0)
    return c1 * math.cos(zeta) - c2 * math.sin(zeta)


def _omega_unique(
    m: int, e: ComplexEnergy, g: float, k0: float
) -> complex:
    """Closed-form resolvent diagonal for the distinguished C1/C3 kernel."""
    n = abs(m)
    par = coul_parameters(m, e, g)
    d_m = (
        (2.0 * par.K / k0) ** n
        * sf.pochhammer(1 - par.alpha, n)
        / (2.0 * k0 * math.factorial(n) ** 2)
    )
    return d_m * (
        2.0 * cmath.log(k0 / (2.0 * par.K))
        - sf.digamma(par.alpha)
        - sf.digamma(par.alpha_minus)
    )


def coul_spectral_omega(spec: ProblemSpec, energy: ComplexEnergy | complex) -> complex:
    """Resolvent diagonal coefficient: sigma'(E) = (1/pi) Im of this at E + i0."""
    cell = classify(spec)
    g, k0 = spec.coupling, spec.kappa0
    e = as_energy(energy)
    if cell is RegimeClass.COUL_UNIQUE:
        return _omega_unique(spec.m, e, g, k0)
    zeta = spec.zeta
    f = coul_family_function(1 if cell is RegimeClass.COUL_M1_FAMILY else 0, e, g, k0)
    c, s = math.cos(zeta), math.sin(zeta)
    if cell is RegimeClass.COUL_M1_FAMILY:
        return -(f * s + c) / (k0 * (f * c - s))
    return (2.0 / k0) * (f * s - c) / (f * c + s)


def coul_green(
    spec: ProblemSpec, x: float, y: float, energy: ComplexEnergy | complex
) -> complex:
    """Green function G(x, y; E) of the cell's operator, Im E > 0."""
    e = as_energy(energy)
    if e.value.imag <= 0:
        raise ValidationError("Green function requires Im E > 0 (use the density path)")
    cell = classify(spec)
    g, k0 = spec.coupling, spec.kappa0
    hi, lo = max(x, y), min(x, y)
    if cell is RegimeClass.COUL_UNIQUE:
        _, _, _, omega = coul_coefficients(spec.m, e, g, k0)
        return (
            coul_solution("C3", spec.m, hi, e, g, k0)
            * coul_solution("C1", spec.m, lo, e, g, k0)
            / omega
        )
    zeta = spec.zeta
    om = coul_spectral_omega(spec, e)
    if cell is RegimeClass.COUL_M1_FAMILY:
        uv = _u_zeta_m1(x, e, g, k0, zeta) * _u_zeta_m1(y, e, g, k0, zeta)
        cross = _u_zeta_m1_tilde(hi, e, g, k0, zeta) * _u_zeta_m1(lo, e, g, k0, zeta)
        # om is -Omega_{1,zeta}/kappa0 already
        return om * uv - (1.0 / k0) * cross
    uv = _u_zeta_m0(x, e, g, k0, zeta) * _u_zeta_m0(y, e, g, k0, zeta)
    cross = _u_zeta_m0_tilde(hi, e, g, k0, zeta) * _u_zeta_m0(lo, e, g, k0, zeta)
    return om * uv + (2.0 / k0) * cross


# --- eigenfunctions -------------------------------------------------------------


def _family_wave(spec: ProblemSpec, energy: float, amp: float, bound: bool):
    cell = classify(spec)
    g, k0 = spec.coupling, spec.kappa0
    zeta = spec.zeta
    if spec.extension.is_half_pi:
        ev = lambda x: (amp * coul_solution("C1", spec.m, x, energy, g, k0)).real
        tag = f"x^({1 + abs(spec.m)}/2)"
        return ev, tag
    if cell is RegimeClass.COUL_M1_FAMILY:
        direct = lambda x: _u_zeta_m1(x, energy, g, k0, zeta)
        tag = "x sin z + cos z (1 + g x ln(k0 x) + ...)"
    else:
        direct = lambda x: _u_zeta_m0(x, energy, g, k0, zeta)
        tag = "x^(1/2)*(sin z + (cos z / 2) ln(k0 x))"
    if not bound:
        return (lambda x: (amp * direct(x)).real), tag
    # Bound states: beyond x_switch the sin/cos combination of the two
    # regular solutions cancels catastrophically, so continue with the
    # decaying solution scaled to match at the switch point.
    tau = math.sqrt(-energy)
    x_switch = 4.0 / tau
    ratio = direct(x_switch) / coul_solution("C3", spec.m, x_switch, energy, g, k0)

    def ev(x: float) -> float:
        if x < x_switch:
            return (amp * direct(x)).real
        return (amp * ratio * coul_solution("C3", spec.m, x, energy, g, k0)).real

    return ev, tag


def coul_eigenfunction(spec: ProblemSpec, index_or_energy: int | float) -> RadialWave:
    """Normalized eigenfunction (int index -> discrete level, float -> energy)."""
    cell = classify(spec)
    g, k0 = spec.coupling, spec.kappa0
    discrete = isinstance(index_or_energy, int) and not isinstance(index_or_energy, bool)
    if discrete:
        idx = index_or_energy
        if idx < 0:
            raise ValidationError("level index must be >= 0")
        measure = coul_spectrum(spec, levels=idx + 1)
        if idx >= len(measure.discrete):
            raise ValidationError(f"cell has no discrete level with index {idx}")
        energy, weight = measure.discrete[idx]
        if energy == 0.0:
            raise ValidationError(
                "the zero-energy atom has no closed-form eigenfunction here"
            )
        q = math.sqrt(weight)
        if cell is RegimeClass.COUL_UNIQUE:
            ev = lambda x: (q * coul_solution("C1", spec.m, x, energy, g, k0)).real
            return RadialWave(ev, q, f"x^({1 + abs(spec.m)}/2)", energy)
        ev, tag = _family_wave(spec, energy, q, bound=True)
        return RadialWave(ev, q, tag, energy)
    energy = float(index_or_energy)
    measure = coul_spectrum(spec, levels=0)
    dens = measure.density_at(energy)
    if dens <= 0:
        raise ValidationError(f"E={energy} is not in the continuous spectrum")
    rho = math.sqrt(dens)
    if cell is RegimeClass.COUL_UNIQUE:
        ev = lambda x: (rho * coul_solution("C1", spec.m, x, energy, g, k0)).real
        return RadialWave(ev, rho, f"x^({1 + abs(spec.m)}/2)", energy)
    ev, tag = _family_wave(spec, energy, rho, bound=False)
    return RadialWave(ev, rho, tag, energy)
