"""Soft-core Coulomb potentials V_q(r) = -Z / (r^q + beta^q)^(1/q).

Also builds the AIM seed pair (lambda0, s0) in the variable
chi = (r^q + beta^q)^(1/q), the scaling law and the Hardy-type lower bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

import mpmath

from .exactnum import DEFAULT_DIGITS, Polynomial, RationalFunction, is_exact, prec_real

INF = math.inf


@dataclass(frozen=True)
class PotentialSpec:
    """One radial problem: coupling Z, cutoff beta, power q, angular momentum l."""

    Z: object
    beta: object
    q: object = 1
    l: int = 0

    def __post_init__(self):
        if not self.Z > 0:
            raise ValueError("coupling Z must be positive")
        if self.beta < 0:
            raise ValueError("cutoff beta must be non-negative")
        if int(self.l) != self.l or self.l < 0:
            raise ValueError("l must be a non-negative integer")
        if not (self.q == INF or self.q >= 1):
            raise ValueError("power q must satisfy q >= 1 (or be inf)")
        object.__setattr__(self, "l", int(self.l))

    @property
    def nu(self) -> int:
        return self.l + 1

    def with_(self, **kw) -> PotentialSpec:
        d = dict(Z=self.Z, beta=self.beta, q=self.q, l=self.l)
        d.update(kw)
        return PotentialSpec(**d)


@dataclass(frozen=True)
class AimSeed:
    """lambda0, s0 as rational functions of chi, plus the decay constant k.

    ``poles`` lists the partial-fraction form used by the numeric engine:
    constant part and ``{pole: residue}`` for each of lambda0 and s0.
    """

    lam0: RationalFunction
    s0: RationalFunction
    k: object
    q: int
    poles: tuple = field(repr=False, default=())

    def chi_of_r(self, r, beta):
        if self.q == 1:
            return r + beta
        return mpmath.sqrt(r * r + beta * beta)


def _chi_poly(coeffs):
    return Polynomial(coeffs, "chi")


def _simple_pole(residue, pole) -> RationalFunction:
    return RationalFunction(_chi_poly([residue]), _chi_poly([-pole, 1]))


def seed_q1(spec: PotentialSpec, k) -> AimSeed:
    """lambda0 = -2nu/(chi-beta) + 2k,  s0 = 2k nu/(chi-beta) - 2Z/chi."""
    if spec.q != 1:
        raise ValueError("wrong seed builder: seed_q1 needs q = 1")
    Z, b, nu = spec.Z, spec.beta, spec.nu
    lam0 = _simple_pole(-2 * nu, b) + 2 * k
    s0 = _simple_pole(2 * k * nu, b) + _simple_pole(-2 * Z, 0)
    poles = ((2 * k, {b: -2 * nu}), (0, _merge({b: 2 * k * nu}, {0: -2 * Z})))
    return AimSeed(lam0, s0, k, 1, poles)


def seed_q2(spec: PotentialSpec, k) -> AimSeed:
    """Five-pole seed for q = 2 (poles at 0 and +-beta)."""
    if spec.q != 2:
        raise ValueError("wrong seed builder: seed_q2 needs q = 2")
    Z, b, nu = spec.Z, spec.beta, spec.nu
    half = Fraction(1, 2) if is_exact(k) and is_exact(b) else mpmath.mpf(1) / 2
    h = nu + half
    rp = h * k - Z + k * k * b * half
    rm = h * k - Z - k * k * b * half
    lam0 = 2 * k + _simple_pole(1, 0) + _simple_pole(-h, b) + _simple_pole(-h, -b)
    s0 = _simple_pole(rp, b) + _simple_pole(rm, -b) + _simple_pole(-k, 0)
    poles = ((2 * k, _merge({0: 1}, {b: -h}, {-b: -h})),
             (0, _merge({b: rp}, {-b: rm}, {0: -k})))
    return AimSeed(lam0, s0, k, 2, poles)


def _as_mpf(x):
    return mpmath.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else mpmath.mpf(x)


def _merge(*ds):
    out = {}
    for d in ds:
        for p, r in d.items():
            out[p] = out.get(p, 0) + r
    return out


def make_seed(spec: PotentialSpec, k) -> AimSeed:
    if not is_exact(k):
        # mpf and Fraction do not mix; bring exact parameters to k's precision
        spec = replace(spec, Z=_as_mpf(spec.Z), beta=_as_mpf(spec.beta))
    if spec.q == 1:
        return seed_q1(spec, k)
    if spec.q == 2:
        return seed_q2(spec, k)
    raise ValueError("q must be 1 or 2 for AIM; use `oracle`")


def v_eval(spec: PotentialSpec, r):
    """Potential value at r > 0, including the q = inf cutoff limit.

    Exact inputs give an exact result where the potential is rational
    (q = 1 and q = inf); everything else is evaluated in mpmath.
    """
    if r < 0 or (r == 0 and spec.beta == 0):
        raise ValueError("potential needs r > 0")
    Z, b, q = spec.Z, spec.beta, spec.q
    if all(is_exact(x) for x in (Z, b, r)) and q in (1, INF):
        Z, b, r = Fraction(Z), Fraction(b), Fraction(r)
    else:
        Z, b, r = _as_mpf(Z), _as_mpf(b), _as_mpf(r)
    if q == INF:
        return -Z / b if r < b else -Z / r
    if q == 1:
        return -Z / (r + b)
    if q == 2:
        return -Z / mpmath.sqrt(r * r + b * b)
    return -Z / (r ** q + b ** q) ** (mpmath.mpf(1) / q)


def scaling_transform(E, spec: PotentialSpec, toZ):
    """Map a level of ``spec`` to the equivalent level at coupling ``toZ``.

    E(Z, beta) = Z^2 E(1, Z beta), so with s = toZ / Z the same level sits at
    (toZ, beta / s) with energy s^2 E.
    """
    if not (spec.Z > 0 and toZ > 0):
        raise ValueError("couplings must be positive")
    if all(is_exact(x) for x in (E, spec.Z, spec.beta, toZ)):
        s = Fraction(toZ) / Fraction(spec.Z)
        return Fraction(E) * s * s, spec.with_(Z=toZ, beta=Fraction(spec.beta) / s)
    s = _as_mpf(toZ) / _as_mpf(spec.Z)
    return _as_mpf(E) * s * s, spec.with_(Z=toZ, beta=_as_mpf(spec.beta) / s)


def spectral_lower_bound(spec: PotentialSpec, digits: int = 30):
    """min over r > 0 of 1/(8 r^2) + V_q(r), by golden-section search."""
    with mpmath.workdps(digits + 10):
        Z = prec_real(spec.Z, digits + 10)
        if spec.beta == 0:
            # pure Coulomb for every q: minimum -2 Z^2 at r = 1/(4Z)
            return prec_real(-2 * Z * Z, digits)

        def g(r):
            return 1 / (8 * r * r) + v_eval(spec, r)

        # bracket by doubling from a point left of the minimum
        a = mpmath.mpf(1) / (64 * Z)
        b = 2 * a
        while g(2 * b) < g(b):
            b *= 2
        b = 2 * b
        invphi = (mpmath.sqrt(5) - 1) / 2
        c = b - invphi * (b - a)
        d = a + invphi * (b - a)
        gc, gd = g(c), g(d)
        tol = mpmath.mpf(10) ** (-(digits // 2 + 2))
        while b - a > tol * (1 + abs(c)):
            if gc < gd:
                b, d, gd = d, c, gc
                c = b - invphi * (b - a)
                gc = g(c)
            else:
                a, c, gc = c, d, gd
                d = a + invphi * (b - a)
                gd = g(d)
        return prec_real(min(gc, gd), digits)


def exact_energy(Z, nu: int, N: int):
    """E = -Z^2 / (2 (N + nu)^2) for the polynomial solutions."""
    return -exact_k(Z, nu, N) ** 2 / 2


def exact_k(Z, nu: int, N: int):
    Z = Fraction(Z) if isinstance(Z, int) else Z
    return Z / (nu + N)

