"""Confluent and generalized Heun forms of the soft-core problem.

q = 1 maps onto the confluent Heun equation

    H'' + (a + (b+1)/t + (g+1)/(t-1)) H' + (mu/t + nu_h/(t-1)) H = 0

with t = 1 - chi/beta, and q = 2 onto the generalized Heun equation in
z = chi/beta with singular points 0, 1, a_hat = -1 and an irregular point
at infinity.  Polynomial solutions come from a tri-diagonal (confluent) or
banded (generalized) determinant.

Heun parameters carry an ``h_`` or ``g_`` prefix so they never clash with the
physical beta and nu.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exactnum import (
    DEFAULT_DIGITS,
    Polynomial,
    RationalFunction,
    exact,
    is_exact,
    prec_real,
)
from .potentials import INF, PotentialSpec, exact_energy, exact_k, v_eval


def _half(x):
    return Fraction(1, 2) if is_exact(x) or isinstance(x, Polynomial) else mpmath.mpf(1) / 2


def _div(a, b):
    """Exact division for every scalar kind used here."""
    if isinstance(a, Polynomial) or isinstance(b, Polynomial):
        if not isinstance(b, Polynomial):
            return a.scale(1 / Fraction(b)) if is_exact(b) else a.scale(1 / b)
        q, r = divmod(a if isinstance(a, Polynomial) else Polynomial([a], b.var), b)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q
    return a / b


# --------------------------------------------------------------------------
# confluent Heun


@dataclass(frozen=True)
class ConfluentHeunParams:
    h_alpha: object
    h_beta: object
    h_gamma: object
    h_delta: object
    h_eta: object

    @property
    def mu(self):
        a, b, g = self.h_alpha, self.h_beta, self.h_gamma
        h = _half(a)
        return a * (b + 1) * h - self.h_eta - (b + g + b * g) * h

    @property
    def nu_h(self):
        a, b, g = self.h_alpha, self.h_beta, self.h_gamma
        return self.h_delta - self.mu + a * (b + g + 2) * _half(a)

    @classmethod
    def from_mu_nu(cls, h_alpha, h_beta, h_gamma, mu, nu_h) -> ConfluentHeunParams:
        h = _half(h_alpha)
        delta = mu + nu_h - h_alpha * (h_beta + h_gamma + 2) * h
        eta = h_alpha * (h_beta + 1) * h - mu - (h_beta + h_gamma + h_beta * h_gamma) * h
        return cls(h_alpha, h_beta, h_gamma, delta, eta)


def map_q1_confluent(Z, beta, k, nu) -> ConfluentHeunParams:
    """He(2k beta, 2nu - 1, -1, -2Z beta, 1/2; t) for V_1."""
    return ConfluentHeunParams(2 * k * beta, 2 * nu - 1, -1, -2 * Z * beta, _half(k))


def confluent_poly_degree(params: ConfluentHeunParams):
    """N from delta/alpha + (beta+gamma)/2 + N + 1 = 0, or None if not a natural number."""
    if params.h_alpha == 0:
        raise ValueError("not confluent case: h_alpha = 0")
    x = -(params.h_delta / params.h_alpha + (params.h_beta + params.h_gamma) * _half(params.h_alpha) + 1)
    if is_exact(x):
        x = Fraction(x)
        if x.denominator == 1 and x >= 0:
            return int(x)
        return None
    n = int(mpmath.nint(x))
    if n >= 0 and abs(x - n) <= mpmath.mpf(10) ** (-(mpmath.mp.dps - 5)):
        return n
    return None


def confluent_matrix(params: ConfluentHeunParams, mu, N: int):
    """(diag, super, sub) of the (N+1)x(N+1) tri-diagonal system, rows n = 1..N+1."""
    a, b, g = params.h_alpha, params.h_beta, params.h_gamma
    diag = [mu - (n - 1) * (n + b + g) + (n - 1) * a for n in range(1, N + 2)]
    sup = [n * (n + b) for n in range(1, N + 1)]
    sub = [(N - n + 1) * a for n in range(1, N + 1)]
    return diag, sup, sub


def tridiagonal_det(diag, sup, sub):
    """Continuant: D_m = d_m D_{m-1} - sup_{m-1} sub_{m-1} D_{m-2}."""
    prev, cur = 1, diag[0]
    for m in range(1, len(diag)):
        prev, cur = cur, diag[m] * cur - sup[m - 1] * sub[m - 1] * prev
    return cur


def confluent_delta_det(params: ConfluentHeunParams, mu, N: int):
    if N < 0:
        raise ValueError("N must be non-negative")
    return tridiagonal_det(*confluent_matrix(params, mu, N))


def confluent_series(params: ConfluentHeunParams, terms: int, mu=None, nu_h=None) -> list:
    """Taylor coefficients v_0..v_{terms-1} of the solution regular at t = 0.

    (n+1)(n+1+b) v_{n+1} = [n(n+b+g+1) - a n - mu] v_n + [a(n-1) + mu + nu_h] v_{n-1}
    """
    if terms < 1:
        raise ValueError("need at least one term")
    a, b, g = params.h_alpha, params.h_beta, params.h_gamma
    mu = params.mu if mu is None else mu
    nu_h = params.nu_h if nu_h is None else nu_h
    v = [_one_like(a)]
    prev = 0
    for n in range(terms - 1):
        rhs = (n * (n + b + g + 1) - a * n - mu) * v[n] + (a * (n - 1) + mu + nu_h) * prev
        piv = (n + 1) * (n + 1 + b)
        if piv == 0:
            if _is_zero(rhs):
                raise ValueError("logarithmic case: free coefficient at this order")
            raise ValueError("logarithmic case: recurrence pivot vanishes")
        prev = v[n]
        v.append(_div(rhs, piv))
    return v


def _one_like(x):
    if isinstance(x, Polynomial):
        return Polynomial([1], x.var)
    if is_exact(x):
        return Fraction(1)
    return mpmath.mpf(1)


def _is_zero(x):
    return x.is_zero() if isinstance(x, Polynomial) else x == 0


def confluent_condition_beta(Z, nu, N: int) -> Polynomial:
    """Delta_{N+1}(2 k nu beta) at k = Z/(nu+N) as a primitive polynomial in beta."""
    Z, nu = exact(Z), exact(nu)
    k = Z / (nu + N)
    b = Polynomial([0, 1], "beta")
    params = map_q1_confluent(Z, b, k, nu)
    det = confluent_delta_det(params, params.mu, N)
    return _strip_beta(det)


def _strip_beta(p: Polynomial) -> Polynomial:
    if p.is_zero():
        raise ValueError("determinant vanishes identically")
    while p[0] == 0:
        p = Polynomial(p.coeffs[1:], p.var)
    return p.primitive()


# --------------------------------------------------------------------------
# generalized Heun


@dataclass(frozen=True)
class GenHeunParams:
    g_alpha: object
    mu0: object
    mu1: object
    mu2: object
    B0: object
    B1: object
    B2: object
    a_hat: object = -1

    def __post_init__(self):
        if self.a_hat in (0, 1):
            raise ValueError("a_hat must differ from 0 and 1")


def map_q2_genheun(Z, beta, k, nu) -> GenHeunParams:
    h = _half(k)
    return GenHeunParams(
        g_alpha=-2 * k * beta,
        mu0=2 * _one_like(h),
        mu1=h - nu,
        mu2=h - nu,
        B0=-beta * k,
        B1=-beta * beta * k * k,
        B2=-2 * beta * (k * nu - Z),
        a_hat=-1,
    )


def genheun_row(p: GenHeunParams, j: int) -> dict:
    """Coefficients of c_{j+1}, c_j, c_{j-1}, c_{j-2} in the z^j equation."""
    a, ah = p.g_alpha, p.a_hat
    a2 = 3 - a * (1 + ah) - p.mu0 - p.mu1 - p.mu2
    a1 = -2 + p.mu0 + p.mu2 + (-2 + p.mu0 + p.mu1 + a) * ah
    a0 = (1 - p.mu0) * ah
    return {
        j + 1: ah * j * (j + 1) + a0 * (j + 1),
        j: -(1 + ah) * j * (j - 1) + a1 * j + p.B0,
        j - 1: (j - 1) * (j - 2) + a2 * (j - 1) + p.B1,
        j - 2: a * (j - 2) + p.B2,
    }


def genheun_matrix(p: GenHeunParams, N: int) -> list[list]:
    """(N+1)x(N+1) banded system: equations z^1..z^{N+1} on c_0..c_N."""
    zero = 0 * p.B0
    rows = []
    for j in range(1, N + 2):
        row = [zero] * (N + 1)
        for col, val in genheun_row(p, j).items():
            if 0 <= col <= N:
                row[col] = val
        rows.append(row)
    return rows


def det(matrix) -> object:
    """Fraction-free (Bareiss) determinant; exact for Fraction and Polynomial entries."""
    M = [list(r) for r in matrix]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if _is_zero(M[i][i]):
            swap = next((r for r in range(i + 1, n) if not _is_zero(M[r][i])), None)
            if swap is None:
                return 0 * M[0][0]
            M[i], M[swap] = M[swap], M[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                M[r][c] = _div(M[r][c] * M[i][i] - M[r][i] * M[i][c], prev)
        prev = M[i][i]
    return M[n - 1][n - 1] if sign > 0 else -M[n - 1][n - 1]


def genheun_poly_conditions(params: GenHeunParams, N: int):
    """(alpha N + B2, Delta_{N+1})."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return params.g_alpha * N + params.B2, det(genheun_matrix(params, N))


def genheun_condition_beta(Z, nu, N: int) -> Polynomial:
    """Delta_{N+1} at k = Z/(nu+N) as a primitive polynomial in beta."""
    Z, nu = exact(Z), exact(nu)
    k = Z / (nu + N)
    b = Polynomial([0, 1], "beta")
    cond1, d = genheun_poly_conditions(map_q2_genheun(Z, b, k, nu), N)
    if not _is_zero(cond1):
        raise RuntimeError("alpha N + B2 should vanish at k = Z/(nu+N)")
    return _strip_beta(d)


def genheun_coeffs(params: GenHeunParams, N: int, rel_tol=None) -> list:
    """Kernel vector c_0..c_N of the banded system, normalised to c_0 = 1.

    The c_{j+1} pivot of row j vanishes for j = mu0 - 1, so instead of running
    the recurrence forward the first N equations are solved for c_1..c_N and
    the last one is checked.
    """
    M = genheun_matrix(params, N)
    one = _one_like(params.B0)
    A = [row[1:] for row in M[:N]]
    rhs = [-row[0] * one for row in M[:N]]
    sol = _solve(A, rhs)
    c = [one] + sol
    last = sum(M[N][i] * c[i] for i in range(N + 1))
    scale = max([abs(M[N][i] * c[i]) for i in range(N + 1)] + [1]) if not is_exact(one) else None
    if is_exact(one):
        if last != 0:
            raise ValueError("no polynomial solution at these parameters")
    else:
        tol = rel_tol if rel_tol is not None else mpmath.mpf(10) ** (-(mpmath.mp.dps // 2))
        if abs(last) > tol * scale:
            raise ValueError("no polynomial solution at these parameters")
    # the z^0 equation must hold as well
    j0 = params.B0 * c[0] + (1 - params.mu0) * params.a_hat * (c[1] if N >= 1 else 0)
    if is_exact(one) and j0 != 0:
        raise ValueError("no polynomial solution: z^0 equation fails")
    return c


def _solve(A, b):
    """Gaussian elimination with pivoting (largest |.| for mpf, first nonzero otherwise)."""
    n = len(A)
    M = [list(A[i]) + [b[i]] for i in range(n)]
    for c in range(n):
        cand = [r for r in range(c, n) if not _is_zero(M[r][c])]
        if not cand:
            raise ValueError("singular system")
        if all(is_exact(M[r][c]) for r in cand):
            p = cand[0]
        else:
            p = max(cand, key=lambda r: abs(M[r][c]))
        M[c], M[p] = M[p], M[c]
        for r in range(c + 1, n):
            if _is_zero(M[r][c]):
                continue
            f = M[r][c] / M[c][c]
            M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    x = [0] * n
    for i in range(n - 1, -1, -1):
        s = M[i][n] - sum(M[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / M[i][i]
    return x


@dataclass(frozen=True)
class Exponents:
    at_zero: tuple
    at_one: tuple
    at_a_hat: tuple
    infinity_rank: int | None  # Poincare rank; None when regular

    @property
    def infinity_regular(self) -> bool:
        return self.infinity_rank is None

    def multiplicities(self) -> dict:
        """{point: {exponent: multiplicity}}; a double root shows up as 2."""
        out = {}
        for point, pair in (("0", self.at_zero), ("1", self.at_one), ("a_hat", self.at_a_hat)):
            m = {}
            for e in pair:
                m[e] = m.get(e, 0) + 1
            out[point] = m
        return out


def singularity_exponents(params: GenHeunParams) -> Exponents:
    if params.a_hat in (0, 1):
        raise ValueError("a_hat must differ from 0 and 1")
    rank = None if params.g_alpha == 0 else 1
    return Exponents((0, params.mu0), (0, params.mu1), (0, params.mu2), rank)


# --------------------------------------------------------------------------
# polynomial factor and wavefunction


def f_poly_q1(Z, beta, nu, N: int) -> Polynomial:
    """f_N as a polynomial in chi for q = 1 (from the confluent series in t)."""
    k = _k(Z, nu, N, beta)
    params = map_q1_confluent(Z, beta, k, nu)
    v = confluent_series(params, N + 1)
    # t = 1 - chi/beta
    t = Polynomial([_one_like(k), -1 / beta if not is_exact(beta) else -Fraction(1) / beta], "chi")
    return Polynomial(v, "t").compose(t)


def f_poly_q2(Z, beta, nu, N: int) -> Polynomial:
    """f_N as a polynomial in chi for q = 2 (kernel of the banded system in z)."""
    k = _k(Z, nu, N, beta)
    c = genheun_coeffs(map_q2_genheun(Z, beta, k, nu), N)
    inv = 1 / beta if not is_exact(beta) else Fraction(1) / beta
    return Polynomial([cj * inv ** j for j, cj in enumerate(c)], "chi")


def _k(Z, nu, N, beta):
    if is_exact(beta) and is_exact(Z):
        return exact_k(exact(Z), nu, N)
    return mpmath.mpf(Z) / (nu + N)


def f_equation_residual(q: int, Z, beta, nu, k, f: Polynomial) -> Polynomial:
    """D (f'' - lambda0 f' - s0 f) as a polynomial in chi, D the seed denominator."""
    b = beta
    if q == 1:
        D = Polynomial([0 * b, -b, 1], "chi")
        P0 = Polynomial([0 * b, -2 * k * b - 2 * nu, 2 * k], "chi")
        Q0 = Polynomial([2 * Z * b, 2 * k * nu - 2 * Z], "chi")
    elif q == 2:
        b2 = b * b
        D = Polynomial([0 * b, -b2, 0, 1], "chi")
        P0 = Polynomial([-b2, -2 * k * b2, -2 * nu, 2 * k], "chi")
        Q0 = Polynomial([k * b2, k * k * b2, 2 * nu * k - 2 * Z], "chi")
    else:
        raise ValueError("q must be 1 or 2")
    fp = f.diff()
    return D * fp.diff() - P0 * fp - Q0 * f


def condition_residual(q: int, Z, nu, N: int, beta):
    cond = (confluent_condition_beta if q == 1 else genheun_condition_beta)(Z, nu, N)
    return cond(beta), cond


class Eigenfunction:
    """psi(r) = r^(l+1) exp(-k chi) f_N(chi) at an exact point."""

    def __init__(self, spec: PotentialSpec, N: int, f: Polynomial, k, energy):
        self.spec = spec
        self.N = N
        self.f = f
        self.k = k
        self.energy = energy
        self._beta = prec_real(spec.beta, mpmath.mp.dps)

    def chi(self, r):
        if self.spec.q == 1:
            return r + self._beta
        return mpmath.sqrt(r * r + self._beta ** 2)

    def _g_derivs(self, r):
        b = self._beta
        chi = self.chi(r)
        if self.spec.q == 1:
            c1, c2 = 1, 0
        else:
            c1, c2 = r / chi, b * b / chi ** 3
        f0, f1, f2 = self.f(chi), self.f.diff()(chi), self.f.diff().diff()(chi)
        e = mpmath.exp(-self.k * chi)
        F0 = e * f0
        F1 = e * (f1 - self.k * f0)
        F2 = e * (f2 - 2 * self.k * f1 + self.k * self.k * f0)
        return F0, F1 * c1, F2 * c1 * c1 + F1 * c2

    def __call__(self, r):
        r = prec_real(r, mpmath.mp.dps)
        if r == 0:
            return mpmath.mpf(0)
        return r ** self.spec.nu * self._g_derivs(r)[0]

    def second_derivative(self, r):
        r = prec_real(r, mpmath.mp.dps)
        nu = self.spec.nu
        g, g1, g2 = self._g_derivs(r)
        return nu * (nu - 1) * r ** (nu - 2) * g + 2 * nu * r ** (nu - 1) * g1 + r ** nu * g2

    def schrodinger_residual(self, r):
        """-psi''/2 + (l(l+1)/(2r^2) + V) psi - E psi."""
        r = prec_real(r, mpmath.mp.dps)
        l = self.spec.l
        psi = self(r)
        V = v_eval(self.spec, r)
        return -self.second_derivative(r) / 2 + (mpmath.mpf(l * (l + 1)) / (2 * r * r) + V - self.energy) * psi


def eigenfunction(spec: PotentialSpec, N: int, beta_root=None, digits: int = DEFAULT_DIGITS,
                  tol_digits: int | None = None) -> Eigenfunction:
    """Wavefunction of the degree-N polynomial solution at a root of the beta condition.

    A floating beta must satisfy the condition to ``tol_digits`` relative
    digits (default three fifths of ``digits``).
    """
    if tol_digits is None:
        tol_digits = digits * 3 // 5
    if spec.q not in (1, 2):
        raise ValueError("exact solutions exist only for q in {1, 2}")
    beta = spec.beta if beta_root is None else beta_root
    Z, nu = spec.Z, spec.nu
    with mpmath.workdps(digits + 10):
        if is_exact(beta) and is_exact(Z):
            resid, _ = condition_residual(spec.q, Z, nu, N, exact(beta))
            if resid != 0:
                raise ValueError("not an exact point")
            f = (f_poly_q1 if spec.q == 1 else f_poly_q2)(exact(Z), exact(beta), nu, N)
            k = exact_k(exact(Z), nu, N)
            f = f.to_mpf(digits + 10)
            E = exact_energy(exact(Z), nu, N)
        else:
            beta = prec_real(beta, digits + 10)
            resid, cond = condition_residual(spec.q, exact(Z), nu, N, beta)
            scale = sum(abs(c) * max(1, abs(beta)) ** i for i, c in enumerate(cond.coeffs))
            if abs(resid) > mpmath.mpf(10) ** (-tol_digits) * scale:
                raise ValueError("not an exact point")
            f = (f_poly_q1 if spec.q == 1 else f_poly_q2)(prec_real(Z, digits + 10), beta, nu, N)
            k = prec_real(Z, digits + 10) / (nu + N)
            E = -k * k / 2
        spec = spec.with_(beta=beta)
        return Eigenfunction(spec, N, f, k if not is_exact(k) else prec_real(k, digits + 10),
                             E if not is_exact(E) else prec_real(E, digits + 10))


__all__ = [
    "ConfluentHeunParams",
    "Eigenfunction",
    "Exponents",
    "GenHeunParams",
    "confluent_condition_beta",
    "confluent_delta_det",
    "confluent_matrix",
    "confluent_poly_degree",
    "confluent_series",
    "det",
    "eigenfunction",
    "f_equation_residual",
    "f_poly_q1",
    "f_poly_q2",
    "genheun_coeffs",
    "genheun_condition_beta",
    "genheun_matrix",
    "genheun_poly_conditions",
    "map_q1_confluent",
    "map_q2_genheun",
    "singularity_exponents",
    "tridiagonal_det",
]
