"""Asymptotic Iteration Method for y'' = lambda0 y' + s0 y.

Three engines share the recurrence

    lambda_n = lambda_{n-1}' + s_{n-1} + lambda0 lambda_{n-1}
    s_n      = s_{n-1}' + s0 lambda_{n-1}

and the termination quantity delta_n = lambda_n s_{n-1} - lambda_{n-1} s_n:

* :func:`aim_step` / :func:`aim_delta` iterate reduced rational functions,
* :func:`delta_values` propagates Taylor jets at a single point chi0 and is
  what the eigenvalue search (:func:`aim_solve`) evaluates,
* :func:`aim_exact_scan` runs the recurrence over Q[beta][chi] with a fixed
  common denominator to extract the exact conditions on beta.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .exactnum import (
    DEFAULT_DIGITS,
    Polynomial,
    RationalFunction,
    _exact_gcd,
    exact,
    prec_real,
    rf_diff,
)
from .potentials import (
    AimSeed,
    PotentialSpec,
    exact_energy,
    exact_k,
    make_seed,
    spectral_lower_bound,
)

log = logging.getLogger(__name__)

DEFAULT_TOL = mpmath.mpf("1e-12")
DEFAULT_NMAX = 80
SCAN_POINTS = 200
# a root that keeps vanishing between consecutive n is not going to settle
MAX_RESCANS = 4
# consecutive n with no bracket in the window before giving up
MAX_EMPTY_SCANS = 8
# iterations at which the window above the tracked root is rescanned
RECHECK_AT = (4, 8, 16)


class AimError(RuntimeError):
    """Raised when no eigenvalue bracket can be established."""


@dataclass(frozen=True)
class AimState:
    n: int
    lam: RationalFunction
    s: RationalFunction
    lam_prev: RationalFunction | None = None
    s_prev: RationalFunction | None = None


def aim_start(seed: AimSeed) -> AimState:
    return AimState(0, seed.lam0, seed.s0)


def aim_step(state: AimState, seed: AimSeed) -> AimState:
    lam = rf_diff(state.lam) + state.s + seed.lam0 * state.lam
    s = rf_diff(state.s) + seed.s0 * state.lam
    return AimState(state.n + 1, lam, s, state.lam, state.s)


def aim_delta(state: AimState) -> RationalFunction:
    if state.n == 0 or state.lam_prev is None:
        raise ValueError("needs one step: delta_n is defined for n >= 1")
    return state.lam * state.s_prev - state.lam_prev * state.s


def aim_iterate(seed: AimSeed, n: int) -> AimState:
    state = aim_start(seed)
    for _ in range(n):
        state = aim_step(state, seed)
    return state


# --------------------------------------------------------------------------
# Taylor-jet evaluation at a point


def _pole_terms(seed_part, chi0):
    const, poles = seed_part
    return const, [(1 / (chi0 - p), r) for p, r in poles.items() if r != 0]


def _seed_series(const, terms, order):
    out = [const] + [0] * order
    for u, r in terms:
        t = r * u
        for m in range(order + 1):
            out[m] += t
            t *= -u
    return out


def _times_seed(const, terms, a):
    # product with c + sum r/(chi - p), truncated to len(a) - 1
    n = len(a) - 1
    out = [const * x for x in a[:n]]
    for u, r in terms:
        acc = 0
        for m in range(n):
            acc = u * (a[m] - acc)
            out[m] += r * acc
    return out


def delta_values(seed: AimSeed, chi0, n_top: int) -> list:
    """[delta_1(chi0), ..., delta_{n_top}(chi0)] from Taylor jets at chi0.

    Only lambda0, s0 in partial-fraction form are used; the n-th iterate
    needs its jet to order n_top - n, so the cost is O(n_top^2).
    """
    lc, lt = _pole_terms(seed.poles[0], chi0)
    sc, st = _pole_terms(seed.poles[1], chi0)
    lam = _seed_series(lc, lt, n_top)
    s = _seed_series(sc, st, n_top)
    lam_v, s_v = [lam[0]], [s[0]]
    for _ in range(n_top):
        pl = _times_seed(lc, lt, lam)
        ps = _times_seed(sc, st, lam)
        n = len(lam) - 1
        lam, s = (
            [(m + 1) * lam[m + 1] + s[m] + pl[m] for m in range(n)],
            [(m + 1) * s[m + 1] + ps[m] for m in range(n)],
        )
        lam_v.append(lam[0])
        s_v.append(s[0])
    return [lam_v[n] * s_v[n - 1] - lam_v[n - 1] * s_v[n] for n in range(1, n_top + 1)]


# --------------------------------------------------------------------------
# numeric eigenvalue search


@dataclass
class EigenResult:
    energy: mpmath.mpf | None
    iterations_used: int
    r0: object
    converged: bool
    history: list = field(default_factory=list)
    point: str = "r"
    chi0: mpmath.mpf | None = None
    message: str = ""

    def as_dict(self) -> dict:
        return {
            "energy": None if self.energy is None else mpmath.nstr(self.energy, 30),
            "iterations": self.iterations_used,
            "r0": str(self.r0),
            "point": self.point,
            "converged": self.converged,
            "history": [mpmath.nstr(e, 30) for e in self.history],
            "message": self.message,
        }


def evaluation_point(spec: PotentialSpec, r0, point: str = "r"):
    """chi0 for a requested evaluation point.

    ``point`` selects how ``r0`` is read: ``"r"`` a radius (chi0 from the
    change of variable), ``"chi"`` chi0 itself, ``"z"`` the scaled chi/beta.
    ``"table"``, the convention of the reference tables, means ``"chi"``
    for q = 1 and ``"z"`` for q = 2.
    """
    r0 = prec_real(r0, mpmath.mp.dps)
    beta = prec_real(spec.beta, mpmath.mp.dps)
    if point == "table":
        point = "chi" if spec.q == 1 else "z"
    if point == "chi":
        return r0
    if point == "z":
        return r0 * beta
    if point != "r":
        raise ValueError(f"unknown evaluation point convention {point!r}")
    if spec.q == 1:
        return r0 + beta
    return mpmath.sqrt(r0 * r0 + beta ** 2)


class _DeltaFunction:
    """delta_n(k; chi0) for fixed spec and chi0, with an evaluation counter."""

    def __init__(self, spec: PotentialSpec, chi0):
        self.spec = spec
        self.chi0 = chi0
        self.calls = 0

    def __call__(self, k, n):
        self.calls += 1
        return delta_values(make_seed(self.spec, k), self.chi0, n)[-1]


def _roots_on_grid(f, grid):
    vals = [f(x) for x in grid]
    out = []
    for i in range(len(grid) - 1):
        if vals[i] == 0:
            out.append((grid[i], grid[i]))
        elif vals[i] * vals[i + 1] < 0:
            out.append((grid[i], grid[i + 1]))
    return out


def _refine(f, a, b, eps):
    if a == b:
        return a
    fa, fb = f(a), f(b)
    if fa == 0:
        return a
    if fb == 0:
        return b
    # Illinois regula falsi; bisection when the secant leaves the bracket
    for _ in range(400):
        c = (a * fb - b * fa) / (fb - fa)
        if not (min(a, b) < c < max(a, b)):
            c = (a + b) / 2
        fc = f(c)
        if fc == 0 or abs(b - a) <= eps * max(1, abs(c)):
            return c
        if fc * fb < 0:
            a, fa = b, fb
        else:
            fa = fa / 2
        b, fb = c, fc
    return (a + b) / 2


def _track(f, k_prev, step, kmax, eps, max_expand=40):
    """Root of f nearest k_prev, searching outward from it."""
    f0 = f(k_prev)
    if f0 == 0:
        return k_prev
    lo = hi = k_prev
    flo = fhi = f0
    h = step
    for _ in range(max_expand):
        nlo = max(k_prev - h, k_prev * mpmath.mpf("1e-6"))
        nhi = min(k_prev + h, kmax)
        if nhi > hi:
            fn = f(nhi)
            if fn * fhi <= 0:
                return _refine(f, hi, nhi, eps)
            hi, fhi = nhi, fn
        if nlo < lo:
            fn = f(nlo)
            if fn * flo <= 0:
                return _refine(f, nlo, lo, eps)
            lo, flo = nlo, fn
        h *= 2
    return None


def _seed_root(f, n, kmax, nodes, points):
    grid = [kmax * i / points for i in range(1, points + 1)]
    brackets = _roots_on_grid(lambda k: f(k, n), grid)
    if len(brackets) <= nodes:
        return None
    a, b = brackets[-1 - nodes]
    return a, b


def _level_check(f, n, k, kmax, nodes):
    """Bracket of the wanted level if a fresh window scan disagrees with k, else None.

    Early iterates may lack the level being sought, or carry spurious roots
    that shift the count from the top; the scan is repeated at a few n.
    """
    br = _seed_root(f, n, kmax, nodes, SCAN_POINTS)
    if br is None or br[0] <= k <= br[1]:
        return None
    return br


def aim_solve(
    spec: PotentialSpec,
    r0,
    digits: int = DEFAULT_DIGITS,
    tol=DEFAULT_TOL,
    n_max: int = DEFAULT_NMAX,
    *,
    point: str = "r",
    nodes: int = 0,
    n_start: int = 2,
    fallback: bool = True,
) -> EigenResult:
    """Eigenvalue from the roots of delta_n(E; chi0) = 0 for growing n.

    The root is followed in k = sqrt(-2E) (delta_n is a polynomial in k).
    Seeding scans (0, k_max], k_max from the lower bound, and picks the
    root with ``nodes`` larger roots above it (0 = ground state of this l).
    """
    if spec.q not in (1, 2):
        raise ValueError("q must be 1 or 2 for AIM; use `oracle`")
    res = _aim_solve_once(spec, r0, digits, tol, n_max, point, nodes, n_start)
    if res.converged or not fallback or spec.beta == 0:
        return res
    tried = [res]
    for factor in (Fraction(1, 2), Fraction(1), Fraction(6, 5), Fraction(2)):
        alt_r0 = spec.beta * factor
        log.info("retrying with r0 = %s (radius)", alt_r0)
        try:
            alt = _aim_solve_once(spec, alt_r0, digits, tol, n_max, "r", nodes, n_start)
        except (AimError, ValueError) as e:
            log.info("r0 = %s failed: %s", alt_r0, e)
            continue
        if alt.converged:
            alt.message = f"converged after r0 fallback (first try: {res.message})"
            return alt
        tried.append(alt)
    res.message += "; fallback r0 values did not converge either"
    return res


def _aim_solve_once(spec, r0, digits, tol, n_max, point, nodes, n_start) -> EigenResult:
    tol = mpmath.mpf(tol)
    with mpmath.workdps(digits):
        chi0 = evaluation_point(spec, r0, point)
        if spec.beta > 0 and chi0 <= prec_real(spec.beta, digits):
            raise ValueError("evaluation point must satisfy chi0 > beta")
        f = _DeltaFunction(spec, chi0)
        bound = spectral_lower_bound(spec, digits=min(digits, 30))
        # V_q >= -Z/r, so no level of this l lies below the hydrogenic
        # -Z^2/(2(l+1)^2); roots with larger k are artifacts of the truncation
        k_coulomb = prec_real(spec.Z, digits) / (spec.l + 1) * (1 + mpmath.mpf("1e-6"))
        kmax = min(mpmath.sqrt(-2 * bound), k_coulomb)
        eps = mpmath.mpf(10) ** (-(digits - 8))
        result = EigenResult(None, 0, r0, False, [], point, chi0)

        k = None
        n = n_start
        history_k = []
        lost = empty = 0
        while n <= n_max:
            if k is None:
                br = _seed_root(f, n, kmax, nodes, SCAN_POINTS)
                if br is None:
                    empty += 1
                    if empty > MAX_EMPTY_SCANS:
                        break
                    n += 1
                    continue
                empty = 0
                k = _refine(lambda x: f(x, n), br[0], br[1], eps)
            else:
                step = abs(history_k[-1] - history_k[-2]) * 2 if len(history_k) > 1 else k * mpmath.mpf("1e-3")
                step = max(step, k * mpmath.mpf(10) ** (-(digits // 2)))
                nk = _track(lambda x: f(x, n), k, step, kmax, eps)
                if nk is None:
                    log.debug("lost root at n=%d, rescanning", n)
                    lost += 1
                    if lost > MAX_RESCANS:
                        if result.history and result.history[-1] is not None:
                            result.energy = result.history[-1]
                        result.message = (f"oscillations of the computed roots: root lost {lost} times "
                                          f"by n={n}; try another r0")
                        return result
                    k = None
                    history_k.clear()
                    result.history.append(None)
                    continue
                k = nk
            if n in RECHECK_AT:
                br = _level_check(f, n, k, kmax, nodes)
                if br is not None:
                    log.debug("window scan at n=%d picks another level, switching", n)
                    k = _refine(lambda x: f(x, n), br[0], br[1], eps)
                    history_k.clear()
                    result.history.append(None)
            history_k.append(k)
            E = -k * k / 2
            result.history.append(E)
            result.iterations_used = n
            if len(history_k) > 1:
                prev = -history_k[-2] ** 2 / 2
                if abs(E - prev) <= tol:
                    result.energy = E
                    result.converged = True
                    result.message = f"converged at n={n}"
                    return result
                best = _stalled(history_k)
                if best is not None:
                    result.energy = -history_k[best] ** 2 / 2
                    step = abs(result.energy + history_k[best - 1] ** 2 / 2)
                    result.message = (f"stalled: steps grow after n={n - len(history_k) + 1 + best} "
                                      f"(smallest step {mpmath.nstr(step, 3)}); energy is the iterate there")
                    return result
            n += 1
        found = [e for e in result.history if e is not None]
        if not found:
            raise AimError("no root bracket; adjust r0 or window")
        result.energy = found[-1]
        if empty > MAX_EMPTY_SCANS:
            result.message = (f"oscillations of the computed roots: root vanished from the window "
                              f"for {empty} consecutive n by n={n}; try another r0")
        else:
            result.message = _diagnose(result.history, n_max)
        return result


# the root sequence can settle and then run away; once the step has grown
# STALL_RUN times in a row to STALL_GROWTH times its smallest value, more
# iterations only make it worse
STALL_RUN = 5
STALL_GROWTH = 100


def _stalled(history_k):
    """Index of the best iterate if the sequence is diverging, else None."""
    d = [abs(history_k[i + 1] - history_k[i]) for i in range(len(history_k) - 1)]
    if len(d) < STALL_RUN + 2:
        return None
    m = min(range(len(d)), key=d.__getitem__)
    tail = d[-STALL_RUN - 1:]
    if m >= len(d) - STALL_RUN or any(b <= a for a, b in zip(tail, tail[1:])):
        return None
    if d[-1] < STALL_GROWTH * d[m]:
        return None
    return m + 1


def _diagnose(history, n_max) -> str:
    vals = [e for e in history if e is not None]
    if len(vals) < 3:
        return f"not converged within n_max={n_max}"
    d = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    flips = sum(1 for a, b in zip(d, d[1:]) if a * b < 0)
    last = mpmath.nstr(abs(d[-1]), 3)
    if flips > len(d) // 3:
        return f"oscillations of the computed roots (last step {last}) within n_max={n_max}"
    return f"not converged within n_max={n_max} (last step {last})"


# --------------------------------------------------------------------------
# exact polynomial solutions


@dataclass(frozen=True)
class ExactSolution:
    q: int
    Z: Fraction
    l: int
    N: int
    k: Fraction
    beta_condition: Polynomial
    energy: Fraction

    @property
    def nu(self) -> int:
        return self.l + 1


def _beta(coeffs):
    return Polynomial([exact(c) for c in coeffs], "beta")


def _chi(coeffs):
    return Polynomial(coeffs, "chi")


def _symbolic_seed(q: int, Z: Fraction, nu, k):
    """(D, P0, Q0) with lambda0 = P0/D, s0 = Q0/D over Q[beta][chi]."""
    zero, one = _beta([0]), _beta([1])
    b = _beta([0, 1])
    if q == 1:
        D = _chi([zero, -b, one])  # chi (chi - beta)
        P0 = _chi([zero, b * (-2 * k) - 2 * nu, _beta([2 * k])])
        Q0 = _chi([b * (2 * Z), _beta([2 * k * nu - 2 * Z])])
        return D, P0, Q0
    if q == 2:
        b2 = b * b
        D = _chi([zero, -b2, zero, one])  # chi (chi^2 - beta^2)
        # 2k chi (chi^2 - b^2) + (chi^2 - b^2) - (2 nu + 1) chi^2
        P0 = _chi([-b2, b2 * (-2 * k), _beta([1 - (2 * nu + 1)]), _beta([2 * k])])
        # -k (chi^2 - b^2) + ((2 nu + 1) k - 2 Z) chi^2 + k^2 b^2 chi
        Q0 = _chi([b2 * k, b2 * (k * k), _beta([-k + (2 * nu + 1) * k - 2 * Z])])
        return D, P0, Q0
    raise ValueError("exact scan needs q in {1, 2}")


def _poly_gcd_beta(polys):
    g = Polynomial([], "beta")
    for p in polys:
        if not isinstance(p, Polynomial):
            p = _beta([p])
        if p.is_zero():
            continue
        g = p.monic() if g.is_zero() else _exact_gcd(g, p)
        if g.degree == 0:
            break
    return g


def symbolic_deltas(q: int, Z, nu, k, n_top: int) -> list[Polynomial]:
    """Numerators of delta_1..delta_{n_top} over Q[beta][chi].

    lambda_n = A_n / D^(n+1) and s_n = B_n / D^(n+1) for the fixed seed
    denominator D, so delta_n = (A_n B_{n-1} - A_{n-1} B_n) / D^(2n+1).
    """
    D, P0, Q0 = _symbolic_seed(q, exact(Z), exact(nu), exact(k))
    dD = D.diff()
    A, B = P0, Q0
    out = []
    for n in range(n_top):
        A_next = A.diff() * D - dD * A * (n + 1) + B * D + P0 * A
        B_next = B.diff() * D - dD * B * (n + 1) + Q0 * A
        out.append(A_next * B - A * B_next)
        A, B = A_next, B_next
    return out


def beta_condition_from_delta(delta_num: Polynomial) -> Polynomial:
    """Common factor in beta of all chi-coefficients, beta^m and content removed."""
    if delta_num.is_zero():
        raise ValueError("delta vanishes identically for every beta")
    g = _poly_gcd_beta(delta_num.coeffs)
    while g.degree > 0 and g[0] == 0:
        g = Polynomial(g.coeffs[1:], "beta")
    return g.primitive()


def aim_exact_scan(q: int, Z, l: int, N: int) -> ExactSolution:
    """Exact polynomial solution of degree N: k = Z/(nu+N) and its beta condition."""
    if q not in (1, 2):
        raise ValueError("exact scan needs q in {1, 2}")
    if N < 1:
        raise ValueError("N must be at least 1")
    Z = exact(Z)
    nu = l + 1
    k = exact_k(Z, nu, N)
    delta_num = symbolic_deltas(q, Z, nu, k, N)[-1]
    cond = beta_condition_from_delta(delta_num)
    expected_degree = N if q == 1 else 2 * N
    if cond.degree != expected_degree:
        raise RuntimeError(
            f"internal failure: beta condition of degree {cond.degree}, expected {expected_degree}"
        )
    return ExactSolution(q, Z, l, N, k, cond, exact_energy(Z, nu, N))


def delta_vanishes(q: int, Z, nu, k, beta, n: int) -> bool:
    """Exact test delta_n == 0 identically in chi at a rational beta."""
    num = symbolic_deltas(q, Z, nu, k, n)[-1]
    b = exact(beta)
    return all((c(b) if isinstance(c, Polynomial) else c) == 0 for c in num.coeffs)


# --------------------------------------------------------------------------
# symbolic nu


def _nu_samples(count: int, offset=Fraction(1, 3)):
    return [Fraction(j) + offset for j in range(1, count + 1)]


def conditions_symbolic_nu(condition_at, degree_bound: int, extra: int = 3):
    """Condition polynomial with nu kept symbolic, recovered by interpolation.

    ``condition_at(nu)`` returns the beta-condition (any scale) at a rational
    nu.  Each is made monic; coefficient values are rationally reconstructed
    in nu, cleared of denominators and made primitive over Q[nu].
    Returns {beta_power: Polynomial in nu}.
    """
    npts = 2 * degree_bound + 2 + extra
    nus = _nu_samples(npts)
    monics = [condition_at(nu).monic() for nu in nus]
    deg = monics[0].degree
    if any(m.degree != deg for m in monics):
        raise RuntimeError("beta degree of the condition changes with nu")
    parts = {}
    for j in range(deg + 1):
        ys = [m[j] for m in monics]
        parts[j] = rational_reconstruct(nus, ys, degree_bound, extra)
    den = Polynomial([1], "nu")
    for _, q in parts.values():
        den = _poly_lcm(den, q)
    out = {}
    for j, (p, q) in parts.items():
        out[j] = (p * (den // q))
    return _primitive_bivariate(out)


def rational_reconstruct(xs, ys, degree_bound: int, extra: int):
    """Lowest-degree (P, Q), Q monic, with P(x) = y Q(x) at every sample."""
    fit, check = xs[: len(xs) - extra], xs[len(xs) - extra:]
    for dq in range(0, degree_bound + 1):
        n_fit = len(fit)
        dp = min(degree_bound, n_fit - dq - 1)
        if dp < 0:
            break
        sol = _solve_rational(fit, ys[:n_fit], dp, dq)
        if sol is None:
            continue
        P, Q = sol
        if all(P(x) == y * Q(x) for x, y in zip(xs, ys)):
            g = _exact_gcd(P, Q) if not P.is_zero() else Q.monic()
            P, Q = P // g, Q // g
            lc = Q.lc
            return P.scale(1 / lc), Q.scale(1 / lc)
    raise RuntimeError("rational reconstruction failed; raise the degree bound")


def _solve_rational(xs, ys, dp, dq):
    # unknowns p_0..p_dp, q_0..q_{dq-1}; q_dq = 1
    rows = []
    for x, y in zip(xs, ys):
        row = [x ** i for i in range(dp + 1)] + [-y * x ** i for i in range(dq)]
        rows.append((row, y * x ** dq))
    ncols = dp + 1 + dq
    sol = _least_solve(rows, ncols)
    if sol is None:
        return None
    P = Polynomial(sol[: dp + 1], "nu")
    Q = Polynomial(list(sol[dp + 1:]) + [Fraction(1)], "nu")
    return P, Q


def _least_solve(rows, ncols):
    """Exact solve of an overdetermined consistent system; None if inconsistent."""
    M = [list(r) + [rhs] for r, rhs in rows]
    piv_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(M)):
        if M[i][-1] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = M[i][-1]
    return sol


def _poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    return (a * b // _exact_gcd(a, b)).monic()


def _primitive_bivariate(parts: dict) -> dict:
    g = Polynomial([], "nu")
    for p in parts.values():
        if not p.is_zero():
            g = p.monic() if g.is_zero() else _exact_gcd(g, p)
    parts = {j: p // g for j, p in parts.items()}
    top = max(j for j, p in parts.items() if not p.is_zero())
    # integer content across all coefficients, positive leading term
    flat = Polynomial([c for p in parts.values() for c in p.coeffs], "t")
    c = flat.content()
    if parts[top].lc < 0:
        c = -c
    return {j: p.scale(1 / c) for j, p in parts.items() if not p.is_zero()}


def aim_condition_symbolic(q: int, N: int) -> dict:
    """beta condition for degree N with nu symbolic, Z = 1, via AIM."""
    def at(nu):
        k = Fraction(1) / (nu + N)
        return beta_condition_from_delta(symbolic_deltas(q, 1, nu, k, N)[-1])
    return conditions_symbolic_nu(at, degree_bound=_nu_degree_bound(q, N))


def _nu_degree_bound(q: int, N: int) -> int:
    # generous: Table-style coefficients reach degree ~ 3N in nu
    return 3 * N + 2


__all__ = [
    "AimError",
    "AimState",
    "EigenResult",
    "ExactSolution",
    "aim_delta",
    "aim_condition_symbolic",
    "aim_exact_scan",
    "aim_iterate",
    "aim_solve",
    "aim_start",
    "aim_step",
    "beta_condition_from_delta",
    "conditions_symbolic_nu",
    "delta_values",
    "evaluation_point",
    "symbolic_deltas",
]
