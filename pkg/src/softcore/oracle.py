"""Independent shooting solver for the radial equation.

Solves  -psi''/2 + (l(l+1)/(2r^2) + V_q(r)) psi = E psi  by Numerov
integration on a uniform grid, in ordinary floating point.  It shares no
code with the AIM engine and accepts any q >= 1 (or inf), which makes it the
cross-check for everything else.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .potentials import INF, PotentialSpec, spectral_lower_bound


class OracleError(RuntimeError):
    pass


# exp(-40) is far below double-precision roundoff
DECAY_LENGTHS = 40.0


@dataclass(frozen=True)
class GridSolve:
    """Grid and search window for one shooting run.

    ``r_max=None`` picks 10 max(beta, (n+l+1)^2/Z); it is doubled until the
    outer wall sits DECAY_LENGTHS decay lengths beyond the turning point.
    """

    r_max: float | None = None
    steps: int = 20000
    node_target: int = 0
    E_bracket: tuple | None = None

    def __post_init__(self):
        if self.steps < 10_000:
            raise ValueError("steps must be at least 10^4")
        if self.node_target < 0:
            raise ValueError("node_target must be non-negative")


def default_r_max(spec: PotentialSpec, node_target: int) -> float:
    n = node_target + spec.l + 1
    return 10.0 * max(float(spec.beta), n * n / float(spec.Z))


def potential_array(spec: PotentialSpec, r: np.ndarray) -> np.ndarray:
    Z, b, q = float(spec.Z), float(spec.beta), spec.q
    if q == INF:
        return np.where(r < b, -Z / b, -Z / np.maximum(r, b)) if b > 0 else -Z / r
    if q == 1:
        return -Z / (r + b)
    if q == 2:
        return -Z / np.sqrt(r * r + b * b)
    q = float(q)
    if b == 0:
        return -Z / r
    # factor out the larger scale to keep r^q from overflowing
    s = np.maximum(r, b)
    return -Z / (s * ((r / s) ** q + (b / s) ** q) ** (1.0 / q))


def _potential_taylor(spec: PotentialSpec, order: int) -> dict:
    """Taylor coefficients {power: value} of 2V about r = 0 (power -1 for Coulomb)."""
    Z, b, q = float(spec.Z), float(spec.beta), spec.q
    if b == 0:
        return {-1: -2 * Z}
    if q == 1:
        return {m: -2 * Z / b * (-1 / b) ** m for m in range(order + 1)}
    if q == 2:
        out, c = {}, 1.0
        for m in range(order // 2 + 1):
            out[2 * m] = -2 * Z / b * c / b ** (2 * m)
            c *= (-0.5 - m) / (m + 1)
        return out
    # q = inf is flat near the origin; other q only keep the constant term
    return {0: -2 * Z / b}


def _series_start(spec: PotentialSpec, E: float, r: np.ndarray, terms: int = 8) -> np.ndarray:
    """psi = r^nu sum c_j r^j with c_0 = 1.

    j (2 nu + j - 1) c_j = sum_m u_m c_{j-2-m}, u the Taylor coefficients of 2V - 2E.
    """
    nu = spec.l + 1
    u = _potential_taylor(spec, terms)
    u[0] = u.get(0, 0.0) - 2 * E
    c = [1.0]
    for j in range(1, terms):
        s = sum(um * c[j - 2 - m] for m, um in u.items() if 0 <= j - 2 - m < j)
        c.append(s / (j * (2 * nu + j - 1)))
    return r ** nu * np.polyval(c[::-1], r)


class _Shooter:
    """Numerov integrator on a fixed grid; reusable across energies."""

    def __init__(self, spec: PotentialSpec, r_max: float, steps: int):
        self.spec = spec
        self.h = r_max / steps
        self.r = np.linspace(0.0, r_max, steps + 1)
        l = spec.l
        # skip the first points where h^2 l(l+1)/(12 r^2) is not small
        self.i0 = max(1, math.ceil(math.sqrt(l * (l + 1) / 1.2)))
        rr = self.r[self.i0:]
        self.w = 2 * potential_array(spec, rr) + l * (l + 1) / (rr * rr)

    def integrate(self, E: float):
        """Return (psi on r[i0:], node count)."""
        h2 = self.h * self.h / 12.0
        f = h2 * (self.w - 2 * E)
        one_f = 1.0 - f
        c = (12.0 / one_f - 10.0).tolist()
        start = _series_start(self.spec, E, self.r[self.i0:self.i0 + 2])
        u = [0.0] * len(c)
        u[0] = one_f[0] * start[0]
        u[1] = one_f[1] * start[1]
        big = 1e150
        a, b = u[0], u[1]
        for i in range(1, len(c) - 1):
            a, b = b, c[i] * b - a
            u[i + 1] = b
            if abs(b) > big:
                # rescale everything so far; sign information is kept
                for j in range(i + 2):
                    u[j] /= big
                a /= big
                b /= big
        psi = np.asarray(u) / one_f
        s = np.sign(psi)
        s = s[s != 0]
        nodes = int(np.count_nonzero(s[1:] != s[:-1]))
        return psi, nodes

    def end_value(self, E: float) -> float:
        psi, _ = self.integrate(E)
        m = np.max(np.abs(psi))
        return float(psi[-1] / m) if m > 0 else 0.0

    def nodes(self, E: float) -> int:
        return self.integrate(E)[1]


def _bracket_by_nodes(sh: _Shooter, n: int, lo: float, hi: float):
    n_lo, n_hi = sh.nodes(lo), sh.nodes(hi)
    if n_lo > n:
        raise OracleError(f"lower end already has {n_lo} nodes (> {n})")
    if n_hi <= n:
        return None
    for _ in range(200):
        if n_lo == n and n_hi == n + 1:
            return lo, hi
        mid = 0.5 * (lo + hi)
        k = sh.nodes(mid)
        if k <= n:
            lo, n_lo = mid, k
        else:
            hi, n_hi = mid, k
    raise OracleError("node-count bisection did not isolate the level")


def _solve_on_grid(sh: _Shooter, n: int, lo: float, hi: float):
    br = _bracket_by_nodes(sh, n, lo, hi)
    if br is None:
        return None
    a, b = br
    fa, fb = sh.end_value(a), sh.end_value(b)
    if fa == 0:
        return a
    if fb == 0:
        return b
    if fa * fb > 0:
        raise OracleError("end value does not change sign across the node bracket")
    return brentq(sh.end_value, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)


def _decay_length(sh: _Shooter, E: float) -> float:
    """kappa (r_max - r_turn): how many decay lengths fit past the outer turning point."""
    if E >= 0:
        return 0.0
    allowed = np.nonzero(sh.w - 2 * E < 0)[0]
    r_turn = sh.r[sh.i0 + allowed[-1]] if len(allowed) else 0.0
    return math.sqrt(-2 * E) * (sh.r[-1] - r_turn)


def shoot_eigenvalue(spec: PotentialSpec, node_target: int | None = None, grid: GridSolve | None = None,
                     max_doublings: int = 8) -> float:
    """Energy of the level with ``node_target`` radial nodes."""
    grid = grid or GridSolve()
    n = grid.node_target if node_target is None else node_target
    r_max = grid.r_max or default_r_max(spec, n)
    explicit = grid.E_bracket is not None
    if explicit:
        lo, hi = map(float, grid.E_bracket)
        if not lo < hi:
            raise ValueError("E_bracket must satisfy lo < hi")
    else:
        lo = float(spectral_lower_bound(spec, digits=20)) - 1e-9
        hi = -1e-14

    for _ in range(max_doublings + 1):
        coarse = _Shooter(spec, r_max, grid.steps)
        if explicit:
            n_lo, n_hi = coarse.nodes(lo), coarse.nodes(hi)
            count = n_hi - n_lo
            if count != 1:
                raise OracleError(
                    f"bracket holds {count} eigenvalues (node counts {n_lo} at lo, {n_hi} at hi)")
            n = n_lo
        E1 = _solve_on_grid(coarse, n, lo, hi)
        if E1 is None:
            r_max *= 2
            continue
        fine = _Shooter(spec, r_max, 2 * grid.steps)
        # the fine-grid level sits very close to the coarse one
        pad = max(1e-6, 1e-4 * abs(E1))
        E2 = _solve_on_grid(fine, n, max(lo, E1 - pad), min(hi, E1 + pad))
        if E2 is None:
            E2 = _solve_on_grid(fine, n, lo, hi)
        if _decay_length(fine, E2) < DECAY_LENGTHS:
            r_max *= 2
            continue
        return E2 + (E2 - E1) / 15.0
    raise OracleError(f"level with {n} nodes not captured up to r_max = {r_max:g}")


def grid_energies(spec: PotentialSpec, node_target: int, r_max: float, steps: int) -> float:
    """Plain Numerov energy on one grid (no extrapolation); for convergence studies."""
    sh = _Shooter(spec, r_max, steps)
    lo = float(spectral_lower_bound(spec, digits=20)) - 1e-9
    E = _solve_on_grid(sh, node_target, lo, -1e-14)
    if E is None:
        raise OracleError("level not inside the window on this grid")
    return E


__all__ = ["GridSolve", "OracleError", "default_r_max", "grid_energies", "potential_array", "shoot_eigenvalue"]
