"""Command-line interface: ``softcore <subcommand> ...``.

Exit codes: 0 success, 1 usage or validation error, 2 no convergence,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import mpmath

from . import aim, heun, oracle
from .exactnum import DEFAULT_DIGITS, Polynomial, poly_real_roots, rational_roots
from .potentials import INF, PotentialSpec, scaling_transform

EXIT_OK, EXIT_USAGE, EXIT_NOCONV, EXIT_INTERNAL = 0, 1, 2, 3
DIGITS_ENV = "SOFTCORE_DIGITS"

# (beta, l) -> r0 as used for the published q = 1 and q = 2 tables (Z = 1)
TABLE1_GRID = {
    200: (210, 210, 210, 210),
    100: (120, 120, 140, 150),
    50: (75, 100, 100, 110),
    35: (65, 65, 75, 90),
    20: (65, 65, 65, 75),
    10: (45, 55, 65, 75),
}
TABLE4_GRID = {
    200: (3, 3, 2, 2),
    100: (3, 3, 3, 3),
    50: (3, 3, 3, 3),
    35: (3, 3, 3, 3),
    20: (3, 3, 3, 3),
    10: (3, 3, 4, 5),
}
# rows whose levels crowd together; solved at Z = 4 and mapped back
SCALED_ROWS = {(2, 200, 2): 4, (2, 200, 3): 4}
TABLE3_MAX_N = 7

CSV_COLUMNS = ["beta", "l", "energy", "iterations", "r0", "method", "scaled"]


class UsageError(Exception):
    pass


class NoConvergence(Exception):
    pass


# --------------------------------------------------------------------------
# formatting


def _fixed_parts(x, decimals):
    q = int(mpmath.nint(abs(mpmath.mpf(x)) * mpmath.mpf(10) ** decimals))
    whole, frac = divmod(q, 10 ** decimals)
    sign = "-" if x < 0 and q else ""
    return sign, whole, str(frac).rjust(decimals, "0")


def group_decimals(x, decimals: int = 10) -> str:
    """-0.0036531689 -> '-0.003 653 168 9'."""
    sign, whole, digits = _fixed_parts(x, decimals)
    return f"{sign}{whole}." + " ".join(digits[i:i + 3] for i in range(0, decimals, 3))


def fixed(x, decimals: int = 10) -> str:
    sign, whole, digits = _fixed_parts(x, decimals)
    return f"{sign}{whole}.{digits}"


def full(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return mpmath.nstr(mpmath.mpf(x), mpmath.mp.dps, min_fixed=-math.inf, max_fixed=math.inf)


def _nu_poly_str(p: Polynomial) -> str:
    """Compact ν polynomial, highest power first: 6566*v^4+96071*v^3+..."""
    out = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c == 0:
            continue
        c = Fraction(c)
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = "v" if i == 1 else f"v^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        out.append(("-" if c < 0 else "+") + body)
    s = "".join(out)
    return s[1:] if s.startswith("+") else s


def factor_nu(p: Polynomial):
    """Split an integer polynomial in ν into (constant, [(factor, multiplicity)]).

    Factors are primitive with positive leading coefficient: rational linear
    factors are pulled out first and whatever is left stays unfactored.
    """
    p = Polynomial([Fraction(c) for c in p.coeffs], "nu")
    if p.degree <= 0:
        return (p[0] if p.degree == 0 else Fraction(0)), []
    prim = p.primitive()
    const = p.lc / prim.lc
    factors = {}
    rest = prim
    for root in sorted(rational_roots(prim), reverse=True):
        lin = Polynomial([-root.numerator, root.denominator], "nu")
        while rest.degree > 0:
            qt, r = divmod(rest, lin)
            if not r.is_zero():
                break
            factors[lin] = factors.get(lin, 0) + 1
            rest = qt
    if rest.degree > 0:
        factors[rest.primitive()] = factors.get(rest.primitive(), 0) + 1
        const *= rest.lc / rest.primitive().lc
    else:
        const *= rest[0]
    return const, list(factors.items())


def _factor_key(item):
    f, _ = item
    # nonlinear first, then linear factors by leading coefficient and constant
    return (-f.degree, -f.lc, -f[0]) if f.degree == 1 else (-f.degree, 0, 0)


def render_condition(cond: dict, N: int) -> str:
    """{beta power: poly in ν} -> 'Z^2*b^2 - 2*(v+1)^3' style string.

    The conditions depend on Z and beta only through Z*beta, so each b^j
    carries Z^j.
    """
    anchor = Polynomial([N, 1], "nu")
    terms = []
    for j in sorted(cond, reverse=True):
        const, factors = factor_nu(cond[j])
        if const == 0:
            continue
        anchored = [(f, m) for f, m in factors if f == anchor]
        others = sorted([(f, m) for f, m in factors if f != anchor], key=_factor_key)
        parts = []
        if abs(const) != 1 or (not factors and j == 0):
            parts.append(str(abs(const)))
        if j:
            parts.append("Z" if j == 1 else f"Z^{j}")
        for f, m in others + anchored:
            s = f"({_nu_poly_str(f)})"
            parts.append(s if m == 1 else f"{s}^{m}")
        if j:
            parts.append("b" if j == 1 else f"b^{j}")
        body = "*".join(parts) if parts else "1"
        terms.append(("-" if const < 0 else "+", body))
    s = ""
    for i, (sg, body) in enumerate(terms):
        if i == 0:
            s = ("-" if sg == "-" else "") + body
        else:
            s += f" {sg} {body}"
    return s


def render_beta_poly(p: Polynomial) -> str:
    out = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(Fraction(c))
        mono = "" if i == 0 else ("b" if i == 1 else f"b^{i}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        out.append(("-" if c < 0 else "+", body))
    s = ""
    for i, (sg, body) in enumerate(out):
        s = (("-" if sg == "-" else "") + body) if i == 0 else s + f" {sg} {body}"
    return s or "0"


# --------------------------------------------------------------------------
# table generation


def _table_row(args):
    q, beta, l, r0, digits = args
    toZ = SCALED_ROWS.get((q, beta, l))
    spec = PotentialSpec(1, beta, q, l)
    if toZ is None:
        res = aim.aim_solve(spec, r0, digits=digits, point="table")
        E, scaled, method = res.energy, False, "aim"
    else:
        _, spec_scaled = scaling_transform(Fraction(1), spec, toZ)
        res = aim.aim_solve(spec_scaled, r0, digits=digits, point="table")
        E = None if res.energy is None else res.energy / (toZ * toZ)
        scaled, method = True, f"aim+scaling(Z={toZ},beta={spec_scaled.beta})"
    return {
        "beta": beta,
        "l": l,
        "energy": E,
        "iterations": res.iterations_used,
        "r0": r0,
        "method": method,
        "scaled": scaled,
        "converged": res.converged,
        "intermediate": None if toZ is None else res.energy,
        "message": res.message,
    }


def table_rows(which: int, digits: int = DEFAULT_DIGITS, jobs: int = 1) -> list:
    """Rows of Table 1 (q = 1) or Table 4 (q = 2) in canonical order."""
    q, grid = (1, TABLE1_GRID) if which == 1 else (2, TABLE4_GRID)
    work = [(q, beta, l, r0s[l], digits) for beta, r0s in grid.items() for l in range(4)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_table_row, work))
    return [_table_row(w) for w in work]


def table3_rows(l=None, Nmax: int = TABLE3_MAX_N) -> list:
    rows = []
    for N in range(1, Nmax + 1):
        if l is None:
            cond = aim.aim_condition_symbolic(2, N)
            k = f"Z/(v+{N})"
            text = render_condition(cond, N)
        else:
            sol = aim.aim_exact_scan(2, 1, l, N)
            k = str(sol.k)
            text = render_beta_poly(sol.beta_condition)
        rows.append({"N": N, "k": k, "condition": text})
    return rows


# --------------------------------------------------------------------------
# output


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, mpmath.mpf):
        return full(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Polynomial):
        return str(x)
    return x


def emit(obj, fmt: str, out, columns=None):
    if fmt == "json":
        json.dump(_jsonable(obj), out, ensure_ascii=False)
        out.write("\n")
        return
    rows = obj if isinstance(obj, list) else [obj]
    if fmt == "csv":
        cols = columns or list(rows[0].keys())
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_csv_cell(c, r.get(c)) for c in cols])
        return
    for r in rows:
        out.write("  ".join(f"{k}={_text_cell(k, v)}" for k, v in r.items()) + "\n")


def _csv_cell(col, v):
    if col == "energy" and v is not None:
        return fixed(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    return _jsonable(v) if v is not None else ""


def _text_cell(col, v):
    if col in ("energy", "intermediate") and v is not None:
        return group_decimals(v)
    if isinstance(v, (mpmath.mpf, Fraction, Polynomial)):
        return _jsonable(v)
    if isinstance(v, list):
        return "[" + ", ".join(str(_jsonable(x)) for x in v) + "]"
    return v


# --------------------------------------------------------------------------
# subcommands


def _spec_from(args, aim_only=True) -> PotentialSpec:
    q = args.q
    if aim_only and q not in (1, 2):
        raise UsageError("q must be 1 or 2 for AIM; use `oracle`")
    try:
        return PotentialSpec(args.Z, args.beta, q, args.l)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_solve(args, out):
    spec = _spec_from(args)
    with mpmath.workdps(args.digits):
        res = aim.aim_solve(spec, args.r0, digits=args.digits, tol=mpmath.mpf(args.tol),
                            n_max=args.n_max, point=args.point, nodes=args.nodes)
        rec = {
            "energy": res.energy,
            "iterations": res.iterations_used,
            "r0": res.r0,
            "converged": res.converged,
            "history": res.history,
            "message": res.message,
        }
        emit(rec, args.format, out)
    if not res.converged:
        raise NoConvergence(res.message or "did not converge")


def cmd_table(args, out):
    if args.which == 3:
        rows = table3_rows(args.l)
        emit(rows, args.format, out, columns=["N", "k", "condition"])
        return
    with mpmath.workdps(args.digits):
        rows = table_rows(args.which, args.digits, args.jobs)
        if args.format == "csv":
            emit(rows, "csv", out, columns=CSV_COLUMNS)
        else:
            emit(rows, args.format, out)
    if not all(r["converged"] for r in rows):
        raise NoConvergence("some rows did not converge")


def cmd_exact(args, out):
    if args.q not in (1, 2):
        raise UsageError("q must be 1 or 2 for exact solutions")
    if args.N < 1:
        raise UsageError("N must be at least 1")
    with mpmath.workdps(args.digits):
        _exact(args, out)


def _exact(args, out):
    Z = Fraction(args.Z_exact)
    sol = aim.aim_exact_scan(args.q, Z, args.l, args.N)
    roots = [r.value for r in poly_real_roots(sol.beta_condition, args.digits) if r.value > 0]
    rec = {
        "q": args.q,
        "Z": Z,
        "l": args.l,
        "N": args.N,
        "k": sol.k,
        "beta_condition": render_beta_poly(sol.beta_condition),
        "beta_roots": roots,
        "energy": sol.energy,
        "energy_decimal": mpmath.mpf(sol.energy.numerator) / sol.energy.denominator,
    }
    if args.q == 2 and args.N > TABLE3_MAX_N:
        rec["note"] = "beyond paper's table"
    if roots:
        b = max(roots)
        spec = PotentialSpec(Z, b, args.q, args.l)
        ef = heun.eigenfunction(spec, args.N, digits=args.digits)
        rec["beta"] = b
        rec["f_chi"] = [c for c in ef.f.coeffs]
        if args.q == 1:
            f_r = ef.f.compose(Polynomial([b, 1], "r"))
            rec["f_r"] = [c / f_r[0] for c in f_r.coeffs]
        rec["psi_sample"] = {str(r): ef(r) for r in (1, 2, 5, 10)}
    emit(rec, args.format, out)


def cmd_conditions(args, out):
    if args.q not in (1, 2):
        raise UsageError("q must be 1 or 2")
    if args.N < 1:
        raise UsageError("N must be at least 1")
    if args.l is None:
        if args.q == 1:
            cond = aim.conditions_symbolic_nu(lambda nu: heun.confluent_condition_beta(1, nu, args.N),
                                              aim._nu_degree_bound(1, args.N))
        else:
            cond = aim.aim_condition_symbolic(2, args.N)
        text = render_condition(cond, args.N)
        k = f"Z/(v+{args.N})"
    else:
        sol = aim.aim_exact_scan(args.q, Fraction(args.Z_exact), args.l, args.N)
        text, k = render_beta_poly(sol.beta_condition), str(sol.k)
    emit({"q": args.q, "N": args.N, "k": k, "condition": text}, args.format, out)


def cmd_heun_eval(args, out):
    vals = [Fraction(x) for x in (args.alpha, args.beta, args.gamma, args.delta, args.eta)]
    params = heun.ConfluentHeunParams(*vals)
    t = Fraction(args.t)
    try:
        v = heun.confluent_series(params, args.terms)
    except ValueError as e:
        raise UsageError(str(e)) from None
    with mpmath.workdps(args.digits):
        value = sum(mpmath.mpf(c.numerator) / c.denominator * mpmath.mpf(t.numerator) ** i
                    / mpmath.mpf(t.denominator) ** i for i, c in enumerate(v))
        rec = {
            "mu": params.mu,
            "nu_h": params.nu_h,
            "degree": heun.confluent_poly_degree(params) if params.h_alpha != 0 else None,
            "t": t,
            "terms": args.terms,
            "value": value,
            "last_coefficient": v[-1],
        }
        emit(rec, args.format, out)


def cmd_oracle(args, out):
    spec = _spec_from(args, aim_only=False)
    grid = oracle.GridSolve(r_max=args.r_max, steps=args.steps, node_target=args.nodes)
    try:
        E = oracle.shoot_eigenvalue(spec, args.nodes, grid)
    except oracle.OracleError as e:
        raise NoConvergence(str(e)) from None
    emit({"energy": repr(E), "nodes": args.nodes, "method": "numerov"}, args.format, out)


# --------------------------------------------------------------------------
# parser


def _q_type(s: str):
    if s.lower() in ("inf", "infinity"):
        return INF
    v = float(s)
    return int(v) if v.is_integer() else v


def _default_digits() -> int:
    raw = os.environ.get(DIGITS_ENV)
    if raw is None:
        return DEFAULT_DIGITS
    try:
        d = int(raw)
    except ValueError:
        raise UsageError(f"{DIGITS_ENV} must be an integer, got {raw!r}") from None
    if d < 20:
        raise UsageError(f"{DIGITS_ENV} must be at least 20")
    return d


def build_parser(digits: int) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="softcore", description="Soft-core Coulomb spectra by AIM and Heun methods.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, fmt="json"):
        sp.add_argument("--format", choices=("json", "csv", "text"), default=fmt)
        sp.add_argument("--digits", type=int, default=digits)

    def physics(sp, q_type=int):
        sp.add_argument("--q", type=q_type, default=1)
        sp.add_argument("--Z", type=Fraction, default=Fraction(1))
        sp.add_argument("--beta", type=Fraction, required=True)
        sp.add_argument("--l", type=int, default=0)

    s = sub.add_parser("solve", help="AIM eigenvalue")
    physics(s, _q_type)
    s.add_argument("--r0", type=Fraction, required=True)
    s.add_argument("--point", choices=("table", "r", "chi", "z"), default="table",
                   help="how r0 is read (default: as in the published tables)")
    s.add_argument("--tol", type=float, default=1e-12)
    s.add_argument("--n-max", dest="n_max", type=int, default=80)
    s.add_argument("--nodes", type=int, default=0)
    common(s)

    t = sub.add_parser("table", help="regenerate a published table")
    t.add_argument("--which", type=int, choices=(1, 3, 4), required=True)
    t.add_argument("--l", type=int, default=None, help="Table 3 at fixed l instead of symbolic nu")
    t.add_argument("--jobs", type=int, default=1)
    common(t, "csv")

    e = sub.add_parser("exact", help="polynomial (exact) solution of degree N")
    e.add_argument("--q", type=_q_type, default=1)
    e.add_argument("--Z", dest="Z_exact", type=Fraction, default=Fraction(1))
    e.add_argument("--l", type=int, default=0)
    e.add_argument("--N", type=int, required=True)
    common(e)

    c = sub.add_parser("conditions", help="beta conditions with symbolic nu (or fixed l)")
    c.add_argument("--q", type=_q_type, default=2)
    c.add_argument("--N", type=int, required=True)
    c.add_argument("--l", type=int, default=None)
    c.add_argument("--Z", dest="Z_exact", type=Fraction, default=Fraction(1))
    common(c)

    h = sub.add_parser("heun-eval", help="confluent Heun series at a point")
    for name in ("alpha", "beta", "gamma", "delta", "eta"):
        h.add_argument(f"--{name}", required=True)
    h.add_argument("--t", required=True)
    h.add_argument("--terms", type=int, default=40)
    common(h)

    o = sub.add_parser("oracle", help="Numerov shooting eigenvalue (any q >= 1 or inf)")
    physics(o, _q_type)
    o.add_argument("--nodes", type=int, default=0)
    o.add_argument("--steps", type=int, default=20000)
    o.add_argument("--r-max", dest="r_max", type=float, default=None)
    common(o)
    return p


COMMANDS = {
    "solve": cmd_solve,
    "table": cmd_table,
    "exact": cmd_exact,
    "conditions": cmd_conditions,
    "heun-eval": cmd_heun_eval,
    "oracle": cmd_oracle,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        parser = build_parser(_default_digits())
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if getattr(args, "digits", DEFAULT_DIGITS) < 20:
        print("error: --digits must be at least 20", file=sys.stderr)
        return EXIT_USAGE
    try:
        COMMANDS[args.cmd](args, out)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except NoConvergence as e:
        print(f"not converged: {e}", file=sys.stderr)
        return EXIT_NOCONV
    except aim.AimError as e:
        print(f"not converged: {e}", file=sys.stderr)
        return EXIT_NOCONV
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:  # invariant violations
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
