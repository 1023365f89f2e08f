"""Scalar, polynomial and rational-function arithmetic.

Two scalar modes share one interface:

* exact: :class:`fractions.Fraction` (ints are promoted on entry),
* numeric: :class:`mpmath.mpf` at a chosen number of decimal digits.

:class:`Polynomial` is dense, low-to-high, and generic over its coefficient
type, so a polynomial whose coefficients are themselves polynomials (in a
second variable) is a valid object.  Division-based operations (gcd, divmod,
normalisation) require field coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

import mpmath

DEFAULT_DIGITS = 50
GUARD_DIGITS = 5


def is_exact(c) -> bool:
    return isinstance(c, (int, Fraction))


def exact(x) -> Fraction:
    """Coerce int, Fraction or decimal string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


def prec_real(x, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """Build an mpf at ``digits`` decimal digits (Fractions are converted exactly)."""
    with mpmath.workdps(digits + GUARD_DIGITS):
        if isinstance(x, Fraction):
            return mpmath.mpf(x.numerator) / x.denominator
        return mpmath.mpf(x)


def close(a, b, digits: int = DEFAULT_DIGITS) -> bool:
    """Compare two reals at tolerance 10^(-digits+guard)."""
    tol = mpmath.mpf(10) ** (-digits + GUARD_DIGITS)
    scale = max(1, abs(a), abs(b))
    return abs(a - b) <= tol * scale


class Polynomial:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``var**i``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # construction helpers
    @classmethod
    def constant(cls, c, var: str = "x") -> Polynomial:
        return cls([c], var)

    @classmethod
    def monomial(cls, c, n: int, var: str = "x") -> Polynomial:
        return cls([0] * n + [c], var)

    @classmethod
    def from_roots(cls, roots: Sequence, var: str = "x") -> Polynomial:
        p = cls([1], var)
        for r in roots:
            p = p * cls([-r, 1], var)
        return p

    @property
    def degree(self) -> int | float:
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial) and other.var == self.var:
            return other
        return Polynomial([other], self.var)

    def __add__(self, other) -> Polynomial:
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> Polynomial:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Polynomial:
        return self._lift(other) - self

    def __mul__(self, other) -> Polynomial:
        if not (isinstance(other, Polynomial) and other.var == self.var):
            return Polynomial([c * other for c in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial([], self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Polynomial(out, self.var)

    def __rmul__(self, other) -> Polynomial:
        return Polynomial([other * c for c in self.coeffs], self.var)

    def __pow__(self, n: int) -> Polynomial:
        out = Polynomial([1], self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return self.coeffs == Polynomial([other], self.var).coeffs

    def __hash__(self):
        return hash((self.coeffs, self.var))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, c) -> Polynomial:
        return Polynomial([c * a for a in self.coeffs], self.var)

    def diff(self) -> Polynomial:
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def compose(self, other: Polynomial) -> Polynomial:
        acc = Polynomial([], other.var)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def map_coeffs(self, fn) -> Polynomial:
        return Polynomial([fn(c) for c in self.coeffs], self.var)

    def __divmod__(self, other: Polynomial):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        inv = 1 / other.lc if is_exact(other.lc) else mpmath.mpf(1) / other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            quot[i - dq] = c
            if _is_zero(c):
                continue
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - c * b
        return Polynomial(quot, self.var), Polynomial(rem[:dq], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        lc = self.lc
        if is_exact(lc):
            return Polynomial([c / lc for c in self.coeffs], self.var)
        return Polynomial([c / lc for c in self.coeffs], self.var)

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive."""
        if self.is_zero():
            return Fraction(0)
        den = 1
        for c in self.coeffs:
            den = lcm(den, Fraction(c).denominator)
        num = 0
        for c in self.coeffs:
            num = gcd(num, int(Fraction(c) * den))
        return Fraction(num, den)

    def primitive(self) -> Polynomial:
        """Integer-coefficient primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return Polynomial([x / c for x in self.coeffs], self.var)

    def to_mpf(self, digits: int = DEFAULT_DIGITS) -> Polynomial:
        return self.map_coeffs(lambda c: prec_real(c, digits))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return render_poly(self)


def _is_zero(c) -> bool:
    if isinstance(c, Polynomial):
        return c.is_zero()
    return c == 0


def render_poly(p: Polynomial, var: str | None = None) -> str:
    var = var or p.var
    if p.is_zero():
        return "0"
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if _is_zero(c):
            continue
        if isinstance(c, Polynomial):
            body = f"({c})"
            sign = "+"
        else:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = "" if (a == 1 and i > 0) else str(a)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if body and mono:
            body = f"{body}*{mono}"
        else:
            body = body or mono
        terms.append((sign, body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over a field (Euclid); gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _exact_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    # primitive remainder sequence keeps Fraction sizes in check
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic()


def _all_exact(p: Polynomial) -> bool:
    return all(is_exact(c) for c in p.coeffs)


class RationalFunction:
    """Reduced quotient num/den of polynomials in one variable, den monic.

    With exact coefficients the pair is gcd-reduced; with mpf coefficients
    only the monic normalisation is applied.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if not isinstance(num, Polynomial):
            var = den.var if isinstance(den, Polynomial) else "x"
            num = Polynomial([num], var)
        if den is None:
            den = Polynomial([1], num.var)
        elif not isinstance(den, Polynomial):
            den = Polynomial([den], num.var)
        if _reduced:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize_pair(num, den)

    @property
    def var(self) -> str:
        return self.num.var

    @classmethod
    def from_poly(cls, p: Polynomial) -> RationalFunction:
        return cls(p, Polynomial([1], p.var), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _lift(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction.from_poly(other)
        return RationalFunction(Polynomial([other], self.var), Polynomial([1], self.var), _reduced=True)

    def __add__(self, other) -> RationalFunction:
        o = self._lift(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> RationalFunction:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> RationalFunction:
        return self._lift(other) - self

    def __mul__(self, other) -> RationalFunction:
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("rational function division by zero")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return self._lift(other) / self

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {self.var}={x}")
        return self.num(x) / d

    def diff(self) -> RationalFunction:
        return rf_diff(self)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == Polynomial([1], self.var):
            return str(self.num)
        return f"({self.num})/({self.den})"


def _normalize_pair(num: Polynomial, den: Polynomial):
    if den.is_zero():
        raise ValueError("undefined rational function")
    if num.is_zero():
        return Polynomial([], num.var), Polynomial([1], num.var)
    if _all_exact(num) and _all_exact(den) and den.degree > 0:
        g = _exact_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
    lc = den.lc
    if lc != 1:
        num = Polynomial([c / lc for c in num.coeffs], num.var)
        den = Polynomial([c / lc for c in den.coeffs], den.var)
    return num, den


def rf_normalize(f: RationalFunction) -> RationalFunction:
    """Reduce by the gcd and make the denominator monic."""
    num, den = _normalize_pair(f.num, f.den)
    return RationalFunction(num, den, _reduced=True)


def rf_diff(f: RationalFunction) -> RationalFunction:
    """Exact derivative by the quotient rule."""
    if f.den.is_constant():
        return RationalFunction(f.num.diff(), f.den, _reduced=True)
    return RationalFunction(f.num.diff() * f.den - f.num * f.den.diff(), f.den * f.den)


# --------------------------------------------------------------------------
# real roots

class RealRoot(NamedTuple):
    value: mpmath.mpf
    multiplicity: int


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm over Q: p = c * prod(a_i ** i)."""
    out = []
    dp = p.diff()
    a = _exact_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.diff()
    i = 1
    while b.degree > 0:
        a = _exact_gcd(b, d)
        b = b // a
        c = d // a
        d = c - b.diff()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p.primitive(), p.diff().primitive()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        # primitive() may flip sign; keep the true negated remainder's sign
        c = r.content()
        seq.append(Polynomial([-x / c for x in r.coeffs], p.var))
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(seq: Sequence[Polynomial], x: Fraction) -> int:
    signs = [s for s in (_sign(q(x)) for q in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _cauchy_bound(p: Polynomial) -> Fraction:
    lc = abs(p.lc)
    return 1 + max(abs(c) / lc for c in p.coeffs[:-1]) if p.degree > 0 else Fraction(1)


def _isolate(p: Polynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b] each holding exactly one root of squarefree p."""
    seq = sturm_sequence(p)
    bound = _cauchy_bound(p)
    out = []
    stack = [(-bound, bound, _variations(seq, -bound), _variations(seq, bound))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        vm = _variations(seq, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    return sorted(out)


def poly_real_roots(p: Polynomial, digits: int = DEFAULT_DIGITS) -> list[RealRoot]:
    """All real roots of an exact polynomial, sorted, each to ``digits`` decimals.

    Roots are isolated with Sturm sequences on the squarefree parts and refined
    by exact bisection; rational roots with small denominators are found exactly.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no finite root set")
    return [RealRoot(prec_real(r, digits), m) for r, m in _real_roots_exact(p.map_coeffs(exact), digits)]


def _real_roots_exact(p: Polynomial, digits: int) -> list[tuple[Fraction, int]]:
    roots = []
    for factor, mult in squarefree_decomposition(p):
        lc = abs(int(factor.primitive().lc))
        # narrow enough that at most one fraction with denominator <= lc fits
        width = min(Fraction(1, 10 ** (digits + 2)), Fraction(1, 4 * lc * lc))
        for a, b in _isolate(factor):
            fb = factor(b)
            if fb == 0:
                roots.append((b, mult))
                continue
            while b - a > width:
                m = (a + b) / 2
                fm = factor(m)
                if fm == 0:
                    a = b = m
                    break
                if _sign(fm) == _sign(fb):
                    b, fb = m, fm
                else:
                    a = m
            roots.append((_snap_rational(factor, a, b, lc), mult))
    roots.sort(key=lambda t: t[0])
    return roots


def _snap_rational(p: Polynomial, a: Fraction, b: Fraction, max_den: int) -> Fraction:
    """The rational root in [a, b] if there is one, else the midpoint.

    A rational root of a primitive polynomial has denominator dividing its
    leading coefficient, and [a, b] is too narrow to hold two such fractions.
    """
    if a == b:
        return a
    mid = (a + b) / 2
    cand = mid.limit_denominator(max_den)
    if a <= cand <= b and p(cand) == 0:
        return cand
    return mid


def rational_roots(p: Polynomial) -> list[Fraction]:
    """Rational roots of an exact polynomial (exact roots found during isolation)."""
    if p.is_zero():
        raise ValueError("zero polynomial has no finite root set")
    p = p.map_coeffs(exact)
    return [r for r, _ in _real_roots_exact(p, 10) if p(r) == 0]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def interpolate(xs: Sequence, ys: Sequence, var: str = "x") -> Polynomial:
    """Newton-form interpolating polynomial through (xs, ys)."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Polynomial([coef[-1]], var)
    for i in range(n - 2, -1, -1):
        p = p * Polynomial([-xs[i], 1], var) + coef[i]
    return p
