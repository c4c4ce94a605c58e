"""Characteristic polynomials, eigenvalues and eigenspaces for orders 1 to 3.

Root finding is two-tier.  Rational roots are found exactly with the rational
root theorem and deflated out.  Whatever factor remains (degree <= 3, no
rational roots) goes to closed-form formulas whose branch decisions are made
on exact discriminants, so only the final sqrt/cos/cbrt steps are inexact.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import NamedTuple, Union

from .errors import NotAnEigenvalueError, ShapeError
from .geometry import det
from .matrix import Matrix
from .scalar import as_scalar, format_scalar


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with coefficients stored low-to-high: c0 + c1*x + ..."""

    coeffs: tuple

    def __post_init__(self):
        c = [as_scalar(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots, leading=1):
        p = cls((leading,))
        for r in roots:
            p = p * cls((-as_scalar(r), 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def scale(self, k):
        return Polynomial(tuple(k * c for c in self.coeffs))

    def divmod_linear(self, r):
        """Synthetic division by (x - r): returns (quotient, remainder)."""
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        return Polynomial(tuple(reversed(out)) or (0,)), rem

    def format(self, var="x"):
        """Human-readable form such as ``-x^3 + 4x^2 - 41/9x + 14/9``."""
        out = ""
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if c == 0 and self.degree > 0:
                continue
            mag = format_scalar(abs(c))
            base = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            if base and mag == "1":
                mag = ""
            elif base and "/" in mag:
                mag = f"({mag})"
            sign = "-" if c < 0 else "+"
            out += (sign if not out and sign == "-" else "" if not out else f" {sign} ") + mag + base
        return out or "0"

    def __str__(self):
        return self.format()


# Characteristic polynomials use the variable name lambda; the type is the same.
CharPoly = Polynomial


def char_poly(a: Matrix) -> Polynomial:
    """p(lambda) = det(A - lambda*I), leading coefficient (-1)**n."""
    if not a.is_square or not 1 <= a.nrows <= 3:
        raise ShapeError(f"characteristic polynomial needs order 1-3, got {a.shape}")
    n = a.nrows
    tr = a.trace()
    if n == 1:
        return Polynomial((a[0, 0], -1))
    d = det(a)
    if n == 2:
        return Polynomial((d, -tr, 1))
    m2 = sum(
        (a[i, i] * a[j, j] - a[i, j] * a[j, i] for i, j in ((0, 1), (0, 2), (1, 2))),
        Fraction(0),
    )
    return Polynomial((d, -m2, tr, -1))


class RationalRoots(NamedTuple):
    roots: tuple  # ((root, multiplicity), ...) ascending
    remainder: Polynomial


def _small_factor(n):
    """Prime factorization as {p: e}."""
    if n >= 10**10:
        from sympy import factorint  # only for large coefficients

        return factorint(n)
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list:
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    divs = [1]
    for p, e in _small_factor(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _integer_coeffs(p: Polynomial):
    den = reduce(math.lcm, (Fraction(c).denominator for c in p.coeffs), 1)
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = reduce(math.gcd, ints, 0) or 1
    return [c // g for c in ints]


def rational_roots(p: Polynomial) -> RationalRoots:
    """All rational roots of p with multiplicity, plus the cofactor left over.

    ``remainder * prod((x - r)**m)`` equals p exactly, and the remainder has
    no rational roots.
    """
    if any(isinstance(c, float) for c in p.coeffs):
        raise TypeError("rational_roots needs exact coefficients")
    if p.degree < 1:
        return RationalRoots((), p)
    found = {}
    work = Polynomial(tuple(_integer_coeffs(p)))
    while work.degree >= 1 and work.coeffs[0] == 0:
        found[Fraction(0)] = found.get(Fraction(0), 0) + 1
        work = Polynomial(work.coeffs[1:])
    if work.degree >= 1:
        a0, an = int(work.coeffs[0]), int(work.leading)
        bound = 1 + max(abs(Fraction(c, an)) for c in work.coeffs[:-1])
        f1, fm1 = work(1), work(-1)
        cands = set()
        for num, den in product(divisors(a0), divisors(an)):
            if math.gcd(num, den) != 1 or num > bound * den:
                continue
            for s in (num, -num):
                # (den - s) | f(1) and (den + s) | f(-1) for any root s/den
                if den != s and f1 % (den - s):
                    continue
                if den != -s and fm1 % (den + s):
                    continue
                cands.add(Fraction(s, den))
        for r in sorted(cands):
            while work.degree >= 1:
                q, rem = work.divmod_linear(r)
                if rem != 0:
                    break
                found[r] = found.get(r, 0) + 1
                work = q
    remainder = p
    for r, m in found.items():
        for _ in range(m):
            remainder, rem = remainder.divmod_linear(r)
            assert rem == 0
    return RationalRoots(tuple(sorted(found.items())), remainder)


class NumericRoot(NamedTuple):
    value: Union[float, complex]
    is_real: bool


def _polish(coeffs, x, steps=3):
    """A few Newton steps, keeping only those that shrink the residual."""
    f = lambda t: reduce(lambda acc, c: acc * t + c, reversed(coeffs), 0.0)
    df_coeffs = [i * c for i, c in enumerate(coeffs)][1:]
    df = lambda t: reduce(lambda acc, c: acc * t + c, reversed(df_coeffs), 0.0)
    for _ in range(steps):
        fx, dfx = f(x), df(x)
        if fx == 0 or dfx == 0:
            break
        nxt = x - fx / dfx
        if abs(f(nxt)) >= abs(fx):
            break
        x = nxt
    return x


def numeric_roots(p: Polynomial) -> list:
    """Roots of a polynomial of degree <= 3 as floats (or complex pairs).

    Real roots come first in ascending order, each tagged ``is_real``.
    """
    if p.degree > 3:
        raise ShapeError("closed-form roots are limited to degree 3")
    if p.degree < 1:
        return []
    lead = Fraction(p.leading)
    c = [Fraction(x) / lead for x in p.coeffs]  # monic, exact
    fc = [float(x) for x in c]
    if p.degree == 1:
        return [NumericRoot(float(-c[0]), True)]
    if p.degree == 2:
        roots = _quadratic(c[1], c[0])
    else:
        roots = _cubic(c[2], c[1], c[0])
    real = sorted(
        r if p(Fraction(r)) == 0 else _polish(fc, r)
        for r in (float(x) for x in roots if not isinstance(x, complex))
    )
    cplx = [r for r in roots if isinstance(r, complex)]
    return [NumericRoot(r, True) for r in real] + [NumericRoot(r, False) for r in cplx]


def _quadratic(b, c):
    """Roots of x^2 + b x + c with exact b, c."""
    disc = b * b - 4 * c
    if disc == 0:
        return [float(-b / 2)] * 2
    if disc > 0:
        s = math.sqrt(disc)
        # avoid cancellation: compute the larger-magnitude root first
        big = -(float(b) + math.copysign(s, float(b))) / 2 if b != 0 else s / 2
        other = float(c) / big if big != 0 else -big
        return [big, other]
    re_, im = float(-b / 2), math.sqrt(-disc) / 2
    return [complex(re_, im), complex(re_, -im)]


def _cubic(b, c, d):
    """Roots of x^3 + b x^2 + c x + d with exact coefficients."""
    shift = b / 3
    p = c - b * b / 3
    q = 2 * b**3 / 27 - b * c / 3 + d
    disc = -(4 * p**3 + 27 * q**2)
    if disc == 0:
        if p == 0:
            return [float(-shift)] * 3
        simple, double = 3 * q / p, -3 * q / (2 * p)
        return [float(simple - shift), float(double - shift), float(double - shift)]
    fp, fq = float(p), float(q)
    if disc > 0:
        m = 2 * math.sqrt(-fp / 3)
        arg = (3 * fq / (2 * fp)) * math.sqrt(-3 / fp)
        theta = math.acos(max(-1.0, min(1.0, arg))) / 3
        ts = [m * math.cos(theta - 2 * math.pi * k / 3) for k in range(3)]
    else:
        if p == 0:
            t = -math.copysign(abs(fq) ** (1 / 3), fq)
        elif p < 0:
            arg = (-3 * abs(fq) / (2 * fp)) * math.sqrt(-3 / fp)
            t = -2 * math.copysign(1.0, fq) * math.sqrt(-fp / 3) * math.cosh(math.acosh(arg) / 3)
        else:
            arg = (3 * fq / (2 * fp)) * math.sqrt(3 / fp)
            t = -2 * math.sqrt(fp / 3) * math.sinh(math.asinh(arg) / 3)
        # deflate the real root: t^2 + t*t1 + (t1^2 + p)
        im = math.sqrt(max(0.0, 3 * t * t + 4 * fp)) / 2
        ts = [t, complex(-t / 2, im), complex(-t / 2, -im)]
    fs = float(shift)
    return [x - fs for x in ts]


def null_space(m: Matrix) -> list:
    """Integer basis of the null space, by fraction-free row reduction.

    Each basis vector is scaled to coprime integers with its first nonzero
    entry positive.
    """
    rows = []
    for r in m.rows():
        den = reduce(math.lcm, (Fraction(x).denominator for x in r), 1)
        rows.append([int(Fraction(x) * den) for x in r])
    ncols = m.ncols
    pivots = []
    top = 0
    for col in range(ncols):
        pr = next((i for i in range(top, len(rows)) if rows[i][col] != 0), None)
        if pr is None:
            continue
        rows[top], rows[pr] = rows[pr], rows[top]
        pivot_row = rows[top]
        for i in range(top + 1, len(rows)):
            f = rows[i][col]
            if f == 0:
                continue
            new = [pivot_row[col] * x - f * y for x, y in zip(rows[i], pivot_row)]
            g = reduce(math.gcd, new, 0) or 1
            rows[i] = [x // g for x in new]
        pivots.append(col)
        top += 1
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in reversed(range(len(pivots))):
            pc = pivots[i]
            s = sum((rows[i][k] * x[k] for k in range(pc + 1, ncols)), Fraction(0))
            x[pc] = -s / rows[i][pc]
        basis.append(normalize_integer(x))
    return basis


def normalize_integer(v) -> tuple:
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    v = [Fraction(x) for x in v]
    den = reduce(math.lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        raise ValueError("cannot normalize the zero vector")
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def eigenspace(a: Matrix, lam) -> list:
    """Canonical integer basis of the null space of A - lam*I."""
    if not a.is_square:
        raise ShapeError("eigenspace of a non-square matrix")
    lam = as_scalar(lam)
    shifted = a - Matrix.identity(a.nrows).scale(lam)
    if det(shifted) != 0:
        raise NotAnEigenvalueError(f"{format_scalar(lam)} is not an eigenvalue")
    return null_space(shifted)


@dataclass(frozen=True)
class EigenPair:
    eigenvalue: Union[Fraction, float]
    exact: bool
    basis: tuple
    algebraic_multiplicity: int = 1

    @property
    def geometric_multiplicity(self):
        return len(self.basis)


def _float_null_vector(a: Matrix, lam: float) -> tuple:
    """Unit null vector of A - lam*I for a simple real eigenvalue."""
    n = a.nrows
    m = [[float(a[i, j]) - (lam if i == j else 0.0) for j in range(n)] for i in range(n)]
    if n == 1:
        v = [1.0]
    elif n == 2:
        r = max(m, key=lambda row: math.hypot(*row))
        v = [-r[1], r[0]]
    else:
        best = None
        for r1, r2 in ((m[0], m[1]), (m[0], m[2]), (m[1], m[2])):
            cr = [
                r1[1] * r2[2] - r1[2] * r2[1],
                r1[2] * r2[0] - r1[0] * r2[2],
                r1[0] * r2[1] - r1[1] * r2[0],
            ]
            if best is None or math.hypot(*cr) > math.hypot(*best):
                best = cr
        v = best
    norm = math.hypot(*v)
    v = [x / norm for x in v]
    lead = next((x for x in v if abs(x) > 1e-12), 1.0)
    return tuple(-x if lead < 0 else x for x in v)


def eigenpairs(a: Matrix) -> list:
    """Eigenpairs sorted by descending real eigenvalue.

    Rational eigenvalues are exact with integer bases; irrational real ones are
    floats with a unit basis vector; complex eigenvalues are omitted.
    """
    found = rational_roots(char_poly(a))
    pairs = [EigenPair(r, True, tuple(eigenspace(a, r)), m) for r, m in found.roots]
    for root in numeric_roots(found.remainder):
        if root.is_real:
            pairs.append(EigenPair(root.value, False, (_float_null_vector(a, root.value),)))
    return sorted(pairs, key=lambda e: e.eigenvalue, reverse=True)


def float_eigenvalues(a: Matrix) -> list:
    """Eigenvalues via the closed-form tier alone, skipping rational detection."""
    return numeric_roots(char_poly(a))
