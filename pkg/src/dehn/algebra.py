"""Exact arithmetic in Q, Q[t] and Q(t), plus dense linear algebra over Q(t).

Everything here is immutable and pure: values can be shared freely between
threads. Coefficients are `fractions.Fraction`, so there is no precision
ceiling and no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

Coeffish = Union[int, Fraction]


def _coerce(c: Coeffish) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


class Polynomial:
    """Univariate polynomial over Q, coefficients stored constant-term first.

    The zero polynomial is the empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeffish] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c: Coeffish) -> "Polynomial":
        return cls((c,))

    @classmethod
    def t(cls) -> "Polynomial":
        return cls((0, 1))

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def t_multiplicity(self) -> int:
        """Largest m with t^m dividing self; 0 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def shift(self, n: int) -> "Polynomial":
        """Multiply by t^n (n may be negative if t^-n divides self)."""
        if self.is_zero():
            return self
        if n >= 0:
            return Polynomial((Fraction(0),) * n + self.coeffs)
        if self.t_multiplicity() < -n:
            raise ValueError(f"t^{-n} does not divide {self}")
        return Polynomial(self.coeffs[-n:])

    # -- arithmetic ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Polynomial", self.coeffs))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c: Coeffish) -> "Polynomial":
        c = _coerce(c)
        return Polynomial(tuple(c * a for a in self.coeffs))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = Polynomial()
        r = self
        d = other.degree
        lead_inv = 1 / other.leading()
        while not r.is_zero() and r.degree >= d:
            shift = r.degree - d
            c = r.leading() * lead_inv
            term = Polynomial((0,) * shift + (c,))
            q = q + term
            r = r - term * other
        return q, r

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def __call__(self, x: Coeffish) -> Fraction:
        x = _coerce(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- display ------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "t" if power == 1 else f"t^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RatFunc:
    """Element of Q(t) in canonical form: monic denominator, coprime parts.

    Zero is 0/1. Equality is structural thanks to the canonical form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Polynomial((1,))):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(num)
        if not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Polynomial(), Polynomial((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading()
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(Polynomial())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(Polynomial((1,)))

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(Polynomial.t())

    @classmethod
    def t_power(cls, m: int) -> "RatFunc":
        """t^m for any integer m."""
        if m >= 0:
            return cls(Polynomial((0,) * m + (1,)))
        return cls(Polynomial((1,)), Polynomial((0,) * (-m) + (1,)))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.coeffs == (Fraction(1),) and self.den.coeffs == (Fraction(1),)

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_term() / self.den.constant_term()

    # -- arithmetic ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, RatFunc)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        return RatFunc.one() / self

    def derivative(self) -> "RatFunc":
        """Quotient-rule derivative, in canonical form."""
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)

    def __call__(self, x: Coeffish) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at t={x}")
        return self.num(x) / d

    # -- display / serialization --------------------------------------

    def __str__(self) -> str:
        if self.den.degree == 0 and self.den.constant_term() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def to_json(self) -> dict:
        """Machine-stable form: exact coefficient strings, constant term first."""
        return {
            "num": [str(c) for c in self.num.coeffs],
            "den": [str(c) for c in self.den.coeffs],
            "display": str(self),
        }

    @classmethod
    def from_json(cls, data: dict) -> "RatFunc":
        num = Polynomial(Fraction(c) for c in data["num"])
        den = Polynomial(Fraction(c) for c in data["den"])
        return cls(num, den)


def arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Named field operations; `div` raises on a zero divisor."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def unit_equal(a: RatFunc, b: RatFunc) -> bool:
    """True iff a = ±t^m · b for some integer m; zero is only unit-equal to zero."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    q = a / b
    num, den = q.num, q.den
    # Canonical form makes den monic, so ±t^m ratios look like (±t^i)/(t^j).
    if any(c != 0 for c in den.coeffs[:-1]):
        return False
    nm = num.t_multiplicity()
    if any(c != 0 for c in num.coeffs[nm:-1]):
        return False
    return abs(num.leading()) == 1


class FieldMatrix:
    """Dense row-major matrix over Q(t)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[RatFunc]):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match the matrix shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RatFunc]]) -> "FieldMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(nrows, ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "FieldMatrix":
        one, zero = RatFunc.one(), RatFunc.zero()
        return cls(n, n, [one if i == j else zero
                          for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "FieldMatrix":
        return cls(rows, cols, [RatFunc.zero()] * (rows * cols))

    # -- access -------------------------------------------------------

    def entry(self, i: int, j: int) -> RatFunc:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash(("FieldMatrix", self.rows, self.cols, self.entries))

    def __str__(self) -> str:
        return "[" + "; ".join(
            ", ".join(str(e) for e in self.row(i)) for i in range(self.rows)
        ) + "]"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return FieldMatrix(self.rows, self.cols,
                           [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix subtraction")
        return FieldMatrix(self.rows, self.cols,
                           [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "FieldMatrix":
        return FieldMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        zero = RatFunc.zero()
        out = []
        for i in range(self.rows):
            srow = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = srow[k]
                    if a.is_zero():
                        continue
                    acc = acc + a * other.entry(k, j)
                out.append(acc)
        return FieldMatrix(self.rows, other.cols, out)

    def scale(self, c: RatFunc) -> "FieldMatrix":
        return FieldMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.cols, self.rows,
                           [self.entry(i, j)
                            for j in range(self.cols) for i in range(self.rows)])

    def hstack(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return FieldMatrix(self.rows, self.cols + other.cols, out)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "FieldMatrix":
        out = [self.entry(i, j) for i in row_idx for j in col_idx]
        return FieldMatrix(len(row_idx), len(col_idx), out)

    # -- elimination --------------------------------------------------

    def rref(self):
        """Reduced row echelon form.

        Returns (rref matrix, pivot column list, rank). Pivots are picked as
        the first nonzero entry scanning top to bottom, so the result is
        deterministic.
        """
        m = self.to_lists()
        nrows, ncols = self.rows, self.cols
        pivots = []
        pr = 0
        for pc in range(ncols):
            pivot_row = None
            for r in range(pr, nrows):
                if not m[r][pc].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
            inv = m[pr][pc].inverse()
            m[pr] = [inv * e for e in m[pr]]
            for r in range(nrows):
                if r == pr:
                    continue
                f = m[r][pc]
                if f.is_zero():
                    continue
                m[r] = [a - f * b for a, b in zip(m[r], m[pr])]
            pivots.append(pc)
            pr += 1
            if pr == nrows:
                break
        reduced = FieldMatrix.from_rows(m) if nrows else self
        return reduced, pivots, len(pivots)

    def rank(self) -> int:
        return self.rref()[2]

    def det(self) -> RatFunc:
        """Exact determinant by Gaussian elimination with row swaps."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return RatFunc.one()
        m = self.to_lists()
        det = RatFunc.one()
        for c in range(n):
            pivot_row = None
            for r in range(c, n):
                if not m[r][c].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                return RatFunc.zero()
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                det = -det
            pivot = m[c][c]
            det = det * pivot
            inv = pivot.inverse()
            for r in range(c + 1, n):
                f = m[r][c]
                if f.is_zero():
                    continue
                f = f * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return det

    def inverse(self) -> "FieldMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = self.hstack(FieldMatrix.identity(n))
        reduced, pivots, rank = aug.rref()
        if rank < n or pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return reduced.submatrix(range(n), range(n, 2 * n))

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return self == FieldMatrix.identity(self.rows)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[e.to_json() for e in self.row(i)] for i in range(self.rows)],
        }
