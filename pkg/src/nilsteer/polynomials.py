"""Sparse multivariate polynomials with exact coefficient arithmetic.

Terms are stored as a dict mapping exponent tuples to coefficients.  The
coefficient type is whatever the caller puts in (``fractions.Fraction`` for
the symbolic machinery, ``float`` for user-supplied vector fields); the class
only needs ``+``, ``-``, ``*`` and ``== 0`` from it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

MAX_EXPONENT = 16


class Poly:
    """Polynomial in ``nvars`` variables, ``{exponent tuple: coefficient}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = int(nvars)
        clean = {}
        if terms:
            for expo, coeff in terms.items():
                expo = tuple(int(e) for e in expo)
                if len(expo) != self.nvars:
                    raise ValueError(
                        f"exponent tuple {expo} has length {len(expo)}, expected {self.nvars}"
                    )
                if any(e < 0 for e in expo):
                    raise ValueError(f"negative exponent in {expo}")
                if any(e > MAX_EXPONENT for e in expo):
                    raise ValueError(f"exponent above {MAX_EXPONENT} in {expo}")
                if coeff == 0:
                    continue
                clean[expo] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value) -> "Poly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def var(cls, nvars: int, index: int, coeff=1) -> "Poly":
        expo = [0] * nvars
        expo[index] = 1
        return cls(nvars, {tuple(expo): coeff})

    # -- ring operations ----------------------------------------------

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return self + Poly.const(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            acc = out.get(expo, 0) + coeff
            if acc == 0:
                out.pop(expo, None)
            else:
                out[expo] = acc
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly.zero(self.nvars)
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(expo, 0) + c1 * c2
                if acc == 0:
                    out.pop(expo, None)
                else:
                    out[expo] = acc
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        return self.terms == Poly.const(self.nvars, other).terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus and evaluation ---------------------------------------

    def diff(self, index: int) -> "Poly":
        out = {}
        for expo, coeff in self.terms.items():
            e = expo[index]
            if e == 0:
                continue
            lowered = list(expo)
            lowered[index] = e - 1
            out[tuple(lowered)] = coeff * e
        return Poly(self.nvars, out)

    def eval(self, point: Iterable):
        point = list(point)
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = 0
        for expo, coeff in self.terms.items():
            term = coeff
            for x, e in zip(point, expo):
                if e:
                    term = term * x**e
            total = total + term
        return total

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def map_coeffs(self, fn) -> "Poly":
        return Poly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    # -- display -------------------------------------------------------

    def format(self, names: list[str] | None = None) -> str:
        """Render deterministically, terms sorted by degree then exponents."""
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i+1}" for i in range(self.nvars)]
        parts = []
        for expo in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            coeff = self.terms[expo]
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(expo)
                if e
            ]
            parts.append((coeff, factors))
        pieces = []
        for idx, (coeff, factors) in enumerate(parts):
            sign = ""
            if _is_negative(coeff):
                sign = "-"
                coeff = -coeff
            elif idx > 0:
                sign = "+"
            body = " ".join(factors)
            if not factors:
                text = _fmt_coeff(coeff)
            elif coeff == 1:
                text = body
            else:
                text = f"{_fmt_coeff(coeff)} {body}"
            pieces.append(f"{sign} {text}".strip() if idx else f"{sign}{text}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Poly({self.format()})"


def _is_negative(c) -> bool:
    try:
        return c < 0
    except TypeError:
        return False


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)
