"""Free nilpotent Lie algebras on a Hall basis.

A ``FreeNilpotentLieAlgebra`` holds the Hall basis for ``m`` generators
truncated at nilpotency order ``k``, together with the full table of
structure constants in Hall coordinates.  Elements are ``LieSeries``:
coefficient vectors over the basis.  Coefficients are exact by default
(``fractions.Fraction``); the arithmetic is generic, so the same code runs
over floats, sparse polynomials (for the adjoint table) and sympy
expressions (for radical-exact schedule verification).

The basis is ordered by degree, then construction order; elements 1..m are
the generators.  A bracket ``[B_i, B_j]`` is a basis element iff ``i < j``
and either ``B_j`` is a generator or ``B_j = [B_l, B_r]`` with ``l <= i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
import sympy

from .errors import AlgebraSizeError, UnsupportedOrderError, UsageError
from .polynomials import Poly

DEFAULT_DIMENSION_CAP = 200

_HALF = Fraction(1, 2)
_TWELFTH = Fraction(1, 12)
_TWENTY_FOURTH = Fraction(1, 24)


@dataclass(frozen=True)
class HallElement:
    """One Hall basis element: a generator or a bracket of earlier elements.

    ``index`` is the 1-based basis position.  For generators ``generator``
    holds the 1-based generator number and ``left``/``right`` are None; for
    brackets ``left``/``right`` are basis indices of the factors.
    """

    index: int
    degree: int
    generator: int | None = None
    left: int | None = None
    right: int | None = None

    @property
    def is_generator(self) -> bool:
        return self.generator is not None


def witt_dimension(m: int, k: int) -> int:
    """Dimension of the free nilpotent Lie algebra: sum of necklace counts.

    ``sum_{d<=k} (1/d) sum_{e|d} mu(e) m^(d/e)``.
    """
    if m < 1 or k < 1:
        raise UsageError("witt_dimension requires m >= 1 and k >= 1")
    total = 0
    for d in range(1, k + 1):
        acc = 0
        for e in sympy.divisors(d):
            acc += int(sympy.mobius(e)) * m ** (d // e)
        total += acc // d
    return total


class LieSeries:
    """Element of a free nilpotent Lie algebra in Hall coordinates."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "FreeNilpotentLieAlgebra", coeffs: Sequence):
        if len(coeffs) != algebra.dim:
            raise UsageError(
                f"coefficient vector has length {len(coeffs)}, algebra dimension is {algebra.dim}"
            )
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    def _check_mate(self, other: "LieSeries"):
        if self.algebra is not other.algebra:
            raise UsageError("series belong to different algebras")

    def __add__(self, other: "LieSeries") -> "LieSeries":
        self._check_mate(other)
        return LieSeries(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "LieSeries") -> "LieSeries":
        self._check_mate(other)
        return LieSeries(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "LieSeries":
        return LieSeries(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, scalar) -> "LieSeries":
        return LieSeries(self.algebra, [a * scalar for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieSeries)
            and self.algebra is other.algebra
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __repr__(self):
        parts = [
            f"{c!r}*B{i+1}" for i, c in enumerate(self.coeffs) if not scalar_is_zero(c)
        ]
        return "LieSeries(" + (" + ".join(parts) if parts else "0") + ")"

    def is_zero(self) -> bool:
        return all(scalar_is_zero(c) for c in self.coeffs)

    def coeff(self, index: int):
        """Coefficient on basis element ``index`` (1-based)."""
        return self.coeffs[index - 1]

    def truncate_degree(self, max_degree: int) -> "LieSeries":
        basis = self.algebra.basis
        return LieSeries(
            self.algebra,
            [c if basis[i].degree <= max_degree else 0 for i, c in enumerate(self.coeffs)],
        )

    def as_floats(self) -> np.ndarray:
        """Lossy float view (exact coefficients are the source of truth)."""
        return np.array([float(c) for c in self.coeffs], dtype=float)


def scalar_is_zero(c) -> bool:
    """Exact zero test covering Fraction/int/float/Poly/sympy coefficients."""
    if isinstance(c, sympy.Basic):
        return sympy.simplify(c) == 0
    return c == 0


class FreeNilpotentLieAlgebra:
    """Hall basis plus structure constants; immutable after construction."""

    def __init__(self, m: int, k: int, cap: int = DEFAULT_DIMENSION_CAP):
        if m < 1 or k < 1:
            raise UsageError("need m >= 1 and k >= 1")
        dim = witt_dimension(m, k)
        if dim > cap:
            raise AlgebraSizeError(m, k, dim, cap)
        self.m = m
        self.k = k
        self.dim = dim
        self.basis = self._build_basis()
        assert len(self.basis) == dim
        # (i, j) -> basis index for Hall pairs, both 1-based
        self._pair_index = {
            (e.left, e.right): e.index for e in self.basis if not e.is_generator
        }
        self._structure: dict[tuple[int, int], dict[int, int]] = {}
        self._build_structure()
        # after this point the table is complete for every in-range pair;
        # lookups never mutate, so instances are safe to share across threads

    # -- construction ----------------------------------------------------

    def _build_basis(self) -> tuple[HallElement, ...]:
        basis = [HallElement(index=i, degree=1, generator=i) for i in range(1, self.m + 1)]
        for degree in range(2, self.k + 1):
            for left in range(1, len(basis) + 1):
                dl = basis[left - 1].degree
                if dl >= degree:
                    break
                for right in range(left + 1, len(basis) + 1):
                    er = basis[right - 1]
                    if dl + er.degree != degree:
                        continue
                    if er.is_generator or er.left <= left:
                        basis.append(
                            HallElement(
                                index=len(basis) + 1,
                                degree=degree,
                                left=left,
                                right=right,
                            )
                        )
        return tuple(basis)

    def _build_structure(self):
        for j in range(2, self.dim + 1):
            dj = self.basis[j - 1].degree
            for i in range(1, j):
                if self.basis[i - 1].degree + dj <= self.k:
                    self._structure[(i, j)] = self._normalize(i, j)

    def _normalize(self, i: int, j: int) -> dict[int, int]:
        """Hall coordinates of ``[B_i, B_j]`` as a sparse integer map."""
        if i == j:
            return {}
        if i > j:
            return {t: -c for t, c in self._normalize(j, i).items()}
        cached = self._structure.get((i, j))
        if cached is not None:
            return cached
        ei, ej = self.basis[i - 1], self.basis[j - 1]
        if ei.degree + ej.degree > self.k:
            result: dict[int, int] = {}
        elif (i, j) in self._pair_index:
            result = {self._pair_index[(i, j)]: 1}
        else:
            # B_j = [B_l, B_r] with l > i; rewrite with the Jacobi identity:
            # [B_i,[B_l,B_r]] = [[B_i,B_l],B_r] + [B_l,[B_i,B_r]]
            l, r = ej.left, ej.right
            result = {}
            for t, c in self._normalize(i, l).items():
                for u, c2 in self._normalize(t, r).items():
                    result[u] = result.get(u, 0) + c * c2
            for t, c in self._normalize(i, r).items():
                for u, c2 in self._normalize(l, t).items():
                    result[u] = result.get(u, 0) + c * c2
            result = {u: c for u, c in result.items() if c != 0}
        self._structure[(i, j)] = result
        return result

    def pair_table(self, i: int, j: int) -> dict[int, int]:
        """Read-only Hall coordinates of ``[B_i, B_j]`` (1-based indices)."""
        if i == j:
            return {}
        if i < j:
            return self._structure.get((i, j), {})
        return {t: -c for t, c in self._structure.get((j, i), {}).items()}

    # -- element constructors ---------------------------------------------

    def zero(self) -> LieSeries:
        return LieSeries(self, [0] * self.dim)

    def series(self, coeffs: Sequence) -> LieSeries:
        return LieSeries(self, list(coeffs))

    def basis_series(self, index: int, coeff=1) -> LieSeries:
        coeffs = [0] * self.dim
        coeffs[index - 1] = coeff
        return LieSeries(self, coeffs)

    def from_dict(self, entries: dict) -> LieSeries:
        coeffs = [0] * self.dim
        for index, c in entries.items():
            coeffs[index - 1] = c
        return LieSeries(self, coeffs)

    def structure_series(self, i: int, j: int) -> LieSeries:
        """``[B_i, B_j]`` as a series (any i, j; antisymmetric, overflow-free)."""
        return self.from_dict(self._normalize(i, j))

    def elements_of_degree(self, degree: int) -> list[HallElement]:
        return [e for e in self.basis if e.degree == degree]

    # -- algebra operations -------------------------------------------------

    def bracket(self, a: LieSeries, b: LieSeries) -> LieSeries:
        """Bilinear extension of the structure constants; drops overflow."""
        if a.algebra is not self or b.algebra is not self:
            raise UsageError("series belong to a different algebra")
        out = [0] * self.dim
        for i, ci in enumerate(a.coeffs):
            if isinstance(ci, (int, float, Fraction)) and ci == 0:
                continue
            for j, cj in enumerate(b.coeffs):
                if i == j:
                    continue
                if isinstance(cj, (int, float, Fraction)) and cj == 0:
                    continue
                for t, c in self._normalize(i + 1, j + 1).items():
                    out[t - 1] = out[t - 1] + ci * cj * c
        return LieSeries(self, out)

    def __repr__(self):
        return f"FreeNilpotentLieAlgebra(m={self.m}, k={self.k}, dim={self.dim})"


def build_algebra(m: int, k: int, cap: int = DEFAULT_DIMENSION_CAP) -> FreeNilpotentLieAlgebra:
    """Construct the free nilpotent algebra with its Hall basis and table."""
    return FreeNilpotentLieAlgebra(m, k, cap=cap)


def bracket_series(alg: FreeNilpotentLieAlgebra, a: LieSeries, b: LieSeries) -> LieSeries:
    return alg.bracket(a, b)


def bch(alg: FreeNilpotentLieAlgebra, a: LieSeries, b: LieSeries) -> LieSeries:
    """log(exp(a) exp(b)) truncated at the algebra's nilpotency order.

    Exact in any algebra of order k <= 4: every omitted term involves a
    bracket of more than four factors, which the structure table kills.
    """
    if alg.k > 4:
        raise UnsupportedOrderError(
            f"bch is implemented through order 4, algebra has k={alg.k}"
        )
    if a.algebra is not alg or b.algebra is not alg:
        raise UsageError("series belong to a different algebra")
    z = a + b
    if alg.k >= 2:
        ab = alg.bracket(a, b)
        z = z + ab * _HALF
        if alg.k >= 3:
            aab = alg.bracket(a, ab)
            bab = alg.bracket(b, ab)
            z = z + aab * _TWELFTH - bab * _TWELFTH
            if alg.k >= 4:
                z = z - alg.bracket(b, aab) * _TWENTY_FOURTH
    return z


def exp_product_log(alg: FreeNilpotentLieAlgebra, factors: Iterable[LieSeries]) -> LieSeries:
    """Log of a composition of exponentials, factors listed first-applied first.

    Folding ``L <- bch(L, f)`` appends each new factor as the most recent
    flow; the empty list gives zero.
    """
    log = alg.zero()
    for factor in factors:
        log = bch(alg, log, factor)
    return log


def element_text(alg: FreeNilpotentLieAlgebra, element: HallElement) -> str:
    """Bracket expression over the generators, e.g. ``[X1,[X1,X2]]``."""
    if element.is_generator:
        return f"X{element.generator}"
    left = element_text(alg, alg.basis[element.left - 1])
    right = element_text(alg, alg.basis[element.right - 1])
    return f"[{left},{right}]"


def basis_lines(alg: FreeNilpotentLieAlgebra) -> list[str]:
    """One line per basis element: ``B<i> = <bracket expression>``."""
    return [f"B{e.index} = {element_text(alg, e)}" for e in alg.basis]
