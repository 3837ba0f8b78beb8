"""Exact square matrices over the rationals.

Law checking needs exact equality, so entries are `fractions.Fraction`
throughout; no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError

Entry = int | str | Fraction


class RationalMatrix:
    """Immutable n-by-n matrix with Fraction entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence[Entry]]):
        converted = tuple(tuple(Fraction(e) for e in row) for row in rows)
        n = len(converted)
        if n == 0:
            raise ShapeError("matrix must have at least one row")
        if any(len(row) != n for row in converted):
            raise ShapeError(f"matrix must be square, got row lengths {[len(r) for r in converted]}")
        self.rows: tuple[tuple[Fraction, ...], ...]
        object.__setattr__(self, "rows", converted)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __add__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if other.dimension != self.dimension:
            raise ShapeError(f"cannot add {self.dimension}x{self.dimension} and {other.dimension}x{other.dimension}")
        return RationalMatrix(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        )

    def __mul__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if other.dimension != self.dimension:
            raise ShapeError(
                f"cannot multiply {self.dimension}x{self.dimension} and {other.dimension}x{other.dimension}"
            )
        n = self.dimension
        return RationalMatrix(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    def scale(self, factor: Entry) -> "RationalMatrix":
        q = Fraction(factor)
        return RationalMatrix(tuple(q * e for e in row) for row in self.rows)

    def scalar_identity_multiple(self) -> Fraction | None:
        """Return q when self == q*identity, else None."""
        diag = self.rows[0][0]
        for i, row in enumerate(self.rows):
            for j, entry in enumerate(row):
                if i == j:
                    if entry != diag:
                        return None
                elif entry != 0:
                    return None
        return diag

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        def fmt(e: Fraction) -> str:
            return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"

        return "[" + ",".join("[" + ",".join(fmt(e) for e in row) + "]" for row in self.rows) + "]"

    def __repr__(self):
        return f"RationalMatrix({self})"
