"""Concrete weak Boolean algebras: classical, fuzzy, chains, lattices, matrices.

All carriers are exact. The unit-interval algebra uses Fraction values, the
matrix algebras use RationalMatrix with Fraction entries, and finite
algebras use string tokens.

The matrix algebra on n x n rational matrices takes

    wedge = multiply then normalize        vee = add then normalize

where normalization sends every positive integer multiple k*Identity
(k >= 1) to the identity and leaves everything else alone, the zero matrix
and fractional multiples included. The identification is applied after each
operation; it is not a congruence of matrix arithmetic, so parenthesization
can matter and wedge genuinely fails to commute for n >= 2. That failure is
the point: these algebras satisfy the eight defining identities while
breaking nearly every classical law.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Mapping

from .algebra import AlgebraHandle, Element
from .errors import DomainError, ShapeError, StructuralError
from .lattice import FiniteLattice, lattice_from_hasse
from .matrix import RationalMatrix
from .reporting import Witness

# ---------------------------------------------------------------------------
# Matrix carrier


def normalize_matrix(m: RationalMatrix) -> RationalMatrix:
    """Collapse positive integer multiples of the identity to the identity."""
    q = m.scalar_identity_multiple()
    if q is not None and q.denominator == 1 and q >= 1:
        return RationalMatrix.identity(m.dimension)
    return m


def _require_normalized(x: Element, n: int) -> RationalMatrix:
    if not isinstance(x, RationalMatrix):
        raise DomainError(f"expected a {n}x{n} rational matrix, got {x!r}")
    if x.dimension != n:
        raise ShapeError(f"expected dimension {n}, got {x.dimension}")
    if normalize_matrix(x) != x:
        raise DomainError(f"matrix {x} is not in normalized form")
    return x


def matrix_wedge(x: RationalMatrix, y: RationalMatrix) -> RationalMatrix:
    """Multiply then normalize. Inputs must already be normalized."""
    if not isinstance(x, RationalMatrix):
        raise DomainError(f"expected a rational matrix, got {x!r}")
    _require_normalized(x, x.dimension)
    _require_normalized(y, x.dimension)
    return normalize_matrix(x * y)


def matrix_vee(x: RationalMatrix, y: RationalMatrix) -> RationalMatrix:
    """Add then normalize. Inputs must already be normalized."""
    if not isinstance(x, RationalMatrix):
        raise DomainError(f"expected a rational matrix, got {x!r}")
    _require_normalized(x, x.dimension)
    _require_normalized(y, x.dimension)
    return normalize_matrix(x + y)


def _unit_matrix(n: int, i: int, j: int) -> RationalMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[i][j] = Fraction(1)
    return RationalMatrix(rows)


@lru_cache(maxsize=None)
def matrix_algebra(n: int) -> AlgebraHandle:
    """The n x n rational matrices under multiply/add with normalization.

    O is the zero matrix, I the identity. No complement and no order are
    declared. The boundary pool is (O, I, E01, E10) for n >= 2, which pins
    the first reported noncommuting pair to the two unit matrices.
    """
    if n < 1:
        raise ValueError(f"matrix dimension must be at least 1, got {n}")
    zero = RationalMatrix.zeros(n)
    one = RationalMatrix.identity(n)
    boundary: tuple[Element, ...] = (zero, one)
    if n >= 2:
        boundary = (zero, one, _unit_matrix(n, 0, 1), _unit_matrix(n, 1, 0))

    def is_member(x: Element) -> bool:
        return (
            isinstance(x, RationalMatrix)
            and x.dimension == n
            and normalize_matrix(x) == x
        )

    def sample(rng: random.Random) -> RationalMatrix:
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        return normalize_matrix(RationalMatrix(rows))

    return AlgebraHandle(
        name=f"mat{n}",
        carrier_kind="matrix",
        structure="matrix",
        zero=zero,
        one=one,
        wedge=lambda x, y: normalize_matrix(x * y),
        vee=lambda x, y: normalize_matrix(x + y),
        is_member=is_member,
        boundary=boundary,
        sample=sample,
    )


# ---------------------------------------------------------------------------
# Chains, classical, fuzzy


def _chain_tokens(k: int) -> tuple[str, ...]:
    if k == 2:
        return ("O", "I")
    if k == 3:
        return ("O", "m", "I")
    middles = tuple(f"m{i}" for i in range(1, k - 1))
    return ("O",) + middles + ("I",)


def _chain_lattice(k: int) -> FiniteLattice:
    tokens = _chain_tokens(k)
    covers = tuple((tokens[i], tokens[i + 1]) for i in range(k - 1))
    return lattice_from_hasse(f"chain{k}", tokens, covers)


@lru_cache(maxsize=None)
def chain_algebra(k: int) -> AlgebraHandle:
    """Total order on k tokens with min/max and order-reversing complement."""
    if k < 2:
        raise ValueError(f"chain length must be at least 2, got {k}")
    lat = _chain_lattice(k)
    tokens = lat.elements
    position = {t: i for i, t in enumerate(tokens)}
    carrier = frozenset(tokens)
    flipped = {t: tokens[k - 1 - position[t]] for t in tokens}
    return AlgebraHandle(
        name=f"chain{k}",
        carrier_kind="finite",
        structure="chain",
        zero=tokens[0],
        one=tokens[-1],
        wedge=lat.meet,
        vee=lat.join,
        is_member=lambda x: x in carrier,
        complement=flipped.__getitem__,
        leq=lat.leq,
        elements=tokens,
        lattice=lat,
    )


@lru_cache(maxsize=None)
def classical_algebra() -> AlgebraHandle:
    """The two-element Boolean algebra on tokens O and I."""
    lat = _chain_lattice(2)
    carrier = frozenset(("O", "I"))
    flipped = {"O": "I", "I": "O"}
    return AlgebraHandle(
        name="classical2",
        carrier_kind="finite",
        structure="classical",
        zero="O",
        one="I",
        wedge=lat.meet,
        vee=lat.join,
        is_member=lambda x: x in carrier,
        complement=flipped.__getitem__,
        leq=lat.leq,
        elements=("O", "I"),
        lattice=lat,
    )


@lru_cache(maxsize=None)
def fuzzy_algebra() -> AlgebraHandle:
    """Rational unit interval with min/max and complement q -> 1 - q.

    Carrier membership requires an exact Fraction in [0, 1]. The boundary
    pool (0, 1, 1/2) guarantees sampled law checks always probe the ends
    and the midpoint, where excluded middle and non-contradiction break.
    """
    zero = Fraction(0)
    one = Fraction(1)

    def is_member(x: Element) -> bool:
        return isinstance(x, Fraction) and zero <= x <= one

    def sample(rng: random.Random) -> Fraction:
        denominator = rng.randint(1, 64)
        return Fraction(rng.randint(0, denominator), denominator)

    return AlgebraHandle(
        name="fuzzy",
        carrier_kind="rational-unit-interval",
        structure="fuzzy-unit",
        zero=zero,
        one=one,
        wedge=min,
        vee=max,
        is_member=is_member,
        complement=lambda x: one - x,
        leq=lambda x, y: x <= y,
        boundary=(zero, one, Fraction(1, 2)),
        sample=sample,
    )


def lattice_algebra(
    lat: FiniteLattice,
    complement: Mapping[str, str] | Callable[[str], str] | None = None,
    name: str | None = None,
) -> AlgebraHandle:
    """Wrap a finite lattice as an algebra: wedge = meet, vee = join.

    ``complement`` may be a total token mapping or a callable; it is the
    caller's claim and is validated only for totality, not for being an
    involution (the law checker reports on that).
    """
    if len(lat.elements) < 2:
        raise StructuralError(
            f"lattice {lat.name!r} has a single element; an algebra needs O != I"
        )
    comp: Callable[[str], str] | None = None
    if complement is not None:
        if callable(complement):
            comp = complement
        else:
            table = dict(complement)
            for t in lat.elements:
                if t not in table:
                    raise StructuralError(
                        f"complement table for {lat.name!r} is missing {t!r}"
                    )
                if table[t] not in lat._index:
                    raise StructuralError(
                        f"complement of {t!r} is outside lattice {lat.name!r}"
                    )
            comp = table.__getitem__
    carrier = frozenset(lat.elements)
    return AlgebraHandle(
        name=name or lat.name,
        carrier_kind="finite",
        structure="lattice",
        zero=lat.bottom,
        one=lat.top,
        wedge=lat.meet,
        vee=lat.join,
        is_member=lambda x: x in carrier,
        complement=comp,
        leq=lat.leq,
        elements=lat.elements,
        lattice=lat,
    )


# ---------------------------------------------------------------------------
# Witness search


def find_noncommuting_witness(
    a: AlgebraHandle, op: str = "wedge", budget: int = 1000, seed: int = 0
) -> Witness | None:
    """First ordered pair (x, y) with op(x, y) != op(y, x), or None.

    Finite carriers are scanned exhaustively in declaration order. Infinite
    carriers use a deterministic pool: boundary elements first, then seeded
    samples, scanning pairs in pool order until ``budget`` pairs are tried.
    """
    if op not in ("wedge", "vee"):
        raise ValueError(f"op must be 'wedge' or 'vee', got {op!r}")
    operation = a.wedge if op == "wedge" else a.vee
    label = f"{op}(x, y) = {op}(y, x)"

    if a.elements is not None:
        for x, y in product(a.elements, repeat=2):
            left, right = operation(x, y), operation(y, x)
            if left != right:
                return Witness(inputs=(x, y), lhs=left, rhs=right, note=label)
        return None

    pool: list[Element] = []
    for e in a.boundary:
        if e not in pool:
            pool.append(e)
    if a.sample is not None:
        rng = random.Random(seed)
        attempts = 0
        while len(pool) * len(pool) < budget and attempts < 4 * budget:
            attempts += 1
            candidate = a.sample(rng)
            if candidate not in pool:
                pool.append(candidate)
    tried = 0
    for x in pool:
        for y in pool:
            if tried >= budget:
                return None
            tried += 1
            left, right = operation(x, y), operation(y, x)
            if left != right:
                return Witness(inputs=(x, y), lhs=left, rhs=right, note=label)
    return None
