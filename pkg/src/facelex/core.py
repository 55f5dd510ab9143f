"""Exact rational scalars, points, functionals, and affine-manifold algebra.

Every scalar is an arbitrary-precision rational and no operation ever
rounds; equality below always means exact equality.  All value types are
immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatchError

# Exact scalar type used throughout: arbitrary-precision numerator, positive
# denominator, always in lowest terms.  fractions.Fraction guarantees all
# three invariants.
Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse a decimal-free rational literal: ``"p/q"`` or ``"p"``."""
    body = text.strip()
    num_text, slash, den_text = body.partition("/")
    try:
        num = int(num_text)
        den = int(den_text) if slash else 1
    except ValueError as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Render a rational as lowest-terms ``"p/q"``, or ``"p"`` for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _require_same_dim(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatchError(f"dimension mismatch: {a} vs {b}")


def _as_fractions(values: Iterable[Fraction | int | str]) -> tuple[Fraction, ...]:
    out = []
    for v in values:
        if isinstance(v, str):
            out.append(parse_rational(v))
        else:
            out.append(Fraction(v))
    return tuple(out)


@dataclass(frozen=True)
class Point:
    """A point (or displacement vector) with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _as_fractions(self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> Fraction:
        return self.coords[index]

    def __add__(self, other: Point) -> Point:
        _require_same_dim(self.dim, other.dim)
        return Point(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Point) -> Point:
        _require_same_dim(self.dim, other.dim)
        return Point(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Point:
        return Point(tuple(-a for a in self.coords))

    def scaled(self, factor: Fraction | int) -> Point:
        factor = Fraction(factor)
        return Point(tuple(factor * a for a in self.coords))

    def __rmul__(self, factor: Fraction | int) -> Point:
        return self.scaled(factor)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


def origin(dim: int) -> Point:
    return Point((ZERO,) * dim)


def barycenter(points: Sequence[Point]) -> Point:
    """Uniform-weight average of a nonempty point sequence."""
    if not points:
        raise ValueError("barycenter of an empty point set")
    n = Fraction(len(points))
    total = points[0]
    for p in points[1:]:
        total = total + p
    return total.scaled(1 / n)


@dataclass(frozen=True)
class LinearFunctional:
    """A linear functional ``x -> sum(coeffs[k] * x[k])``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _as_fractions(self.coeffs))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __call__(self, x: Point) -> Fraction:
        _require_same_dim(self.dim, x.dim)
        return sum((c * v for c, v in zip(self.coeffs, x.coords)), ZERO)

    def __add__(self, other: LinearFunctional) -> LinearFunctional:
        _require_same_dim(self.dim, other.dim)
        return LinearFunctional(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> LinearFunctional:
        return LinearFunctional(tuple(-c for c in self.coeffs))

    def scaled(self, factor: Fraction | int) -> LinearFunctional:
        factor = Fraction(factor)
        return LinearFunctional(tuple(factor * c for c in self.coeffs))

    def primitive(self) -> LinearFunctional:
        """Positive rescaling to coprime integer coefficients."""
        return LinearFunctional(primitive_tuple(self.coeffs))


@dataclass(frozen=True)
class AffineFunctional:
    """An affine functional ``x -> linear(x) + offset``."""

    linear: LinearFunctional
    offset: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "offset", Fraction(self.offset))

    @property
    def dim(self) -> int:
        return self.linear.dim

    def is_constant(self) -> bool:
        return self.linear.is_zero()

    def __call__(self, x: Point) -> Fraction:
        return self.linear(x) + self.offset


def affine(coeffs: Iterable[Fraction | int | str], offset: Fraction | int | str = 0) -> AffineFunctional:
    """Convenience constructor for an affine functional."""
    off = parse_rational(offset) if isinstance(offset, str) else Fraction(offset)
    return AffineFunctional(LinearFunctional(tuple(coeffs)), off)


def primitive_tuple(values: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale a rational tuple by a positive rational into coprime integers.

    The zero tuple is returned unchanged; the sign pattern is preserved.
    """
    nonzero = [v for v in values if v != 0]
    if not nonzero:
        return tuple(Fraction(v) for v in values)
    common_den = lcm(*(v.denominator for v in nonzero))
    ints = [v * common_den for v in values]
    common = gcd(*(abs(v.numerator) for v in ints if v != 0))
    return tuple(Fraction(v, common) for v in ints)


def lead_positive(values: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Flip the sign so the first nonzero entry is positive."""
    for v in values:
        if v < 0:
            return tuple(-x for x in values)
        if v > 0:
            break
    return tuple(values)


# ---------------------------------------------------------------------------
# Exact Gaussian elimination.  Deterministic pivoting: columns left to right,
# first usable row.  All helpers work on plain lists of Fractions.
# ---------------------------------------------------------------------------


class IncrementalSpan:
    """Row-space tracker: add rows one at a time, query membership exactly."""

    def __init__(self, width: int) -> None:
        self.width = width
        self._rows: list[tuple[int, list[Fraction]]] = []  # (pivot column, reduced row)

    def _reduce(self, row: Sequence[Fraction]) -> list[Fraction]:
        vec = list(row)
        for pivot, base in self._rows:
            factor = vec[pivot]
            if factor != 0:
                vec = [a - factor * b for a, b in zip(vec, base)]
        return vec

    def contains(self, row: Sequence[Fraction]) -> bool:
        return all(v == 0 for v in self._reduce(row))

    def add(self, row: Sequence[Fraction]) -> bool:
        """Insert a row; return True when it enlarged the span."""
        vec = self._reduce(row)
        for col, value in enumerate(vec):
            if value != 0:
                normalized = [v / value for v in vec]
                self._rows.append((col, normalized))
                self._rows.sort(key=lambda item: item[0])
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self._rows)


def matrix_rank(rows: Sequence[Sequence[Fraction]], width: int) -> int:
    span = IncrementalSpan(width)
    for row in rows:
        span.add(row)
    return span.rank


def rref(rows: Sequence[Sequence[Fraction]], width: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form and pivot column list."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(width):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pivot = mat[r][col]
        mat[r] = [v / pivot for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def solve_linear_system(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], width: int
) -> list[Fraction] | None:
    """One exact solution of ``rows @ x = rhs`` (free variables set to 0)."""
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    mat, pivots = rref(augmented, width + 1)
    if width in pivots:
        return None  # a row reduced to 0 = 1
    solution = [ZERO] * width
    for row, col in zip(mat, pivots):
        solution[col] = row[width]
    return solution


def nullspace_basis(rows: Sequence[Sequence[Fraction]], width: int) -> list[list[Fraction]]:
    """Deterministic basis of the kernel, one vector per free column."""
    mat, pivots = rref(rows, width)
    pivot_set = set(pivots)
    basis: list[list[Fraction]] = []
    for free in range(width):
        if free in pivot_set:
            continue
        vec = [ZERO] * width
        vec[free] = ONE
        for row, col in zip(mat, pivots):
            vec[col] = -row[free]
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# Affine manifolds.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineManifold:
    """An affine manifold stored as a base point plus independent directions."""

    base: Point
    directions: tuple[Point, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "directions", tuple(self.directions))
        for d in self.directions:
            _require_same_dim(self.base.dim, d.dim)
        rows = [d.coords for d in self.directions]
        if matrix_rank(rows, self.base.dim) != len(rows):
            raise ValueError("manifold directions must be linearly independent")

    @property
    def ambient_dim(self) -> int:
        return self.base.dim

    @property
    def dim(self) -> int:
        return len(self.directions)

    @cached_property
    def _equations(self) -> tuple[AffineFunctional, ...]:
        rows = [d.coords for d in self.directions]
        normals = nullspace_basis(rows, self.ambient_dim)
        out = []
        for raw in normals:
            coeffs = lead_positive(primitive_tuple(raw))
            functional = LinearFunctional(coeffs)
            out.append(AffineFunctional(functional, -functional(self.base)))
        return tuple(out)

    def equations(self) -> tuple[AffineFunctional, ...]:
        """Affine functionals whose common zero set is exactly this manifold."""
        return self._equations

    def contains(self, p: Point) -> bool:
        _require_same_dim(self.ambient_dim, p.dim)
        return all(eq(p) == 0 for eq in self._equations)

    def point_at(self, coefficients: Sequence[Fraction | int]) -> Point:
        """``base + sum(c_k * direction_k)``."""
        if len(coefficients) != self.dim:
            raise ValueError("one coefficient per direction required")
        p = self.base
        for c, d in zip(coefficients, self.directions):
            p = p + d.scaled(c)
        return p


def linear_independent(functionals: Sequence[LinearFunctional]) -> bool:
    """Exact linear independence over the rationals (empty family: True)."""
    if not functionals:
        return True
    width = functionals[0].dim
    for f in functionals[1:]:
        _require_same_dim(width, f.dim)
    return matrix_rank([f.coeffs for f in functionals], width) == len(functionals)


def solve_affine_zero_set(
    functionals: Sequence[AffineFunctional], ambient_dim: int | None = None
) -> AffineManifold | None:
    """Solution manifold of ``f(x) = 0`` for all given affine functionals.

    Returns None when the system is infeasible.  The base point and the
    direction basis are deterministic (first-column pivoting, free
    variables zeroed, directions scaled to primitive lead-positive form).
    """
    if ambient_dim is None:
        if not functionals:
            raise ValueError("ambient_dim required for an empty system")
        ambient_dim = functionals[0].dim
    for f in functionals:
        _require_same_dim(ambient_dim, f.dim)
    rows = [f.linear.coeffs for f in functionals]
    rhs = [-f.offset for f in functionals]
    solution = solve_linear_system(rows, rhs, ambient_dim)
    if solution is None:
        return None
    directions = tuple(
        Point(lead_positive(primitive_tuple(vec)))
        for vec in nullspace_basis(rows, ambient_dim)
    )
    return AffineManifold(Point(tuple(solution)), directions)


def affine_hull(points: Sequence[Point]) -> AffineManifold:
    """Smallest affine manifold containing every input point."""
    if not points:
        raise ValueError("affine hull of an empty point set")
    base = points[0]
    for p in points[1:]:
        _require_same_dim(base.dim, p.dim)
    span = IncrementalSpan(base.dim)
    directions = []
    for p in points[1:]:
        delta = p - base
        if span.add(delta.coords):
            directions.append(Point(lead_positive(primitive_tuple(delta.coords))))
    return AffineManifold(base, tuple(directions))
