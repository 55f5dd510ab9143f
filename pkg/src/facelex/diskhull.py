"""Planar convex hulls of rational disks and points.

These bodies are the non-polyhedral test bed: the boundary mixes circular
arcs with straight bitangent edges, and the point where an edge meets a
circle has a unique supporting line whose contact set is the whole edge.
Such tangency points are therefore not exposed by any linear functional,
yet they carry rank-2 step-affine certificates (edge slack first, then a
functional along the edge).

Support values in an arbitrary rational direction live in a quadratic
extension (center term plus radius times the direction norm), so exact
comparisons use :class:`QuadScalar`.  Fixtures are restricted to
configurations whose outer bitangents have rational coefficients; anything
else raises :class:`UnsupportedConfigurationError`.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

from .core import (
    AffineFunctional,
    LinearFunctional,
    Point,
    _require_same_dim,
    primitive_tuple,
)
from .errors import (
    UnsupportedConfigurationError,
    WholeBodyNotProperError,
    ZeroFunctionalError,
)
from .polytope import Polytope
from .stepaffine import Cortege


def exact_sqrt(value: Fraction) -> Fraction | None:
    """The exact rational square root, or None when irrational."""
    if value < 0:
        raise ValueError("square root of a negative rational")
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
        return Fraction(num_root, den_root)
    return None


def _square_free(n: int) -> tuple[int, int]:
    """Split n > 0 as k*k * m with m square-free; returns (k, m)."""
    k, m = 1, n
    d = 2
    while d * d <= m:
        while m % (d * d) == 0:
            m //= d * d
            k *= d
        d += 1
    return k, m


@total_ordering
@dataclass(frozen=True)
class QuadScalar:
    """An exact value ``rational + coeff * sqrt(radicand)``.

    Construction canonicalizes: the radicand is reduced to a square-free
    integer, and degenerate forms (zero coefficient, zero or square
    radicand) collapse to plain rationals.  Two values can be combined or
    compared only when their canonical radicands agree (or one side is
    rational); that is exactly the invariant the disk geometry maintains.
    """

    rational: Fraction
    coeff: Fraction = Fraction(0)
    radicand: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        a = Fraction(self.rational)
        b = Fraction(self.coeff)
        s = Fraction(self.radicand)
        if s < 0:
            raise ValueError("negative radicand")
        if b != 0 and s != 0:
            # sqrt(p/q) = sqrt(p*q)/q, then pull the square part out.
            n = s.numerator * s.denominator
            b = b / s.denominator
            k, m = _square_free(n)
            b *= k
            s = Fraction(m)
            if m == 1:
                a += b
                b = Fraction(0)
                s = Fraction(0)
        else:
            b = Fraction(0)
            s = Fraction(0)
        object.__setattr__(self, "rational", a)
        object.__setattr__(self, "coeff", b)
        object.__setattr__(self, "radicand", s)

    @classmethod
    def of(cls, value: Fraction | int) -> QuadScalar:
        return cls(Fraction(value))

    def is_rational(self) -> bool:
        return self.coeff == 0

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.rational

    def sign(self) -> int:
        a, b, s = self.rational, self.coeff, self.radicand
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # Opposite signs: compare the squares of the two magnitudes.
        lhs, rhs = a * a, b * b * s
        if lhs == rhs:
            return 0
        dominant_is_a = lhs > rhs
        if dominant_is_a:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def _merge_radicand(self, other: QuadScalar) -> Fraction:
        if self.coeff != 0 and other.coeff != 0 and self.radicand != other.radicand:
            raise ValueError("mixed radicands")
        return self.radicand if self.coeff != 0 else other.radicand

    def __add__(self, other: QuadScalar | Fraction | int) -> QuadScalar:
        if not isinstance(other, QuadScalar):
            other = QuadScalar.of(other)
        s = self._merge_radicand(other)
        return QuadScalar(self.rational + other.rational, self.coeff + other.coeff, s)

    def __radd__(self, other: Fraction | int) -> QuadScalar:
        return self + other

    def __neg__(self) -> QuadScalar:
        return QuadScalar(-self.rational, -self.coeff, self.radicand)

    def __sub__(self, other: QuadScalar | Fraction | int) -> QuadScalar:
        if not isinstance(other, QuadScalar):
            other = QuadScalar.of(other)
        return self + (-other)

    def __rsub__(self, other: Fraction | int) -> QuadScalar:
        return (-self) + other

    def __mul__(self, other: QuadScalar | Fraction | int) -> QuadScalar:
        if not isinstance(other, QuadScalar):
            other = QuadScalar.of(other)
        s = self._merge_radicand(other)
        rational = self.rational * other.rational + self.coeff * other.coeff * s
        coeff = self.rational * other.coeff + self.coeff * other.rational
        return QuadScalar(rational, coeff, s)

    def __rmul__(self, other: Fraction | int) -> QuadScalar:
        return self * other

    def __lt__(self, other: QuadScalar | Fraction | int) -> bool:
        if not isinstance(other, QuadScalar):
            other = QuadScalar.of(other)
        return (self - other).sign() < 0

    def __repr__(self) -> str:
        if self.coeff == 0:
            return f"QuadScalar({self.rational})"
        return f"QuadScalar({self.rational} + {self.coeff}*sqrt({self.radicand}))"


@dataclass(frozen=True)
class Disk:
    """A closed disk with rational center and radius (radius 0: a point)."""

    center: Point
    radius: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.center.dim != 2:
            raise ValueError("disks live in the plane")
        if self.radius < 0:
            raise ValueError("negative radius")

    def contains(self, p: Point) -> bool:
        delta = p - self.center
        return sum(c * c for c in delta.coords) <= self.radius * self.radius


# -- face records -----------------------------------------------------------


@dataclass(frozen=True)
class Whole:
    """The body itself (its improper face)."""


@dataclass(frozen=True)
class Edge:
    """A straight boundary segment on a common tangent of two disks.

    ``normal(x) <= offset`` supports the body; the endpoints are the
    tangency points on ``disks[0]`` and ``disks[1]`` in that order.
    """

    disks: tuple[int, int]
    normal: LinearFunctional
    offset: Fraction
    endpoints: tuple[Point, Point]


@dataclass(frozen=True)
class ArcPoint:
    """The unique minimizer of ``direction`` on the body (a smooth boundary
    point of one disk, or the disk's center when its radius is zero)."""

    disk: int
    direction: LinearFunctional


@dataclass(frozen=True)
class TangencyPoint:
    """An edge endpoint lying on a positive-radius disk.

    Its only supporting line is the edge's, whose contact set is the whole
    edge, so this face is not exposed; it still has a rank-2 certificate.
    """

    edge: Edge
    end: int  # 0 or 1, selecting edge.endpoints

    @property
    def point(self) -> Point:
        return self.edge.endpoints[self.end]


@dataclass(frozen=True)
class ArcFamily:
    """A symbolic family of exposed point faces on one disk.

    The family covers the outward normals strictly between ``start`` and
    ``end`` counterclockwise (both None for a full circle).  On a
    zero-radius disk the family degenerates to the single center point.
    ``representative`` is a canonical concrete member for certification.
    """

    disk: int
    start: LinearFunctional | None
    end: LinearFunctional | None
    representative: ArcPoint


DiskFace = Whole | Edge | ArcPoint | TangencyPoint | ArcFamily


# -- direction utilities ----------------------------------------------------


def _perp(v: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    """Rotate a plane vector by +90 degrees."""
    return (-v[1], v[0])


def _cross(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _ccw_sort_key(v: Sequence[Fraction]):
    """Total order on primitive directions by counterclockwise angle from +x."""
    half = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    return half, _AngleWithin(half, (v[0], v[1]))


class _AngleWithin:
    """Comparison helper: within one half-turn, cross product orders angles."""

    def __init__(self, half: int, vec: tuple[Fraction, Fraction]):
        self.vec = vec

    def __lt__(self, other: "_AngleWithin") -> bool:
        return _cross(self.vec, other.vec) > 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _AngleWithin) and _cross(self.vec, other.vec) == 0


def _direction_between(start: Sequence[Fraction], end: Sequence[Fraction]) -> tuple[Fraction, Fraction]:
    """A rational direction strictly inside the CCW open arc from start to end.

    For coincident bounds the arc is the full circle minus one direction,
    for antipodal bounds a quarter turn lands inside, otherwise the sum of
    the bounds (or its negation, for the reflex case) does.
    """
    cross = _cross(start, end)
    if cross > 0:
        return (start[0] + end[0], start[1] + end[1])
    if cross < 0:
        return (-(start[0] + end[0]), -(start[1] + end[1]))
    dot = start[0] * end[0] + start[1] * end[1]
    if dot > 0:  # same direction: treat as the full circle minus this ray
        return (-start[0], -start[1])
    return _perp((start[0], start[1]))


# -- the body ---------------------------------------------------------------


class DiskBody:
    """Convex hull of finitely many rational disks and points in the plane."""

    def __init__(self, disks: Iterable[Disk | tuple]) -> None:
        items: list[Disk] = []
        seen: set[tuple] = set()
        for raw in disks:
            disk = raw if isinstance(raw, Disk) else Disk(Point(tuple(raw[0])), Fraction(raw[1]))
            key = (disk.center.coords, disk.radius)
            if key in seen:
                continue
            seen.add(key)
            items.append(disk)
        if not items:
            raise ValueError("a disk body needs at least one disk")
        self._disks = tuple(items)
        self._lock = threading.Lock()
        self._edges: tuple[Edge, ...] | None = None
        self._faces: tuple[DiskFace, ...] | None = None
        self._hull_polygon: Polytope | None = None
        self._hull_polygon_ready = False

    @property
    def disks(self) -> tuple[Disk, ...]:
        return self._disks

    # -- support ------------------------------------------------------------

    def _support_values_max(self, direction: LinearFunctional) -> list[QuadScalar]:
        s = sum(c * c for c in direction.coeffs)
        return [
            QuadScalar(direction(d.center), d.radius, s) for d in self._disks
        ]

    def support_min(self, direction: LinearFunctional) -> tuple[QuadScalar, DiskFace]:
        """Exact minimum of a nonzero functional over the body, with its face.

        The minimum over one disk is ``l(center) - radius * |l|``; the
        reported face is the arc point of the unique attaining disk, or the
        bitangent edge when two attain the value together.
        """
        _require_same_dim(2, direction.dim)
        if direction.is_zero():
            raise ZeroFunctionalError("support of the zero functional")
        s = sum(c * c for c in direction.coeffs)
        values = [
            QuadScalar(direction(d.center), -d.radius, s) for d in self._disks
        ]
        best = min(values)
        attaining = [i for i, v in enumerate(values) if v == best]
        if len(attaining) == 1:
            return best, ArcPoint(disk=attaining[0], direction=direction.primitive())
        outward = (-direction).primitive()
        for edge in self.edges():
            if edge.normal == outward:
                return best, edge
        raise UnsupportedConfigurationError(
            "multiple disks attain the support without a rational bitangent edge"
        )

    def arc_point_coordinates(self, face: ArcPoint) -> tuple[QuadScalar, QuadScalar]:
        """Exact coordinates of an arc point: ``center - r * l / |l|``."""
        disk = self._disks[face.disk]
        s = sum(c * c for c in face.direction.coeffs)
        coords = []
        for ck, lk in zip(disk.center.coords, face.direction.coeffs):
            # r * lk / sqrt(s) == (r * lk / s) * sqrt(s)
            coords.append(QuadScalar(ck, -disk.radius * lk / s, Fraction(s)))
        return coords[0], coords[1]

    # -- hull structure -----------------------------------------------------

    def edges(self) -> tuple[Edge, ...]:
        """All straight hull edges (outer bitangent contact segments)."""
        with self._lock:
            if self._edges is not None:
                return self._edges
        found: dict[tuple, Edge] = {}
        n = len(self._disks)
        for i in range(n):
            for j in range(i + 1, n):
                for normal in _outer_bitangent_normals(self._disks[i], self._disks[j]):
                    edge = self._edge_for_normal(normal)
                    if edge is not None:
                        found.setdefault((edge.normal.coeffs, edge.offset), edge)
        edges = tuple(sorted(found.values(), key=lambda e: (e.normal.coeffs, e.offset)))
        with self._lock:
            self._edges = edges
        return edges

    def _edge_for_normal(self, normal: LinearFunctional) -> Edge | None:
        """The hull edge supported by ``normal`` (max orientation), if any."""
        values = self._support_values_max(normal)
        best = max(values)
        attaining = [i for i, v in enumerate(values) if v == best]
        if len(attaining) < 2:
            return None
        norm_sq = sum(c * c for c in normal.coeffs)
        norm = exact_sqrt(Fraction(norm_sq))
        if norm is None and any(self._disks[i].radius > 0 for i in attaining):
            raise UnsupportedConfigurationError(
                f"bitangent with direction {normal.coeffs} has an irrational norm"
            )
        contact: list[tuple[int, Point]] = []
        for i in attaining:
            disk = self._disks[i]
            if disk.radius == 0:
                contact.append((i, disk.center))
            else:
                scale = disk.radius / norm  # type: ignore[operator]
                touch = disk.center + Point(normal.coeffs).scaled(scale)
                contact.append((i, touch))
        along = _perp((normal.coeffs[0], normal.coeffs[1]))
        keyed = sorted(
            contact, key=lambda item: along[0] * item[1][0] + along[1] * item[1][1]
        )
        first, last = keyed[0], keyed[-1]
        if first[1] == last[1]:
            return None  # degenerate single-point contact
        if not best.is_rational():
            raise UnsupportedConfigurationError(
                f"bitangent offset for direction {normal.coeffs} is irrational"
            )
        scaled = primitive_tuple(tuple(normal.coeffs) + (best.as_rational(),))
        return Edge(
            disks=(first[0], last[0]),
            normal=LinearFunctional(scaled[:-1]),
            offset=scaled[-1],
            endpoints=(first[1], last[1]),
        )

    def faces(self) -> tuple[DiskFace, ...]:
        """Symbolic face list: the body, edges, tangency points, arc families.

        Arc families are direction ranges, not enumerated points; families
        on zero-radius disks are single exposed corner points.
        """
        with self._lock:
            if self._faces is not None:
                return self._faces
        faces: list[DiskFace] = [Whole()]
        edges = self.edges()
        faces.extend(edges)
        for edge in edges:
            for end in (0, 1):
                if self._disks[edge.disks[end]].radius > 0:
                    faces.append(TangencyPoint(edge=edge, end=end))
        faces.extend(self._arc_families(edges))
        result = tuple(faces)
        with self._lock:
            self._faces = result
        return result

    def _arc_families(self, edges: Sequence[Edge]) -> list[ArcFamily]:
        families: list[ArcFamily] = []
        if not edges:
            dominant = self._dominant_disk()
            if self._disks[dominant].radius == 0:
                return []  # a single point has no proper faces
            representative = ArcPoint(disk=dominant, direction=LinearFunctional((Fraction(1), Fraction(0))))
            return [ArcFamily(disk=dominant, start=None, end=None, representative=representative)]
        for i in range(len(self._disks)):
            normals = sorted(
                {e.normal.coeffs for e in edges if i in e.disks}, key=_ccw_sort_key
            )
            if not normals:
                continue
            if len(normals) == 1:
                gaps = [(normals[0], normals[0])]
            else:
                gaps = [
                    (normals[k], normals[(k + 1) % len(normals)])
                    for k in range(len(normals))
                ]
            for start, end in gaps:
                probe = _direction_between(start, end)
                probe_f = LinearFunctional(primitive_tuple(probe))
                values = self._support_values_max(probe_f)
                best = max(values)
                attaining = [m for m, v in enumerate(values) if v == best]
                if attaining != [i]:
                    continue
                representative = ArcPoint(disk=i, direction=(-probe_f).primitive())
                families.append(
                    ArcFamily(
                        disk=i,
                        start=LinearFunctional(start),
                        end=LinearFunctional(end),
                        representative=representative,
                    )
                )
        families.sort(key=lambda fam: (fam.disk, fam.start.coeffs if fam.start else ()))
        return families

    def _dominant_disk(self) -> int:
        """The disk containing all others, for bodies without edges."""
        for i, big in enumerate(self._disks):
            ok = True
            for j, small in enumerate(self._disks):
                if i == j:
                    continue
                delta = small.center - big.center
                dist_sq = sum(c * c for c in delta.coords)
                reach = big.radius - small.radius
                if reach < 0 or dist_sq > reach * reach:
                    ok = False
                    break
            if ok:
                return i
        raise UnsupportedConfigurationError(
            "body has no straight edges and no dominant disk"
        )

    # -- membership ---------------------------------------------------------

    def _polygon(self) -> Polytope | None:
        with self._lock:
            if self._hull_polygon_ready:
                return self._hull_polygon
        corners: list[Point] = []
        for edge in self.edges():
            corners.extend(edge.endpoints)
        for disk in self._disks:
            if disk.radius == 0:
                corners.append(disk.center)
        polygon = None
        distinct = {p.coords for p in corners}
        if len(distinct) >= 2:
            polygon = Polytope(corners)
        with self._lock:
            self._hull_polygon = polygon
            self._hull_polygon_ready = True
        return polygon

    def contains(self, p: Point) -> bool:
        """Exact membership: inside some disk or inside the tangency polygon."""
        _require_same_dim(2, p.dim)
        if any(d.contains(p) for d in self._disks):
            return True
        polygon = self._polygon()
        return polygon is not None and polygon.contains(p)

    # -- certificates -------------------------------------------------------

    def certify(self, face: DiskFace) -> Cortege:
        """Step-affine certificate: rank 1 for exposed faces, rank 2 for
        tangency points (edge slack, then a functional along the edge)."""
        if isinstance(face, Whole):
            raise WholeBodyNotProperError("the body itself cannot be certified")
        if isinstance(face, ArcFamily):
            face = face.representative
        if isinstance(face, Edge):
            return Cortege((AffineFunctional(-face.normal, face.offset),))
        if isinstance(face, ArcPoint):
            value, reported = self.support_min(face.direction)
            if not (isinstance(reported, ArcPoint) and reported.disk == face.disk):
                raise ValueError(
                    f"direction {face.direction.coeffs} does not expose disk {face.disk}"
                )
            if not value.is_rational():
                raise UnsupportedConfigurationError(
                    "support value in this direction is irrational; "
                    "certify along a rational-norm direction instead"
                )
            return Cortege((AffineFunctional(face.direction, -value.as_rational()),))
        if isinstance(face, TangencyPoint):
            touch = face.point
            other = face.edge.endpoints[1 - face.end]
            slack = AffineFunctional(-face.edge.normal, face.edge.offset)
            along_coeffs = primitive_tuple((other - touch).coords)
            along = LinearFunctional(along_coeffs)
            return Cortege((slack, AffineFunctional(along, -along(touch))))
        raise TypeError(f"not a disk face: {face!r}")

    def is_exposed(self, face: DiskFace) -> bool:
        """Whether some linear functional attains its minimum exactly on the face.

        Decided structurally: edges and arc points are exposed by their
        supporting directions; a tangency point is not, because its only
        supporting line touches along the entire edge.
        """
        if isinstance(face, Whole):
            raise WholeBodyNotProperError("exposedness is asked of proper faces")
        if isinstance(face, ArcFamily):
            face = face.representative
        if isinstance(face, (Edge, ArcPoint)):
            return True
        if isinstance(face, TangencyPoint):
            return False
        raise TypeError(f"not a disk face: {face!r}")


def _outer_bitangent_normals(a: Disk, b: Disk) -> list[LinearFunctional]:
    """Primitive outward normals of the outer bitangent lines of two disks.

    The supporting condition ``n . (ca - cb) = (rb - ra) |n|`` squares to a
    homogeneous quadratic in the direction; rational roots exist exactly
    when the discriminant ``(rb - ra)^2 (dist^2 - (rb - ra)^2)`` is a
    rational square (irrational roots raise, per the fixture constraint).
    Nested disks have no outer bitangent; then the list is empty.
    """
    d = a.center - b.center
    if d.is_zero():
        return []
    k = b.radius - a.radius
    dx, dy = d.coords
    qa = dx * dx - k * k
    qb = 2 * dx * dy
    qc = dy * dy - k * k
    directions: list[tuple[Fraction, Fraction]] = []
    if k == 0:
        directions.append(_perp((dx, dy)))
        directions.append(_perp((-dx, -dy)))
    else:
        candidates: list[tuple[Fraction, Fraction]] = []
        if qa == 0:
            candidates.append((Fraction(1), Fraction(0)))
            if qb != 0:
                candidates.append((-qc / qb, Fraction(1)))
        else:
            disc = qb * qb - 4 * qa * qc
            if disc < 0:
                return []  # one disk nested in the other
            root = exact_sqrt(disc)
            if root is None:
                raise UnsupportedConfigurationError(
                    "outer bitangent direction is irrational for disks "
                    f"{a.center.coords}/{a.radius} and {b.center.coords}/{b.radius}"
                )
            for numerator in (-qb + root, -qb - root):
                candidates.append((numerator / (2 * qa), Fraction(1)))
        for cand in candidates:
            vec = primitive_tuple(cand)
            norm = exact_sqrt(Fraction(vec[0] * vec[0] + vec[1] * vec[1]))
            assert norm is not None  # squared condition forces a rational norm
            value = vec[0] * dx + vec[1] * dy
            if value == k * norm:
                directions.append((vec[0], vec[1]))
            elif -value == k * norm:
                directions.append((-vec[0], -vec[1]))
    out = []
    seen = set()
    for vec in directions:
        prim = primitive_tuple(vec)
        if prim not in seen:
            seen.add(prim)
            out.append(LinearFunctional(prim))
    return out
