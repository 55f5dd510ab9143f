"""V-representation polytopes with exact facet and face-lattice queries.

Facet enumeration is deliberately brute force (hyperplanes through every
affinely independent vertex subset): the targets are desk-scale fixtures
where exactness and auditability outrank speed.  Lower-dimensional
polytopes are handled intrinsically, in coordinates of their affine hull,
and results are mapped back to ambient coordinates.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import (
    AffineManifold,
    LinearFunctional,
    Point,
    _require_same_dim,
    affine_hull,
    barycenter,
    nullspace_basis,
    primitive_tuple,
    solve_linear_system,
)
from .errors import EmptyFaceError, NotAMemberError


@dataclass(frozen=True)
class FaceDescriptor:
    """A face named by the sorted set of polytope vertex indices it spans."""

    vertex_indices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertex_indices", tuple(sorted(set(self.vertex_indices))))

    def __len__(self) -> int:
        return len(self.vertex_indices)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.vertex_indices)

    def intersect(self, other: FaceDescriptor) -> FaceDescriptor:
        return FaceDescriptor(tuple(self.as_set() & other.as_set()))

    def issubset(self, other: FaceDescriptor) -> bool:
        return self.as_set() <= other.as_set()


@dataclass(frozen=True)
class Facet:
    """A facet inequality ``functional(x) <= offset``, tight on tight_vertices.

    Coefficients and offset are jointly scaled to coprime integers; the sign
    is fixed by the <= orientation over the polytope.
    """

    functional: LinearFunctional
    offset: Fraction
    tight_vertices: tuple[int, ...]

    def slack(self, x: Point) -> Fraction:
        return self.offset - self.functional(x)

    def is_tight_at(self, x: Point) -> bool:
        return self.slack(x) == 0


def _hull_facets(points: Sequence[Point]) -> list[tuple[LinearFunctional, Fraction, tuple[int, ...]]]:
    """Facets of conv(points) relative to its affine hull, in ambient form.

    Brute force: every hyperplane through an affinely independent d-subset
    (d the intrinsic dimension) is kept when all points lie weakly on one
    side, oriented as functional(x) <= offset, and deduplicated by the
    normalized (functional, offset) pair.
    """
    hull = affine_hull(points)
    d = hull.dim
    if d == 0:
        return []
    ambient = hull.ambient_dim

    if d == ambient:
        intrinsic = [p.coords for p in points]
        to_ambient = None
    else:
        # Intrinsic coordinates t with x = base + D t; D has independent
        # columns, so G = (D^T D)^{-1} D^T is an exact left inverse.
        columns = [dir_.coords for dir_ in hull.directions]  # rows here = D columns
        gram = [
            [sum(a * b for a, b in zip(columns[i], columns[j])) for j in range(d)]
            for i in range(d)
        ]
        g_rows: list[list[Fraction]] = []
        for k in range(ambient):
            rhs = [columns[i][k] for i in range(d)]
            col = solve_linear_system(gram, rhs, d)
            assert col is not None  # gram matrix of independent columns is invertible
            g_rows.append(col)
        # g_rows[k][j] = G[j][k]; intrinsic coords of x are G (x - base).
        base = hull.base

        def coords_of(p: Point) -> tuple[Fraction, ...]:
            delta = p - base
            return tuple(
                sum(g_rows[k][j] * delta.coords[k] for k in range(ambient))
                for j in range(d)
            )

        intrinsic = [coords_of(p) for p in points]
        to_ambient = (g_rows, base)

    found: dict[tuple[tuple[Fraction, ...], Fraction], tuple[LinearFunctional, Fraction, tuple[int, ...]]] = {}
    for subset in combinations(range(len(points)), d):
        rows = [list(intrinsic[i]) + [Fraction(-1)] for i in subset]
        kernel = nullspace_basis(rows, d + 1)
        if len(kernel) != 1:
            continue  # affinely dependent subset
        *w, c = kernel[0]
        values = [sum(wk * tk for wk, tk in zip(w, t)) for t in intrinsic]
        if all(v <= c for v in values):
            pass
        elif all(v >= c for v in values):
            w = [-wk for wk in w]
            c = -c
            values = [-v for v in values]
        else:
            continue
        tight = tuple(i for i, v in enumerate(values) if v == c)

        if to_ambient is None:
            coeffs: Sequence[Fraction] = w
            offset = c
        else:
            g_rows, base = to_ambient
            coeffs = [
                sum(w[j] * g_rows[k][j] for j in range(d)) for k in range(ambient)
            ]
            offset = c + sum(ck * bk for ck, bk in zip(coeffs, base.coords))

        normalized = primitive_tuple(tuple(coeffs) + (offset,))
        key = (normalized[:-1], normalized[-1])
        if key not in found:
            found[key] = (LinearFunctional(normalized[:-1]), normalized[-1], tight)
    return sorted(found.values(), key=lambda item: (item[0].coeffs, item[1]))


def _in_hull(p: Point, points: Sequence[Point]) -> bool:
    """Exact membership of p in conv(points) via facet enumeration."""
    hull = affine_hull(points)
    if not hull.contains(p):
        return False
    if hull.dim == 0:
        return True  # conv of coincident points is that single point
    for functional, offset, _tight in _hull_facets(points):
        if functional(p) > offset:
            return False
    return True


def _provably_extreme(p: Point, others: Sequence[Point]) -> bool:
    """Cheap screen: p strictly separated from the others by p - centroid."""
    centroid = barycenter(list(others) + [p])
    direction = p - centroid
    target = sum(a * b for a, b in zip(direction.coords, p.coords))
    for q in others:
        if sum(a * b for a, b in zip(direction.coords, q.coords)) >= target:
            return False
    return True


class Polytope:
    """A polytope given by its vertices, with exact face-lattice queries.

    The constructor canonicalizes rather than rejects: duplicate points and
    points expressible as convex combinations of the others are removed,
    and the removals are reported via :attr:`removed_points`.  The stored
    :attr:`vertices` are therefore exactly the extreme points of the hull,
    in first-seen input order.
    """

    def __init__(self, points: Iterable[Point | Sequence], *, assume_minimal: bool = False) -> None:
        pts: list[Point] = []
        removed: list[Point] = []
        seen: set[tuple[Fraction, ...]] = set()
        for raw in points:
            p = raw if isinstance(raw, Point) else Point(tuple(raw))
            if p.coords in seen:
                removed.append(p)
                continue
            seen.add(p.coords)
            pts.append(p)
        if not pts:
            raise ValueError("a polytope needs at least one point")
        ambient = pts[0].dim
        for p in pts[1:]:
            _require_same_dim(ambient, p.dim)

        if not assume_minimal:
            changed = True
            while changed and len(pts) > 1:
                changed = False
                for i, p in enumerate(pts):
                    others = pts[:i] + pts[i + 1 :]
                    if _provably_extreme(p, others):
                        continue
                    if _in_hull(p, others):
                        removed.append(p)
                        pts = others
                        changed = True
                        break

        self._vertices = tuple(pts)
        self._removed = tuple(removed)
        self._ambient_dim = ambient
        self._lock = threading.Lock()
        self._facets: tuple[Facet, ...] | None = None
        self._hull: AffineManifold | None = None
        self._faces: tuple[FaceDescriptor, ...] | None = None
        self._sub_polytopes: dict[FaceDescriptor, Polytope] = {}

    # -- basic structure ----------------------------------------------------

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self._vertices

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def removed_points(self) -> tuple[Point, ...]:
        """Input points dropped at construction (duplicates, non-extreme)."""
        return self._removed

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"Polytope({len(self._vertices)} vertices in dim {self._ambient_dim})"

    def hull_manifold(self) -> AffineManifold:
        with self._lock:
            if self._hull is None:
                self._hull = affine_hull(self._vertices)
            return self._hull

    @property
    def dim(self) -> int:
        """Intrinsic dimension (of the affine hull)."""
        return self.hull_manifold().dim

    def all_indices(self) -> FaceDescriptor:
        return FaceDescriptor(tuple(range(len(self._vertices))))

    def _check_descriptor(self, face: FaceDescriptor) -> None:
        if not face.vertex_indices:
            raise EmptyFaceError("empty vertex set")
        if face.vertex_indices[0] < 0 or face.vertex_indices[-1] >= len(self._vertices):
            raise IndexError(f"vertex index out of range in {face.vertex_indices}")

    def face_points(self, face: FaceDescriptor) -> tuple[Point, ...]:
        self._check_descriptor(face)
        return tuple(self._vertices[i] for i in face.vertex_indices)

    def barycenter_of(self, face: FaceDescriptor) -> Point:
        """Canonical relative-interior point of conv(face): uniform weights."""
        return barycenter(self.face_points(face))

    def face_polytope(self, face: FaceDescriptor) -> Polytope:
        """Sub-polytope spanned by a vertex subset (vertices stay in index order)."""
        self._check_descriptor(face)
        with self._lock:
            cached = self._sub_polytopes.get(face)
        if cached is not None:
            return cached
        sub = Polytope(self.face_points(face), assume_minimal=True)
        with self._lock:
            self._sub_polytopes.setdefault(face, sub)
        return sub

    # -- facets and membership ----------------------------------------------

    def facets(self) -> tuple[Facet, ...]:
        """Complete facet list relative to the affine hull.

        A 0-dimensional polytope has no facets and yields the empty tuple
        (the documented "no facets" sentinel, not an error).
        """
        with self._lock:
            if self._facets is None:
                self._facets = tuple(
                    Facet(functional, offset, tight)
                    for functional, offset, tight in _hull_facets(self._vertices)
                )
            return self._facets

    def contains(self, x: Point) -> bool:
        """Exact membership: x in aff(P) and every facet inequality holds."""
        _require_same_dim(self._ambient_dim, x.dim)
        if not self.hull_manifold().contains(x):
            return False
        return all(f.slack(x) >= 0 for f in self.facets())

    def smallest_face_containing(self, x: Point) -> FaceDescriptor:
        """Vertex set of the unique smallest face with x in its relative interior."""
        if not self.contains(x):
            raise NotAMemberError(f"point {x.coords} lies outside the polytope")
        tight = [f for f in self.facets() if f.is_tight_at(x)]
        if not tight:
            return self.all_indices()
        indices = frozenset(tight[0].tight_vertices)
        for f in tight[1:]:
            indices &= frozenset(f.tight_vertices)
        return FaceDescriptor(tuple(indices))

    # -- the face lattice ---------------------------------------------------

    def all_faces(self) -> tuple[FaceDescriptor, ...]:
        """Every nonempty face, as intersections of facet tight sets.

        Computed as the intersection closure of the facet tight sets
        together with the full vertex set; for a polytope every face is such
        an intersection, so the closure is the complete lattice minus the
        empty face.  Ordered by (size, indices) for reproducibility.
        """
        with self._lock:
            if self._faces is not None:
                return self._faces
        full = frozenset(range(len(self._vertices)))
        tights = [frozenset(f.tight_vertices) for f in self.facets()]
        seen = {full}
        queue = [full]
        while queue:
            current = queue.pop()
            for t in tights:
                nxt = current & t
                if nxt and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        faces = tuple(
            FaceDescriptor(tuple(s))
            for s in sorted(seen, key=lambda s: (len(s), tuple(sorted(s))))
        )
        with self._lock:
            self._faces = faces
        return faces

    def is_face(self, face: FaceDescriptor) -> bool:
        """Whether conv(face) is a face of the polytope.

        Decided via the barycenter b of the candidate: b lies in the
        relative interior of conv(face), so the smallest face containing b
        equals the candidate exactly when the candidate is a face.
        """
        self._check_descriptor(face)
        b = self.barycenter_of(face)
        return self.smallest_face_containing(b) == face

    def proper_faces(self) -> tuple[FaceDescriptor, ...]:
        full = self.all_indices()
        return tuple(f for f in self.all_faces() if f != full)
