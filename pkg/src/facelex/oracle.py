"""Brute-force reference implementations used to cross-check the main paths.

These oracles trade speed for independence: they reach the same answers
through definitionally different routes, so agreement is meaningful.  They
ship in the library (not only in the tests) to back the CLI --cross-check
flag.  All randomness flows through an explicit seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .core import LinearFunctional, Point
from .errors import SizeGuardExceededError
from .polytope import FaceDescriptor, Polytope
from .sampling import sample_in_hull

# Documented default seed for the randomized refuter: reproducible CI runs.
DEFAULT_REFUTER_SEED = 7193

_MAX_VERTICES = 12
_MAX_DIM = 4
_MAX_FACETS = 16  # candidate functionals grow as 2**facets


def oracle_faces(polytope: Polytope) -> tuple[FaceDescriptor, ...]:
    """Face enumeration by recursive-exposure closure.

    Start from the whole vertex set; for every known face, minimize every
    sum of a subset of inward facet normals of its hull and record the
    argmin vertex sets; iterate to a fixpoint.  This never intersects
    tight sets, so it is independent of the facet-intersection route.
    """
    if len(polytope.vertices) > _MAX_VERTICES or polytope.ambient_dim > _MAX_DIM:
        raise SizeGuardExceededError(
            f"oracle_faces guard: at most {_MAX_VERTICES} vertices in dim {_MAX_DIM}"
        )
    known: set[FaceDescriptor] = {polytope.all_indices()}
    queue = [polytope.all_indices()]
    while queue:
        face = queue.pop()
        sub = polytope.face_polytope(face)
        facets = sub.facets()
        if len(facets) > _MAX_FACETS:
            raise SizeGuardExceededError(
                f"oracle_faces guard: {len(facets)} facets exceed {_MAX_FACETS}"
            )
        inward = [-f.functional for f in facets]
        local = list(face.vertex_indices)  # sub vertex k is polytope vertex local[k]
        for mask in range(1, 1 << len(inward)):
            coeffs = [0] * polytope.ambient_dim
            for bit, normal in enumerate(inward):
                if mask >> bit & 1:
                    coeffs = [a + b for a, b in zip(coeffs, normal.coeffs)]
            functional = LinearFunctional(tuple(coeffs))
            values = [functional(v) for v in sub.vertices]
            best = min(values)
            argmin = FaceDescriptor(
                tuple(local[k] for k, v in enumerate(values) if v == best)
            )
            if argmin not in known:
                known.add(argmin)
                queue.append(argmin)
    return tuple(sorted(known, key=lambda f: (len(f), f.vertex_indices)))


def oracle_lex_argmin(
    polytope: Polytope, levels: Sequence[LinearFunctional]
) -> FaceDescriptor:
    """Lexicographic minimizers via whole value tuples, no sequential filtering."""
    tuples = [
        tuple(level(v) for level in levels) for v in polytope.vertices
    ]
    best = min(tuples)
    return FaceDescriptor(tuple(i for i, t in enumerate(tuples) if t == best))


def oracle_refute_face(
    polytope: Polytope,
    candidate: FaceDescriptor,
    trials: int,
    seed: int = DEFAULT_REFUTER_SEED,
) -> tuple[Point, Point] | None:
    """Randomized search for a segment violating the face property.

    Each trial draws a point m inside the candidate's hull and an endpoint
    u in the polytope, then extends the ray from u through m to a second
    endpoint v still inside the polytope, so m lies on the open segment
    (u, v) by construction (the bias that makes exact hits possible).  A
    pair is returned only when it exactly violates the face property, so a
    witness is sound; None proves nothing.
    """
    if trials < 1:
        raise ValueError("at least one trial required")
    polytope._check_descriptor(candidate)
    hull = polytope.face_polytope(candidate)
    rng = random.Random(seed)
    step_choices = [Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
    for _ in range(trials):
        m = sample_in_hull(rng, hull.vertices, positive=True)
        u = sample_in_hull(rng, polytope.vertices)
        if u == m:
            continue
        step = rng.choice(step_choices)
        v = m + (m - u).scaled(step)
        if not polytope.contains(v):
            continue
        if not hull.contains(u) or not hull.contains(v):
            return (u, v)
    return None
