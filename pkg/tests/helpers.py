"""Shared constructors, samplers, and exact checkers for the test suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import facelex as fx
from facelex.sampling import sample_in_hull


def pt(*coords) -> fx.Point:
    return fx.Point(tuple(Fraction(c) for c in coords))


def lf(*coeffs) -> fx.LinearFunctional:
    return fx.LinearFunctional(tuple(Fraction(c) for c in coeffs))


def af(coeffs, offset=0) -> fx.AffineFunctional:
    return fx.AffineFunctional(lf(*coeffs), Fraction(offset))


def step(*functionals) -> fx.StepAffineFunction:
    return fx.StepAffineFunction(fx.Cortege(tuple(functionals)))


def facet_triples(polytope: fx.Polytope) -> set[tuple[tuple[int, ...], int]]:
    """Facets as ((integer coefficients), integer offset) pairs for goldens."""
    out = set()
    for f in polytope.facets():
        out.add((tuple(int(c) for c in f.functional.coeffs), int(f.offset)))
    return out


# -- fixture polytopes -------------------------------------------------------

RANDOM_01_SPECS = ((2, 3), (3, 5), (3, 7), (4, 8), (4, 10))
RANDOM_01_SEED = 101


def simplex(dim: int) -> fx.Polytope:
    rows = [tuple(0 for _ in range(dim))]
    for i in range(dim):
        rows.append(tuple(1 if j == i else 0 for j in range(dim)))
    return fx.Polytope(rows)


def cube(dim: int) -> fx.Polytope:
    return fx.Polytope(list(itertools.product((0, 1), repeat=dim)))


def octahedron() -> fx.Polytope:
    rows = []
    for i in range(3):
        for sign in (1, -1):
            rows.append(tuple(sign if j == i else 0 for j in range(3)))
    return fx.Polytope(rows)


def unit_square() -> fx.Polytope:
    return fx.Polytope([(0, 0), (1, 0), (1, 1), (0, 1)])


def random_01_polytope(index: int) -> fx.Polytope:
    dim, count = RANDOM_01_SPECS[index]
    rng = random.Random((RANDOM_01_SEED << 8) | index)
    pool = [tuple(int(b) for b in format(i, f"0{dim}b")) for i in range(2**dim)]
    return fx.Polytope(rng.sample(pool, count))


def build_fixtures() -> dict[str, fx.Polytope]:
    fixtures = {
        "2-simplex": simplex(2),
        "3-simplex": simplex(3),
        "4-simplex": simplex(4),
        "unit-square": unit_square(),
        "3-cube": cube(3),
        "4-cube": cube(4),
        "octahedron": octahedron(),
    }
    for i in range(len(RANDOM_01_SPECS)):
        fixtures[f"random-01-{i}"] = random_01_polytope(i)
    return fixtures


# -- disk fixtures -----------------------------------------------------------


def cone_body() -> fx.DiskBody:
    return fx.DiskBody([((0, 0), 3), ((5, 0), 0)])


def stadium_body() -> fx.DiskBody:
    return fx.DiskBody([((0, 0), 1), ((4, 0), 1)])


def circle_point(center: fx.Point, radius: Fraction, t: Fraction) -> fx.Point:
    """Exact rational point on the circle via the tangent half-angle map."""
    denom = 1 + t * t
    return fx.Point(
        (
            center[0] + radius * (1 - t * t) / denom,
            center[1] + radius * 2 * t / denom,
        )
    )


def disk_body_samples(body: fx.DiskBody, rng: random.Random, count: int) -> list[fx.Point]:
    """Seeded rational points of the body: circle points (scaled inward),
    tangency-polygon combinations, edge points, and all edge endpoints."""
    samples: list[fx.Point] = []
    edges = body.edges()
    polygon = [p for e in edges for p in e.endpoints] + [
        d.center for d in body.disks if d.radius == 0
    ]
    for edge in edges:
        samples.append(edge.endpoints[0])
        samples.append(edge.endpoints[1])
    while len(samples) < count:
        kind = rng.randrange(3)
        if kind == 0:
            disk = body.disks[rng.randrange(len(body.disks))]
            t = Fraction(rng.randint(-12, 12), rng.randint(1, 12))
            rim = circle_point(disk.center, disk.radius, t)
            shrink = Fraction(rng.randint(0, 8), 8)
            samples.append(disk.center + (rim - disk.center).scaled(shrink))
        elif kind == 1 and polygon:
            samples.append(sample_in_hull(rng, polygon))
        elif edges:
            edge = edges[rng.randrange(len(edges))]
            lam = Fraction(rng.randint(0, 16), 16)
            a, b = edge.endpoints
            samples.append(a + (b - a).scaled(lam))
        else:
            samples.append(body.disks[0].center)
    return samples[:count]


# -- random validated families ------------------------------------------------


def random_preorder(rng: random.Random, dim: int, max_rank: int = 3) -> fx.LexPreorder:
    """A seeded validated preorder of rank <= min(max_rank, dim)."""
    rank = rng.randint(1, min(max_rank, dim))
    while True:
        levels = tuple(
            fx.LinearFunctional(tuple(Fraction(rng.randint(-3, 3)) for _ in range(dim)))
            for _ in range(rank)
        )
        try:
            return fx.LexPreorder(levels)
        except fx.InvalidCortegeError:
            continue


def random_cortege(rng: random.Random, dim: int, max_rank: int = 3) -> fx.Cortege:
    """A seeded validated cortege of affine functionals."""
    rank = rng.randint(1, min(max_rank, dim))
    while True:
        funcs = tuple(
            af(
                [rng.randint(-3, 3) for _ in range(dim)],
                Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            )
            for _ in range(rank)
        )
        try:
            return fx.Cortege(funcs)
        except fx.InvalidCortegeError:
            continue


def literal_first_nonzero(cortege: fx.Cortege, x: fx.Point) -> Fraction:
    """Reference evaluator: least index with a nonzero value, else zero."""
    hit = [f for f in cortege.functionals if f(x) != 0]
    if not hit:
        return Fraction(0)
    return hit[0](x)


def assert_witness_valid(polytope: fx.Polytope, face: fx.FaceDescriptor, result: fx.NotAFace) -> None:
    """Exactly check a non-face witness: both ends in the body, w outside the
    candidate hull, and the candidate barycenter on the open segment."""
    w, z = result.witness
    assert polytope.contains(w)
    assert polytope.contains(z)
    hull = polytope.face_polytope(face)
    assert not hull.contains(w)
    b = polytope.barycenter_of(face)
    assert hull.contains(b)
    delta = w - z
    k = next(i for i in range(delta.dim) if delta[i] != 0)
    alpha = (b[k] - z[k]) / (w[k] - z[k])
    assert 0 < alpha < 1
    assert w.scaled(alpha) + z.scaled(1 - alpha) == b


