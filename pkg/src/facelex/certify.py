"""Step-affine face certificates for polytopes, and their verification.

A certificate for a face is a cortege together with the nested vertex-set
chain it carves out: level i is nonnegative on the previous chain element
and vanishes exactly on the next one, so the induced step-affine function
is nonnegative on the polytope and zero precisely on the certified face.
Verification replays those conditions on vertices, which suffices: each
level's zero set inside the previous element is an exposed face, so the
vertex checks propagate to the whole polytope.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .core import AffineFunctional, Point
from .errors import EmptyFaceError, ImproperFaceError, NotAFaceError
from .polytope import FaceDescriptor, Facet, Polytope
from .preorder import LexPreorder
from .sampling import sample_in_hull
from .stepaffine import Cortege, Region, StepAffineFunction

# Seed for the sampled leg of equivalence reports; fixed for reproducibility.
_EQUIVALENCE_SAMPLE_SEED = 0x5EED
_EQUIVALENCE_SAMPLES_BODY = 50
_EQUIVALENCE_SAMPLES_FACE = 20


@dataclass(frozen=True)
class FaceCertificate:
    """A cortege plus the vertex-set chain it cuts, ending at the face."""

    cortege: Cortege
    chain: tuple[FaceDescriptor, ...]

    @property
    def rank(self) -> int:
        return self.cortege.rank

    def face(self) -> FaceDescriptor:
        return self.chain[-1]

    def step_function(self) -> StepAffineFunction:
        return StepAffineFunction(self.cortege)


@dataclass(frozen=True)
class NotAFace:
    """Witness that a vertex set is not a face.

    ``witness = (w, z)``: both lie in the polytope, w outside the candidate
    hull, while the candidate's barycenter sits on the open segment (w, z).
    That is a literal violation of the face property.
    """

    witness: tuple[Point, Point]
    smallest_face: FaceDescriptor


@dataclass(frozen=True)
class Verification:
    accepted: bool
    reason: str | None = None


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the four face characterizations run side by side.

    ``a``: direct face test; ``b``: sign split of the certificate function
    separates the face from the rest of the body; ``c``: the induced
    lexicographic preorder minimizes exactly on the face; ``d``: a
    certificate was produced and verified.  For non-faces b and c are
    skipped (None) and consistency means a is false and d failed.
    """

    a: bool
    b: bool | None
    c: bool | None
    d: bool
    is_face: bool
    consistent: bool


def _check_proper(polytope: Polytope, face: FaceDescriptor) -> None:
    if not face.vertex_indices:
        raise EmptyFaceError("empty vertex set cannot be certified")
    polytope._check_descriptor(face)
    if face == polytope.all_indices():
        raise ImproperFaceError("the whole polytope is not a proper face")


def _tight_facets_at(polytope: Polytope, point: Point) -> list[Facet]:
    return [f for f in polytope.facets() if f.is_tight_at(point)]


def _slack_functional(facet: Facet) -> AffineFunctional:
    """The facet slack ``offset - functional(x)`` as an affine functional."""
    return AffineFunctional(-facet.functional, facet.offset)


def certify(polytope: Polytope, face: FaceDescriptor) -> FaceCertificate | NotAFace:
    """Rank-1 certificate for a face, or a violation witness for a non-face.

    For a face, the certificate function is the unweighted sum of the
    slacks of all facets tight at the candidate's barycenter: nonnegative
    on the polytope and zero exactly on the face.  For a non-face, the
    witness pairs a vertex w of the barycenter's true smallest face (not in
    the candidate) with a point z past the barycenter along b - w, stepped
    by ratio tests against that face's facets and halved once whenever the
    step would land on its boundary.
    """
    _check_proper(polytope, face)
    b = polytope.barycenter_of(face)
    smallest = polytope.smallest_face_containing(b)
    if smallest != face:
        w_index = next(i for i in smallest.vertex_indices if i not in face.as_set())
        w = polytope.vertices[w_index]
        host = polytope.face_polytope(smallest)
        direction = b - w
        t = Fraction(1)
        bounded = False
        for facet in host.facets():
            speed = facet.functional(direction)
            if speed > 0:
                bound = facet.slack(b) / speed
                if bound < t:
                    t, bounded = bound, True
                elif bound == t:
                    bounded = True
        if bounded:
            t = t / 2
        z = b + direction.scaled(t)
        return NotAFace(witness=(w, z), smallest_face=smallest)

    tight = _tight_facets_at(polytope, b)
    linear = -tight[0].functional
    offset = tight[0].offset
    for facet in tight[1:]:
        linear = linear + -facet.functional
        offset = offset + facet.offset
    cortege = Cortege((AffineFunctional(linear, offset),))
    return FaceCertificate(cortege=cortege, chain=(polytope.all_indices(), face))


def chain_certificate(polytope: Polytope, face: FaceDescriptor) -> FaceCertificate:
    """Nested-face certificate built from the facets tight on the face.

    Tight facets are processed in ascending normalized order; a facet is
    skipped when the current chain element already lies on it (its slack is
    identically zero there, so it cannot cut).  Every kept slack exposes
    the next chain element inside the previous one, and the construction
    stops once the chain reaches the face.
    """
    _check_proper(polytope, face)
    if not polytope.is_face(face):
        raise NotAFaceError(f"{face.vertex_indices} is not a face")
    b = polytope.barycenter_of(face)
    chain = [polytope.all_indices()]
    functionals: list[AffineFunctional] = []
    current = chain[0].as_set()
    for facet in _tight_facets_at(polytope, b):
        tight_set = frozenset(facet.tight_vertices)
        if current <= tight_set:
            continue
        functionals.append(_slack_functional(facet))
        current = current & tight_set
        chain.append(FaceDescriptor(tuple(current)))
        if current == face.as_set():
            break
    assert chain[-1] == face, "tight-facet chain must terminate at the face"
    return FaceCertificate(cortege=Cortege(tuple(functionals)), chain=tuple(chain))


def verify_certificate(
    polytope: Polytope, face: FaceDescriptor, certificate: FaceCertificate
) -> Verification:
    """Total, exact certificate check; rejects pinpoint the first failure.

    Cortege validity itself is enforced by the Cortege type at
    construction, so verification concentrates on the chain: it must start
    at the full vertex set, end at the claimed face, and each level must be
    nonnegative on the previous element's vertices with zero set exactly
    the next element.
    """
    functionals = certificate.cortege.functionals
    chain = certificate.chain
    if len(chain) != len(functionals) + 1:
        return Verification(False, "chain_length")
    vertex_count = len(polytope.vertices)
    for descriptor in chain:
        if not descriptor.vertex_indices:
            return Verification(False, "chain_indices")
        if descriptor.vertex_indices[0] < 0 or descriptor.vertex_indices[-1] >= vertex_count:
            return Verification(False, "chain_indices")
    if chain[0] != polytope.all_indices():
        return Verification(False, "chain_start")
    if chain[-1] != face:
        return Verification(False, "chain_end")
    for level, functional in enumerate(functionals, start=1):
        zero: list[int] = []
        for index in chain[level - 1].vertex_indices:
            value = functional(polytope.vertices[index])
            if value < 0:
                return Verification(False, f"level_{level}_negative_at_vertex_{index}")
            if value == 0:
                zero.append(index)
        if tuple(zero) != chain[level].vertex_indices:
            return Verification(False, f"level_{level}_zero_set_mismatch")
    return Verification(True, None)


def equivalence_report(polytope: Polytope, face: FaceDescriptor) -> EquivalenceReport:
    """Run all four face characterizations and report their agreement."""
    _check_proper(polytope, face)
    leg_a = polytope.is_face(face)
    result = certify(polytope, face)
    if isinstance(result, NotAFace):
        return EquivalenceReport(
            a=leg_a, b=None, c=None, d=False, is_face=False, consistent=not leg_a
        )
    leg_d = verify_certificate(polytope, face, result).accepted

    u = result.step_function()
    leg_b = _sign_split_leg(polytope, face, u)

    linear_part, _anchor = u.decompose()
    preorder = LexPreorder(linear_part.cortege.linear_parts())
    leg_c = preorder.min_set(polytope) == face

    consistent = leg_a and leg_b and leg_c and leg_d
    return EquivalenceReport(
        a=leg_a, b=leg_b, c=leg_c, d=leg_d, is_face=leg_a, consistent=consistent
    )


def _sign_split_leg(polytope: Polytope, face: FaceDescriptor, u: StepAffineFunction) -> bool:
    """Zero manifold picks out exactly the face; the rest is strictly positive.

    Checked exactly on every vertex, then on seeded samples from the body
    and from the face hull, where the sign must match hull membership.
    """
    members = face.as_set()
    for index, vertex in enumerate(polytope.vertices):
        region = u.classify(vertex)
        expected = Region.ZERO_MANIFOLD if index in members else Region.POSITIVE_SIDE
        if region is not expected:
            return False
    rng = random.Random(_EQUIVALENCE_SAMPLE_SEED)
    face_hull = polytope.face_polytope(face)
    samples = [
        sample_in_hull(rng, polytope.vertices) for _ in range(_EQUIVALENCE_SAMPLES_BODY)
    ] + [
        sample_in_hull(rng, face_hull.vertices) for _ in range(_EQUIVALENCE_SAMPLES_FACE)
    ]
    for point in samples:
        value = u.evaluate(point)
        if value < 0:
            return False
        if (value == 0) != face_hull.contains(point):
            return False
    return True
