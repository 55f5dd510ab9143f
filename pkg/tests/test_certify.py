import random

import pytest

import facelex as fx
from helpers import af, assert_witness_valid, pt


def fd(*indices):
    return fx.FaceDescriptor(tuple(indices))


class TestCertify:
    def test_vertex_gets_sum_of_tight_slacks(self, square):
        cert = fx.certify(square, fd(0))
        assert isinstance(cert, fx.FaceCertificate)
        assert cert.rank == 1
        f = cert.cortege.functionals[0]
        assert (tuple(f.linear.coeffs), f.offset) == ((1, 1), 0)
        assert cert.chain == (square.all_indices(), fd(0))

    def test_edge_gets_single_slack(self, square):
        cert = fx.certify(square, fd(0, 1))
        f = cert.cortege.functionals[0]
        assert (tuple(f.linear.coeffs), f.offset) == ((0, 1), 0)

    def test_diagonal_yields_witness(self, square):
        result = fx.certify(square, fd(0, 2))
        assert isinstance(result, fx.NotAFace)
        assert_witness_valid(square, fd(0, 2), result)
        # the offending vertex comes from the true smallest face (the square)
        assert result.witness[0] in square.vertices

    def test_improper_face_rejected(self, square):
        with pytest.raises(fx.ImproperFaceError):
            fx.certify(square, square.all_indices())

    def test_empty_face_rejected(self, square):
        with pytest.raises(fx.EmptyFaceError):
            fx.certify(square, fx.FaceDescriptor(()))

    def test_certificate_nonnegative_and_tight_exactly_on_face(self, cube3):
        for face in cube3.proper_faces():
            cert = fx.certify(cube3, face)
            assert isinstance(cert, fx.FaceCertificate)
            u = cert.step_function()
            for i, v in enumerate(cube3.vertices):
                value = u(v)
                assert value >= 0
                assert (value == 0) == (i in face.as_set())


class TestChainCertificate:
    def test_square_vertex_chain(self, square):
        cert = fx.chain_certificate(square, fd(0))
        assert [tuple(f.linear.coeffs) for f in cert.cortege.functionals] == [(1, 0), (0, 1)]
        assert [d.vertex_indices for d in cert.chain] == [(0, 1, 2, 3), (0, 3), (0,)]

    def test_square_edge_rank_one(self, square):
        cert = fx.chain_certificate(square, fd(0, 1))
        assert cert.rank == 1
        assert [d.vertex_indices for d in cert.chain] == [(0, 1, 2, 3), (0, 1)]

    def test_cube_vertex_rank_three(self, cube3):
        vertex = fd(0)
        cert = fx.chain_certificate(cube3, vertex)
        assert cert.rank == 3
        dims = [len(d) for d in cert.chain]
        assert dims[0] == 8 and dims[-1] == 1

    def test_not_a_face_raises(self, square):
        with pytest.raises(fx.NotAFaceError):
            fx.chain_certificate(square, fd(0, 2))

    def test_chain_steps_are_argmin_faces(self, cube3, octa):
        """Each chain element is the exact vertex argmin of its level over the
        previous element (independent of the zero-set route used to build it)."""
        for polytope in (cube3, octa):
            for face in polytope.proper_faces():
                cert = fx.chain_certificate(polytope, face)
                for level, functional in enumerate(cert.cortege.functionals, start=1):
                    prev = cert.chain[level - 1].vertex_indices
                    values = {i: functional.linear(polytope.vertices[i]) for i in prev}
                    best = min(values.values())  # each level bottoms out on the next face
                    argmin = tuple(i for i in prev if values[i] == best)
                    assert argmin == cert.chain[level].vertex_indices

    def test_rank_bounded_by_codimension(self, fixture_polytopes):
        for name in ("unit-square", "3-simplex", "octahedron"):
            polytope = fixture_polytopes[name]
            for face in polytope.proper_faces():
                cert = fx.chain_certificate(polytope, face)
                codim = polytope.dim - polytope.face_polytope(face).dim
                assert 1 <= cert.rank <= codim

    def test_linear_parts_independent(self, cube3):
        for face in cube3.proper_faces():
            cert = fx.chain_certificate(cube3, face)
            assert fx.linear_independent(cert.cortege.linear_parts())


class TestVerifyCertificate:
    def test_accepts_both_constructions(self, simplex3):
        for face in simplex3.proper_faces():
            rank1 = fx.certify(simplex3, face)
            chain = fx.chain_certificate(simplex3, face)
            assert fx.verify_certificate(simplex3, face, rank1).accepted
            assert fx.verify_certificate(simplex3, face, chain).accepted

    def test_rejects_negative_level(self, square):
        bad = fx.FaceCertificate(
            cortege=fx.Cortege((af([1, -1]),)),
            chain=(square.all_indices(), fd(0)),
        )
        verdict = fx.verify_certificate(square, fd(0), bad)
        assert not verdict.accepted
        assert "negative" in verdict.reason

    def test_rejects_chain_not_starting_at_whole(self, square):
        bad = fx.FaceCertificate(
            cortege=fx.Cortege((af([1, 1]),)),
            chain=(fd(0), fd(0)),
        )
        assert fx.verify_certificate(square, fd(0), bad).reason == "chain_start"

    def test_rejects_wrong_final_face(self, square):
        cert = fx.certify(square, fd(0))
        assert fx.verify_certificate(square, fd(1), cert).reason == "chain_end"

    def test_rejects_wrong_chain_length(self, square):
        cert = fx.certify(square, fd(0))
        clipped = fx.FaceCertificate(cortege=cert.cortege, chain=(square.all_indices(),))
        assert fx.verify_certificate(square, fd(0), clipped).reason == "chain_length"

    def test_rejects_zero_set_mismatch(self, square):
        bad = fx.FaceCertificate(
            cortege=fx.Cortege((af([0, 1]),)),  # vanishes on the whole bottom edge
            chain=(square.all_indices(), fd(0)),
        )
        verdict = fx.verify_certificate(square, fd(0), bad)
        assert verdict.reason == "level_1_zero_set_mismatch"


class TestEquivalenceReport:
    def test_all_legs_pass_for_vertex(self, square):
        report = fx.equivalence_report(square, fd(0))
        assert (report.a, report.b, report.c, report.d) == (True, True, True, True)
        assert report.consistent

    def test_consistent_negative_for_diagonal(self, square):
        report = fx.equivalence_report(square, fd(0, 2))
        assert report.a is False and report.d is False
        assert report.b is None and report.c is None
        assert report.consistent and not report.is_face

    def test_simplex_all_proper_faces(self, simplex3):
        for face in simplex3.proper_faces():
            report = fx.equivalence_report(simplex3, face)
            assert report.consistent and report.is_face

    def test_random_non_faces_are_consistent(self, cube3):
        rng = random.Random(42)
        faces = set(cube3.all_faces())
        n = len(cube3.vertices)
        checked = 0
        while checked < 25:
            size = rng.randint(1, n - 1)
            candidate = fx.FaceDescriptor(tuple(rng.sample(range(n), size)))
            if candidate in faces:
                continue
            report = fx.equivalence_report(cube3, candidate)
            assert report.consistent and not report.is_face
            result = fx.certify(cube3, candidate)
            assert isinstance(result, fx.NotAFace)
            assert_witness_valid(cube3, candidate, result)
            checked += 1
