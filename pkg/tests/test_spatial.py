"""Spatial frame recovery, curve integration, and the pair tangent relations."""

import math

import numpy as np
import pytest

from quatcurve import (FrenetFrame4, InvoluteParams, NotSpatial, build_curve,
                       associated_spatial_curve, discrete_curvature,
                       discrete_torsion, frenet_apparatus, rigid_align,
                       spatial_frame, spatial_pair_check, spatial_tangent)
from quatcurve.quaternions import qmul_vec4

SQRT2 = math.sqrt(2.0)

PE = build_curve({"type": "paper_example"})
DH = build_curve({"type": "double_helix", "a": 0.8, "p": 1.0, "b": 0.3,
                  "q": -2.0})


def closed_form_alpha(grid):
    return np.stack([grid / SQRT2, SQRT2 * np.cos(grid / 2),
                     SQRT2 * np.sin(grid / 2)], axis=1)


class TestSpatialFrame:
    def test_identity_like_frame(self):
        frame = FrenetFrame4(
            s=0.0,
            T=np.array([0.0, 0, 0, 1]),  # e4
            N=np.array([1.0, 0, 0, 0]),  # e1
            B=np.array([0.0, 1, 0, 0]),  # e2
            E=np.array([0.0, 0, 1, 0]),  # e3
            kappa=1.0, k=1.0, bitorsion=0.0, eta=1)
        sp = spatial_frame(frame)
        np.testing.assert_array_equal(sp.t.to_vec4(), [1, 0, 0, 0])
        np.testing.assert_array_equal(sp.n.to_vec4(), [0, 1, 0, 0])
        np.testing.assert_array_equal(sp.b.to_vec4(), [0, 0, 1, 0])

    @pytest.mark.parametrize("curve", [PE, DH], ids=["pe", "dh"])
    def test_recovered_vectors_spatial_unit_orthogonal(self, curve):
        for s in np.linspace(0.2, 11.0, 15):
            sp = spatial_frame(frenet_apparatus(curve, s))
            vecs = [sp.t.to_vec4(), sp.n.to_vec4(), sp.b.to_vec4()]
            for v in vecs:
                assert abs(v[3]) < 1e-9
                assert np.dot(v, v) == pytest.approx(1.0, abs=1e-9)
            for i in range(3):
                for j in range(i + 1, 3):
                    assert abs(np.dot(vecs[i], vecs[j])) < 1e-9

    @pytest.mark.parametrize("curve", [PE, DH], ids=["pe", "dh"])
    def test_reconstruction_identities(self, curve):
        for s in (0.4, 2.6, 7.7):
            frame = frenet_apparatus(curve, s)
            sp = spatial_frame(frame)
            np.testing.assert_allclose(qmul_vec4(sp.t.to_vec4(), frame.T),
                                       frame.N, atol=1e-9)
            np.testing.assert_allclose(qmul_vec4(sp.n.to_vec4(), frame.T),
                                       frame.B, atol=1e-9)
            np.testing.assert_allclose(qmul_vec4(sp.b.to_vec4(), frame.T),
                                       frame.E, atol=1e-9)

    def test_curvature_correspondence(self):
        frame = frenet_apparatus(PE, 1.0)
        sp = spatial_frame(frame)
        assert sp.k == pytest.approx(SQRT2 / 4, abs=1e-12)
        assert sp.r == pytest.approx(SQRT2 / 4, abs=1e-12)

    def test_rejects_non_orthonormal_frame(self):
        frame = frenet_apparatus(PE, 1.0)
        from dataclasses import replace
        skewed = replace(frame, N=(frame.N + 0.5 * frame.T)
                         / np.linalg.norm(frame.N + 0.5 * frame.T))
        with pytest.raises(NotSpatial):
            spatial_frame(skewed)


class TestAssociatedCurve:
    def test_matches_closed_form_after_alignment(self):
        grid = np.linspace(0.0, 2 * math.pi, 257)
        alpha = associated_spatial_curve(PE, grid, anchor=(0.0, SQRT2, 0.0))
        _, rms = rigid_align(alpha, closed_form_alpha(grid))
        assert rms < 1e-5

    def test_single_point_grid(self):
        out = associated_spatial_curve(PE, [1.0], anchor=(1.0, 2.0, 3.0))
        np.testing.assert_array_equal(out, [[1.0, 2.0, 3.0]])

    def test_unit_speed_in_r3(self):
        grid = np.linspace(0.0, 3.0, 301)
        alpha = associated_spatial_curve(PE, grid, anchor=(0.0, 0.0, 0.0))
        seg = np.linalg.norm(np.diff(alpha, axis=0), axis=1)
        h = grid[1] - grid[0]
        assert np.max(np.abs(seg - h)) < 1e-6

    def test_discrete_curvature_and_torsion(self):
        grid = np.linspace(0.0, 2 * math.pi, 513)
        alpha = associated_spatial_curve(PE, grid, anchor=(0.0, SQRT2, 0.0))
        curv = discrete_curvature(alpha)
        tors = discrete_torsion(alpha)
        assert np.max(np.abs(curv - SQRT2 / 4)) < 1e-4
        assert np.max(np.abs(tors - SQRT2 / 4)) < 1e-4

    def test_spatial_tangent_matches_frame(self):
        for s in (0.3, 1.9):
            frame = frenet_apparatus(PE, s)
            sp = spatial_frame(frame)
            np.testing.assert_allclose(spatial_tangent(PE, s), sp.t.vector,
                                       atol=1e-12)


class TestRigidAlign:
    def test_recovers_known_rotation(self):
        rng = np.random.default_rng(3)
        P = rng.normal(size=(40, 3))
        angle = 0.7
        R = np.array([[math.cos(angle), -math.sin(angle), 0],
                      [math.sin(angle), math.cos(angle), 0],
                      [0, 0, 1.0]])
        Q = P @ R.T + np.array([1.0, -2.0, 0.5])
        aligned, rms = rigid_align(P, Q)
        assert rms < 1e-12
        np.testing.assert_allclose(aligned, Q, atol=1e-12)

    def test_never_reflects(self):
        rng = np.random.default_rng(4)
        P = rng.normal(size=(20, 3))
        Q = P.copy()
        Q[:, 0] = -Q[:, 0]  # a reflection of P
        _, rms = rigid_align(P, Q)
        assert rms > 1e-3  # proper rotations cannot reach a reflection


class TestPairCheck:
    def test_paper_example_pair(self):
        report = spatial_pair_check(PE, InvoluteParams(4.0),
                                    np.linspace(0.2, 3.5, 30))
        np.testing.assert_allclose(report.h_tt, 1 / SQRT2, atol=1e-6)
        assert report.max_n_component < 1e-6
        assert report.min_abs_h_tt > 0.5

    def test_double_helix_pair(self):
        report = spatial_pair_check(DH, InvoluteParams(9.0),
                                    np.linspace(0.2, 3.5, 30))
        np.testing.assert_allclose(report.h_tt, report.expected_h_tt,
                                   atol=1e-6)
        assert report.max_n_component < 1e-6
