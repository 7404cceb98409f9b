#!/usr/bin/env python3

"""
Test elab/reachability.py
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import third-party PyPI libraries
import numpy as np
import pandas as pd
import pytest

# Import local custom libraries
from elab.barriers import Barrier, FLAT_REGIONS
from elab.config import Box, SamplerConfig
from elab import reachability
from elab.errors import (CloudFormatError, EmptySlab, SeedMismatch,
                         StepFailure)
from elab.frames import COORDS3, martinet_projection, SampledCurve
from elab.IO.local import save_to_json
from elab.reachability import (abnormal_boundary_probe, Causal,
                               ControlPath, ControlPiece, draw_control_path,
                               inclusion_check, integrate_path,
                               monotonicity_check, null_ray_audit,
                               projection_consistency, ReachCloud,
                               sample_reachable)
from elab.report import Status
from elab.testers import Tester, TEST_SEED

SMALL = SamplerConfig(n_paths=60, batch_size=25)


def tiny_cloud(rows: list[tuple[float, float, float, float]],
               seed: int = TEST_SEED) -> ReachCloud:
    data = pd.DataFrame(rows, columns=["x", "y", "z", "w"])
    data.insert(0, "path_id", np.arange(len(rows)))
    data["length"] = 0.0
    data["truncated"] = False
    data["causal"] = Causal.Timelike.value
    return ReachCloud(data, seed, "Flat:test")


class TestControlPath(Tester):
    def test_validation(self) -> None:
        for piece in ((0.0, 1.0, 0.0), (1.0, 0.0, 1.0), (1.0, -1.0, 0.0),
                      (1.0, 1.0, 1.5)):
            with pytest.raises(ValueError):
                ControlPath((ControlPiece(*piece), ))

    def test_causal_and_length(self) -> None:
        null = ControlPath.from_arcs(("X+Y", "X-Y"), (0.2, 0.3))
        self.check_result(null.causal, Causal.Null)
        self.check_result(null.length, 0.0)
        mixed = ControlPath.from_arcs(("X", "X+Y"), (0.5, 0.25))
        self.check_result(mixed.causal, Causal.Mixed)
        self.check_result(mixed.length, 0.5)
        self.check_result(mixed.total_duration, 0.75)
        self.check_result(mixed.knots.tolist(), [0.0, 0.5, 0.75])

    def test_bang_bang_middle_arc(self) -> None:
        sc = SamplerConfig(strategy="BangBang")
        n_checked = 0
        for path_id in range(200):
            path = draw_control_path(path_id, sc, TEST_SEED)
            assert path.causal != Causal.Timelike
            assert path.total_duration <= sc.horizon
            controls = [(piece.u, piece.v) for piece in path.pieces]
            if len(controls) == 3 and (1.0, 0.0) not in controls:
                first, middle, last = (p.duration for p in path.pieces)
                assert middle >= first + last
                n_checked += 1
        assert n_checked > 0

    def test_hyperbolic_draws_are_timelike(self) -> None:
        sc = SamplerConfig(strategy="UniformHyperbolic")
        for path_id in range(20):
            path = draw_control_path(path_id, sc, TEST_SEED)
            self.check_result(path.causal, Causal.Timelike)
            self.check_result(len(path.pieces), sc.pieces_per_path)
        self.check_result(draw_control_path(3, sc, TEST_SEED),
                          draw_control_path(3, sc, TEST_SEED))


class TestIntegratePath(Tester):
    def test_flat_closed_forms(self) -> None:
        F, T = self.flat(), 0.7
        for u, v, end in ((1.0, 0.0, (T, 0, 0, 0)), (1.0, 1.0, (T, T, 0, 0)),
                          (1.0, -1.0, (T, -T, 0, 0))):
            result = integrate_path(F, ControlPath((ControlPiece(T, u, v), )))
            self.assert_close(result.endpoint, end, atol=1e-10)
            assert not result.truncated
        result = integrate_path(F, ControlPath.from_arcs(("X", "X+Y"),
                                                         (0.5, 0.3)))
        self.assert_close(result.length, 0.5)
        self.check_result(result.curve.piece_spans(), [(0, 32), (32, 64)])

    def test_truncated_at_box(self) -> None:
        box = Box(lo=(0.0, -1.0, -1.0, -1.0), hi=(0.4, 1.0, 1.0, 1.0))
        cp = ControlPath.from_arcs(("X", ), (1.0, ))
        result = integrate_path(self.flat(), cp, box=box)
        assert result.truncated
        self.assert_close(result.endpoint, (0.4, 0, 0, 0), atol=1e-9)
        self.assert_close(result.length, 0.4, atol=1e-9)

    def test_monotone_barrier(self) -> None:
        result = integrate_path(self.flat(), ControlPath.from_arcs(
            ("X", "X+Y"), (0.5, 0.3)))
        assert monotonicity_check(result.curve) <= 1e-8
        t = np.array([0.0, 1.0])
        rising = SampledCurve(t, np.array([[0.5, 0, 0, 0], [0.5, 0, 0.1, 0]]),
                              np.ones((2, 2)))
        self.assert_close(monotonicity_check(rising, Barrier.f1), 0.1)


class TestSampling(Tester):
    def test_empty(self) -> None:
        cloud = sample_reachable(self.flat(), SamplerConfig(n_paths=0),
                                 TEST_SEED)
        self.check_result(len(cloud), 0)
        with pytest.raises(EmptySlab):
            abnormal_boundary_probe(cloud, 0.05)

    def test_deterministic(self) -> None:
        first = sample_reachable(self.flat(), SMALL, TEST_SEED)
        second = sample_reachable(self.flat(), SMALL, TEST_SEED)
        pd.testing.assert_frame_equal(first.data, second.data)
        other = sample_reachable(self.flat(), SMALL, TEST_SEED + 1)
        assert not np.array_equal(first.points, other.points)

    def test_flat_inclusion(self) -> None:
        cloud = sample_reachable(self.flat(), SMALL, TEST_SEED)
        self.check_result(cloud.frame_id, self.flat().frame_id())
        check = inclusion_check(cloud, FLAT_REGIONS)
        self.check_result(check.status, Status.PASS)
        assert np.all(cloud.data["x"] >= -1e-12)

    def test_injected_violation(self) -> None:
        cloud = sample_reachable(self.flat(), SMALL, TEST_SEED)
        check = inclusion_check(cloud.with_points([1.0, 0.0, 0.0, -0.1]),
                                FLAT_REGIONS)
        self.check_result(check.status, Status.FAIL)
        self.check_result(check.location, [1.0, 0.0, 0.0, -0.1])
        assert "A13: g3 <= 0" in check.detail

    def test_csv_round_trip(self, tmp_path) -> None:
        cloud = sample_reachable(self.flat(), SMALL, TEST_SEED)
        csv_path = str(tmp_path / "cloud.csv")
        cloud.save(csv_path)
        loaded = ReachCloud.from_csv(csv_path)
        pd.testing.assert_frame_equal(loaded.data, cloud.data)
        self.check_result((loaded.seed, loaded.frame_id, loaded.coords,
                           loaded.sampler), (cloud.seed, cloud.frame_id,
                                             cloud.coords, cloud.sampler))

    def test_csv_keeps_null_rows(self, tmp_path) -> None:
        cloud = tiny_cloud([(0.1, 0.1, 0.0, 0.0), (0.2, 0.0, 0.0, 0.0),
                            (0.3, -0.3, 0.0, 0.0)])
        cloud.data.loc[[0, 2], "causal"] = Causal.Null.value
        csv_path = str(tmp_path / "nulls.csv")
        cloud.save(csv_path)
        loaded = ReachCloud.from_csv(csv_path)
        self.check_result(loaded.data["causal"].tolist(),
                          ["null", "timelike", "null"])
        self.check_result(len(loaded.subcloud(Causal.Null)), 2)

    def test_csv_bad_sidecar(self, tmp_path) -> None:
        csv_path = str(tmp_path / "cloud.csv")
        tiny_cloud([(0.1, 0.0, 0.0, 0.0)]).save(csv_path)
        save_to_json({"frame_id": "Flat:test"}, ReachCloud.meta_path(csv_path))
        with pytest.raises(CloudFormatError):
            ReachCloud.from_csv(csv_path)

    def test_csv_missing_column(self, tmp_path) -> None:
        csv_path = str(tmp_path / "cloud.csv")
        tiny_cloud([(0.1, 0.0, 0.0, 0.0)]).save(csv_path)
        pd.read_csv(csv_path).drop(columns="causal").to_csv(csv_path,
                                                            index=False)
        with pytest.raises(CloudFormatError):
            ReachCloud.from_csv(csv_path)

    def test_batch_sizes_agree(self) -> None:
        F, n_paths = self.flat(), 30
        sc = SamplerConfig(n_paths=n_paths)
        alone = np.array([integrate_path(F, draw_control_path(
            i, sc, TEST_SEED), box=sc.box).endpoint for i in range(n_paths)])
        for batch_size in (1, 7, 10, 2048):
            cloud = sample_reachable(F, SamplerConfig(
                n_paths=n_paths, batch_size=batch_size), TEST_SEED)
            self.check_result(len(cloud), n_paths)
            self.assert_close(cloud.points, alone, atol=1e-8)

    def test_failed_batch_integrates_paths_alone(self, monkeypatch) -> None:
        F, sc = self.flat(), SamplerConfig(n_paths=12, batch_size=5)
        expected = sample_reachable(F, sc, TEST_SEED)
        integrate = reachability.integrate

        def batch_fails(rhs, t_span, y0, *args, **kwargs):
            if len(y0) > F.dim:
                raise StepFailure("step size underflow")
            return integrate(rhs, t_span, y0, *args, **kwargs)

        monkeypatch.setattr(reachability, "integrate", batch_fails)
        cloud = sample_reachable(F, sc, TEST_SEED)
        self.check_result(cloud.data["truncated"].tolist(),
                          expected.data["truncated"].tolist())
        self.assert_close(cloud.points, expected.points, atol=1e-8)

    def test_perturbed_frame_stays_finite(self) -> None:
        sc = SamplerConfig(n_paths=40, batch_size=16)
        cloud = sample_reachable(self.perturbed(phi=0.05, psi1=0.05,
                                                psi2=0.05), sc, TEST_SEED)
        self.check_result(len(cloud), 40)
        assert np.all(np.isfinite(cloud.points))
        assert np.all(sc.box.contains(cloud.points, pad=1e-6))


class TestProbes(Tester):
    def test_abnormal_bound(self) -> None:
        cloud = tiny_cloud([(0.5, 0.01, 0.0, -1e-4), (2.0, 0.0, 0.0, -1.0)])
        probe = abnormal_boundary_probe(cloud, 0.05)
        self.assert_close(probe.bound, -6.5625e-4 - 1e-7, atol=1e-15)
        assert probe.ok
        self.check_result((probe.min_w_in_slab, probe.n_in_slab), (-1e-4, 1))
        probe = abnormal_boundary_probe(cloud.with_points(
            [0.5, 0.0, 0.0, -0.01]), 0.05)
        assert not probe.ok
        with pytest.raises(ValueError):
            abnormal_boundary_probe(cloud, 0.0)

    def test_sampled_cloud_passes(self) -> None:
        cloud = sample_reachable(self.flat(), SamplerConfig(n_paths=200),
                                 TEST_SEED)
        assert abnormal_boundary_probe(cloud, 0.2).ok

    def test_null_rays(self) -> None:
        checks = null_ray_audit(self.flat(), n_samples=11)
        self.check_result([check.status for check in checks],
                          [Status.PASS, Status.PASS])
        self.check_result(len(null_ray_audit(self.abelian_frame())), 2)


class TestProjection(Tester):
    def test_flat_projection_agrees(self) -> None:
        F = self.flat()
        cloud4 = sample_reachable(F, SMALL, TEST_SEED)
        cloud3 = sample_reachable(martinet_projection(F), SMALL, TEST_SEED)
        self.check_result(cloud3.names, ["x", "y", "w"])
        check = projection_consistency(F, cloud4, cloud3)
        self.check_result(check.status, Status.PASS)

    def test_perturbed_projection_agrees(self) -> None:
        F = self.perturbed(phi=0.05, psi2=0.05)
        cloud4 = sample_reachable(F, SMALL, TEST_SEED)
        cloud3 = sample_reachable(martinet_projection(F), SMALL, TEST_SEED)
        check = projection_consistency(F, cloud4, cloud3)
        self.check_result(check.status, Status.PASS)
        self.check_result(len(check.location), 4)

    def test_disagreement_located_in_4_space(self) -> None:
        cloud4 = tiny_cloud([(0.5, 0.0, 0.1, 0.2), (0.4, 0.1, 0.0, 0.0)])
        data3 = cloud4.data.drop(columns="z")
        data3.loc[0, "w"] = 0.3
        cloud3 = ReachCloud(data3, TEST_SEED, "Flat:test", COORDS3)
        check = projection_consistency(self.flat(), cloud4, cloud3)
        self.check_result(check.status, Status.FAIL)
        self.assert_close(check.worst_residual, 0.1)
        self.assert_close(check.location, [0.5, 0.0, 0.1, 0.2])

    def test_seed_mismatch(self) -> None:
        with pytest.raises(SeedMismatch):
            projection_consistency(self.flat(), tiny_cloud([(0, 0, 0, 0)]),
                                   tiny_cloud([(0, 0, 0, 0)], seed=1))
