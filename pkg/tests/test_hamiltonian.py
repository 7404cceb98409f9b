#!/usr/bin/env python3

"""
Test elab/hamiltonian.py
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import third-party PyPI libraries
import numpy as np
import pytest

# Import local custom libraries
from elab.errors import NotNonspacelike, RegionViolation
from elab.frames import Covector, Point, SampledCurve
from elab.hamiltonian import (abnormal_trajectory, exp_map, GeodesicArc,
                              hamilton_rhs, hamiltonian, hamiltonian_flow,
                              lift_defects, lift_residual, PhasePoint,
                              radial_bound_check, sub_lorentzian_length)
from elab.testers import Tester


def phase(q, p) -> PhasePoint:
    return PhasePoint(Point(*map(float, q)), Covector(*map(float, p)))


def constant_control_curve(start, u: float, v: float, T: float,
                           n: int = 11) -> SampledCurve:
    """ Flat trajectory of u*X + v*Y from a point with y = 0 and v = 0, \
        or along a radial line, where the closed form is linear in t. """
    t = np.linspace(0.0, T, n)
    points = np.asarray(start, dtype=float) + np.outer(t, [u, v, 0, 0])
    return SampledCurve(t, points, np.tile([u, v], (n, 1)))


class TestHamiltonian(Tester):
    def test_values(self) -> None:
        F = self.flat()
        self.check_result(hamiltonian(F, phase((0, 0, 0, 0),
                                               (-1, 0, 0, 0))), -0.5)
        self.check_result(hamiltonian(F, phase((0, 0, 0, 0),
                                               (0, 0, 1, 0))), 0.0)
        for chi in (-1.0, 0.3, 2.0):
            pp = phase((0, 0, 0.4, -0.7), (-np.cosh(chi), np.sinh(chi), 0, 0))
            self.assert_close(hamiltonian(F, pp), -0.5, atol=1e-12)

    def test_rhs_shape(self) -> None:
        states = self.random_points(5, dim=8)
        self.check_result(hamilton_rhs(self.flat(), states).shape, (5, 8))


class TestFlow(Tester):
    def test_abnormal_lift(self) -> None:
        F = self.flat()
        arc = hamiltonian_flow(F, phase((0, 0, 0, 0), (-1, 0, 0, 0)), 1.0)
        self.assert_close(arc.q[-1], (1, 0, 0, 0), atol=1e-10)
        self.assert_close(arc.p[-1], (-1, 0, 0, 0), atol=1e-10)

    def test_radial_geodesic(self) -> None:
        F, chi, s = self.flat(), 0.6, 0.8
        arc = hamiltonian_flow(F, phase(
            (0, 0, 0.2, -0.1), (-np.cosh(chi), np.sinh(chi), 0, 0)), s)
        self.assert_close(arc.q[-1], (s * np.cosh(chi), s * np.sinh(chi),
                                      0.2, -0.1), atol=1e-9)

    def test_zero_time(self) -> None:
        pp = phase((0.1, 0.2, 0.3, 0.4), (1, 2, 3, 4))
        arc = hamiltonian_flow(self.flat(), pp, 0.0)
        self.check_result(arc.at(0), pp)
        with pytest.raises(ValueError):
            hamiltonian_flow(self.flat(), pp, np.inf)

    def test_energy_is_conserved(self) -> None:
        F = self.flat()
        starts = self.random_points(10, -0.5, 0.5)
        momenta = self.random_points(10, seed=7)
        for q0, p0 in zip(starts, momenta):
            arc = hamiltonian_flow(F, phase(q0, p0), 1.0, n_samples=11)
            assert arc.energy_drift(F) <= 1e-8

    def test_backward_time(self) -> None:
        F = self.flat()
        arc = hamiltonian_flow(F, phase((0, 0, 0, 0), (-1, 0, 0, 0)), -0.5)
        assert np.all(np.diff(arc.t) > 0)
        self.assert_close(arc.q[0], (-0.5, 0, 0, 0), atol=1e-10)

    def test_arc_frame(self) -> None:
        arc = hamiltonian_flow(self.flat(), phase((0, 0, 0, 0),
                                                  (-1, 0, 0, 0)), 1.0,
                               n_samples=5)
        self.check_result(list(arc.to_frame().columns),
                          ["t", "x", "y", "z", "w", "px", "py", "pz", "pw"])
        with pytest.raises(ValueError):
            GeodesicArc(np.array([1.0, 0.0]), np.zeros((2, 8)), 0.0)


class TestExpMap(Tester):
    def test_flat(self) -> None:
        F = self.flat()
        self.assert_close(exp_map(F, (0, 0, 0, 0), (-0.7, 0, 0, 0)),
                          (0.7, 0, 0, 0), atol=1e-10)
        chi, s = -0.4, 0.5
        self.assert_close(exp_map(F, (0, 0, 0.3, 0.2), (
            -s * np.cosh(chi), s * np.sinh(chi), 0, 0)),
            (s * np.cosh(chi), s * np.sinh(chi), 0.3, 0.2), atol=1e-9)
        self.assert_close(exp_map(F, (0.1, 0.2, 0.3, 0.4), (0, 0, 0, 0)),
                          (0.1, 0.2, 0.3, 0.4))


class TestAbnormal(Tester):
    def test_flat_closed_form(self) -> None:
        curve = abnormal_trajectory(self.flat(), (0, 0.4, 0, 0), 1.0,
                                    n_samples=5)
        self.assert_close(curve.points[-1], (1.0, 0.4, 0.2, 0.08))
        self.assert_close(curve.controls, np.tile([1.0, 0.0], (5, 1)))

    def test_normal_form_stays_in_y0(self) -> None:
        F = self.perturbed(phi=0.05, psi1=0.05, psi2=0.05)
        curve = abnormal_trajectory(F, (0, 0, 0.1, -0.2), 1.0, n_samples=11)
        assert np.max(np.abs(curve.points[:, 1])) <= 1e-9

    def test_lift_residual(self) -> None:
        F = self.flat()
        for y0, z0, w0 in self.random_points(5, dim=3):
            arc = hamiltonian_flow(F, phase((0, y0, z0, w0), (-1, 0, 0, 0)),
                                   1.0, n_samples=21)
            assert lift_residual(F, arc) <= 1e-9
            self.assert_close(arc.q, abnormal_trajectory(
                F, (0, y0, z0, w0), 1.0, n_samples=21).points, atol=1e-9)

    def test_random_geodesic_defects(self) -> None:
        F = self.flat()
        starts = self.random_points(6, -0.5, 0.5)
        momenta = self.random_points(6, seed=7)
        for q0, p0 in zip(starts, momenta):
            arc = hamiltonian_flow(F, phase(q0, p0), 1.0, n_samples=21)
            defects = lift_defects(F, arc)
            self.check_result(defects.hamilton.shape, (21, ))
            assert np.max(defects.hamilton) <= 1e-7
            assert np.max(defects.pairing) <= 1e-8

    def test_wrong_momentum(self) -> None:
        """ Same curve as the abnormal lift, momentum (-1, 0.1, 0, 0). """
        F = self.flat()
        t = np.linspace(0.0, 1.0, 11)
        y0 = 0.3
        q = np.column_stack([t, np.full_like(t, y0), 0.5 * y0 * t,
                             0.5 * y0 * y0 * t])
        p = np.tile([-1.0, 0.1, 0.0, 0.0], (len(t), 1))
        arc = GeodesicArc(t, np.column_stack([q, p]), -0.495)
        assert lift_residual(F, arc) >= 0.05

    def test_zero_momentum(self) -> None:
        t = np.linspace(0.0, 1.0, 3)
        arc = GeodesicArc(t, np.zeros((3, 8)), 0.0)
        self.check_result(lift_residual(self.flat(), arc), np.inf)


class TestLength(Tester):
    def test_constant_controls(self) -> None:
        F = self.flat()
        self.assert_close(sub_lorentzian_length(F, constant_control_curve(
            (0, 0, 0, 0), 1.0, 0.0, 0.7)), 0.7)
        chi = 1.3
        self.assert_close(sub_lorentzian_length(F, constant_control_curve(
            (0, 0, 0, 0), np.cosh(chi), np.sinh(chi), 0.5)), 0.5, atol=1e-12)

    def test_null_curve(self) -> None:
        t = np.linspace(0.0, 1.0, 5)
        curve = SampledCurve(t, np.column_stack([t, t, 0 * t, 0 * t]),
                             np.tile([1.0, 1.0], (5, 1)))
        self.assert_close(sub_lorentzian_length(self.flat(), curve), 0.0)

    def test_spacelike(self) -> None:
        t = np.linspace(0.0, 1.0, 3)
        curve = SampledCurve(t, np.zeros((3, 4)), np.tile([0.0, 1.0],
                                                          (3, 1)))
        with pytest.raises(NotNonspacelike):
            sub_lorentzian_length(self.flat(), curve)


class TestRadialBound(Tester):
    def test_equality_on_radial_lines(self) -> None:
        F = self.flat()
        bound = radial_bound_check(F, constant_control_curve(
            (1, 0, 0, 0), 1.0, 0.0, 0.5))
        assert bound.ok
        self.assert_close((bound.L, bound.delta_R1), (0.5, 0.5))
        chi, s, T = 0.7, 0.2, 0.6
        start = (s * np.cosh(chi), s * np.sinh(chi), 0.1, -0.3)
        bound = radial_bound_check(F, constant_control_curve(
            start, np.cosh(chi), np.sinh(chi), T))
        self.assert_close(bound.L, T, atol=1e-12)
        self.assert_close(bound.delta_R1, T, atol=1e-12)

    def test_strict_inequality_off_radial(self) -> None:
        """ Leaving a radial line along X loses length to R1. """
        F = self.flat()
        bound = radial_bound_check(F, constant_control_curve(
            (0.5, 0.3, 0, 0), 1.0, 0.0, 0.5))
        assert bound.ok and bound.L < bound.delta_R1

    def test_leaves_sector(self) -> None:
        curve = constant_control_curve((-0.2, 0, 0, 0), 1.0, 0.0, 0.5)
        with pytest.raises(RegionViolation):
            radial_bound_check(self.flat(), curve)
