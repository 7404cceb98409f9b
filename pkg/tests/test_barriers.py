#!/usr/bin/env python3

"""
Test elab/barriers.py
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import third-party PyPI libraries
import numpy as np
import pytest

# Import local custom libraries
from elab.barriers import (Barrier, barrier_gradient, barrier_values,
                           boundary_defect, CauchyProblem,
                           characteristic_solve, characteristic_solve_many,
                           CharacteristicBarrier, ClosedFormBarrier,
                           CLOSED_FORMS, FLAT_REGIONS, flat_barrier,
                           FUTURE_REGIONS, gradient_defect,
                           gradient_region_audit, grid_points,
                           order_directions, pde_residual,
                           perturbation_order, region_mask,
                           region_membership, violated_predicates)
from elab.errors import (NoBoundaryHit, NonDifferentiable, UnknownRegion,
                         ZDependence)
from elab.frames import (FrameStructure, Generator, normal_form_structure,
                         VectorField)
from elab.poly import Poly4
from elab.report import Status
from elab.testers import Tester

RADII = (0.4, 0.2, 0.1, 0.05)


class TestClosedForms(Tester):
    def test_values(self) -> None:
        self.assert_close(flat_barrier("f1", (1, 0.5, 0.2, 0)), 0.0125,
                          atol=1e-15)
        for t in (0.1, 0.5, 2.0):
            self.check_result(flat_barrier(Barrier.g3, (t, 0, 0.3, 0)), 0.0)
        for z in (-0.4, 0.0, 0.4):
            self.assert_close(flat_barrier(Barrier.g1, (1, 1, z, 0.6)), 0.6)

    def test_problem_table(self) -> None:
        self.check_result(CauchyProblem.CA2.value.generator,
                          Generator.XplusY)
        self.check_result(CauchyProblem.named("ca5").barrier, Barrier.g3)
        self.check_result([problem.barrier for problem in CauchyProblem],
                          list(Barrier))
        with pytest.raises(ValueError):
            CauchyProblem.named("ca7")

    def test_exact_identities(self) -> None:
        F = self.flat()
        for problem in CauchyProblem:
            poly = ClosedFormBarrier(problem.barrier).poly
            assert F.generator(problem.value.generator).apply(poly).is_zero()
            assert boundary_defect(problem.barrier).is_zero()
            assert all(part.is_zero() for part in
                       gradient_defect(problem.barrier))

    def test_vectorized(self) -> None:
        points = self.random_points(7)
        values = ClosedFormBarrier(Barrier.g2)(points)
        self.check_result(values.shape, (7, ))
        self.assert_close(values, [flat_barrier("g2", q) for q in points],
                          atol=1e-15)
        self.check_result(type(ClosedFormBarrier(Barrier.f2)(points[0])),
                          float)


class TestPDEResidual(Tester):
    def test_closed_forms(self) -> None:
        for q in self.random_points(3):
            for which in (Barrier.f1, Barrier.g4):
                self.check_result(pde_residual(ClosedFormBarrier(which), q),
                                  0.0)

    def test_bare_polynomial(self) -> None:
        x = Poly4.var("x")
        self.check_result(pde_residual(x, (0, 0, 0, 0),
                                       generator=Generator.XminusY), 1.0)
        with pytest.raises(ValueError):
            pde_residual(x, (0, 0, 0, 0))

    def test_characteristic_field(self) -> None:
        F = self.perturbed(phi=0.05, psi2=0.05)
        field = CharacteristicBarrier(CauchyProblem.CA1, F)
        assert pde_residual(field, (0.3, 0.1, 0.05, -0.02)) <= 1e-5


class TestCharacteristics(Tester):
    def test_hand_example(self) -> None:
        field = CharacteristicBarrier(CauchyProblem.CA1, self.flat())
        self.assert_close(characteristic_solve(field, (1, 0.5, 0.2, 0.1)),
                          0.0125, atol=1e-9)

    def test_flat_oracle(self) -> None:
        F = self.flat()
        points = self.random_points(25, 0.0, 1.0)
        points[:, 1:] = 2 * points[:, 1:] - 1
        for problem in CauchyProblem:
            solved = CharacteristicBarrier(problem, F)(points)
            exact = ClosedFormBarrier(problem.barrier)(points)
            self.assert_close(solved, exact, atol=1e-8)

    def test_scalar_matches_batch(self) -> None:
        F = self.perturbed(psi2=0.05)
        field = CharacteristicBarrier(CauchyProblem.CA5, F)
        points = self.random_points(6, -0.3, 0.3)
        batch = characteristic_solve_many(field, points)
        self.assert_close(batch, [characteristic_solve(field, q)
                                  for q in points], atol=1e-8)

    def test_on_surface(self) -> None:
        field = CharacteristicBarrier(CauchyProblem.CA3, self.flat())
        self.check_result(characteristic_solve(field, (0.4, 0.4, 0.1, 0.7)),
                          0.7)
        field = CharacteristicBarrier(CauchyProblem.CA5, self.flat())
        self.check_result(characteristic_solve(field, (0.4, 0.0, 0.1, 0.7)),
                          -0.7)

    def test_no_boundary_hit(self) -> None:
        field = CharacteristicBarrier(CauchyProblem.CA5, self.flat(),
                                      horizon=0.1)
        with pytest.raises(NoBoundaryHit):
            characteristic_solve(field, (0.5, 0.9, 0.0, 0.0))

    def test_fold(self) -> None:
        """ X+Y = d/dx + x d/dy is tangent to y = 0 where x = 0. """
        Y = VectorField.from_exprs(0, Poly4.var("x"), 0, 0)
        frame = FrameStructure(VectorField.from_exprs(1, 0, 0, 0), Y)
        field = CharacteristicBarrier(CauchyProblem.CA5, frame)
        with pytest.raises(NonDifferentiable):
            characteristic_solve(field, (0.0, 0.0, 0.3, 0.1))

    def test_values_table(self) -> None:
        points = self.random_points(5, 0.0, 0.5)
        flat = barrier_values(self.flat(), points, [Barrier.f1, Barrier.f1,
                                                    Barrier.g2])
        self.check_result(sorted(flat), [Barrier.f1, Barrier.g2])
        perturbed = barrier_values(self.perturbed(), points, [Barrier.g2])
        self.assert_close(perturbed[Barrier.g2], flat[Barrier.g2],
                          atol=1e-8)


class TestGradientAudit(Tester):
    def test_flat_regions(self) -> None:
        points = grid_points((1e-3, -1, -1), (1, 1, 1), 6)
        for which in Barrier:
            check = gradient_region_audit(ClosedFormBarrier(which), points)
            self.check_result(check.status, Status.PASS)

    def test_outside_region_fails(self) -> None:
        points = grid_points((1e-3, -1, -1), (1, 1, 1), 6)
        check = gradient_region_audit(ClosedFormBarrier(Barrier.g1), points,
                                      FUTURE_REGIONS[Barrier.g2])
        self.check_result(check.status, Status.FAIL)
        assert check.location is not None

    def test_g3_zero_on_axis(self) -> None:
        grad = barrier_gradient(ClosedFormBarrier(Barrier.g3),
                                (0.5, 0.0, 0.2, 0.1))
        self.check_result((grad.u, grad.v), (0.0, 0.0))
        assert not FUTURE_REGIONS[Barrier.g3](np.array([0.5]),
                                              np.array([0.0]))[0]

    def test_characteristic_gradient(self) -> None:
        field = CharacteristicBarrier(CauchyProblem.CA1, self.flat())
        points = grid_points((0.2, -0.15, -0.2), (0.6, 0.15, 0.2), 2)
        check = gradient_region_audit(field, points, null_tol=1e-5)
        self.check_result(check.status, Status.PASS)

    def test_grid(self) -> None:
        points = grid_points((0, 0, 0), (1, 1, 1), 3, axes=(0, 1, 3),
                             fixed=0.5)
        self.check_result(points.shape, (27, 4))
        assert np.all(points[:, 2] == 0.5)
        self.check_result(sorted(set(points[:, 3])), [0.0, 0.5, 1.0])


class TestOrder(Tester):
    def test_directions(self) -> None:
        dirs = order_directions(64)
        self.assert_close(np.linalg.norm(dirs, axis=1), np.ones(64))
        self.assert_close(order_directions(64), dirs)

    def test_flat_is_degenerate(self) -> None:
        fit = perturbation_order(self.flat(), CauchyProblem.CA3, RADII, 8)
        assert fit.degenerate
        assert max(fit.errors) <= 1e-8

    def test_perturbed_orders(self) -> None:
        for problem in (CauchyProblem.CA1, CauchyProblem.CA2):
            fit = perturbation_order(self.perturbed(psi1=0.05), problem,
                                     RADII, 16)
            assert not fit.degenerate
            assert fit.slope >= 2.8
        fit = perturbation_order(self.perturbed(psi2=0.05),
                                 CauchyProblem.CA5, RADII, 16)
        assert not fit.degenerate
        assert fit.slope >= 3.8

    def test_f_exact_under_phi_and_psi2(self) -> None:
        """ phi*(y d/dx + x d/dy) annihilates x^2 - y^2, and psi2 only \
            moves w, so f1 and f2 stay exact solutions. """
        for frame in (self.perturbed(phi=0.05), self.perturbed(psi2=0.05)):
            for problem in (CauchyProblem.CA1, CauchyProblem.CA2):
                fit = perturbation_order(frame, problem, RADII, 16)
                assert fit.degenerate
                assert max(fit.errors) <= 1e-8

    def test_needs_projection(self) -> None:
        F = normal_form_structure(Poly4.var("z"), Poly4(), Poly4())
        with pytest.raises(ZDependence):
            perturbation_order(F, CauchyProblem.CA1, RADII)
        with pytest.raises(ValueError):
            perturbation_order(self.flat(), CauchyProblem.CA1, (0.1, 0.2))


class TestRegions(Tester):
    def test_origin(self) -> None:
        for name in FLAT_REGIONS:
            assert region_membership(name, (0, 0, 0, 0))

    def test_abnormal_ray(self) -> None:
        for t in (0.01, 0.5, 1.0):
            assert region_membership("A13", (t, 0, 0, 0))

    def test_outside_union(self) -> None:
        q = (1, 0, 0, -0.1)
        assert not any(region_membership(name, q) for name in FLAT_REGIONS)
        failures = violated_predicates("A13", q)
        self.check_result(failures, ["A13: g3 <= 0"])
        self.check_result(violated_predicates("A11", q), ["A11: w >= 0"])

    def test_null_ray_within_slack(self) -> None:
        for t in (0.1, 0.7):
            q = (t, t, 0, 0)
            assert region_membership("A11", q, slack=1e-12)
            self.check_result(CLOSED_FORMS[Barrier.f1].at(q), 0.0)

    def test_mask_matches_membership(self) -> None:
        points = self.random_points(50, -0.5, 0.5)
        for name in (*FLAT_REGIONS, "WeakGeneral"):
            mask = region_mask(name, points, 1e-7)
            self.check_result(mask.tolist(), [region_membership(
                name, q, 1e-7) for q in points])

    def test_weak_general(self) -> None:
        assert region_membership("WeakGeneral", (1, 0.2, 0.1, 5.0))
        assert not region_membership("WeakGeneral", (1, 0.2, 0.3, 0.0))
        assert region_membership("WeakGeneral", (1, 0.2, 0.3, 0.0),
                                 values={Barrier.f1: -1.0,
                                         Barrier.f2: 1.0})

    def test_bad_input(self) -> None:
        with pytest.raises(UnknownRegion):
            region_membership("A31", (0, 0, 0, 0))
        with pytest.raises(ValueError):
            region_mask("A11", np.zeros((1, 4)), slack=-1.0)
