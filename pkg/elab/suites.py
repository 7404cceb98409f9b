#!/usr/bin/env python3

"""
Verification suites behind the elab commands. Each suite turns a RunConfig \
    into Check entries of a VerificationReport.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Iterator

# Import third-party PyPI libraries
import numpy as np
import pandas as pd

# Import local custom libraries
try:
    from elab.barriers import (Barrier, boundary_defect,
                               CharacteristicBarrier, ClosedFormBarrier,
                               CauchyProblem, DIFF_STEP, FUTURE_REGIONS,
                               gradient_defect, gradient_region_audit,
                               grid_points, perturbation_order,
                               REGION_SELECTIONS)
    from elab.config import RunConfig
    from elab.debug import ShowTimeTaken
    from elab.errors import (BasisFailure, DegenerateFrame, EmptySlab,
                             FrameMismatch, ZDependence)
    from elab.frames import (COORDS3, FrameStructure, growth_vector,
                             hamiltonian_type_probe, horizontal_gradient,
                             hyperbolic_radius, is_homogeneous, lift_curve,
                             martinet_projection, metric,
                             normal_form_structure, Provenance,
                             structure_from_spec, VectorField)
    from elab.hamiltonian import (abnormal_trajectory, hamiltonian_flow,
                                  lift_defects, lift_residual,
                                  PhasePoint, radial_bound_check)
    from elab.poly import Poly4
    from elab.reachability import (abnormal_boundary_probe, ControlPath,
                                   ControlPiece, draw_control_path,
                                   inclusion_check, integrate_path,
                                   monotonicity_check, null_ray_audit,
                                   projection_consistency, ReachCloud,
                                   sample_reachable)
    from elab.report import Check, PAPER_ANCHORS, Status
except (ImportError, ModuleNotFoundError):
    from .barriers import (Barrier, boundary_defect, CharacteristicBarrier,
                           ClosedFormBarrier, CauchyProblem, DIFF_STEP,
                           FUTURE_REGIONS, gradient_defect,
                           gradient_region_audit, grid_points,
                           perturbation_order, REGION_SELECTIONS)
    from .config import RunConfig
    from .debug import ShowTimeTaken
    from .errors import (BasisFailure, DegenerateFrame, EmptySlab,
                         FrameMismatch, ZDependence)
    from .frames import (COORDS3, FrameStructure, growth_vector,
                         hamiltonian_type_probe, horizontal_gradient,
                         hyperbolic_radius, is_homogeneous, lift_curve,
                         martinet_projection, metric, normal_form_structure,
                         Provenance, structure_from_spec,
                         VectorField)
    from .hamiltonian import (abnormal_trajectory, hamiltonian_flow,
                              lift_defects, lift_residual, PhasePoint,
                              radial_bound_check)
    from .poly import Poly4
    from .reachability import (abnormal_boundary_probe, ControlPath,
                               ControlPiece, draw_control_path,
                               inclusion_check, integrate_path,
                               monotonicity_check, null_ray_audit,
                               projection_consistency, ReachCloud,
                               sample_reachable)
    from .report import Check, PAPER_ANCHORS, Status

# Box where structure checks sample points
STRUCTURE_LO = (-1.0, -1.0, -1.0)
STRUCTURE_HI = (1.0, 1.0, 1.0)

# Lower corner of the gradient audit grid: x starts just inside x > 0
AUDIT_LO = (1e-3, -1.0, -1.0)
AUDIT_HI = (1.0, 1.0, 1.0)

# Grid of `elab solve-cauchy` over (x, y, datum coordinate)
CAUCHY_LO = (0.05, -0.4, -0.4)
CAUCHY_HI = (0.5, 0.4, 0.4)

# Tolerances of the flat identity suites
LIFT_TOL = 1e-9
ENERGY_TOL = 1e-8
HAMILTON_TOL = 1e-7
RADIAL_TOL = 1e-6
RADIAL_EQUALITY_TOL = 1e-8
ROUND_TRIP_TOL = 1e-9
LIFT_Z_TOL = 1e-8
PDE_FD_TOL = 1e-5

# Fitted order thresholds for the perturbed frames
F_ORDER_MIN = 2.8
G_ORDER_MIN = 3.8

# Perturbations whose barriers are compared with the flat closed forms
PERTURBED_PHI = Poly4.var("x") * 0.05
PERTURBED_PSI1 = Poly4.var("y") * 0.05
PERTURBED_PSI2 = Poly4.var("x") * 0.05


def _random_rows(rng: np.random.Generator, n: int, lo, hi) -> np.ndarray:
    return rng.uniform(np.asarray(lo), np.asarray(hi), (n, len(lo)))


# NOTE All functions below are in alphabetical order.


def audit_cloud(cloud: ReachCloud, cfg: RunConfig,
                F: FrameStructure) -> list[Check]:
    """ Audits that need only the cloud: inclusion in the selected \
        regions, the abnormal slab probe, and the null rays.

    :param cloud: ReachCloud in 4-space
    :param cfg: RunConfig
    :param F: FrameStructure the cloud was sampled in
    :return: list[Check]
    """
    regions = REGION_SELECTIONS[cfg.regions]
    barrier_frame = None if cfg.regions == "flat" else F
    checks = [inclusion_check(cloud, regions, cfg.slack, barrier_frame,
                              cfg.integrator)]
    if F.provenance == Provenance.Flat:
        probe = cfg.probe
        paper_anchor = PAPER_ANCHORS["abnormal"]
        try:
            slab = abnormal_boundary_probe(cloud, probe.delta, probe.x_max,
                                           cfg.slack)
            checks.append(Check(
                name="abnormal_boundary_probe", paper_anchor=paper_anchor,
                status=Status.PASS if slab.ok else Status.FAIL,
                worst_residual=max(slab.bound - slab.min_w_in_slab, 0.0),
                detail=f"min w {slab.min_w_in_slab:.6g} vs bound "
                f"{slab.bound:.6g} over {slab.n_in_slab} endpoints"))
        except EmptySlab as err:
            checks.append(Check(name="abnormal_boundary_probe",
                                paper_anchor=paper_anchor,
                                status=Status.WARN,
                                detail=str(err)))
    checks.extend(null_ray_audit(F, cloud, cfg.integrator,
                                 cfg.probe.ray_samples))
    return checks


def check_structure(cfg: RunConfig) -> list[Check]:
    """ Engel growth on a grid, normal-form constraints, homogeneity, \
        Martinet projectability, and the Hamiltonian-type probe along the \
        abnormal ray from the origin.

    :param cfg: RunConfig
    :return: list[Check]
    """
    F = structure_from_spec(cfg.frame)
    checks = [Check(name="frame_constraints",
                    paper_anchor=PAPER_ANCHORS["constraints"],
                    status=Status.PASS, detail=f"{F.provenance} frame "
                    f"{F.frame_id()} built")]
    checks.append(_growth_check(F, grid_points(
        STRUCTURE_LO, STRUCTURE_HI, min(cfg.verify.grid_n, 5))))
    checks.append(_homogeneity_check(F))
    try:
        martinet_projection(F)
        checks.append(Check(name="martinet_projection",
                            paper_anchor=PAPER_ANCHORS["projection"],
                            status=Status.PASS))
    except ZDependence as err:
        checks.append(Check(name="martinet_projection",
                            paper_anchor=PAPER_ANCHORS["projection"],
                            status=Status.WARN,
                            detail=str(err)))
    checks.append(_hamiltonian_type_check(F, cfg))
    return checks


def solve_cauchy(cfg: RunConfig, problem: CauchyProblem, n: int
                 ) -> tuple[list[Check], pd.DataFrame]:
    """ Characteristic solution of one Cauchy problem on an n^3 grid over \
        (x, y, datum coordinate), the other coordinate held at 0.

    :param cfg: RunConfig, whose frame defines the generator
    :param problem: CauchyProblem
    :param n: int, nodes per axis
    :return: the checks and a table of x, y, z, w, value, closed_form
    """
    F = structure_from_spec(cfg.frame)
    datum_ix = 2 if problem.value.datum.endswith("Z") else 3
    points = grid_points(CAUCHY_LO, CAUCHY_HI, n, axes=(0, 1, datum_ix))
    field = CharacteristicBarrier(problem, F, cfg.integrator)
    exact = ClosedFormBarrier(problem.barrier)
    with ShowTimeTaken(f"solving {problem.name} on {len(points)} points"):
        values = field(points)
        G = F.generator(problem.value.generator)(points)
        pde = np.abs(field(points + DIFF_STEP * G)
                     - field(points - DIFF_STEP * G)) / (2 * DIFF_STEP)
    deviation = np.abs(values - exact(points))
    worst = int(np.argmax(deviation))
    tol = cfg.verify.oracle_tol
    if F.provenance == Provenance.Flat:
        deviation_check = Check.from_bound(
            f"characteristic_vs_closed_form_{problem.name}",
            PAPER_ANCHORS["closed_forms"], deviation[worst], tol,
            location=points[worst],
            detail=f"{problem.barrier} solves {problem.name}")
    else:
        deviation_check = Check(
            name=f"characteristic_vs_closed_form_{problem.name}",
            paper_anchor=PAPER_ANCHORS[_order_key(problem)],
            status=Status.PASS,
            worst_residual=float(deviation[worst]),
            location=points[worst].tolist(),
            detail="deviation of the perturbed solution from the flat one")
    ix = int(np.argmax(pde))
    checks = [deviation_check, Check.from_bound(
        f"pde_residual_{problem.name}", PAPER_ANCHORS["pde"], pde[ix],
        PDE_FD_TOL, location=points[ix],
        detail=f"characteristic solution of {problem.name} is constant "
        "along its generator")]
    table = pd.DataFrame(points, columns=["x", "y", "z", "w"])
    table["value"] = values
    table["closed_form"] = exact(points)
    return checks, table


def sample_and_audit(cfg: RunConfig) -> tuple[list[Check], ReachCloud]:
    """ Sample the reachable cloud of the configured frame, audit it, and \
        compare it with the cloud of the Martinet projection.

    :param cfg: RunConfig
    :return: the checks and the sampled cloud
    """
    F = structure_from_spec(cfg.frame)
    cloud = sample_reachable(F, cfg.sampler, cfg.seed, cfg.integrator)
    checks = audit_cloud(cloud, cfg, F)
    try:
        F3 = martinet_projection(F)
    except ZDependence as err:
        checks.append(Check(name="projection_consistency",
                            paper_anchor=PAPER_ANCHORS["isometry"],
                            status=Status.WARN,
                            detail=str(err)))
    else:
        cloud3 = sample_reachable(F3, cfg.sampler, cfg.seed, cfg.integrator)
        checks.append(projection_consistency(F, cloud, cloud3))
    return checks, cloud


def verify_flat(cfg: RunConfig) -> list[Check]:
    """ Every identity the flat structure satisfies, as one report.

    :param cfg: RunConfig whose frame is Flat
    :raises FrameMismatch: if the configured frame is not flat
    :return: list[Check]
    """
    F = structure_from_spec(cfg.frame)
    if F.provenance != Provenance.Flat:
        raise FrameMismatch("verify-flat needs a Flat frame, not "
                            f"{F.provenance}")
    rng = np.random.default_rng(cfg.seed)
    checks = list()
    for suite in (_bracket_checks, _lift_checks, _energy_checks,
                  _barrier_identity_checks, _gradient_region_checks,
                  _oracle_checks, _radial_checks, _monotonicity_checks,
                  _round_trip_checks, _order_checks):
        with ShowTimeTaken(suite.__name__.strip("_").replace("_", " ")):
            checks.extend(suite(F, cfg, rng))
    return checks


def _barrier_identity_checks(F: FrameStructure, cfg: RunConfig,
                             rng: np.random.Generator) -> Iterator[Check]:
    """ PDE, boundary condition and gradient table of each closed form, \
        as exact polynomial identities. """
    for problem in CauchyProblem:
        which = problem.barrier
        G = F.generator(problem.value.generator)
        residual = G.apply(ClosedFormBarrier(which).poly)
        yield Check(name=f"pde_{which}",
                    paper_anchor=PAPER_ANCHORS["closed_forms"],
                    status=Status.PASS if
                    residual.is_zero() else Status.FAIL,
                    worst_residual=0.0 if residual.is_zero() else 1.0,
                    detail=f"{problem.value.generator}({which}) = "
                    f"{residual.expr}")
        defect = boundary_defect(which)
        yield Check(name=f"boundary_{which}",
                    paper_anchor=PAPER_ANCHORS["boundary"],
                    status=Status.PASS if defect.is_zero() else Status.FAIL,
                    worst_residual=0.0 if defect.is_zero() else 1.0,
                    detail=f"defect {defect.expr} on "
                    f"{problem.value.surface}")
        du, dv = gradient_defect(which)
        exact = du.is_zero() and dv.is_zero()
        yield Check(name=f"gradient_{which}",
                    paper_anchor=PAPER_ANCHORS["gradients"],
                    status=Status.PASS if exact else Status.FAIL,
                    worst_residual=0.0 if exact else 1.0,
                    detail=f"defects ({du.expr}, {dv.expr})")


def _bracket_checks(F: FrameStructure, cfg: RunConfig,
                    rng: np.random.Generator) -> Iterator[Check]:
    """ [X,Y], [X,[X,Y]] and [Y,[X,Y]] of the flat frame. """
    y = Poly4.var("y")
    expected = {"XY": VectorField.from_exprs(0, 0, -1, y * -1.5),
                "XXY": VectorField.zero(),
                "YXY": VectorField.from_exprs(0, 0, 0, -1.5)}
    for name, field in expected.items():
        defect = getattr(F, name) - field
        yield Check(name=f"bracket_{name}",
                    paper_anchor=PAPER_ANCHORS["brackets"],
                    status=Status.PASS if defect.is_zero() else Status.FAIL,
                    worst_residual=0.0 if defect.is_zero() else 1.0,
                    detail=str(getattr(F, name)))
    yield _growth_check(F, grid_points(STRUCTURE_LO, STRUCTURE_HI, 5))
    yield _homogeneity_check(F)


def _energy_checks(F: FrameStructure, cfg: RunConfig,
                   rng: np.random.Generator) -> Iterator[Check]:
    """ Energy drift, Hamilton defect, and pairing defect of random \
        geodesics to T = 1. """
    n = cfg.verify.random_geodesics
    starts = _random_rows(rng, n, (-0.5,) * 4, (0.5,) * 4)
    momenta = _random_rows(rng, n, (-1.0,) * 4, (1.0,) * 4)
    drifts, hamilton, pairing = np.zeros(n), np.zeros(n), np.zeros(n)
    for ix, (q0, p0) in enumerate(zip(starts, momenta)):
        arc = hamiltonian_flow(F, PhasePoint.from_array(
            np.concatenate([q0, p0])), 1.0, cfg.integrator, n_samples=21)
        drifts[ix] = arc.energy_drift(F)
        defects = lift_defects(F, arc)
        hamilton[ix] = np.max(defects.hamilton)
        pairing[ix] = np.max(defects.pairing)
    for name, key, values, tol in (
            ("energy_drift", "energy", drifts, ENERGY_TOL),
            ("hamilton_defect", "flow", hamilton, HAMILTON_TOL),
            ("pairing_defect", "pairing", pairing, ENERGY_TOL)):
        worst = int(np.argmax(values))
        yield Check.from_bound(name, PAPER_ANCHORS[key], values[worst], tol,
                               location=starts[worst])


def _gradient_region_checks(F: FrameStructure, cfg: RunConfig,
                            rng: np.random.Generator) -> Iterator[Check]:
    """ Null future gradients on each barrier's region, and the unit past \
        timelike gradient of the radial function on S1+. """
    points = grid_points(AUDIT_LO, AUDIT_HI, cfg.verify.grid_n)
    for which in Barrier:
        yield gradient_region_audit(ClosedFormBarrier(which), points,
                                    FUTURE_REGIONS[which])

    def radial(q: np.ndarray) -> float:
        return hyperbolic_radius(q).R1

    inside = points[np.abs(points[:, 1]) < points[:, 0] - 1e-2]
    inside = inside[::max(1, len(inside) // 500)]
    defects = list()
    for q in inside:
        grad = horizontal_gradient(F, radial, q)
        past = grad.u < 0
        defects.append(abs(metric(grad, grad) + 1.0) if past else np.inf)
    ix = int(np.argmax(defects)) if defects else 0
    yield Check.from_bound(
        "radial_gradient", PAPER_ANCHORS["radial_gradient"],
        float(max(defects, default=0.0)),
        RADIAL_TOL, location=inside[ix] if defects else None)


def _growth_check(F: FrameStructure, points: np.ndarray) -> Check:
    paper_anchor = PAPER_ANCHORS["growth"]
    try:
        vectors = {growth_vector(F, q[list(F.coords)]) for q in points}
    except DegenerateFrame as err:
        return Check(name="engel_growth", paper_anchor=paper_anchor,
                     status=Status.FAIL, detail=str(err))
    ok = vectors == {(2, 3, 4)}
    return Check(name="engel_growth", paper_anchor=paper_anchor,
                 status=Status.PASS if ok else Status.FAIL,
                 worst_residual=0.0 if ok else 1.0,
                 detail=f"growth vectors {sorted(vectors)} on "
                 f"{len(points)} points")


def _hamiltonian_type_check(F: FrameStructure, cfg: RunConfig) -> Check:
    """ Decompose [V,[V,W]] along the abnormal ray from the origin; f \
        bounded away from zero means not of Hamiltonian type. """
    paper_anchor = PAPER_ANCHORS["hamiltonian_type"]
    V, W = F.X, F.Y
    ray = abnormal_trajectory(F, (0.0, 0.0, 0.0, 0.0), 1.0,
                              cfg.integrator, n_samples=11)
    try:
        probes = [hamiltonian_type_probe(V, W, q) for q in ray.points]
    except BasisFailure as err:
        return Check(name="hamiltonian_type", paper_anchor=paper_anchor,
                     status=Status.FAIL, detail=str(err))
    f_abs = np.array([abs(probe.f) for probe in probes])
    residual = max(probe.residual for probe in probes)
    if all(probe.decomposable for probe in probes) and f_abs.max() <= 1e-9:
        return Check(name="hamiltonian_type", paper_anchor=paper_anchor,
                     status=Status.PASS, worst_residual=residual,
                     detail="f = 0 along the abnormal ray")
    return Check(name="hamiltonian_type", paper_anchor=paper_anchor,
                 status=Status.WARN,
                 worst_residual=residual, detail="not of Hamiltonian type, "
                 f"f min |coef| = {f_abs.min():.6g}")


def _homogeneity_check(F: FrameStructure) -> Check:
    homogeneous = is_homogeneous(F)
    paper_anchor = PAPER_ANCHORS["homogeneity"]
    if F.provenance == Provenance.Flat:
        return Check(name="homogeneity", paper_anchor=paper_anchor,
                     status=Status.PASS if homogeneous else Status.FAIL)
    return Check(name="homogeneity", paper_anchor=paper_anchor,
                 status=Status.PASS,
                 detail="homogeneous" if homogeneous else
                 "not homogeneous, so not its own nilpotent approximation")


def _lift_checks(F: FrameStructure, cfg: RunConfig,
                 rng: np.random.Generator) -> Iterator[Check]:
    """ Constant-momentum lifts of abnormal curves with p = (-1, 0, 0, 0). """
    n = cfg.verify.lift_samples
    starts = _random_rows(rng, n, (-1.0,) * 3, (1.0,) * 3)
    residuals, energies, offsets = np.zeros(n), np.zeros(n), np.zeros(n)
    for ix, (y0, z0, w0) in enumerate(starts):
        q0 = (0.0, y0, z0, w0)
        arc = hamiltonian_flow(F, PhasePoint.from_array(
            [*q0, -1.0, 0.0, 0.0, 0.0]), 1.0, cfg.integrator, n_samples=21)
        residuals[ix] = lift_residual(F, arc)
        energies[ix] = abs(arc.energy0 + 0.5) + arc.energy_drift(F)
        curve = abnormal_trajectory(F, q0, 1.0, n_samples=21)
        offsets[ix] = np.max(np.abs(curve.points - arc.q))
    for name, values, tol in (("abnormal_lift_residual", residuals,
                               LIFT_TOL),
                              ("abnormal_lift_energy", energies, LIFT_TOL),
                              ("abnormal_lift_projection", offsets,
                               LIFT_TOL)):
        ix = int(np.argmax(values))
        yield Check.from_bound(name, PAPER_ANCHORS["geodesic_lift"],
                               values[ix], tol,
                               location=(0.0, *starts[ix]))


def _monotonicity_checks(F: FrameStructure, cfg: RunConfig,
                         rng: np.random.Generator) -> Iterator[Check]:
    """ f1 and f2 never increase along causal curves inside |y| < x, and \
        no sampled path is longer than its duration. """
    n = min(cfg.verify.radial_paths, cfg.sampler.n_paths or 1)
    increases, excess = list(), list()
    for ix in range(n):
        path = draw_control_path(ix, cfg.sampler, cfg.seed)
        result = integrate_path(F, path, cfg.integrator)
        increases.extend(monotonicity_check(result.curve, barrier)
                         for barrier in (Barrier.f1, Barrier.f2))
        excess.append(result.length - path.total_duration)
    yield Check.from_bound("barrier_monotonicity", PAPER_ANCHORS["monotone"],
                           max(increases, default=0.0), 1e-8)
    yield Check.from_bound("length_budget", PAPER_ANCHORS["length"],
                           max(excess, default=0.0), 1e-12)


def _oracle_checks(F: FrameStructure, cfg: RunConfig,
                   rng: np.random.Generator) -> Iterator[Check]:
    """ Characteristic solutions against the closed forms. """
    points = _random_rows(rng, cfg.verify.oracle_points,
                          (0.0, -1.0, -1.0, -1.0), (1.0, 1.0, 1.0, 1.0))
    for problem in CauchyProblem:
        solved = CharacteristicBarrier(problem, F, cfg.integrator)(points)
        errors = np.abs(solved - ClosedFormBarrier(problem.barrier)(points))
        ix = int(np.argmax(errors))
        yield Check.from_bound(
            f"oracle_{problem.name}", PAPER_ANCHORS["closed_forms"],
            errors[ix], cfg.verify.oracle_tol, location=points[ix],
            detail=f"characteristic solution of {problem.name} against "
            f"{problem.barrier}")


def _order_checks(F: FrameStructure, cfg: RunConfig,
                  rng: np.random.Generator) -> Iterator[Check]:
    """ Flat closed forms as leading terms of perturbed solutions: \
        errors of order r^3 for f-problems under psi1 and r^4 for \
        g-problems under psi2. Perturbations that leave a closed form \
        an exact solution (phi and psi2 for f1 and f2, any of them for \
        the flat frame) must give no error at all. """
    zero = Poly4()
    f_problems = (CauchyProblem.CA1, CauchyProblem.CA2)
    g_problems = (CauchyProblem.CA3, CauchyProblem.CA4, CauchyProblem.CA5,
                  CauchyProblem.CA6)
    frames = {"phi": normal_form_structure(PERTURBED_PHI, zero, zero),
              "psi1": normal_form_structure(zero, PERTURBED_PSI1, zero),
              "psi2": normal_form_structure(zero, zero, PERTURBED_PSI2)}
    cases = [("flat", F, problem, None) for problem in CauchyProblem]
    cases += [("perturbed", frames["psi1"], problem, F_ORDER_MIN)
              for problem in f_problems]
    cases += [("perturbed", frames["psi2"], problem, G_ORDER_MIN)
              for problem in g_problems]
    cases += [(f"exact_{name}", frames[name], problem, None)
              for name in ("phi", "psi2") for problem in f_problems]
    for label, frame, problem, minimum in cases:
        fit = perturbation_order(frame, problem, cfg.verify.order_radii,
                                 cfg.verify.order_directions, cfg.integrator)
        if minimum is None:
            status = Status.PASS if fit.degenerate else Status.FAIL
            detail = f"sup errors {fit.errors}"
        else:
            status = Status.PASS if not fit.degenerate and \
                fit.slope >= minimum else Status.FAIL
            detail = f"slope {fit.slope} (needs >= {minimum}); sup " \
                f"errors {fit.errors}"
        yield Check(name=f"order_{label}_{problem.name}",
                    paper_anchor=PAPER_ANCHORS[_order_key(problem)],
                    status=status, worst_residual=max(fit.errors),
                    detail=detail)


def _order_key(problem: CauchyProblem) -> str:
    return "f_order" if problem.barrier.startswith("f") else "g_order"


def _radial_checks(F: FrameStructure, cfg: RunConfig,
                   rng: np.random.Generator) -> Iterator[Check]:
    """ L <= increase of R1 on S1+, with equality on radial lines. """
    n = cfg.verify.radial_paths
    chi_max = cfg.sampler.chi_max
    excess, equality = np.zeros(n), np.zeros(n)
    for ix in range(n):
        start = (0.5, rng.uniform(-0.25, 0.25), *rng.uniform(-0.5, 0.5, 2))
        chis = rng.uniform(-chi_max, chi_max, 3)
        pieces = tuple(ControlPiece(float(t), float(np.cosh(c)),
                                    float(np.sinh(c)))
                       for t, c in zip(rng.uniform(0.01, 1 / 3, 3), chis))
        result = integrate_path(F, ControlPath(pieces, start),
                                cfg.integrator)
        bound = radial_bound_check(F, result.curve)
        excess[ix] = bound.L - bound.delta_R1

        chi, s, T = rng.uniform(-1.0, 1.0), rng.uniform(0.1, 0.5), \
            rng.uniform(0.1, 0.5)
        line_start = (s * np.cosh(chi), s * np.sinh(chi), 0.0, 0.0)
        line = integrate_path(F, ControlPath((ControlPiece(
            T, float(np.cosh(chi)), float(np.sinh(chi))), ), line_start),
            cfg.integrator)
        bound = radial_bound_check(F, line.curve)
        equality[ix] = abs(bound.L - bound.delta_R1)
    ix = int(np.argmax(excess))
    yield Check.from_bound("radial_bound", PAPER_ANCHORS["maximizers"],
                           float(excess[ix]), RADIAL_TOL)
    ix = int(np.argmax(equality))
    yield Check.from_bound("radial_equality", PAPER_ANCHORS["maximizers"],
                           float(equality[ix]), RADIAL_EQUALITY_TOL)


def _round_trip_checks(F: FrameStructure, cfg: RunConfig,
                       rng: np.random.Generator) -> Iterator[Check]:
    """ Project causal paths to (x, y, w) and lift them back. """
    n = min(cfg.verify.lift_samples, 50)
    F3 = martinet_projection(F)
    section, z_error = np.zeros(n), np.zeros(n)
    for ix in range(n):
        path = draw_control_path(ix, cfg.sampler, cfg.seed)
        curve4 = integrate_path(F, path, cfg.integrator).curve
        curve3 = integrate_path(F3, path, cfg.integrator).curve
        lifted = lift_curve(F, curve3, 0.0, cfg.integrator)
        section[ix] = np.max(np.abs(lifted.project(COORDS3).points
                                    - curve3.points))
        z_error[ix] = np.max(np.abs(lifted.points - curve4.points))
    yield Check.from_bound("lift_round_trip", PAPER_ANCHORS["lift_z"],
                           float(section.max(initial=0.0)), ROUND_TRIP_TOL)
    yield Check.from_bound("lift_matches_flow", PAPER_ANCHORS["lift_z"],
                           float(z_error.max(initial=0.0)), LIFT_Z_TOL)

