#!/usr/bin/env python3

"""
Barrier functions: the six Cauchy problems (generator)(eta) = 0 with data \
    on y = x, y = -x or y = 0, their flat closed-form solutions, a method \
    of characteristics for perturbed frames, and the region predicates \
    the barriers cut out.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Callable, Mapping, Sequence
import dataclasses
from enum import Enum, StrEnum
import logging
from typing import Any, NamedTuple

# Import third-party PyPI libraries
import numpy as np
from scipy.stats import norm, qmc

# Import local custom libraries
try:
    from elab.config import IntegratorConfig
    from elab.debug import log
    from elab.errors import (NoBoundaryHit, NonDifferentiable,
                             StepFailure, UnknownRegion)
    from elab.frames import (as_point, classify, flat_structure,
                             FrameStructure, Generator, horizontal_gradient,
                             HorizontalVector, martinet_projection,
                             Provenance)
    from elab.integrate import event, integrate
    from elab.poly import GENS, Poly4
    from elab.report import Check, PAPER_ANCHORS, Status
except (ImportError, ModuleNotFoundError):
    from .config import IntegratorConfig
    from .debug import log
    from .errors import (NoBoundaryHit, NonDifferentiable, StepFailure,
                         UnknownRegion)
    from .frames import (as_point, classify, flat_structure, FrameStructure,
                         Generator, horizontal_gradient, HorizontalVector,
                         martinet_projection, Provenance)
    from .integrate import event, integrate
    from .poly import GENS, Poly4
    from .report import Check, PAPER_ANCHORS, Status

# Characteristic solver defaults
HORIZON = 4.0
FOLD_TOL = 1e-9
DIFF_STEP = 1e-4

# Fixed seed of the quasi-random directions used to fit perturbation orders
ORDER_DIRECTIONS_SEED = 20_231_017

# Below this sup error the fitted slope is meaningless
DEGENERATE_ERROR = 1e-8

x, y, z, w = (Poly4.var(name) for name in ("x", "y", "z", "w"))


class Surface(StrEnum):
    Gamma1 = "Gamma1"  # y = x
    Gamma2 = "Gamma2"  # y = -x
    Y0 = "Y0"  # y = 0


class Datum(StrEnum):
    plusZ = "plusZ"
    minusZ = "minusZ"
    plusW = "plusW"
    minusW = "minusW"


# Zero level set of each surface function is the initial surface
SURFACE_FUNCTIONS = {Surface.Gamma1: y - x, Surface.Gamma2: y + x,
                     Surface.Y0: y}
# Value of y on each surface, for restricting polynomials to it
SURFACE_Y = {Surface.Gamma1: x, Surface.Gamma2: -x, Surface.Y0: Poly4()}
DATA = {Datum.plusZ: z, Datum.minusZ: -z, Datum.plusW: w, Datum.minusW: -w}


class BarrierSpec(NamedTuple):
    generator: Generator
    surface: Surface
    datum: Datum


class Barrier(StrEnum):
    """ Names of the flat closed-form solutions. """
    f1 = "f1"
    f2 = "f2"
    g1 = "g1"
    g2 = "g2"
    g3 = "g3"
    g4 = "g4"


CLOSED_FORMS: dict[Barrier, Poly4] = {
    Barrier.f1: z - (x * x - y * y) * 0.25,
    Barrier.f2: -z - (x * x - y * y) * 0.25,
    Barrier.g1: w - (x * x - y * y) * (x + 3 * y) * 0.0625,
    Barrier.g2: w - (x * x - y * y) * (x - 3 * y) * 0.0625,
    Barrier.g3: -w - (x * y * y - y ** 3) * 0.25,
    Barrier.g4: -w - (x * y * y + y ** 3) * 0.25}


class CauchyProblem(Enum):
    """ The six admitted (generator, surface, datum) combinations. CA2 \
        uses X+Y: its closed form is annihilated by X+Y, and y = -x is \
        a characteristic surface of X-Y. """
    CA1 = BarrierSpec(Generator.XminusY, Surface.Gamma1, Datum.plusZ)
    CA2 = BarrierSpec(Generator.XplusY, Surface.Gamma2, Datum.minusZ)
    CA3 = BarrierSpec(Generator.XminusY, Surface.Gamma1, Datum.plusW)
    CA4 = BarrierSpec(Generator.XplusY, Surface.Gamma2, Datum.plusW)
    CA5 = BarrierSpec(Generator.XplusY, Surface.Y0, Datum.minusW)
    CA6 = BarrierSpec(Generator.XminusY, Surface.Y0, Datum.minusW)

    @classmethod
    def named(cls, name: str) -> "CauchyProblem":
        """
        :param name: str, e.g. "ca1" or "CA1"
        :return: CauchyProblem
        """
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"Unknown Cauchy problem {name!r}; choose one "
                             f"of {', '.join(p.name.lower() for p in cls)}")

    @property
    def barrier(self) -> Barrier:
        return SOLVES[self]


SOLVES = dict(zip(CauchyProblem, Barrier))
PROBLEM_OF = {barrier: problem for problem, barrier in SOLVES.items()}

# Flat horizontal gradients: grad = coef * (X - Y) or coef * (X + Y)
GRADIENTS: dict[Barrier, tuple[Poly4, Generator]] = {
    Barrier.f1: ((x - y) * 0.5, Generator.XminusY),
    Barrier.f2: ((x + y) * 0.5, Generator.XplusY),
    Barrier.g1: ((x - y) * (x + 3 * y) * 0.1875, Generator.XminusY),
    Barrier.g2: ((x + y) * (x - 3 * y) * 0.1875, Generator.XplusY),
    Barrier.g3: (y * y * 0.75, Generator.XplusY),
    Barrier.g4: (y * y * 0.75, Generator.XminusY)}


def _sector(lo: Callable, hi: Callable) -> Callable[..., np.ndarray]:
    return lambda xs, ys: (xs > 0) & (lo(xs) < ys) & (ys < hi(xs))


# Where each flat gradient is null and future directed, as (x, y) masks
FUTURE_REGIONS: dict[Barrier, Callable[..., np.ndarray]] = {
    Barrier.f1: _sector(lambda xs: -xs, lambda xs: xs),
    Barrier.f2: _sector(lambda xs: -xs, lambda xs: xs),
    Barrier.g1: _sector(lambda xs: -xs / 3, lambda xs: xs),
    Barrier.g2: _sector(lambda xs: -xs, lambda xs: xs / 3),
    Barrier.g3: lambda xs, ys: (xs > 0) & (ys != 0),
    Barrier.g4: lambda xs, ys: (xs > 0) & (ys != 0)}


@dataclasses.dataclass(frozen=True)
class ClosedFormBarrier:
    """ Exact flat solution of one Cauchy problem. """
    which: Barrier

    @property
    def poly(self) -> Poly4:
        return CLOSED_FORMS[self.which]

    @property
    def problem(self) -> CauchyProblem:
        return PROBLEM_OF[self.which]

    def __call__(self, q: Any) -> Any:
        """
        :param q: array-like of shape (..., 4)
        :return: float or np.ndarray of shape q.shape[:-1]
        """
        values = self.poly(*np.moveaxis(np.asarray(q, dtype=float), -1, 0))
        return float(values) if values.ndim == 0 else values


@dataclasses.dataclass(frozen=True)
class CharacteristicBarrier:
    """ Solution of one Cauchy problem for any frame, found by following \
        the generator's trajectory to the initial surface. """
    problem: CauchyProblem
    frame: FrameStructure
    cfg: IntegratorConfig = IntegratorConfig()
    horizon: float = HORIZON
    fold_tol: float = FOLD_TOL

    @property
    def which(self) -> Barrier:
        return self.problem.barrier

    def __call__(self, q: Any) -> Any:
        """
        :param q: array-like of shape (4,) or (n, 4)
        :return: float, or np.ndarray of shape (n,)
        """
        pts = np.asarray(q, dtype=float)
        if pts.ndim == 1:
            return characteristic_solve(self, pts, self.cfg)
        return characteristic_solve_many(self, pts.reshape(-1, 4)
                                         ).reshape(pts.shape[:-1])


ScalarField = ClosedFormBarrier | CharacteristicBarrier


class OrderFit(NamedTuple):
    slope: float | None
    radii: list[float]
    errors: list[float]

    @property
    def degenerate(self) -> bool:
        return self.slope is None


class RegionCell(NamedTuple):
    """ {b <= 0 for b in barriers} intersected with {s * coord >= 0}. """
    barriers: tuple[Barrier, ...]
    signs: tuple[int, int, int, int]  # +1, -1, or 0 for no condition


def _cell(f: Barrier, g: Barrier | None, signs: tuple[int, int, int, int]
          ) -> RegionCell:
    return RegionCell((f, ) if g is None else (f, g), signs)


# Each region is a union of cells
REGIONS: dict[str, tuple[RegionCell, ...]] = {
    "A11": (_cell(Barrier.f1, Barrier.g1, (1, 1, 1, 1)), ),
    "A12": (_cell(Barrier.f1, Barrier.g2, (1, -1, 1, 1)), ),
    "A13": (_cell(Barrier.f1, Barrier.g3, (1, 1, 1, -1)), ),
    "A14": (_cell(Barrier.f1, Barrier.g4, (1, -1, 1, -1)), ),
    "A21": (_cell(Barrier.f2, Barrier.g1, (1, 1, -1, 1)), ),
    "A22": (_cell(Barrier.f2, Barrier.g2, (1, -1, -1, 1)), ),
    "A23": (_cell(Barrier.f2, Barrier.g3, (1, 1, -1, -1)), ),
    "A24": (_cell(Barrier.f2, Barrier.g4, (1, -1, -1, -1)), ),
    "WeakGeneral": (_cell(Barrier.f1, None, (1, 0, 1, 0)),
                    _cell(Barrier.f2, None, (1, 0, -1, 0)))}
FLAT_REGIONS = tuple(name for name in REGIONS if name.startswith("A"))
REGION_SELECTIONS = {"flat": FLAT_REGIONS, "weak": ("WeakGeneral", )}


# NOTE All functions below are in alphabetical order.


def barrier_gradient(field: ScalarField, q: Sequence[float],
                     step: float = DIFF_STEP) -> HorizontalVector:
    """
    :param field: ScalarField, closed forms use the flat frame and exact \
        derivatives; characteristic fields use their own frame and \
        central differences with step `step`
    :param q: Sequence[float], point
    :raises NonDifferentiable: if a characteristic foot point is a fold
    :return: HorizontalVector
    """
    if isinstance(field, ClosedFormBarrier):
        return horizontal_gradient(flat_structure(), field.poly, q)
    return horizontal_gradient(field.frame, field, q, step=step)


def barrier_values(frame: FrameStructure, points: np.ndarray,
                   names: Sequence[Barrier],
                   cfg: IntegratorConfig = IntegratorConfig()
                   ) -> dict[Barrier, np.ndarray]:
    """ Evaluate barriers at many points: closed forms for the flat \
        frame, characteristic solutions otherwise.

    :param frame: FrameStructure
    :param points: np.ndarray of shape (n, 4)
    :param names: Sequence[Barrier], barriers to evaluate
    :return: dict[Barrier, np.ndarray] mapping each name to n values
    """
    values = dict()
    for name in dict.fromkeys(names):
        field = ClosedFormBarrier(name) if frame.provenance == \
            Provenance.Flat else CharacteristicBarrier(PROBLEM_OF[name],
                                                       frame, cfg)
        values[name] = np.asarray(field(points), dtype=float).reshape(-1)
    return values


def boundary_defect(which: Barrier) -> Poly4:
    """
    :param which: Barrier
    :return: Poly4, the closed form minus its datum, restricted to the \
        initial surface; identically zero when the boundary condition holds
    """
    spec: BarrierSpec = PROBLEM_OF[which].value
    on_surface = (CLOSED_FORMS[which] - DATA[spec.datum]).expr.subs(
        GENS[1], SURFACE_Y[spec.surface].expr)
    return Poly4(on_surface)


def characteristic_solve(field: CharacteristicBarrier, q: Sequence[float],
                         cfg: IntegratorConfig | None = None) -> float:
    """ Follow the generator from q to the initial surface and return \
        the datum there. The time direction is the one in which the \
        surface function moves toward zero; the other is tried if the \
        horizon runs out.

    :param field: CharacteristicBarrier
    :param q: Sequence[float], query point
    :param cfg: IntegratorConfig, defaults to `field.cfg`
    :raises NoBoundaryHit: if neither direction reaches the surface \
        within `field.horizon`
    :raises NonDifferentiable: if the generator is tangent to the surface \
        at the foot point
    :return: float, solution value at q
    """
    cfg = field.cfg if cfg is None else cfg
    spec: BarrierSpec = field.problem.value
    G = field.frame.generator(spec.generator)
    s = SURFACE_FUNCTIONS[spec.surface]
    Gs = G.apply(s)
    start = np.asarray(as_point(q))
    s0, rate = s.at(start), Gs.at(start)

    if s0 == 0.0:
        foot = start
    else:
        first = -1.0 if s0 * rate > 0 else 1.0
        crossing = event(lambda _, pt: s.at(pt))
        for direction in (first, -first):
            sol = integrate(lambda _, pt: G(pt), (0.0, direction *
                                                  field.horizon),
                            start, cfg, events=[crossing])
            if sol.t_events[0].size:
                foot = sol.y_events[0][0]
                break
        else:
            raise NoBoundaryHit(
                f"Trajectory of {spec.generator} from {start.tolist()} "
                f"does not reach {spec.surface} within time "
                f"{field.horizon} in either direction")

    if abs(Gs.at(foot)) < field.fold_tol:
        raise NonDifferentiable(f"{spec.generator} is tangent to "
                                f"{spec.surface} at {foot.tolist()}")
    return DATA[spec.datum].at(foot)


def characteristic_solve_many(field: CharacteristicBarrier,
                              points: np.ndarray,
                              cfg: IntegratorConfig | None = None,
                              n_checks: int = 9) -> np.ndarray:
    """ `characteristic_solve` at many points at once. Each trajectory is \
        parameterized by the surface function itself, s = s0 * (1 - sigma) \
        for sigma from 0 to 1, so all of them reach the surface together. \
        Points already on the surface, points where the generator's rate \
        along s changes sign or nearly vanishes, and points whose travel \
        time exceeds the horizon are solved one at a time instead.

    :param field: CharacteristicBarrier
    :param points: np.ndarray of shape (n, 4)
    :param cfg: IntegratorConfig, defaults to `field.cfg`
    :param n_checks: int, nodes in sigma where the rate's sign is checked
    :raises NoBoundaryHit: as `characteristic_solve`
    :raises NonDifferentiable: as `characteristic_solve`
    :return: np.ndarray of shape (n,)
    """
    cfg = field.cfg if cfg is None else cfg
    pts = np.asarray(points, dtype=float).reshape(-1, 4)
    spec: BarrierSpec = field.problem.value
    G = field.frame.generator(spec.generator)
    s = SURFACE_FUNCTIONS[spec.surface]
    Gs = G.apply(s)
    s_all = s(*pts.T)
    batch = np.flatnonzero((s_all != 0)
                           & (np.abs(Gs(*pts.T)) >= field.fold_tol))
    values = np.full(len(pts), np.nan)
    redo = np.ones(len(pts), dtype=bool)
    if batch.size:
        s0, n = s_all[batch], batch.size

        def rhs(_: float, flat: np.ndarray) -> np.ndarray:
            q = flat[:4 * n].reshape(n, 4)
            dt = -s0 / Gs(*q.T)
            return np.concatenate([(dt[:, None] * G(q)).ravel(), dt])

        start = np.concatenate([pts[batch].ravel(), np.zeros(n)])
        try:
            with np.errstate(divide="ignore", invalid="ignore"):
                sol = integrate(rhs, (0.0, 1.0), start, cfg,
                                t_eval=np.linspace(0.0, 1.0, n_checks))
            path = sol.y[:4 * n].T.reshape(len(sol.t), n, 4)
            rates = Gs(*np.moveaxis(path, -1, 0))
            ok = (np.all(np.isfinite(path), axis=(0, 2))
                  & np.all(np.abs(rates) >= field.fold_tol, axis=0)
                  & (np.all(rates > 0, axis=0) | np.all(rates < 0, axis=0))
                  & (np.abs(sol.y[4 * n:, -1]) <= field.horizon))
            values[batch] = DATA[spec.datum](*path[-1].T)
            redo[batch[ok]] = False
        except StepFailure:
            log(f"Batch of {n} characteristics of {field.problem.name} "
                "failed; solving one at a time", logging.DEBUG)
    for ix in np.flatnonzero(redo):
        values[ix] = characteristic_solve(field, pts[ix], cfg)
    return values


def flat_barrier(which: Barrier | str, q: Sequence[float]) -> float:
    """
    :param which: Barrier | str, e.g. "f1"
    :param q: Sequence[float], point
    :return: float, exact closed form evaluated at q
    """
    return CLOSED_FORMS[Barrier(which)].at(q)


def gradient_defect(which: Barrier) -> tuple[Poly4, Poly4]:
    """
    :param which: Barrier
    :return: tuple[Poly4, Poly4], frame coefficients of the flat \
        horizontal gradient minus those of its tabulated closed form; \
        both identically zero when the table is right
    """
    flat = flat_structure()
    f = CLOSED_FORMS[which]
    coef, generator = GRADIENTS[which]
    sign = -1 if generator == Generator.XminusY else 1
    return (-flat.X.apply(f) - coef, flat.Y.apply(f) - sign * coef)


def gradient_region_audit(field: ScalarField, points: np.ndarray,
                          expected: Callable[..., np.ndarray] | None = None,
                          name: str | None = None,
                          paper_anchor: str | None = None,
                          null_tol: float = 1e-12,
                          step: float = DIFF_STEP) -> Check:
    """ Check that the horizontal gradient is null and future directed \
        at every sampled point inside the expected region.

    :param field: ScalarField
    :param points: np.ndarray of shape (n, 4), e.g. from `grid_points`
    :param expected: Callable taking arrays of x and y and returning the \
        mask of the region; defaults to the flat region for `field`
    :param paper_anchor: str | None, quoted claim; defaults to the \
        gradient claim of the f or g barriers
    :param null_tol: float, relative tolerance below which |g(v, v)| \
        counts as zero
    :return: Check, FAIL with the first violating location if any
    """
    expected = FUTURE_REGIONS[field.which] if expected is None else expected
    pts = np.asarray(points, dtype=float).reshape(-1, 4)
    inside = pts[expected(pts[:, 0], pts[:, 1])]
    if isinstance(field, ClosedFormBarrier):
        frame = flat_structure()
        args = tuple(np.moveaxis(inside, -1, 0))
        u = -frame.X.apply(field.poly)(*args)
        v = frame.Y.apply(field.poly)(*args)
    else:
        grads = [barrier_gradient(field, pt, step) for pt in inside]
        u = np.array([grad.u for grad in grads])
        v = np.array([grad.v for grad in grads])
    norm2 = u * u + v * v
    causal = np.abs(v * v - u * u) <= null_tol * norm2
    bad = np.flatnonzero(~(causal & (u > 0) & (norm2 > 0)))
    worst = float(np.max(np.abs(v * v - u * u) / np.where(
        norm2 > 0, norm2, 1.0), initial=0.0))
    location = inside[bad[0]].tolist() if bad.size else None
    if bad.size:
        first = classify(HorizontalVector(as_point(inside[bad[0]]),
                                          float(u[bad[0]]),
                                          float(v[bad[0]])))
        detail = (f"{bad.size} of {len(inside)} points not null future; "
                  f"first is {first.kind} {first.orientation}")
    elif inside.size:
        lo, hi = inside.min(axis=0).round(4), inside.max(axis=0).round(4)
        detail = (f"{len(inside)} points checked in the box from "
                  f"{lo.tolist()} to {hi.tolist()}")
    else:
        detail = "no points inside the region"
    return Check(name=name or f"gradient_region_{field.which}",
                 paper_anchor=paper_anchor or PAPER_ANCHORS[
                     "gradient_f" if field.which.startswith("f")
                     else "gradient_g"],
                 status=Status.FAIL if bad.size else Status.PASS,
                 worst_residual=worst, location=location, detail=detail)


def grid_points(lo: Sequence[float], hi: Sequence[float], n: int,
                axes: Sequence[int] = (0, 1, 2), fixed: float = 0.0
                ) -> np.ndarray:
    """ Regular grid over three coordinates, the fourth held fixed.

    :param lo: Sequence[float], lower corner over `axes`
    :param hi: Sequence[float], upper corner over `axes`
    :param n: int, nodes per gridded axis
    :param axes: Sequence[int], which three of x, y, z, w to grid
    :param fixed: float, value of the remaining coordinate
    :return: np.ndarray of shape (n**3, 4)
    """
    mesh = np.meshgrid(*(np.linspace(a, b, n) for a, b in zip(lo, hi)),
                       indexing="ij")
    points = np.full((mesh[0].size, 4), float(fixed))
    for ix, values in zip(axes, mesh, strict=True):
        points[:, ix] = values.ravel()
    return points


def order_directions(n: int, seed: int = ORDER_DIRECTIONS_SEED
                     ) -> np.ndarray:
    """ Unit vectors in 4-space, spread by a scrambled Sobol sequence \
        mapped through the normal quantile function.

    :param n: int, number of directions
    :return: np.ndarray of shape (n, 4)
    """
    sampler = qmc.Sobol(d=4, scramble=True, seed=seed)
    m = int(np.log2(n))
    uniform = sampler.random_base2(m) if 2 ** m == n \
        else sampler.random(n)
    gauss = norm.ppf(np.clip(uniform, 1e-12, 1 - 1e-12))
    return gauss / np.linalg.norm(gauss, axis=1, keepdims=True)


def pde_residual(field: ScalarField | Poly4, q: Sequence[float],
                 frame: FrameStructure | None = None,
                 generator: Generator | None = None,
                 step: float = DIFF_STEP) -> float:
    """ |generator(field)| at q.

    :param field: ScalarField | Poly4; a bare Poly4 needs `generator`
    :param q: Sequence[float], point
    :param frame: FrameStructure, defaults to the field's own frame (the \
        flat frame for closed forms and bare polynomials)
    :param generator: Generator, defaults to the field's Cauchy problem's
    :return: float
    """
    point = np.asarray(as_point(q))
    if isinstance(field, Poly4):
        if generator is None:
            raise ValueError("A bare polynomial needs an explicit generator")
        poly = field
    elif isinstance(field, ClosedFormBarrier):
        poly = field.poly
    else:
        poly = None
    if frame is None:
        frame = flat_structure() if poly is not None else field.frame
    if generator is None:
        generator = field.problem.value.generator
    G = frame.generator(generator)
    if poly is not None:
        return abs(G.apply(poly).at(point))
    direction = G(point)
    return abs(field(point + step * direction)
               - field(point - step * direction)) / (2 * step)


def perturbation_order(frame: FrameStructure, problem: CauchyProblem,
                       radii: Sequence[float], n_directions: int = 64,
                       cfg: IntegratorConfig = IntegratorConfig()
                       ) -> OrderFit:
    """ Fit p in sup |characteristic - flat closed form| ~ r^p.

    :param frame: FrameStructure whose phi and psi2 are z-free
    :param problem: CauchyProblem
    :param radii: Sequence[float], decreasing radii inside the patch
    :param n_directions: int, number of fixed quasi-random directions
    :raises ZDependence: if the frame does not project
    :raises NoBoundaryHit: if a characteristic misses its surface
    :return: OrderFit; slope None if every error is below 1e-8
    """
    if frame.provenance != Provenance.Flat:
        martinet_projection(frame)
    if any(r1 <= r2 for r1, r2 in zip(radii, radii[1:])):
        raise ValueError(f"Radii must decrease, not {list(radii)}")
    solved = CharacteristicBarrier(problem, frame, cfg)
    exact = ClosedFormBarrier(problem.barrier)
    directions = order_directions(n_directions)
    errors = list()
    for r in radii:
        points = r * directions
        errors.append(float(np.max(np.abs(solved(points) - exact(points)))))
        log(f"{problem.name} sup error at r = {r}: {errors[-1]:.3e}",
            logging.DEBUG)
    if max(errors) <= DEGENERATE_ERROR:
        return OrderFit(None, list(radii), errors)
    slope = np.polyfit(np.log(radii), np.log(np.maximum(errors, 1e-300)),
                       1)[0]
    return OrderFit(float(slope), list(radii), errors)


def region_mask(name: str, points: np.ndarray, slack: float = 0.0,
                values: Mapping[Barrier, np.ndarray] | None = None
                ) -> np.ndarray:
    """ Vectorized `region_membership`.

    :param name: str, "A11".."A24" or "WeakGeneral"
    :param points: np.ndarray of shape (n, 4)
    :param slack: float >= 0, tolerance added to every inequality
    :param values: Mapping[Barrier, np.ndarray] of barrier values at \
        `points`; defaults to the flat closed forms
    :raises UnknownRegion: if `name` is not a known region
    :return: np.ndarray[bool] of shape (n,)
    """
    try:
        cells = REGIONS[name]
    except KeyError:
        raise UnknownRegion(f"Unknown region {name!r}; choose one of "
                            f"{', '.join(REGIONS)}")
    if slack < 0:
        raise ValueError(f"slack must be nonnegative, not {slack}")
    pts = np.asarray(points, dtype=float).reshape(-1, 4)
    inside = np.zeros(len(pts), dtype=bool)
    for cell in cells:
        ok = np.ones(len(pts), dtype=bool)
        for barrier in cell.barriers:
            vals = CLOSED_FORMS[barrier](*pts.T) if values is None \
                else values[barrier]
            ok &= vals <= slack
        for ix, sign in enumerate(cell.signs):
            if sign:
                ok &= sign * pts[:, ix] >= -slack
        inside |= ok
    return inside


def region_membership(name: str, q: Sequence[float], slack: float = 0.0,
                      values: Mapping[Barrier, float] | None = None
                      ) -> bool:
    """
    :param name: str, "A11".."A24" or "WeakGeneral"
    :param q: Sequence[float], point
    :param slack: float >= 0, each inequality u <= 0 becomes u <= slack
    :param values: Mapping[Barrier, float] of barrier values at q; \
        defaults to the flat closed forms
    :raises UnknownRegion: if `name` is not a known region
    :return: bool
    """
    arrays = None if values is None else {
        barrier: np.array([value]) for barrier, value in values.items()}
    return bool(region_mask(name, np.asarray([as_point(q)]), slack,
                            arrays)[0])


def violated_predicates(name: str, q: Sequence[float], slack: float = 0.0,
                        values: Mapping[Barrier, float] | None = None
                        ) -> list[str]:
    """
    :return: list[str] describing every inequality of every cell of the \
        region that fails at q, e.g. ["A13: g3 <= 0"]
    """
    point = as_point(q)
    failures = list()
    for cell in REGIONS[name]:
        for barrier in cell.barriers:
            value = CLOSED_FORMS[barrier].at(point) if values is None \
                else values[barrier]
            if value > slack:
                failures.append(f"{name}: {barrier} <= 0")
        for coord, sign in zip("xyzw", cell.signs):
            if sign and sign * getattr(point, coord) < -slack:
                relation = ">=" if sign > 0 else "<="
                failures.append(f"{name}: {coord} {relation} 0")
    return failures
