#!/usr/bin/env python3

"""
Geodesic Hamiltonian H = -<p,X>^2/2 + <p,Y>^2/2, its flow, the exponential \
    map, abnormal trajectories, lift residuals, sub-Lorentzian length, and \
    the radial bound L <= R1(end) - R1(start) on the sector S1+.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Callable, Sequence
import dataclasses
import logging
from typing import NamedTuple

# Import third-party PyPI libraries
import numpy as np
import pandas as pd
from scipy.integrate import quad

# Import local custom libraries
try:
    from elab.config import IntegratorConfig
    from elab.debug import log
    from elab.errors import NotNonspacelike, RegionViolation
    from elab.frames import (as_point, Covector, FrameStructure,
                             hyperbolic_radius, Point, Provenance, Region,
                             SampledCurve)
    from elab.integrate import integrate
except (ImportError, ModuleNotFoundError):
    from .config import IntegratorConfig
    from .debug import log
    from .errors import NotNonspacelike, RegionViolation
    from .frames import (as_point, Covector, FrameStructure,
                         hyperbolic_radius, Point, Provenance, Region,
                         SampledCurve)
    from .integrate import integrate

# Default number of samples stored per integrated arc
N_SAMPLES = 101

# Gauss-Legendre nodes and weights on [0, 1] for averaging over a step
_LEGENDRE_NODES, _LEGENDRE_WEIGHTS = np.polynomial.legendre.leggauss(5)
GAUSS_NODES = 0.5 * (_LEGENDRE_NODES + 1.0)
GAUSS_WEIGHTS = 0.5 * _LEGENDRE_WEIGHTS

# Column names of the GeodesicArc CSV export
ARC_COLUMNS = ("t", "x", "y", "z", "w", "px", "py", "pz", "pw")


class PhasePoint(NamedTuple):
    q: Point
    p: Covector

    @classmethod
    def from_array(cls, state: Sequence[float]) -> "PhasePoint":
        return cls(as_point(state[:4]), Covector(*map(float, state[4:8])))

    def as_array(self) -> np.ndarray:
        return np.array([*self.q, *self.p], dtype=float)


@dataclasses.dataclass(frozen=True, eq=False)
class GeodesicArc:
    """ Samples (t, q, p) of an integral curve of the Hamiltonian field. """
    t: np.ndarray
    states: np.ndarray  # shape (n, 8): x, y, z, w, px, py, pz, pw
    energy0: float
    dense: Callable[[float], np.ndarray] | None = None

    def __post_init__(self) -> None:
        if len(self.t) > 1 and not np.all(np.diff(self.t) > 0):
            raise ValueError("GeodesicArc sample times must increase")

    @property
    def q(self) -> np.ndarray:
        return self.states[:, :4]

    @property
    def p(self) -> np.ndarray:
        return self.states[:, 4:]

    def at(self, ix: int) -> PhasePoint:
        return PhasePoint.from_array(self.states[ix])

    def energy_drift(self, F: FrameStructure) -> float:
        """
        :return: float, max over samples of |H(t) - H(0)|
        """
        return float(np.max(np.abs(_hamiltonian_values(F, self.states)
                                   - self.energy0)))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(np.column_stack([self.t, self.states]),
                            columns=list(ARC_COLUMNS))


class LiftDefects(NamedTuple):
    hamilton: np.ndarray
    pairing: np.ndarray


class RadialBound(NamedTuple):
    L: float
    delta_R1: float
    ok: bool


# NOTE All functions below are in alphabetical order.


def abnormal_trajectory(F: FrameStructure, q0: Sequence[float], T: float,
                        cfg: IntegratorConfig = IntegratorConfig(),
                        n_samples: int = N_SAMPLES) -> SampledCurve:
    """ Trajectory of X from q0 on [0, T]. Closed form for the flat \
        frame: (x0 + t, y0, z0 + y0*t/2, w0 + y0^2*t/2).

    :param F: FrameStructure on 4-space
    :param q0: Sequence[float], start point
    :param T: float, final time
    :param cfg: IntegratorConfig, used unless the frame is flat
    :param n_samples: int, number of samples including both ends
    :return: SampledCurve with constant control (u, v) = (1, 0)
    """
    start = np.asarray(as_point(q0))
    t = np.linspace(0.0, T, n_samples)
    if F.provenance == Provenance.Flat:
        x0, y0, z0, w0 = start
        points = np.column_stack([x0 + t, np.full_like(t, y0),
                                  z0 + 0.5 * y0 * t,
                                  w0 + 0.5 * y0 * y0 * t])
    else:
        sol = integrate(lambda _, q: F.X(q), (0.0, T), start, cfg,
                        t_eval=t)
        points = sol.y.T
    controls = np.tile([1.0, 0.0], (len(t), 1))
    return SampledCurve(t, points, controls)


def exp_map(F: FrameStructure, q0: Sequence[float], lam: Sequence[float],
            cfg: IntegratorConfig = IntegratorConfig()) -> Point:
    """ exp_{q0}(lam): projection of the time-1 Hamiltonian flow.

    :param q0: Sequence[float], pole
    :param lam: Sequence[float], covector (px, py, pz, pw) at q0
    :raises StepFailure: if the flow cannot be integrated to time 1
    :return: Point
    """
    pp0 = PhasePoint(as_point(q0), Covector(*map(float, lam)))
    return hamiltonian_flow(F, pp0, 1.0, cfg, n_samples=2).at(-1).q


def hamiltonian(F: FrameStructure, pp: PhasePoint) -> float:
    """
    :return: float, -<p, X(q)>^2 / 2 + <p, Y(q)>^2 / 2
    """
    return float(_hamiltonian_values(F, pp.as_array()))


def hamiltonian_flow(F: FrameStructure, pp0: PhasePoint, T: float,
                     cfg: IntegratorConfig = IntegratorConfig(),
                     n_samples: int = N_SAMPLES) -> GeodesicArc:
    """ Integrate Hamilton's equations
        q' = -P_X X + P_Y Y,
        p_i' = P_X sum_j p_j dX_j/dq_i - P_Y sum_j p_j dY_j/dq_i
        where P_X = <p, X(q)> and P_Y = <p, Y(q)>.

    :param F: FrameStructure on 4-space
    :param pp0: PhasePoint, initial position and momentum
    :param T: float, final time (negative integrates backwards)
    :param cfg: IntegratorConfig
    :param n_samples: int, number of stored samples including both ends
    :raises StepFailure: if the step controller underflows
    :return: GeodesicArc sampled in increasing time
    """
    if not np.isfinite(T):
        raise ValueError(f"Flow time must be finite, not {T}")
    state0 = pp0.as_array()
    energy0 = hamiltonian(F, pp0)
    if T == 0:
        return GeodesicArc(np.array([0.0]), state0[None, :], energy0)
    t_eval = np.linspace(0.0, T, max(n_samples, 2))
    sol = integrate(lambda _, s: hamilton_rhs(F, s), (0.0, T), state0, cfg,
                    t_eval=t_eval, dense_output=True)
    order = np.argsort(sol.t)
    arc = GeodesicArc(sol.t[order], sol.y.T[order], energy0, sol.sol)
    log(f"Flow from {pp0.q} for time {T}: energy drift "
        f"{arc.energy_drift(F):.3e}", logging.DEBUG)
    return arc


def hamilton_rhs(F: FrameStructure, states: np.ndarray) -> np.ndarray:
    """ Hamiltonian vector field at one or many phase points.

    :param F: FrameStructure on 4-space
    :param states: np.ndarray of shape (..., 8)
    :return: np.ndarray of shape (..., 8)
    """
    q, p = states[..., :4], states[..., 4:]
    Xq, Yq = F.X(q), F.Y(q)
    PX = np.sum(p * Xq, axis=-1, keepdims=True)
    PY = np.sum(p * Yq, axis=-1, keepdims=True)
    dq = -PX * Xq + PY * Yq
    dp = PX * (F.X.jacobian_at(q) @ p[..., None])[..., 0] \
        - PY * (F.Y.jacobian_at(q) @ p[..., None])[..., 0]
    return np.concatenate([dq, dp], axis=-1)


def lift_defects(F: FrameStructure, arc: GeodesicArc) -> LiftDefects:
    """ Per-sample defects of a phase curve as a Hamiltonian lift.

    The Hamilton defect compares the difference quotient of the samples \
    over each step with the Hamiltonian field averaged over that step, by \
    Gauss-Legendre quadrature on the dense interpolant if the arc has one \
    and by the trapezoid rule otherwise. Each sample gets the larger \
    defect of its two steps. The pairing defect is \
    |g(q', X) - <p, X>| + |g(q', Y) - <p, Y>| for the velocity q' of the \
    Hamiltonian field at the sample.

    :param F: FrameStructure on 4-space
    :param arc: GeodesicArc, at least 2 samples
    :return: LiftDefects; both arrays are inf if the momentum vanishes \
        at any sample
    """
    if len(arc.t) < 2:
        raise ValueError("lift_residual needs at least 2 samples")
    n = len(arc.t)
    if np.any(np.all(arc.p == 0, axis=-1)):
        log("Zero momentum cannot represent a Hamiltonian lift",
            logging.WARNING)
        return LiftDefects(np.full(n, np.inf), np.full(n, np.inf))
    dt = np.diff(arc.t)
    quotient = np.diff(arc.states, axis=0) / dt[:, None]
    if arc.dense is None:
        rhs = hamilton_rhs(F, arc.states)
        average = 0.5 * (rhs[:-1] + rhs[1:])
    else:
        times = arc.t[:-1, None] + dt[:, None] * GAUSS_NODES[None, :]
        states = np.asarray(arc.dense(times.ravel())).T
        rhs = hamilton_rhs(F, states).reshape(*times.shape, -1)
        average = np.einsum("k,skd->sd", GAUSS_WEIGHTS, rhs)
    step = np.max(np.abs(quotient - average), axis=-1)
    hamilton = np.maximum(np.append(step, step[-1]),
                          np.insert(step, 0, step[0]))

    # Frame coefficients (a, b) of q' = aX + bY; g(q', X) = -a, g(q', Y) = b
    velocity = hamilton_rhs(F, arc.states)[:, :4]
    Xq, Yq = F.X(arc.q), F.Y(arc.q)
    frame = np.stack([Xq, Yq], axis=-1)  # (n, 4, 2)
    coefs = np.stack([np.linalg.lstsq(m, dq, rcond=None)[0] for m, dq in
                      zip(frame, velocity)])
    PX = np.sum(arc.p * Xq, axis=-1)
    PY = np.sum(arc.p * Yq, axis=-1)
    pairing = np.abs(-coefs[:, 0] - PX) + np.abs(coefs[:, 1] - PY)
    return LiftDefects(hamilton, pairing)


def lift_residual(F: FrameStructure, arc: GeodesicArc) -> float:
    """ How far a sampled phase curve is from being a Hamiltonian lift.

    :param F: FrameStructure on 4-space
    :param arc: GeodesicArc, at least 2 samples
    :return: float, max over samples of the Hamilton defect plus the \
        pairing defect (see `lift_defects`); inf if the momentum vanishes
    """
    defects = lift_defects(F, arc)
    return float(np.max(defects.hamilton + defects.pairing))


def radial_bound_check(F: FrameStructure, curve: SampledCurve,
                       tol: float = 1e-6) -> RadialBound:
    """ On S1+ the horizontal gradient of R1 = sqrt(x^2 - y^2) is unit \
        timelike past directed, so no causal curve there is longer than \
        its increase in R1.

    :param F: FrameStructure, flat or in normal form
    :param curve: SampledCurve with every sample in S1+ (|y| < x)
    :param tol: float, allowed excess of L over the increase in R1
    :raises RegionViolation: if any sample leaves S1+
    :return: RadialBound
    """
    outside = [ix for ix, q in enumerate(curve.points)
               if hyperbolic_radius(q).region != Region.S1plus]
    if outside:
        raise RegionViolation(f"{len(outside)} samples leave S1+, first at "
                              f"{curve.points[outside[0]].tolist()}")
    L = sub_lorentzian_length(F, curve)
    R1 = [hyperbolic_radius(curve.points[ix]).R1 for ix in (0, -1)]
    delta = float(R1[1] - R1[0])
    return RadialBound(L, delta, L <= delta + tol)


def sub_lorentzian_length(F: FrameStructure, curve: SampledCurve,
                          tol: float = 1e-12) -> float:
    """ Integral of sqrt(u^2 - v^2) over the curve's piecewise controls.

    :param F: FrameStructure the controls are frame coefficients of
    :param curve: SampledCurve
    :param tol: float, how far u may fall below |v| before the control \
        counts as spacelike
    :raises NotNonspacelike: if any control is spacelike or past directed
    :return: float, sub-Lorentzian length
    """
    if curve.points.shape[-1] != F.dim:
        raise ValueError(f"{curve.points.shape[-1]}-dimensional curve "
                         f"given for a {F.dim}-dimensional frame")
    bad = np.flatnonzero((curve.controls[:, 0] < np.abs(
        curve.controls[:, 1]) - tol) | (curve.controls[:, 0] < -tol))
    if bad.size:
        raise NotNonspacelike(f"Control {curve.controls[bad[0]].tolist()} "
                              f"at t = {curve.t[bad[0]]} is not "
                              "nonspacelike future directed")
    if len(curve.t) < 2:
        return 0.0
    breaks = curve.t[[first for first, _ in curve.piece_spans()][1:]]

    def speed(t: float) -> float:
        ix = min(np.searchsorted(curve.t, t, side="right") - 1,
                 len(curve.t) - 2)
        u, v = curve.controls[ix]
        return float(np.sqrt(max(u * u - v * v, 0.0)))

    length, _ = quad(speed, curve.t[0], curve.t[-1],
                     points=breaks if breaks.size else None,
                     limit=max(50, 4 * breaks.size + 50), epsabs=1e-13,
                     epsrel=1e-12)
    return float(length)


def _hamiltonian_values(F: FrameStructure, states: np.ndarray
                        ) -> np.ndarray:
    q, p = states[..., :4], states[..., 4:]
    PX = np.sum(p * F.X(q), axis=-1)
    PY = np.sum(p * F.Y(q), axis=-1)
    return -0.5 * PX * PX + 0.5 * PY * PY
