#!/usr/bin/env python3

"""
Thin layer over scipy's adaptive Runge-Kutta solvers shared by the geodesic \
    flow, the characteristic solver, and the control-path integrator.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Callable, Sequence
from typing import Any

# Import third-party PyPI libraries
import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import OptimizeResult

# Import local custom libraries
try:
    from elab.config import IntegratorConfig
    from elab.errors import StepFailure
except (ImportError, ModuleNotFoundError):
    from .config import IntegratorConfig
    from .errors import StepFailure

# Signature of every right-hand side and event function solve_ivp accepts
RHS = Callable[[float, np.ndarray], np.ndarray]
EventFn = Callable[[float, np.ndarray], float]


def event(fn: EventFn, terminal: bool = True, direction: float = 0.0
          ) -> EventFn:
    """ Mark a scalar function of (t, y) as a solve_ivp event.

    :param fn: EventFn, continuous function whose root is the event
    :param terminal: bool, True to stop integrating at the first root
    :param direction: float, only count roots crossed in this direction \
        (positive, negative, or 0 for both)
    :return: EventFn, `fn` itself with the attributes solve_ivp reads
    """
    fn.terminal = terminal  # type: ignore[attr-defined]
    fn.direction = direction  # type: ignore[attr-defined]
    return fn


def integrate(rhs: RHS, t_span: tuple[float, float], y0: Sequence[float],
              cfg: IntegratorConfig, events: Sequence[EventFn] = (),
              t_eval: np.ndarray | None = None, dense_output: bool = False,
              vectorized: bool = False, **kwargs: Any) -> OptimizeResult:
    """ Run one adaptive integration with the tolerances in `cfg`.

    :param rhs: RHS, right-hand side f(t, y)
    :param t_span: tuple[float, float], (start, end) times; end may be \
        before start to integrate backwards
    :param y0: Sequence[float], initial state
    :param cfg: IntegratorConfig, tolerances and method name
    :param events: Sequence[EventFn], event functions made by `event()`
    :param t_eval: np.ndarray | None, times to report the solution at
    :param dense_output: bool, True to keep the continuous interpolant
    :raises StepFailure: if the step controller underflows, the solver \
        otherwise fails, or the solution is not finite
    :return: OptimizeResult from scipy.integrate.solve_ivp
    """
    y0 = np.asarray(y0, dtype=float)
    if t_span[0] == t_span[1]:  # solve_ivp rejects empty intervals
        return _trivial_result(t_span[0], y0, len(events))
    sol = solve_ivp(rhs, t_span, y0, method=cfg.method, t_eval=t_eval,
                    dense_output=dense_output, events=events or None,
                    vectorized=vectorized, rtol=cfg.rel_tol,
                    atol=cfg.abs_tol, max_step=(np.inf if cfg.max_step is
                                                None else cfg.max_step),
                    **kwargs)
    if sol.status == -1:
        raise StepFailure(f"Integration over {t_span} failed from "
                          f"{y0.tolist()}: {sol.message}")
    if not np.all(np.isfinite(sol.y)):
        raise StepFailure(f"Integration over {t_span} from {y0.tolist()} "
                          "reached a non-finite state")
    return sol


def _trivial_result(t0: float, y0: np.ndarray, n_events: int
                   ) -> OptimizeResult:
    return OptimizeResult(
        t=np.array([t0]), y=y0.reshape(-1, 1), sol=None,
        t_events=[np.empty(0)] * n_events or None,
        y_events=[np.empty((0, y0.size))] * n_events or None,
        status=0, message="Zero-length interval.", success=True)
