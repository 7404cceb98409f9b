#!/usr/bin/env python3

"""
Test elab/integrate.py
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import third-party PyPI libraries
import numpy as np
import pytest
from scipy.optimize import OptimizeResult

# Import local custom libraries
from elab import integrate as integrate_module
from elab.config import IntegratorConfig
from elab.errors import StepFailure
from elab.integrate import event, integrate
from elab.testers import Tester


class TestIntegrate(Tester):
    def test_exponential(self) -> None:
        sol = integrate(lambda _, y: y, (0.0, 1.0), [1.0], IntegratorConfig(),
                        t_eval=np.array([0.0, 1.0]))
        self.assert_close(sol.y[0], [1.0, np.e], atol=1e-9)

    def test_empty_interval(self) -> None:
        sol = integrate(lambda _, y: y, (0.5, 0.5), [2.0, 3.0],
                        IntegratorConfig(), events=[event(lambda _, y: y[0])])
        self.check_result(sol.t.tolist(), [0.5])
        self.check_result(sol.y[:, 0].tolist(), [2.0, 3.0])
        self.check_result(len(sol.t_events), 1)

    def test_blow_up_raises(self) -> None:
        with pytest.raises(StepFailure):  # y' = y^2 leaves every bound at 1
            integrate(lambda _, y: y * y, (0.0, 2.0), [1.0],
                      IntegratorConfig())

    def test_non_finite_state_raises(self, monkeypatch) -> None:
        def overflowing(*args, **kwargs) -> OptimizeResult:
            return OptimizeResult(t=np.array([0.0, 1.0]),
                                  y=np.array([[1.0, np.inf]]), status=0,
                                  message="The solver successfully reached "
                                  "the end of the integration interval.")

        monkeypatch.setattr(integrate_module, "solve_ivp", overflowing)
        with pytest.raises(StepFailure):
            integrate(lambda _, y: y, (0.0, 1.0), [1.0], IntegratorConfig())
