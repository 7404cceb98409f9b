#!/usr/bin/env python3

"""
Base classes for unit tests in ../tests/ dir
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from abc import ABC
from collections.abc import Callable
from typing import Any, TypeVar

# Import third-party PyPI libraries
import numpy as np

# Import local custom libraries
try:
    from elab.config import (FrameSpec, ProbeConfig, RunConfig,
                             SamplerConfig, VerifyConfig)
    from elab.frames import (flat_structure, FrameStructure,
                             non_hamiltonian_type_frame,
                             normal_form_structure, VectorField)
    from elab.poly import Poly4
except (ImportError, ModuleNotFoundError):
    from .config import (FrameSpec, ProbeConfig, RunConfig, SamplerConfig,
                         VerifyConfig)
    from .frames import (flat_structure, FrameStructure,
                         non_hamiltonian_type_frame, normal_form_structure,
                         VectorField)
    from .poly import Poly4

# Seed of every random draw made by the tests themselves
TEST_SEED = 20_261_019


class Tester(ABC):
    _In = TypeVar("_In")
    _Out = TypeVar("_Out")

    def abelian_frame(self) -> FrameStructure:
        """ X = d/dx, Y = d/dy: brackets vanish, so not Engel. """
        return FrameStructure(VectorField.from_exprs(1, 0, 0, 0),
                              VectorField.from_exprs(0, 1, 0, 0))

    def assert_close(self, actual: Any, expected: Any, atol: float = 1e-12,
                     rtol: float = 0.0) -> None:
        """ Assert that two numbers or arrays match within tolerance. If \
            they don't, then print both and the largest difference. """
        actual, expected = np.asarray(actual, dtype=float), \
            np.asarray(expected, dtype=float)
        if not np.allclose(actual, expected, atol=atol, rtol=rtol):
            print(f"Result `{actual}` != expected `{expected}` (largest "
                  f"difference {np.max(np.abs(actual - expected)):.3e})")
            raise AssertionError

    def check_result(self, actual_result: Any, expected_result: Any) -> None:
        """ Assert that `actual_result == expected_result`. If that's False, \
            then print a statement saying so. """
        if actual_result != expected_result:
            print(f"Result `{actual_result}` != expected "
                  f"`{expected_result}`")
            raise AssertionError

    def flat(self) -> FrameStructure:
        return flat_structure()

    def non_hamiltonian(self) -> FrameStructure:
        return non_hamiltonian_type_frame()

    def perturbed(self, phi: float = 0.0, psi1: float = 0.0,
                  psi2: float = 0.0) -> FrameStructure:
        """ Normal-form frame whose coefficients are multiples of x.

        :param phi: float, phi = phi * x
        :param psi1: float, psi1 = psi1 * x
        :param psi2: float, psi2 = psi2 * x
        :return: FrameStructure with NormalForm provenance
        """
        x = Poly4.var("x")
        return normal_form_structure(x * phi, x * psi1, x * psi2)

    def random_points(self, n: int, lo: float = -1.0, hi: float = 1.0,
                      dim: int = 4, seed: int = TEST_SEED) -> np.ndarray:
        """
        :return: np.ndarray of shape (n, dim), uniform in [lo, hi]^dim
        """
        return np.random.default_rng(seed).uniform(lo, hi, (n, dim))

    def small_config(self, **updates: Any) -> RunConfig:
        """ RunConfig with every suite shrunk to run in seconds.

        :param updates: Any, RunConfig fields to replace, e.g. frame=...
        :return: RunConfig
        """
        cfg = RunConfig(
            sampler=SamplerConfig(n_paths=300, batch_size=128),
            probe=ProbeConfig(delta=0.2, ray_samples=11),
            verify=VerifyConfig(grid_n=6, oracle_points=40, lift_samples=4,
                                random_geodesics=6, radial_paths=6,
                                order_directions=8),
            seed=TEST_SEED)
        return cfg.model_copy(update=updates)

    def perturbed_spec(self, phi: float = 0.0, psi1: float = 0.0,
                       psi2: float = 0.0) -> FrameSpec:
        """ FrameSpec of `self.perturbed` with the same arguments. """
        terms = {name: [] if coef == 0 else [{"coef": coef,
                                               "exp": [1, 0, 0, 0]}]
                 for name, coef in (("phi", phi), ("psi1", psi1),
                                    ("psi2", psi2))}
        return FrameSpec(kind="NormalForm", **terms)

    def xfm_test(self, func: Callable[[_In], _Out],
                 *pre_and_post: tuple[_In, _Out], **kwargs: Any) -> None:
        """ For every input-output pair in `pre_and_post`, assert that \
            calling `func` with the input and `**kwargs` returns the output.

        :param func: Callable[[_In: Any, **kwargs], _Out: Any], function to \
            repeatedly test; it should turn each input object into each \
            corresponding output object.
        :param pre_and_post: Iterable[tuple[_In, _Out]] listing the input \
            and output of each test to run; the first element is the input \
            to `func` and the second element is the expected output.
        :param kwargs: Mapping[str, Any], `func` keyword arguments
        """
        for pre, post in pre_and_post:
            self.check_result(func(pre, **kwargs), post)
