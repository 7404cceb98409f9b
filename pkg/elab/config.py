#!/usr/bin/env python3

"""
Pydantic models for every configurable knob: integrator tolerances, the \
    sampling box, the reachable-set sampler, frame specifications, and the \
    whole-run configuration read from one JSON document.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Sequence
import hashlib
import json
import os
from typing import Annotated, Any, Literal, Self

# Import third-party PyPI libraries
import numpy as np
import pydantic

# Import local custom libraries
try:
    from elab.errors import ConfigError
except (ImportError, ModuleNotFoundError):
    from .errors import ConfigError

# Environment variable that overrides RunConfig.seed
SEED_ENV_VAR = "ELAB_SEED"

# Positive float, used by every tolerance field
PositiveFloat = Annotated[float, pydantic.Field(gt=0)]

# 4 floats, one per coordinate
Float4 = tuple[float, float, float, float]

# Poly4 serialized as a list of {"coef": number, "exp": [ex, ey, ez, ew]}
PolyTerms = list[dict[str, Any]]

Strategy = Literal["UniformHyperbolic", "BangBang", "Mixed"]


class _Frozen(pydantic.BaseModel):
    """ Immutable model that rejects unknown keys. """
    model_config = pydantic.ConfigDict(extra="forbid", frozen=True)


class IntegratorConfig(_Frozen):
    """ Tolerances for every adaptive integration in elab. """
    rel_tol: PositiveFloat = 1e-10
    abs_tol: PositiveFloat = 1e-10
    max_step: PositiveFloat | None = None  # None means unbounded
    event_tol: PositiveFloat = 1e-12
    method: Literal["DOP853", "RK45", "RK23"] = "DOP853"


class Box(_Frozen):
    """ Axis-aligned bounding box standing in for the neighbourhood U. """
    lo: Float4 = (0.0, -1.0, -1.0, -1.0)
    hi: Float4 = (1.2, 1.0, 1.0, 1.0)

    @pydantic.model_validator(mode="after")
    def _check_order(self) -> Self:
        if any(lo >= hi for lo, hi in zip(self.lo, self.hi)):
            raise ValueError(f"Box lower corner {self.lo} must be below "
                             f"upper corner {self.hi} in every coordinate")
        return self

    def contains(self, points: np.ndarray, coords: Sequence[int]
                 = (0, 1, 2, 3), pad: float = 0.0) -> np.ndarray:
        """
        :param points: np.ndarray of shape (..., len(coords))
        :param coords: Sequence[int], which of x, y, z, w the last axis of \
            `points` holds
        :param pad: float, how far outside the box still counts as inside
        :return: np.ndarray[bool] of shape points.shape[:-1]
        """
        lo = np.asarray(self.lo)[list(coords)] - pad
        hi = np.asarray(self.hi)[list(coords)] + pad
        return np.all((points >= lo) & (points <= hi), axis=-1)


class SamplerConfig(_Frozen):
    """ How to draw nonspacelike future-directed control paths. """
    n_paths: Annotated[int, pydantic.Field(ge=0)] = 10_000
    pieces_per_path: Annotated[int, pydantic.Field(ge=1)] = 3
    horizon: PositiveFloat = 1.0
    strategy: Strategy = "Mixed"
    chi_max: PositiveFloat = 3.0
    box: Box = Box()
    batch_size: Annotated[int, pydantic.Field(ge=1)] = 2048
    grid_nodes: Annotated[int, pydantic.Field(ge=2)] = 33


class FrameSpec(_Frozen):
    """ Which orthonormal frame to build. NormalForm takes the three \
        coefficient polynomials; Custom takes X and Y as four term lists \
        each (coefficients of d/dx, d/dy, d/dz, d/dw). """
    kind: Literal["Flat", "NormalForm", "Custom"] = "Flat"
    phi: PolyTerms = []
    psi1: PolyTerms = []
    psi2: PolyTerms = []
    x_field: list[PolyTerms] | None = None
    y_field: list[PolyTerms] | None = None

    @pydantic.model_validator(mode="after")
    def _check_custom(self) -> Self:
        if self.kind == "Custom":
            for name in ("x_field", "y_field"):
                field = getattr(self, name)
                if field is None or len(field) != 4:
                    raise ValueError(f"Custom frame needs {name} with "
                                     "exactly 4 components")
        return self


class ProbeConfig(_Frozen):
    """ Abnormal boundary probe and null-ray audit settings. """
    delta: PositiveFloat = 0.05
    x_max: PositiveFloat = 1.0
    ray_samples: Annotated[int, pydantic.Field(ge=2)] = 50


class VerifyConfig(_Frozen):
    """ Sizes of the identity/oracle suites run by verify-flat. """
    grid_n: Annotated[int, pydantic.Field(ge=2)] = 50
    oracle_points: Annotated[int, pydantic.Field(ge=1)] = 10_000
    oracle_tol: PositiveFloat = 1e-8
    random_geodesics: Annotated[int, pydantic.Field(ge=1)] = 1000
    lift_samples: Annotated[int, pydantic.Field(ge=1)] = 100
    radial_paths: Annotated[int, pydantic.Field(ge=1)] = 1000
    order_radii: list[PositiveFloat] = [0.4, 0.2, 0.1, 0.05]
    order_directions: Annotated[int, pydantic.Field(ge=1)] = 64


class OutputPaths(_Frozen):
    report: str | None = None
    cloud: str | None = None


class RunConfig(_Frozen):
    """ Everything one `elab` command needs, read from one JSON file. """
    frame: FrameSpec = FrameSpec()
    integrator: IntegratorConfig = IntegratorConfig()
    sampler: SamplerConfig = SamplerConfig()
    regions: Literal["flat", "weak"] = "flat"
    slack: Annotated[float, pydantic.Field(ge=0)] = 1e-7
    seed: int = 0
    probe: ProbeConfig = ProbeConfig()
    verify: VerifyConfig = VerifyConfig()
    outputs: OutputPaths = OutputPaths()

    @classmethod
    def from_json_file(cls, json_path: str) -> Self:
        """ Load a config file, applying the ELAB_SEED override.

        :param json_path: str, valid path to a readable .json file
        :raises pydantic.ValidationError: if the file is not JSON, or has \
            unknown keys or invalid values
        :raises ConfigError: if ELAB_SEED is set but not an integer
        :return: RunConfig
        """
        with open(json_path) as infile:
            contents = infile.read()
        return cls.model_validate_json(contents).with_env_seed()

    def with_env_seed(self) -> Self:
        env_seed = os.environ.get(SEED_ENV_VAR)
        if env_seed is None:
            return self
        try:
            seed = int(env_seed)
        except ValueError as err:
            raise ConfigError(f"{SEED_ENV_VAR}={env_seed!r} is not an "
                              "integer") from err
        return self.model_copy(update={"seed": seed})

    def config_hash(self) -> str:
        """
        :return: str, SHA-256 hex digest of the canonical JSON dump
        """
        canonical = json.dumps(self.model_dump(mode="json"), sort_keys=True)
        return hashlib.sha256(canonical.encode()).hexdigest()
