#!/usr/bin/env python3

"""
Structured pass/fail record of every identity, residual, and inclusion \
    check a command runs.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Sequence
from enum import StrEnum
import logging
from typing import Self

# Import third-party PyPI libraries
import pydantic

# Import local custom libraries
try:
    from elab import __version__
    from elab.debug import log
except (ImportError, ModuleNotFoundError):
    from . import __version__
    from .debug import log

# Exit codes of every elab command
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAIL = 2

# Quoted statement each family of checks verifies, copied verbatim
PAPER_ANCHORS: dict[str, str] = {
    "abnormal": "trajectories contained in {y=0} are abnormal",
    "boundary": "Consider the following Cauchy problems",
    "brackets": "vectors of the form [X₁,[X₂,...]",
    "closed_forms": "Their solutions are respectively",
    "constraints": "ψ₁(0,0,z,w)=ψ₂(0,0,0,w)=0",
    "energy": "the restriction of H to T*U",
    "f_order": "f_i = f̂_i + O(r³)",
    "flow": "Denote by Φ_t the (local) flow",
    "g_order": "g_j = ĝ_j + O(r⁴)",
    "geodesic_lift": "a Hamiltonian geodesic if it can be represented",
    "gradient_f": "∇_H f̂ᵢ is null f.d. on {|y|<x}",
    "gradient_g": "∇_H ĝ₁ is f.d. on the set",
    "gradients": "The horizontal gradients are computed to be",
    "growth": "H² is of constant rank 3, and H³ is of constant rank 4",
    "hamiltonian_type": "[V,[V,W]] = fV + gW + h[V,W]",
    "homogeneity": "X = ∂/∂x + ½y ∂/∂z + ½y² ∂/∂w",
    "inclusion_flat": "reachable set from zero for the flat Engel structure",
    "inclusion_weak": "then we know that",
    "isometry": "is an isometry for every q ∈ U",
    "length": "we define its sub-Lorentzian length",
    "lift_z": "the z-coordinate of γ is computed from",
    "maximizers": "are unique U-maximizers",
    "monotone": "t→f(γ(t)) is nonincreasing",
    "null_rays": "null f.d. Hamiltonian geodesics are geometrically optimal",
    "pairing": "g(γ̇(t),v) = ⟨Φ_t(λ),v⟩",
    "pde": "(X−Y)(η)=0",
    "projection": "is mapped by p to the frame",
    "radial_gradient": "unit timelike past directed"}


class Status(StrEnum):
    PASS = "PASS"
    FAIL = "FAIL"
    WARN = "WARN"


class Check(pydantic.BaseModel):
    """ Outcome of one verification. `paper_anchor` quotes the claim it \
        tests, taken from PAPER_ANCHORS. """
    model_config = pydantic.ConfigDict(frozen=True,
                                       ser_json_inf_nan="strings")
    name: str
    paper_anchor: str
    status: Status
    worst_residual: float | None = None
    location: list[float] | None = None
    detail: str = ""

    @classmethod
    def from_bound(cls, name: str, paper_anchor: str, residual: float,
                   tol: float, location: Sequence[float] | None = None,
                   detail: str = "") -> Self:
        """ PASS if `residual` <= `tol`, else FAIL. """
        status = Status.PASS if residual <= tol else Status.FAIL
        return cls(name=name, paper_anchor=paper_anchor, status=status,
                   worst_residual=float(residual), detail=detail,
                   location=None if location is None else
                   [float(c) for c in location])


class VerificationReport(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(ser_json_inf_nan="strings")
    tool_version: str = __version__
    config_hash: str
    checks: list[Check] = []

    def add(self, check: Check) -> Check:
        """ Append `check` and log it at a level matching its status. """
        self.checks.append(check)
        level = {Status.PASS: logging.INFO, Status.WARN: logging.WARNING,
                 Status.FAIL: logging.ERROR}[check.status]
        log(f"{check.status} {check.name}: worst residual "
            f"{check.worst_residual} {check.detail}".rstrip(), level)
        return check

    def extend(self, checks: Sequence[Check]) -> None:
        for check in checks:
            self.add(check)

    @property
    def failed(self) -> list[Check]:
        return [check for check in self.checks
                if check.status == Status.FAIL]

    def exit_code(self) -> int:
        return EXIT_FAIL if self.failed else EXIT_OK

    def section(self, *names: str) -> list[Check]:
        """
        :param names: str, check names to keep
        :return: list[Check], the checks named, in report order
        """
        return [check for check in self.checks if check.name in names]

    def summary(self) -> str:
        counts = {status: sum(check.status == status for check in
                              self.checks) for status in Status}
        return ", ".join(f"{n} {status}" for status, n in counts.items())
