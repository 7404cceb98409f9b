#!/usr/bin/env python3

"""
Exact algebra of rank-2 polynomial frames on 4-space (and of their \
    3-dimensional Martinet projections): construction, causal \
    classification, Lie brackets, growth vectors, horizontal gradients.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Callable, Iterable, Sequence
import dataclasses
from enum import StrEnum
from functools import cached_property
import hashlib
from numbers import Number
from typing import Any, NamedTuple, Self

# Import third-party PyPI libraries
from more_itertools import split_when
import numpy as np
import pandas as pd
from scipy.interpolate import CubicSpline

# Import local custom libraries
try:
    from elab.config import FrameSpec, IntegratorConfig
    from elab.errors import (BasePointMismatch, BasisFailure, ConfigError,
                             ConstraintViolation, DegenerateFrame, ZDependence)
    from elab.integrate import integrate
    from elab.poly import N_VARS, Poly4, VAR_NAMES
except (ImportError, ModuleNotFoundError):
    from .config import FrameSpec, IntegratorConfig
    from .errors import (BasePointMismatch, BasisFailure, ConfigError,
                         ConstraintViolation, DegenerateFrame, ZDependence)
    from .integrate import integrate
    from .poly import N_VARS, Poly4, VAR_NAMES

# Coordinates of 4-space and of the (x, y, w) Martinet 3-space
COORDS4 = (0, 1, 2, 3)
COORDS3 = (0, 1, 3)

# Weights (x, y, z, w) under which the flat frame is homogeneous
ENGEL_WEIGHTS = (1, 1, 2, 3)

# Step for central differences of non-polynomial scalar functions
GRADIENT_STEP = 1e-6


class Point(NamedTuple):
    x: float
    y: float
    z: float
    w: float


class Covector(NamedTuple):
    px: float
    py: float
    pz: float
    pw: float


def as_point(q: Iterable[float]) -> Point:
    """
    :param q: Iterable[float], four coordinates
    :raises ValueError: if `q` does not have four finite entries
    :return: Point
    """
    values = tuple(float(c) for c in q)
    if len(values) != N_VARS or not np.all(np.isfinite(values)):
        raise ValueError(f"A point needs {N_VARS} finite coordinates, "
                         f"not {values}")
    return Point(*values)


class HorizontalVector(NamedTuple):
    """ The horizontal vector u*X + v*Y based at `base`. """
    base: Point
    u: float
    v: float

    def __mul__(self, scale: float) -> "HorizontalVector":  # type: ignore
        return HorizontalVector(self.base, scale * self.u, scale * self.v)

    __rmul__ = __mul__  # type: ignore


class Kind(StrEnum):
    Timelike = "Timelike"
    Null = "Null"
    Spacelike = "Spacelike"
    Zero = "Zero"


class Orientation(StrEnum):
    Future = "Future"
    Past = "Past"
    Neither = "None"


class CausalClass(NamedTuple):
    kind: Kind
    orientation: Orientation

    @property
    def is_future_nonspacelike(self) -> bool:
        return self.kind in (Kind.Timelike, Kind.Null) \
            and self.orientation == Orientation.Future


class Region(StrEnum):
    S1plus = "S1plus"
    S1minus = "S1minus"
    S2plus = "S2plus"
    S2minus = "S2minus"
    Cone = "Cone"


class HyperbolicRadius(NamedTuple):
    region: Region
    R1: float | None
    R2: float | None


@dataclasses.dataclass(frozen=True)
class VectorField:
    """ Polynomial vector field. `components[k]` is the coefficient of \
        the partial derivative along coordinate `coords[k]`. """
    components: tuple[Poly4, ...]
    coords: tuple[int, ...] = COORDS4

    def __post_init__(self) -> None:
        if len(self.components) != len(self.coords):
            raise ValueError(f"{len(self.components)} components given for "
                             f"{len(self.coords)} coordinates")

    @classmethod
    def from_exprs(cls, *components: Poly4 | Number,
                   coords: tuple[int, ...] = COORDS4) -> Self:
        return cls(tuple(c if isinstance(c, Poly4) else Poly4.constant(c)
                         for c in components), coords)

    @classmethod
    def zero(cls, coords: tuple[int, ...] = COORDS4) -> Self:
        return cls(tuple(Poly4() for _ in coords), coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def has_var(self, name: str) -> bool:
        return any(c.has_var(name) for c in self.components)

    def apply(self, f: Poly4) -> Poly4:
        """ Lie derivative of `f` along this field.

        :param f: Poly4, function to differentiate
        :return: Poly4, sum over k of components[k] * df/d(coords[k])
        """
        result = Poly4()
        for comp, ix in zip(self.components, self.coords):
            if not comp.is_zero():
                result = result + comp * f.diff(ix)
        return result

    @cached_property
    def jacobian(self) -> tuple[tuple[Poly4, ...], ...]:
        """
        :return: tuple[tuple[Poly4, ...], ...], `jacobian[i][k]` is the \
            derivative of components[k] along coordinate i (all four)
        """
        return tuple(tuple(comp.diff(i) for comp in self.components)
                     for i in range(N_VARS))

    def __call__(self, points: Any) -> np.ndarray:
        """ Evaluate at points given in this field's own coordinates.

        :param points: array-like of shape (..., dim)
        :return: np.ndarray of shape (..., dim)
        """
        args = self._embed(points)
        return np.stack([comp(*args) for comp in self.components], axis=-1)

    def _embed(self, points: Any) -> list[np.ndarray]:
        pts = np.asarray(points, dtype=float)
        args: list[Any] = [np.zeros(pts.shape[:-1])] * N_VARS
        for k, ix in enumerate(self.coords):
            args[ix] = pts[..., k]
        return args

    def jacobian_at(self, points: Any) -> np.ndarray:
        """
        :param points: array-like of shape (..., 4)
        :return: np.ndarray of shape (..., 4, dim), d(component k)/d(var i)
        """
        args = self._embed(points)
        return np.stack([np.stack([d(*args) for d in row], axis=-1)
                         for row in self.jacobian], axis=-2)

    def _combine(self, other: "VectorField", op: Callable) -> "VectorField":
        if self.coords != other.coords:
            raise ValueError("Cannot combine vector fields on coordinates "
                             f"{self.coords} and {other.coords}")
        return VectorField(tuple(op(a, b) for a, b in zip(
            self.components, other.components)), self.coords)

    def __add__(self, other: "VectorField") -> "VectorField":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "VectorField") -> "VectorField":
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self) -> "VectorField":
        return VectorField(tuple(-c for c in self.components), self.coords)

    def __rmul__(self, scale: Poly4 | Number) -> "VectorField":
        return VectorField(tuple(scale * c for c in self.components),
                           self.coords)

    def project(self, coords: tuple[int, ...]) -> "VectorField":
        return VectorField(tuple(self.components[self.coords.index(ix)]
                                 for ix in coords), coords)

    def __str__(self) -> str:
        parts = [f"({c.expr})*d/d{VAR_NAMES[ix]}" for c, ix in
                 zip(self.components, self.coords) if not c.is_zero()]
        return " + ".join(parts) or "0"


class Provenance(StrEnum):
    Flat = "Flat"
    NormalForm = "NormalForm"
    Custom = "Custom"
    Projected = "Projected"


class Generator(StrEnum):
    """ The two null fields that generate the barrier equations. """
    XminusY = "XminusY"
    XplusY = "XplusY"


@dataclasses.dataclass(frozen=True)
class FrameStructure:
    """ Orthonormal frame (X timelike and time-orienting, Y spacelike) of \
        a sub-Lorentzian structure on 4-space or on Martinet 3-space. """
    X: VectorField
    Y: VectorField
    provenance: Provenance = Provenance.Custom
    phi: Poly4 | None = None
    psi1: Poly4 | None = None
    psi2: Poly4 | None = None

    def __post_init__(self) -> None:
        if self.X.coords != self.Y.coords:
            raise ValueError("X and Y must act on the same coordinates")

    @property
    def coords(self) -> tuple[int, ...]:
        return self.X.coords

    @property
    def dim(self) -> int:
        return self.X.dim

    @cached_property
    def XY(self) -> VectorField:
        return lie_bracket(self.X, self.Y)

    @cached_property
    def XXY(self) -> VectorField:
        return lie_bracket(self.X, self.XY)

    @cached_property
    def YXY(self) -> VectorField:
        return lie_bracket(self.Y, self.XY)

    def generator(self, which: Generator) -> VectorField:
        return self.X - self.Y if which == Generator.XminusY \
            else self.X + self.Y

    def velocity(self, points: Any, u: Any, v: Any) -> np.ndarray:
        """
        :param points: array-like of shape (..., dim) in own coordinates
        :param u: array-like broadcastable to points.shape[:-1]
        :param v: array-like broadcastable to points.shape[:-1]
        :return: np.ndarray of shape (..., dim), u*X + v*Y at `points`
        """
        u = np.asarray(u, dtype=float)[..., None]
        v = np.asarray(v, dtype=float)[..., None]
        return u * self.X(points) + v * self.Y(points)

    def frame_id(self) -> str:
        """
        :return: str, provenance name plus a short digest of the exact \
            components, e.g. "Flat:3f2a9c01"
        """
        text = repr((self.X.components, self.Y.components, self.coords))
        return f"{self.provenance}:" + hashlib.sha256(
            text.encode()).hexdigest()[:8]


class SampledCurve(NamedTuple):
    """ Time-sampled curve. `controls[i]` holds the frame coefficients \
        (u, v) on [t[i], t[i+1]); the last row repeats the one before. """
    t: np.ndarray
    points: np.ndarray
    controls: np.ndarray
    coords: tuple[int, ...] = COORDS4

    def project(self, coords: tuple[int, ...] = COORDS3) -> "SampledCurve":
        cols = [self.coords.index(ix) for ix in coords]
        return self._replace(points=self.points[:, cols], coords=coords)

    def piece_spans(self) -> list[tuple[int, int]]:
        """
        :return: list[tuple[int, int]], first and last sample index of \
            every maximal run of samples with constant control
        """
        if len(self.t) < 2:
            return []
        runs = split_when(range(len(self.t) - 1), lambda i, j:
                          not np.array_equal(self.controls[i],
                                             self.controls[j]))
        return [(run[0], run[-1] + 1) for run in runs]

    def to_frame(self) -> pd.DataFrame:
        df = pd.DataFrame(self.points, columns=[VAR_NAMES[ix]
                                                for ix in self.coords])
        df.insert(0, "t", self.t)
        df["u"] = self.controls[:, 0]
        df["v"] = self.controls[:, 1]
        return df


# NOTE All functions below are in alphabetical order.


def classify(a: HorizontalVector) -> CausalClass:
    """ Causal character of u*X + v*Y, from exact signs of its \
        coefficients. Future directed means g(a, X) = -u < 0. """
    if a.u == 0 and a.v == 0:
        return CausalClass(Kind.Zero, Orientation.Neither)
    g = -a.u * a.u + a.v * a.v
    if g > 0:
        return CausalClass(Kind.Spacelike, Orientation.Neither)
    return CausalClass(Kind.Timelike if g < 0 else Kind.Null,
                       Orientation.Future if a.u > 0 else Orientation.Past)


def dilate(q: Sequence[float], lam: float,
           weights: Sequence[int] = ENGEL_WEIGHTS) -> Point:
    """
    :param q: Sequence[float], point
    :param lam: float > 0, dilation factor
    :param weights: Sequence[int], weight of each of x, y, z, w
    :return: Point, (lam^wx * x, lam^wy * y, lam^wz * z, lam^ww * w)
    """
    if lam <= 0:
        raise ValueError(f"Dilation factor must be positive, not {lam}")
    return as_point(lam ** k * c for k, c in zip(weights, as_point(q)))


def flat_structure() -> FrameStructure:
    """ X = d/dx + y/2 d/dz + y^2/2 d/dw, Y = d/dy - x/2 d/dz - xy/2 d/dw """
    x, y = Poly4.var("x"), Poly4.var("y")
    return FrameStructure(
        X=VectorField.from_exprs(1, 0, y * 0.5, y * y * 0.5),
        Y=VectorField.from_exprs(0, 1, x * -0.5, x * y * -0.5),
        provenance=Provenance.Flat, phi=Poly4(), psi1=Poly4(), psi2=Poly4())


def growth_vector(F: FrameStructure, q: Sequence[float],
                  rank_tol: float = 1e-8) -> tuple[int, int, int]:
    """ Ranks of H, H^2 and H^3 at q.

    :param F: FrameStructure
    :param q: Sequence[float], point in the frame's own coordinates
    :param rank_tol: float, singular values at or below rank_tol times \
        the largest one count as zero
    :raises DegenerateFrame: if X and Y are dependent at q
    :return: tuple[int, int, int], e.g. (2, 3, 4) for an Engel structure
    """
    if rank_tol <= 0:
        raise ValueError(f"rank_tol must be positive, not {rank_tol}")
    q = np.asarray(q, dtype=float)
    levels = ((F.X, F.Y), (F.XY, ), (F.XXY, F.YXY))
    columns: list[np.ndarray] = []
    ranks = list()
    for fields in levels:
        columns.extend(field(q) for field in fields)
        ranks.append(_numerical_rank(np.stack(columns, axis=1), rank_tol))
    if ranks[0] < 2:
        raise DegenerateFrame(f"X and Y are linearly dependent at {q}")
    return tuple(ranks)  # type: ignore[return-value]


def hamiltonian_type_probe(V: VectorField, W: VectorField,
                           q: Sequence[float], tol: float = 1e-9,
                           rank_tol: float = 1e-8) -> "TypeProbe":
    """ Decompose [V,[V,W]](q) over V, W, [V,W] at q. A coefficient f \
        that stays away from zero along the trajectory of V means the \
        structure spanned by V and W is not of Hamiltonian type.

    :param V: VectorField, the field whose trajectories are abnormal
    :param W: VectorField, completing V to a frame
    :param q: Sequence[float], point in the fields' coordinates
    :param tol: float, largest least-squares residual still counted as \
        an exact decomposition
    :raises BasisFailure: if V, W, [V,W], [W,[V,W]] do not span at q
    :return: TypeProbe
    """
    VW = lie_bracket(V, W)
    WVW = lie_bracket(W, VW)
    VVW = lie_bracket(V, VW)
    q = np.asarray(q, dtype=float)
    basis = np.stack([V(q), W(q), VW(q)], axis=1)
    full_rank = _numerical_rank(np.column_stack([basis, WVW(q)]), rank_tol)
    if full_rank < 4:
        raise BasisFailure(f"V, W, [V,W], [W,[V,W]] have rank {full_rank} "
                           f"< 4 at {q.tolist()}")
    target = VVW(q)
    coefs, *_ = np.linalg.lstsq(basis, target, rcond=None)
    residual = float(np.linalg.norm(basis @ coefs - target))
    return TypeProbe(residual <= tol, *(float(c) for c in coefs), residual)


def horizontal_gradient(F: FrameStructure,
                        f: Poly4 | Callable[[np.ndarray], float],
                        q: Sequence[float], step: float = GRADIENT_STEP
                        ) -> HorizontalVector:
    """ Frame coefficients (u, v) = (-X(f), Y(f)) of the horizontal \
        gradient, so that df(w) = g(grad f, w) for horizontal w.

    :param F: FrameStructure on 4-space
    :param f: Poly4 | Callable[[np.ndarray], float], differentiated \
        exactly if it is a Poly4, else by central differences along X \
        and Y with step `step`
    :param q: Sequence[float], point
    :return: HorizontalVector
    """
    point = as_point(q)
    if isinstance(f, Poly4):
        Xf, Yf = F.X.apply(f).at(point), F.Y.apply(f).at(point)
    else:
        Xf = _directional_difference(f, point, F.X(point), step)
        Yf = _directional_difference(f, point, F.Y(point), step)
    return HorizontalVector(point, -Xf, Yf)


def hyperbolic_radius(q: Sequence[float]) -> HyperbolicRadius:
    """ Split the plane of (x, y) into the four hyperbolic sectors.

    :param q: Sequence[float], point (only x and y are read)
    :return: HyperbolicRadius; R1 = +-sqrt(x^2 - y^2) on S1+- and \
        R2 = +-sqrt(y^2 - x^2) on S2+-
    """
    x, y = float(q[0]), float(q[1])
    if abs(y) < abs(x):
        R1 = float(np.sqrt(x * x - y * y))
        return HyperbolicRadius(Region.S1plus, R1, None) if x > 0 \
            else HyperbolicRadius(Region.S1minus, -R1, None)
    if abs(y) > abs(x):
        R2 = float(np.sqrt(y * y - x * x))
        return HyperbolicRadius(Region.S2plus, None, R2) if y > 0 \
            else HyperbolicRadius(Region.S2minus, None, -R2)
    return HyperbolicRadius(Region.Cone, None, None)


def is_homogeneous(F: FrameStructure, weights: Sequence[int] =
                   ENGEL_WEIGHTS, degree: int = -1) -> bool:
    """
    :param F: FrameStructure
    :param weights: Sequence[int], weight of each of x, y, z, w
    :param degree: int, weighted degree that X and Y should both have
    :return: bool, True if every monomial in the coefficient of \
        d/d(coordinate c) has weighted degree weights[c] + degree; \
        else False
    """
    return all(comp.weighted_degrees(weights) <= {weights[ix] + degree}
               for field in (F.X, F.Y)
               for comp, ix in zip(field.components, field.coords))


def lie_bracket(A: VectorField, B: VectorField) -> VectorField:
    """ [A, B] with components A(B_k) - B(A_k), computed exactly. """
    if A.coords != B.coords:
        raise ValueError("Cannot bracket vector fields on coordinates "
                         f"{A.coords} and {B.coords}")
    return VectorField(tuple(A.apply(b) - B.apply(a) for a, b in zip(
        A.components, B.components)), A.coords)


def lift_curve(F: FrameStructure, path3: SampledCurve, z0: float,
               cfg: IntegratorConfig = IntegratorConfig()) -> SampledCurve:
    """ Lift a horizontal curve of the Martinet projection back to \
        4-space by integrating the z-row of u*X + v*Y along it.

    :param F: FrameStructure on 4-space whose projection `path3` follows
    :param path3: SampledCurve in (x, y, w) with its controls
    :param z0: float, initial z-coordinate of the lift
    :param cfg: IntegratorConfig
    :return: SampledCurve in 4-space whose projection is `path3`
    """
    z = np.full(len(path3.t), float(z0))
    x_col, y_col, w_col = (path3.points[:, path3.coords.index(ix)]
                           for ix in COORDS3)
    z_row = (F.X.components[2], F.Y.components[2])
    for first, last in path3.piece_spans():
        u, v = path3.controls[first]
        span = slice(first, last + 1)
        times = path3.t[span]
        interp = [_piece_interpolant(times, col[span])
                  for col in (x_col, y_col, w_col)]

        def z_rate(t: float, zs: np.ndarray) -> np.ndarray:
            x, y, w = (fn(t) for fn in interp)
            return np.array([u * z_row[0](x, y, zs[0], w)
                             + v * z_row[1](x, y, zs[0], w)])

        sol = integrate(z_rate, (times[0], times[-1]), [z[first]], cfg,
                        t_eval=times)
        z[span] = sol.y[0]
        z[last:] = sol.y[0][-1]
    points = np.column_stack([x_col, y_col, z, w_col])
    return SampledCurve(path3.t, points, path3.controls, COORDS4)


def martinet_projection(F: FrameStructure) -> FrameStructure:
    """ Drop z. Needs phi and psi2 (so X and Y's x, y, w rows) z-free.

    :param F: FrameStructure on 4-space
    :raises ZDependence: if any x-, y- or w-coefficient of X or Y \
        depends on z
    :return: FrameStructure on (x, y, w) with Projected provenance
    """
    for name in ("phi", "psi2"):
        coef = getattr(F, name)
        if coef is not None and coef.has_var("z"):
            raise ZDependence(f"{name} = {coef.expr} depends on z")
    X3, Y3 = F.X.project(COORDS3), F.Y.project(COORDS3)
    for label, field in (("X", X3), ("Y", Y3)):
        if field.has_var("z"):
            raise ZDependence(f"{label} has z-dependent (x, y, w) "
                              f"coefficients: {field}")
    return FrameStructure(X3, Y3, Provenance.Projected, phi=F.phi,
                          psi1=None, psi2=F.psi2)


def metric(a: HorizontalVector, b: HorizontalVector) -> float:
    """
    :raises BasePointMismatch: if `a` and `b` are based at different points
    :return: float, g(a, b) = -a.u*b.u + a.v*b.v
    """
    if tuple(a.base) != tuple(b.base):
        raise BasePointMismatch(f"Cannot pair vectors at {a.base} and "
                                f"{b.base}")
    return -a.u * b.u + a.v * b.v


def non_hamiltonian_type_frame() -> FrameStructure:
    """ V = flat X, W = flat Y + (x^2/2) V. Then [V,[V,W]] = V, so the \
        decomposition coefficient f is 1 everywhere, and V, W, [V,W], \
        [W,[V,W]] span at the origin. """
    flat = flat_structure()
    half_x2 = Poly4.var("x") ** 2 * 0.5
    return FrameStructure(flat.X, flat.Y + half_x2 * flat.X,
                          Provenance.Custom)


def normal_form_structure(phi: Poly4, psi1: Poly4, psi2: Poly4
                          ) -> FrameStructure:
    """ Frame in the normal form
        X = d/dx + y*phi*(y d/dx + x d/dy) + y/2 (1+psi1) d/dz \
            + y^2/2 (1+psi2) d/dw,
        Y = d/dy - x*phi*(y d/dx + x d/dy) - x/2 (1+psi1) d/dz \
            - xy/2 (1+psi2) d/dw.

    :param phi: Poly4
    :param psi1: Poly4 with no monomial free of both x and y
    :param psi2: Poly4 with no monomial free of x, y and z
    :raises ConstraintViolation: if psi1 or psi2 has a forbidden monomial
    :return: FrameStructure with NormalForm provenance
    """
    for name, coef, free_of in (("psi1", psi1, ("x", "y")),
                                ("psi2", psi2, ("x", "y", "z"))):
        forbidden = coef.terms_free_of(*free_of)
        if forbidden:
            raise ConstraintViolation(
                f"{name} must vanish where {', '.join(free_of)} = 0, but "
                f"has monomials with exponents {sorted(forbidden)}")
    x, y = Poly4.var("x"), Poly4.var("y")
    one1, one2 = psi1 + 1, psi2 + 1
    return FrameStructure(
        X=VectorField.from_exprs(1 + y * y * phi, x * y * phi,
                                 y * one1 * 0.5, y * y * one2 * 0.5),
        Y=VectorField.from_exprs(-(x * y * phi), 1 - x * x * phi,
                                 x * one1 * -0.5, x * y * one2 * -0.5),
        provenance=Provenance.NormalForm, phi=phi, psi1=psi1, psi2=psi2)


def structure_from_spec(spec: FrameSpec) -> FrameStructure:
    """
    :param spec: FrameSpec, from a RunConfig
    :raises ConfigError: if a term list is not a valid polynomial
    :return: FrameStructure that `spec` describes
    """
    try:
        match spec.kind:
            case "Flat":
                return flat_structure()
            case "NormalForm":
                coefs = [Poly4.from_json(terms) for terms
                         in (spec.phi, spec.psi1, spec.psi2)]
            case _:
                fields = [VectorField(tuple(Poly4.from_json(terms)
                                            for terms in field))
                          for field in (spec.x_field, spec.y_field)]
    except (KeyError, TypeError, ValueError) as err:
        raise ConfigError(f"{spec.kind} frame has invalid polynomial "
                          f"terms: {err!r}") from err
    if spec.kind == "NormalForm":
        return normal_form_structure(*coefs)
    return FrameStructure(*fields)


class TypeProbe(NamedTuple):
    decomposable: bool
    f: float
    g: float
    h: float
    residual: float


def _directional_difference(f: Callable[[np.ndarray], float],
                            point: Point, direction: np.ndarray,
                            step: float) -> float:
    base = np.asarray(point)
    return (f(base + step * direction) - f(base - step * direction)) \
        / (2.0 * step)


def _numerical_rank(matrix: np.ndarray, rank_tol: float) -> int:
    singular = np.linalg.svd(matrix, compute_uv=False)
    if singular.size == 0 or singular[0] == 0.0:
        return 0
    return int(np.sum(singular > rank_tol * singular[0]))


def _piece_interpolant(times: np.ndarray, values: np.ndarray
                       ) -> Callable[[float], float]:
    """ Smooth interpolant of one coordinate along one control piece. """
    if len(times) < 4:
        return lambda t: float(np.interp(t, times, values))
    return CubicSpline(times, values)
