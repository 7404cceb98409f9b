#!/usr/bin/env python3

"""
Nonspacelike future-directed control system: piecewise-constant control \
    paths, their integration, seeded sampling of reachable clouds, and the \
    audits that compare those clouds with the barrier regions.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Sequence
import dataclasses
from enum import StrEnum
import logging
import os
from typing import Any, NamedTuple, Self

# Import third-party PyPI libraries
import numpy as np
import pandas as pd

# Import local custom libraries
try:
    from elab.barriers import (Barrier, barrier_values, CLOSED_FORMS,
                               REGIONS, region_mask, violated_predicates)
    from elab.config import Box, IntegratorConfig, SamplerConfig
    from elab.debug import log, ShowTimeTaken
    from elab.errors import (CloudFormatError, EmptySlab, SeedMismatch,
                             StepFailure)
    from elab.frames import (COORDS3, COORDS4, FrameStructure, Generator,
                             Point, SampledCurve)
    from elab.integrate import event, integrate
    from elab.IO.local import (extract_from_json, save_frame_csv,
                               save_to_json)
    from elab.poly import VAR_NAMES
    from elab.report import Check, PAPER_ANCHORS, Status
except (ImportError, ModuleNotFoundError):
    from .barriers import (Barrier, barrier_values, CLOSED_FORMS, REGIONS,
                           region_mask, violated_predicates)
    from .config import Box, IntegratorConfig, SamplerConfig
    from .debug import log, ShowTimeTaken
    from .errors import (CloudFormatError, EmptySlab, SeedMismatch,
                          StepFailure)
    from .frames import (COORDS3, COORDS4, FrameStructure, Generator,
                         Point, SampledCurve)
    from .integrate import event, integrate
    from .IO.local import extract_from_json, save_frame_csv, save_to_json
    from .poly import VAR_NAMES
    from .report import Check, PAPER_ANCHORS, Status

# Nonspacelike check tolerance for hyperbolic controls (cosh^2 - sinh^2)
CAUSAL_TOL = 1e-12

# Samples per control piece when integrating one path
PIECE_SAMPLES = 33

ORIGIN = Point(0.0, 0.0, 0.0, 0.0)

# Unit controls of the three bang-bang arcs
TIMELIKE_X = (1.0, 0.0)
NULL_PLUS = (1.0, 1.0)
NULL_MINUS = (1.0, -1.0)
ARC_CONTROLS = {"X": TIMELIKE_X, "X+Y": NULL_PLUS, "X-Y": NULL_MINUS}

# Concatenations sampled by the BangBang strategy, as arc names. In the
# families of three null arcs the middle arc lasts at least as long as the
# outer two together.
THREE_ARC_FAMILIES = (("X+Y", "X", "X+Y"), ("X+Y", "X", "X-Y"),
                      ("X-Y", "X", "X-Y"), ("X-Y", "X", "X+Y"),
                      ("X+Y", "X-Y", "X+Y"), ("X-Y", "X+Y", "X-Y"))
TWO_ARC_FAMILIES = (("X-Y", "X+Y"), ("X+Y", "X-Y"), ("X", "X-Y"),
                    ("X", "X+Y"))
BANG_BANG_FAMILIES = THREE_ARC_FAMILIES + TWO_ARC_FAMILIES


class Causal(StrEnum):
    Timelike = "timelike"
    Null = "null"
    Mixed = "mixed"


class ControlPiece(NamedTuple):
    duration: float
    u: float
    v: float


@dataclasses.dataclass(frozen=True)
class ControlPath:
    """ Piecewise-constant controls (u, v) driving u*X + v*Y. """
    pieces: tuple[ControlPiece, ...]
    start: Point = ORIGIN

    def __post_init__(self) -> None:
        for piece in self.pieces:
            if not piece.duration > 0:
                raise ValueError(f"Piece duration must be positive: {piece}")
            if not (piece.u > 0 and piece.u >= abs(piece.v) - CAUSAL_TOL):
                raise ValueError("Control must be nonspacelike future "
                                 f"directed (u > 0, u >= |v|): {piece}")

    @classmethod
    def from_arcs(cls, arcs: Sequence[str], durations: Sequence[float],
                  start: Point = ORIGIN) -> Self:
        """
        :param arcs: Sequence[str], arc names such as ("X+Y", "X", "X-Y")
        :param durations: Sequence[float], one positive time per arc
        :return: ControlPath
        """
        return cls(tuple(ControlPiece(float(t), *ARC_CONTROLS[arc])
                         for arc, t in zip(arcs, durations, strict=True)),
                   start)

    @property
    def causal(self) -> Causal:
        gaps = [piece.u - abs(piece.v) for piece in self.pieces]
        if all(gap > CAUSAL_TOL for gap in gaps):
            return Causal.Timelike
        if all(gap <= CAUSAL_TOL for gap in gaps):
            return Causal.Null
        return Causal.Mixed

    @property
    def knots(self) -> np.ndarray:
        return np.concatenate([[0.0], np.cumsum([piece.duration
                                                 for piece in self.pieces])])

    @property
    def length(self) -> float:
        """ Sub-Lorentzian length, exact for constant controls. """
        return float(sum(piece.duration * np.sqrt(max(
            piece.u ** 2 - piece.v ** 2, 0.0)) for piece in self.pieces))

    @property
    def total_duration(self) -> float:
        return float(self.knots[-1])


class PathResult(NamedTuple):
    curve: SampledCurve
    endpoint: np.ndarray
    length: float
    truncated: bool


@dataclasses.dataclass(frozen=True, eq=False)
class ReachCloud:
    """ Endpoints of sampled control paths, one row per path. """
    data: pd.DataFrame
    seed: int
    frame_id: str
    coords: tuple[int, ...] = COORDS4
    sampler: dict[str, Any] = dataclasses.field(default_factory=dict)

    @property
    def names(self) -> list[str]:
        return [VAR_NAMES[ix] for ix in self.coords]

    @property
    def points(self) -> np.ndarray:
        return self.data[self.names].to_numpy(dtype=float)

    def __len__(self) -> int:
        return len(self.data)

    def meta(self) -> dict[str, Any]:
        return {"seed": self.seed, "frame_id": self.frame_id,
                "coords": list(self.coords), "sampler": self.sampler}

    @staticmethod
    def meta_path(csv_path: str) -> str:
        return f"{os.path.splitext(csv_path)[0]}.meta.json"

    @classmethod
    def from_csv(cls, csv_path: str) -> Self:
        """
        :param csv_path: str, cloud CSV with a `<name>.meta.json` sidecar
        :raises CloudFormatError: if a column or sidecar field is missing \
            or unreadable
        :return: ReachCloud exactly as it was saved
        """
        meta = extract_from_json(cls.meta_path(csv_path))
        try:  # "null" is a causal class, not a missing value
            data = pd.read_csv(csv_path, dtype={"path_id": int,
                                                "truncated": bool,
                                                "causal": str},
                               keep_default_na=False,
                               na_values={"length": ["", "nan"]},
                               float_precision="round_trip")
            cloud = cls(data, int(meta["seed"]), meta["frame_id"],
                        tuple(meta["coords"]), meta.get("sampler", {}))
            missing = {"path_id", *cloud.names, "length", "truncated",
                       "causal"} - set(data.columns)
        except (IndexError, KeyError, TypeError, ValueError) as err:
            raise CloudFormatError(f"Cannot read cloud {csv_path}: "
                                   f"{err!r}") from err
        if missing:
            raise CloudFormatError(f"Cloud {csv_path} has no "
                                   f"{', '.join(sorted(missing))} column")
        return cloud

    def save(self, csv_path: str) -> None:
        csv_path = save_frame_csv(self.data, csv_path)
        save_to_json(self.meta(), self.meta_path(csv_path))

    def subcloud(self, causal: Causal) -> "ReachCloud":
        return dataclasses.replace(self, data=self.data[
            self.data["causal"] == causal].reset_index(drop=True))

    def with_points(self, points: np.ndarray) -> "ReachCloud":
        """ Copy with extra untruncated endpoints appended (for audits). """
        extra = pd.DataFrame(np.atleast_2d(points), columns=self.names)
        extra.insert(0, "path_id", np.arange(len(extra)) + (
            int(self.data["path_id"].max()) + 1 if len(self) else 0))
        extra["length"] = np.nan
        extra["truncated"] = False
        extra["causal"] = Causal.Mixed.value
        data = pd.concat([self.data, extra], ignore_index=True) \
            if len(self) else extra
        return dataclasses.replace(self, data=data)


class SlabProbe(NamedTuple):
    min_w_in_slab: float
    bound: float
    ok: bool
    n_in_slab: int


# NOTE All functions below are in alphabetical order.


def abnormal_boundary_probe(cloud: ReachCloud, delta: float,
                            x_max: float = 1.0, slack: float = 1e-7
                            ) -> SlabProbe:
    """ Lower bound on w near the abnormal ray: every reachable point with \
        |y| <= delta and 0 <= x <= x_max has \
        w >= -(x_max*delta^2/4 + delta^3/4) - slack.

    :param cloud: ReachCloud from the origin with a w column
    :param delta: float > 0, half-width of the slab around y = 0
    :param x_max: float > 0, slab length along x
    :raises EmptySlab: if no endpoint lies in the slab
    :return: SlabProbe
    """
    if delta <= 0:
        raise ValueError(f"Slab half-width must be positive, not {delta}")
    df = cloud.data
    slab = df[(df["y"].abs() <= delta) & (df["x"] >= 0)
              & (df["x"] <= x_max)]
    if slab.empty:
        raise EmptySlab(f"No endpoint has |y| <= {delta} and "
                        f"0 <= x <= {x_max}")
    bound = -(0.25 * x_max * delta ** 2 + 0.25 * delta ** 3) - slack
    min_w = float(slab["w"].min())
    return SlabProbe(min_w, bound, min_w >= bound, len(slab))


def draw_control_path(path_id: int, sc: SamplerConfig, seed: int
                      ) -> ControlPath:
    """ One path from its own random stream, so the draw does not depend \
        on which other paths are drawn or in what order.

    :param path_id: int, index of the path in the cloud
    :param sc: SamplerConfig
    :param seed: int, cloud seed
    :return: ControlPath starting at the origin
    """
    rng = np.random.default_rng([seed, path_id])
    strategy = sc.strategy
    if strategy == "Mixed":
        strategy = "BangBang" if rng.random() < 0.5 else "UniformHyperbolic"
    if strategy == "UniformHyperbolic":
        durations = rng.uniform(0.0, sc.horizon / sc.pieces_per_path,
                                sc.pieces_per_path)
        chis = rng.uniform(-sc.chi_max, sc.chi_max, sc.pieces_per_path)
        return ControlPath(tuple(
            ControlPiece(float(t), float(np.cosh(chi)), float(np.sinh(chi)))
            for t, chi in zip(np.maximum(durations, np.finfo(float).tiny),
                              chis)))
    arcs = BANG_BANG_FAMILIES[rng.integers(len(BANG_BANG_FAMILIES))]
    weights = rng.dirichlet(np.ones(len(arcs)))
    if len(arcs) == 3 and "X" not in arcs:
        # Middle null arc at least as long as the outer two
        weights = np.array([weights[0], 1.0 + weights[1], weights[2]])
        weights /= weights.sum()
    total = sc.horizon * rng.uniform(0.0, 1.0)
    durations = np.maximum(total * weights, np.finfo(float).tiny)
    return ControlPath.from_arcs(arcs, durations)


def inclusion_check(cloud: ReachCloud, regions: Sequence[str],
                    slack: float = 1e-7,
                    frame: FrameStructure | None = None,
                    cfg: IntegratorConfig = IntegratorConfig(),
                    max_listed: int = 10) -> Check:
    """ Every endpoint must lie in the union of `regions`.

    :param cloud: ReachCloud in 4-space
    :param regions: Sequence[str], region names such as FLAT_REGIONS
    :param slack: float >= 0, tolerance of every inequality
    :param frame: FrameStructure whose barriers define the regions; \
        defaults to the flat closed forms
    :param max_listed: int, how many violations to describe in detail
    :return: Check, FAIL listing violating endpoints and predicates
    """
    points = cloud.points
    needed = [barrier for name in regions for cell in REGIONS[name]
              for barrier in cell.barriers]
    values = None if frame is None else barrier_values(frame, points,
                                                       needed, cfg)
    inside = np.zeros(len(points), dtype=bool)
    for name in regions:
        inside |= region_mask(name, points, slack, values)
    outside = np.flatnonzero(~inside)
    paper_anchor = PAPER_ANCHORS[
        "inclusion_flat" if frame is None else "inclusion_weak"]
    if not outside.size:
        return Check(name="inclusion", paper_anchor=paper_anchor,
                     status=Status.PASS, worst_residual=0.0,
                     detail=f"{len(points)} endpoints inside "
                     + ", ".join(regions))
    listed = list()
    for ix in outside[:max_listed]:
        point_values = None if values is None else {
            barrier: float(vals[ix]) for barrier, vals in values.items()}
        failures = [failure for name in regions for failure in
                    violated_predicates(name, points[ix], slack,
                                        point_values)]
        listed.append(f"path {cloud.data['path_id'].iloc[ix]} at "
                      f"{points[ix].tolist()}: {'; '.join(failures)}")
    return Check(name="inclusion", paper_anchor=paper_anchor,
                 status=Status.FAIL,
                 worst_residual=float(outside.size),
                 location=points[outside[0]].tolist(),
                 detail=f"{outside.size} endpoints outside. "
                 + " | ".join(listed))


def integrate_path(F: FrameStructure, cp: ControlPath,
                   cfg: IntegratorConfig = IntegratorConfig(),
                   box: Box | None = None,
                   n_per_piece: int = PIECE_SAMPLES) -> PathResult:
    """ Integrate q' = u*X(q) + v*Y(q) piece by piece.

    :param F: FrameStructure, on 4-space or on Martinet 3-space
    :param cp: ControlPath; its start is read in the frame's coordinates
    :param cfg: IntegratorConfig
    :param box: Box | None, stop at the first exit from this box
    :param n_per_piece: int, samples per piece including both ends
    :raises StepFailure: if a piece cannot be integrated
    :return: PathResult; a truncated path ends at its exit point
    """
    q = np.asarray(cp.start, dtype=float)[list(F.coords)]
    times, points, controls = [np.array([0.0])], [q[None, :]], list()
    exit_event = None if box is None else event(
        _box_gap(box, F.coords), terminal=True, direction=-1.0)
    t0, length, truncated = 0.0, 0.0, False
    for piece in cp.pieces:
        t_eval = np.linspace(t0, t0 + piece.duration, n_per_piece)
        sol = integrate(lambda _, pt, u=piece.u, v=piece.v:
                        F.velocity(pt, u, v), (t0, t0 + piece.duration), q,
                        cfg, events=() if exit_event is None
                        else [exit_event], t_eval=t_eval)
        piece_t, piece_q = sol.t, sol.y.T
        hit = exit_event is not None and sol.t_events[0].size > 0
        if hit:
            piece_t = np.append(piece_t[piece_t < sol.t_events[0][0]],
                                sol.t_events[0][0])
            piece_q = np.vstack([sol.y.T[:len(piece_t) - 1],
                                 sol.y_events[0][0]])
        times.append(piece_t[1:])
        points.append(piece_q[1:])
        controls.append(np.tile([piece.u, piece.v], (len(piece_t) - 1, 1)))
        length += (piece_t[-1] - t0) * np.sqrt(max(
            piece.u ** 2 - piece.v ** 2, 0.0))
        q, t0 = piece_q[-1], piece_t[-1]
        if hit:
            truncated = True
            break
    ctrl = np.vstack(controls) if controls else np.zeros((0, 2))
    ctrl = np.vstack([ctrl, ctrl[-1:] if len(ctrl) else [[1.0, 0.0]]])
    curve = SampledCurve(np.concatenate(times), np.vstack(points), ctrl,
                         F.coords)
    return PathResult(curve, q, float(length), truncated)


def monotonicity_check(curve: SampledCurve, barrier: Barrier = Barrier.f1,
                       tol: float = 1e-8) -> float:
    """ Largest step-to-step increase of a flat barrier along the part of \
        `curve` inside {|y| < x}, where its gradient is null future \
        directed and the barrier cannot increase.

    :param curve: SampledCurve in 4-space
    :param barrier: Barrier, f1 or f2
    :param tol: float, increase tolerated per step
    :return: float, largest increase (negative or zero when monotone)
    """
    pts = curve.points
    values = CLOSED_FORMS[barrier](*pts.T)
    inside = np.abs(pts[:, 1]) < pts[:, 0]
    steps = inside[:-1] & inside[1:]
    if not steps.any():
        return 0.0
    increase = float(np.max(np.diff(values)[steps]))
    if increase > tol:
        log(f"{barrier} rises by {increase:.3e} along a causal curve",
            logging.WARNING)
    return increase


def null_ray_audit(F: FrameStructure, cloud: ReachCloud | None = None,
                   cfg: IntegratorConfig = IntegratorConfig(),
                   n_samples: int = 50, tol: float = 1e-9) -> list[Check]:
    """ Integrate X+Y and X-Y from the origin and check that the \
        trajectories are the half-lines (t, +-t, 0, 0) where the flat \
        barriers bounding the reachable set vanish: f1 and g1 on the X+Y \
        ray, f2 and g2 on the X-Y ray.

    :param F: FrameStructure on 4-space
    :param cloud: ReachCloud | None, if given the rays run to its largest x
    :param n_samples: int, samples per ray
    :return: list[Check], one per ray
    """
    t_max = 1.0 if cloud is None or not len(cloud) else \
        max(float(cloud.data["x"].max()), 1e-3)
    t = np.linspace(0.0, t_max, n_samples)
    checks = list()
    for generator, sign, barriers in (
            (Generator.XplusY, 1.0, (Barrier.f1, Barrier.g1)),
            (Generator.XminusY, -1.0, (Barrier.f2, Barrier.g2))):
        G = F.generator(generator)
        sol = integrate(lambda _, q: G(q), (0.0, t_max), np.zeros(4), cfg,
                        t_eval=t)
        ray = sol.y.T
        line = np.column_stack([t, sign * t, np.zeros_like(t),
                                np.zeros_like(t)])
        off_line = np.max(np.abs(ray - line), axis=1)
        on_barriers = np.max(np.abs(np.stack([CLOSED_FORMS[b](*ray.T)
                                              for b in barriers])), axis=0)
        worst = np.maximum(off_line, on_barriers)
        ix = int(np.argmax(worst))
        checks.append(Check.from_bound(
            f"null_ray_{generator}", PAPER_ANCHORS["null_rays"],
            float(worst[ix]), tol, location=ray[ix],
            detail=f"{barriers[0]} and {barriers[1]} vanish on the "
            f"{generator} ray"))
    return checks


def projection_consistency(F: FrameStructure, cloud4: ReachCloud,
                           cloud3: ReachCloud, tol: float = 1e-8) -> Check:
    """ Dropping z from each 4-space endpoint must give the endpoint of \
        the same controls in the Martinet projection.

    :param F: FrameStructure whose projection drove `cloud3`
    :param cloud4: ReachCloud in 4-space
    :param cloud3: ReachCloud in (x, y, w)
    :raises SeedMismatch: if the clouds come from different seeds or \
        sampler settings
    :return: Check comparing paths untruncated in both clouds
    """
    if cloud4.seed != cloud3.seed or cloud4.sampler != cloud3.sampler:
        raise SeedMismatch(f"Clouds drawn with seed {cloud4.seed} and "
                           f"{cloud3.seed} (or different sampler settings) "
                           "cannot be compared path by path")
    kept = cloud4.data[~cloud4.data["truncated"]].merge(
        cloud3.data[~cloud3.data["truncated"]], on="path_id",
        suffixes=("_4", "_3"))
    excluded = len(cloud4) - len(kept)
    names = [VAR_NAMES[ix] for ix in COORDS3]
    if kept.empty:
        diffs = np.zeros((0, len(names)))
    else:
        diffs = np.abs(kept[[f"{n}_4" for n in names]].to_numpy()
                       - kept[[f"{n}_3" for n in names]].to_numpy())
    worst = float(diffs.max(initial=0.0))
    # z is only in cloud4, so merging leaves it unsuffixed
    location = None if kept.empty else kept[[
        f"{n}_4" if n in names else n for n in VAR_NAMES]].to_numpy()[
            int(np.argmax(diffs.max(axis=1)))]
    return Check.from_bound(
        "projection_consistency", PAPER_ANCHORS["isometry"], worst, tol,
        location=location, detail=f"{len(kept)} paths of {F.frame_id()} "
        f"compared, {excluded} truncated excluded")


def sample_reachable(F: FrameStructure, sc: SamplerConfig, seed: int,
                     cfg: IntegratorConfig = IntegratorConfig()
                     ) -> ReachCloud:
    """ Draw `sc.n_paths` control paths from the origin and integrate \
        them in batches. Each path's controls come from its own stream, \
        so the cloud depends only on (seed, sampler settings, frame).

    :param F: FrameStructure on 4-space or on Martinet 3-space
    :param sc: SamplerConfig
    :param seed: int
    :param cfg: IntegratorConfig
    :return: ReachCloud with columns path_id, the frame's coordinates, \
        length, truncated, causal
    """
    names = [VAR_NAMES[ix] for ix in F.coords]
    rows = list()
    with ShowTimeTaken(f"sampling {sc.n_paths} paths ({sc.strategy}) in "
                       f"{F.frame_id()}"):
        for first in range(0, sc.n_paths, sc.batch_size):
            ids = range(first, min(first + sc.batch_size, sc.n_paths))
            paths = [draw_control_path(i, sc, seed) for i in ids]
            lengths = [path.length for path in paths]
            endpoints, truncated = _integrate_batch(F, paths, sc, cfg)
            for ix in np.flatnonzero(truncated):
                result = integrate_path(F, paths[ix], cfg, sc.box)
                endpoints[ix] = result.endpoint
                truncated[ix] = result.truncated
                lengths[ix] = result.length
            for i, path, end, length, cut in zip(ids, paths, endpoints,
                                                 lengths, truncated):
                rows.append((i, *end, length, bool(cut), path.causal.value))
            log(f"Integrated paths {ids.start} to {ids.stop - 1}",
                logging.DEBUG)
    data = pd.DataFrame(rows, columns=["path_id", *names, "length",
                                       "truncated", "causal"])
    data = data.astype({"path_id": int, "truncated": bool, "length": float,
                        **{n: float for n in names}})
    n_cut = int(data["truncated"].sum())
    log(f"Sampled {len(data)} endpoints; {n_cut} paths left the box",
        logging.INFO)
    return ReachCloud(data, seed, F.frame_id(), F.coords,
                      sc.model_dump(mode="json"))


def _box_gap(box: Box, coords: Sequence[int]):
    """ Signed distance to the box boundary, positive inside. """
    lo = np.asarray(box.lo)[list(coords)]
    hi = np.asarray(box.hi)[list(coords)]
    return lambda _, q: float(np.min(np.minimum(q - lo, hi - q)))


def _integrate_batch(F: FrameStructure, paths: Sequence[ControlPath],
                     sc: SamplerConfig, cfg: IntegratorConfig
                     ) -> tuple[np.ndarray, np.ndarray]:
    """ Integrate all paths together in normalized piece time, checking \
        the box on a grid of `sc.grid_nodes` nodes per piece.

    :return: tuple of the endpoints (n, dim) and a mask of the paths \
        seen outside the box; if the batch cannot be integrated (a path \
        escaping in finite time), every path is masked
    """
    n, dim = len(paths), F.dim
    n_pieces = max(len(path.pieces) for path in paths)
    table = np.zeros((n_pieces, n, 3))  # duration, u, v; zero-padded
    for j, path in enumerate(paths):
        for k, piece in enumerate(path.pieces):
            table[k, j] = piece
    state = np.tile(np.asarray(ORIGIN)[list(F.coords)], (n, 1))
    outside = np.zeros(n, dtype=bool)
    nodes = np.linspace(0.0, 1.0, sc.grid_nodes)
    for duration, u, v in table.transpose(0, 2, 1):
        # Paths already outside are integrated alone later; freeze them
        scale_u = np.where(outside, 0.0, duration * u)
        scale_v = np.where(outside, 0.0, duration * v)

        def rhs(_: float, flat: np.ndarray) -> np.ndarray:
            return F.velocity(flat.reshape(n, dim), scale_u, scale_v
                              ).ravel()

        try:
            sol = integrate(rhs, (0.0, 1.0), state.ravel(), cfg,
                            t_eval=nodes)
        except StepFailure as err:
            log(f"Batch of {n} paths failed ({err}); integrating each path "
                "alone", logging.DEBUG)
            return state, np.ones(n, dtype=bool)
        grid = sol.y.T.reshape(len(sol.t), n, dim)
        outside |= ~np.all(sc.box.contains(grid, F.coords), axis=0)
        state = grid[-1]
    return state, outside
