#!/usr/bin/env python3

"""
SVG scatter plots of reachable clouds with the zero level sets of the \
    flat barriers drawn over them.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
from collections.abc import Callable
from typing import Literal

# Import third-party PyPI libraries
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

# Import local custom libraries
try:
    from elab.errors import FrameMismatch
    from elab.IO.local import make_parent_dir
    from elab.reachability import ReachCloud
except (ImportError, ModuleNotFoundError):
    from .errors import FrameMismatch
    from .IO.local import make_parent_dir
    from .reachability import ReachCloud

Plane = Literal["xy", "xz", "xw", "yz"]
PLANES: tuple[Plane, ...] = ("xy", "xz", "xw", "yz")

# Half-width of the y-slab used for the xw boundary curve
XW_SLAB = 0.05


def _boundary_curves(plane: Plane, extent: float
                     ) -> list[tuple[str, Callable[[np.ndarray],
                                                   np.ndarray]]]:
    """
    :param plane: Plane
    :param extent: float, largest x (or |y| for yz) to draw to
    :return: list of (label, function of the horizontal axis)
    """
    match plane:
        case "xy":
            return [("y = x", lambda s: s), ("y = -x", lambda s: -s)]
        case "xz":
            return [("f1 = 0 at y = 0", lambda s: s * s / 4),
                    ("f2 = 0 at y = 0", lambda s: -s * s / 4)]
        case "xw":
            return [("g1 = 0 at y = 0", lambda s: s ** 3 / 16),
                    (f"w bound for |y| <= {XW_SLAB}", lambda s: -(
                        s * XW_SLAB ** 2 + XW_SLAB ** 3) / 4)]
        case _:
            return [(f"f1 = 0 at x = {extent:.3g}",
                     lambda s: (extent ** 2 - s * s) / 4),
                    (f"f2 = 0 at x = {extent:.3g}",
                     lambda s: -(extent ** 2 - s * s) / 4)]


def plot_cloud(cloud: ReachCloud, plane: Plane, out_path: str) -> str:
    """ Scatter cloud endpoints projected onto `plane` and overlay the \
        barrier boundaries of that cross-section; save as SVG.

    :param cloud: ReachCloud, possibly empty
    :param plane: Plane, two coordinate names such as "xw"
    :param out_path: str, where to save the .svg file
    :raises ValueError: if `plane` is not one of PLANES
    :raises FrameMismatch: if `plane` uses a coordinate the cloud lacks
    :return: str, path of the saved SVG
    """
    if plane not in PLANES:
        raise ValueError(f"Unknown plane {plane!r}; choose one of {PLANES}")
    h_name, v_name = plane
    missing = {h_name, v_name} - set(cloud.names)
    if missing:
        raise FrameMismatch(f"Cloud in {cloud.frame_id} has no "
                            f"{', '.join(sorted(missing))} column")
    fig, ax = plt.subplots(figsize=(6, 5))
    try:
        if len(cloud):
            ax.scatter(cloud.data[h_name], cloud.data[v_name], s=2,
                       alpha=0.4, linewidths=0, label="endpoints")
            h_values = cloud.data[h_name].to_numpy()
            extent = float(np.max(np.abs(h_values))) or 1.0
            lo = -extent if h_name == "y" else 0.0
            s = np.linspace(lo, extent, 200)
            x_extent = float(cloud.data["x"].max()) if plane == "yz" \
                else extent
            for label, curve in _boundary_curves(plane, x_extent):
                ax.plot(s, curve(s), linewidth=1, label=label)
            ax.legend(loc="best", fontsize="small")
        ax.set_xlabel(h_name)
        ax.set_ylabel(v_name)
        ax.set_title(f"{len(cloud)} endpoints, {cloud.frame_id}")
        out_path = make_parent_dir(out_path)
        fig.savefig(out_path, format="svg")
    finally:
        plt.close(fig)
    return out_path
