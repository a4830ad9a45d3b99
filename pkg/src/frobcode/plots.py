"""Figure rendering for the survey report path.

Kept separate from the counting code so that matplotlib stays an
import of this module only; the CSV path never touches it.
"""

from __future__ import annotations

import matplotlib.figure
from matplotlib.backends.backend_agg import FigureCanvasAgg

from .survey import DensityReport

__all__ = ["plot_density"]


def plot_density(report: DensityReport, path: str) -> None:
    """Render the counting-function curves to `path` (format taken from
    the suffix).  Checkpoint totals and their even/odd exponent split on
    log-log axes; a running step curve as well when the report kept the
    per-length detail."""
    fig = matplotlib.figure.Figure(figsize=(6.4, 4.4))
    canvas = FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)

    if report.good:
        ax.step(report.good, range(1, len(report.good) + 1), where="post",
                color="0.6", lw=1.0, label="running count")
    marks = report.checkpoints
    xs = [c.x for c in marks]
    for field, colour, marker in (("total", "C0", "o"),
                                  ("even", "C1", "s"),
                                  ("odd", "C2", "^")):
        ys = [getattr(c, field) for c in marks]
        ax.plot(xs, ys, color=colour, marker=marker, ms=4, lw=1.2,
                label=field)

    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("x")
    ax.set_ylabel(f"lengths n <= x admitting an exponent  (p = {report.p})")
    ax.grid(True, which="both", alpha=0.25)
    ax.legend(loc="upper left", frameon=False)
    canvas.print_figure(path, dpi=150, bbox_inches="tight")
