"""Rendering of Gauss diagrams as circle-and-chord figures."""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch


def _endpoint_xy(position, total):
    theta = 2 * math.pi * position / total
    return math.cos(theta), math.sin(theta)


def draw_diagram(diagram, ax=None, title=None):
    """Draw the circle, its numbered endpoints and the directed chords.

    Positive chords are drawn solid blue, negative ones solid red and
    singular ones dashed; every chord carries an arrowhead at its head
    endpoint.  Returns the matplotlib axes.
    """
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4))
    ax.add_patch(plt.Circle((0, 0), 1.0, fill=False, color="black", lw=1.2))
    m = 2 * diagram.n
    for p in range(m):
        x, y = _endpoint_xy(p, m)
        ax.plot([x], [y], marker="o", ms=3, color="black")
        ax.annotate(str(p), (1.12 * x, 1.12 * y), ha="center", va="center",
                    fontsize=7, color="gray")
    for i, a in enumerate(diagram.arrows):
        tx, ty = _endpoint_xy(a.tail, m)
        hx, hy = _endpoint_xy(a.head, m)
        color = "tab:blue" if a.sign > 0 else "tab:red"
        style = "--" if a.singular else "-"
        ax.add_patch(FancyArrowPatch((tx, ty), (hx, hy),
                                     arrowstyle="-|>", mutation_scale=12,
                                     linestyle=style, color=color, lw=1.3,
                                     shrinkA=0, shrinkB=0))
        ax.annotate("%+d" % a.sign, ((tx + hx) / 2, (ty + hy) / 2),
                    fontsize=7, color=color)
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    return ax


def render_to_file(diagram, path, title=None):
    """Render one diagram to an image file."""
    fig, ax = plt.subplots(figsize=(4, 4))
    draw_diagram(diagram, ax=ax, title=title)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
