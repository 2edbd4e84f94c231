"""Figure rendering for the bounds report (headless matplotlib)."""
from __future__ import annotations


def render_bounds_chart(rows, path, title: str = "upper bounds") -> None:
    """Horizontal bar chart of the finite, applicable bound values.

    ``rows`` are (name, value, applicable) triples as produced by the
    bounds report; inapplicable entries are skipped.  Writes the figure
    to ``path`` (format chosen by extension).
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    shown = [(name, value) for name, value, applicable in rows if applicable]
    fig, ax = plt.subplots(figsize=(6.4, 0.5 * max(len(shown), 1) + 1.2))
    if shown:
        names = [name for name, _ in shown][::-1]
        values = [value for _, value in shown][::-1]
        bars = ax.barh(names, values, color="C0", alpha=0.7)
        for bar, value in zip(bars, values):
            ax.text(
                bar.get_width(),
                bar.get_y() + bar.get_height() / 2,
                f" {value:.3f}",
                va="center",
                fontsize=9,
            )
    ax.set_xlabel("bound on feedback arc set size")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
