"""Turn trajectory CSV files into static figures.

The input format is the simulator's: an optional leading "#" metadata line,
a header row whose first column is t, then one row per sampled time.  A
FigureSpec names the file, a glob-style column selection, one of two styles,
and the image path.  Styles:

  components                        every selected column as a solid line
  eigenvalues-with-dashed-density   columns named eig_rho_* dashed, all other
                                    selected columns solid, plus a zero line

Nothing here knows how the numbers were produced; the CSV schema is the
whole contract.
"""

import csv
import fnmatch
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

STYLES = ("components", "eigenvalues-with-dashed-density")

DENSITY_PREFIX = "eig_rho_"


@dataclass(frozen=True)
class FigureSpec:
    """One figure: where the data lives, what to select, how to draw it."""

    csv_path: str
    columns: str  # glob pattern matched against header names, e.g. "c_*"
    style: str
    out_path: str

    def __post_init__(self):
        if self.style not in STYLES:
            raise ValueError(f"style must be one of {STYLES}, got {self.style!r}")


def read_table(csv_path):
    """Parse a trajectory CSV into (times, {column name: list of floats})."""
    path = Path(csv_path)
    with path.open(newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    if not rows:
        raise ValueError(f"{path}: no header row found")
    header = rows[0]
    if header[0] != "t":
        raise ValueError(f"{path}: first column must be t, got {header[0]!r}")
    data = {name: [] for name in header}
    for row in rows[1:]:
        if len(row) != len(header):
            raise ValueError(f"{path}: row with {len(row)} fields, expected {len(header)}")
        for name, tok in zip(header, row):
            data[name].append(float(tok))
    times = data.pop("t")
    return times, data


def select_columns(data, pattern):
    names = [name for name in data if fnmatch.fnmatch(name, pattern)]
    if not names:
        available = ", ".join(data)
        raise ValueError(
            f"no columns match {pattern!r}; available columns: {available}")
    return names


def build_figure(spec: FigureSpec):
    """Figure and axes for the spec, not yet written to disk."""
    times, data = read_table(spec.csv_path)
    names = select_columns(data, spec.columns)

    fig, ax = plt.subplots(figsize=(8.0, 5.0))
    if spec.style == "components":
        for name in names:
            ax.plot(times, data[name], linewidth=0.9, label=name)
        ax.set_ylabel("component value")
    else:
        ax.axhline(0.0, color="0.3", linewidth=0.8, zorder=1)
        for name in names:
            dashed = name.startswith(DENSITY_PREFIX)
            ax.plot(times, data[name],
                    linestyle="--" if dashed else "-",
                    linewidth=1.0 if dashed else 1.4,
                    label=name)
        ax.set_ylabel("eigenvalue")
    ax.set_xlabel("t")
    ax.set_xlim(times[0], times[-1])
    if len(names) <= 12:
        ax.legend(fontsize=8, ncols=2)
    fig.tight_layout()
    return fig, ax


def render(spec: FigureSpec):
    """Write the figure; returns the output path.

    Raster and vector formats are picked by the output suffix.  Metadata that
    would vary between runs (dates, tool versions) is stripped so identical
    inputs produce identical bytes.
    """
    fig, _ = build_figure(spec)
    out = Path(spec.out_path)
    suffix = out.suffix.lower().lstrip(".")
    if suffix not in ("png", "svg"):
        plt.close(fig)
        raise ValueError(f"output must end in .png or .svg, got {out.name!r}")
    metadata = {"Software": None} if suffix == "png" else {"Date": None}
    try:
        fig.savefig(out, dpi=150, metadata=metadata)
    finally:
        plt.close(fig)
    return out
