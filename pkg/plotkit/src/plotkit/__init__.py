"""Static figures from coherence-vector trajectory CSV files."""

from .render import FigureSpec, build_figure, read_table, render, select_columns

__version__ = "0.1.0"

__all__ = ["FigureSpec", "build_figure", "read_table", "render", "select_columns"]
