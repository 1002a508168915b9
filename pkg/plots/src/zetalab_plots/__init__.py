"""Render zetalab CSV outputs into figures."""

__version__ = "0.1.0"

from .render import FigureSpec, SchemaError, read_csv, render
