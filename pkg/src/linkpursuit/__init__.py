"""Pursuit-evasion geometry engine: visibility graphs, cop strategies in
polygons and circular-arc splinegons, and the supporting game machinery."""

__version__ = "0.1.0"
