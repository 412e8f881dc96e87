"""Distance-t line-graph powers: constructions, metrics, bounds and exhaustive search."""
__version__ = "0.1.0"
