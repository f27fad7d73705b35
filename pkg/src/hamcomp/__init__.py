"""Hamilton cycles with rotational symmetry in structured graph families."""

__version__ = "0.1.0"
