"""pcalc: a symbolic calculus for arithmetic automorphic periods."""

__version__ = "0.1.0"
