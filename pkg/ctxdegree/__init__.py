"""Degree of contextuality for Pauli geometries.

Exact brute force, gate-level Grover threshold search and class-level
quasi-Grover simulation over point-line geometries with signed lines.
"""

__version__ = "0.1.0"
