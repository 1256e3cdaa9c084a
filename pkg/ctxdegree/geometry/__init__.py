from .bounds import ContextualityBounds, contextuality_bounds
from .builders import build_symplectic, contexts_from_operators, find_spread, symplectic_counts
from .io import dump_geometry, load_geometry, parse_geometry, save_geometry
from .isomorphism import are_isomorphic, canonical_hash
from .models import NEGATIVE, POSITIVE, Geometry
from .named import NAMED_GEOMETRIES, build_named, duad_syntheme_geometry
from .validation import validate

__all__ = [
    "Geometry",
    "POSITIVE",
    "NEGATIVE",
    "NAMED_GEOMETRIES",
    "build_named",
    "build_symplectic",
    "contexts_from_operators",
    "symplectic_counts",
    "find_spread",
    "duad_syntheme_geometry",
    "validate",
    "contextuality_bounds",
    "ContextualityBounds",
    "dump_geometry",
    "parse_geometry",
    "load_geometry",
    "save_geometry",
    "are_isomorphic",
    "canonical_hash",
]
