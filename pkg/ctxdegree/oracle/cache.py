import hashlib

from loguru import logger
from pydantic import ValidationError

from ..config import settings
from ..geometry.io import dump_geometry
from ..geometry.models import Geometry
from .brute_force import invalid_distribution
from .models import InvalidDistribution


def geometry_key(g: Geometry) -> str:
    """SHA-256 of the geometry's text document"""
    return hashlib.sha256(dump_geometry(g).encode("utf-8")).hexdigest()


def load_or_compute(g: Geometry, use_cache: bool = True) -> InvalidDistribution:
    """Exact distribution, read from the cache directory when a matching entry exists"""
    if not use_cache:
        return invalid_distribution(g)

    key = geometry_key(g)
    document = settings.load_cached(key)
    if document is not None:
        try:
            dist = InvalidDistribution.model_validate(document)
            logger.debug(f"Loaded cached distribution for {g.name} ({key[:12]})")
            return dist
        except ValidationError as e:
            logger.warning(f"Discarding malformed cache entry {key[:12]}: {e}")

    dist = invalid_distribution(g)
    settings.save_cached(key, dist.model_dump(mode="json"))
    return dist
