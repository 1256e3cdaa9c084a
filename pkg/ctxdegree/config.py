import json
import os
from typing import Dict, Optional

from loguru import logger
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="CTXDEGREE_",
        case_sensitive=False,
        extra="ignore",
    )

    # Brute-force enumeration
    workers: int = Field(1, ge=1)
    block_bits: int = Field(16, ge=1, le=24)
    brute_force_max_points: int = Field(30, ge=1)

    # Geometry construction
    symplectic_max_qubits: int = Field(4, ge=1)

    # Statevector simulation
    simulator_max_qubits: int = Field(24, ge=1)

    # CLI defaults
    default_seed: int = Field(0, ge=0)
    default_shots: int = Field(2048, ge=1)

    # Dynamic beta optimisation
    beta_patience: int = Field(3, ge=1)
    beta_improvement_tol: float = Field(1e-6, ge=0.0)
    beta_tie_tol: float = Field(1e-12, ge=0.0)
    beta_max_queries: int = Field(1000, ge=1)

    # Data directory for cached distributions
    cache_dir: str = "./data"

    log_level: str = "INFO"
    log_json: bool = False

    def _create_cache_dir(self) -> None:
        """Create cache directory if it doesn't exist"""
        os.makedirs(self.cache_dir, exist_ok=True)

    def cache_path(self, key: str) -> str:
        """Path of the cached distribution document for a geometry key"""
        return os.path.join(self.cache_dir, f"distribution-{key}.json")

    def load_cached(self, key: str) -> Optional[Dict]:
        """Load a cached document, or None when absent or unreadable"""
        path = self.cache_path(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r") as f:
                return json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            logger.warning(f"Ignoring unreadable cache file {path}: {e}")
            return None

    def save_cached(self, key: str, document: Dict) -> None:
        """Save a document to the cache directory"""
        self._create_cache_dir()
        path = self.cache_path(key)
        try:
            with open(path, "w") as f:
                json.dump(document, f, indent=2)
        except IOError as e:
            logger.warning(f"Could not write cache file {path}: {e}")


# Create global settings instance
settings = Settings()
