from .main import main, start

__all__ = ["main", "start"]
