"""HTTP service wrapper around the circle-diagram library."""

from .app import app

__all__ = ["app"]
