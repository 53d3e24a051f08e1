"""HTTP service layer: pydantic models, handlers, FastAPI app."""

from . import handlers, models

__all__ = ["handlers", "models"]
