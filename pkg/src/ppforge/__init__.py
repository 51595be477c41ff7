"""Prime representations built from pi: exact sequences, Lambert-type
series, integer relations and their verification."""

from ._backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
