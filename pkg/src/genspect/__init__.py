"""genspect: generate an unambiguous gender-translation benchmark from a
feature-constrained phrase-structure grammar, and score MT output
reference-free by classifying the grammatical gender of translated
occupation nouns."""

from pathlib import Path
from importlib.resources import files

__version__ = "0.1.0"


def data_path(*parts: str) -> Path:
    """Path to a file inside the packaged default data directory."""
    return Path(str(files("genspect").joinpath("data", *parts)))
