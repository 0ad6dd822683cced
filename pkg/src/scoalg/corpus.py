"""Bundled facet files.

``resolve("rp2b")`` loads the lettered copy of the six-vertex projective
plane; a bare stem such as ``"rp2"`` means its ``a`` copy.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import List

from .exceptions import ScoalgError
from .simplicial import SimplicialComplex, read_facet_file

_DIR = resources.files("scoalg") / "data"


def corpus_names() -> List[str]:
    return sorted(p.name[:-5] for p in _DIR.iterdir() if p.name.endswith(".json"))


def corpus_path(name: str) -> Path:
    names = corpus_names()
    if name in names:
        return Path(str(_DIR / f"{name}.json"))
    if name + "a" in names:
        return Path(str(_DIR / f"{name}a.json"))
    raise ScoalgError(f"no bundled complex named {name!r}")


def resolve(name_or_path: str) -> SimplicialComplex:
    """Load a facet file from disk, falling back to the bundled corpus."""
    p = Path(name_or_path)
    if p.is_file():
        return read_facet_file(p)
    try:
        path = corpus_path(name_or_path)
    except ScoalgError:
        raise ScoalgError(f"{name_or_path!r} is neither a file nor a bundled complex") from None
    X = read_facet_file(path)
    X.name = Path(path).stem
    return X
