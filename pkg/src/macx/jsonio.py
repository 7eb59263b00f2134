"""JSON form of a complex: ``{"m": 4, "maximal_faces": [[1, 2], [2, 3]]}``."""

from __future__ import annotations

import json
from pathlib import Path

from .complex_core import ComplexError, SimplicialComplex, from_maximal_faces


def parse_complex(obj) -> SimplicialComplex:
    if not isinstance(obj, dict) or "m" not in obj or "maximal_faces" not in obj:
        raise ComplexError('expected an object with keys "m" and "maximal_faces"')
    m = obj["m"]
    faces = obj["maximal_faces"]
    if not isinstance(m, int) or isinstance(m, bool):
        raise ComplexError(f'"m" must be an integer, got {m!r}')
    if not isinstance(faces, list) or not all(
            isinstance(f, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in f)
            for f in faces):
        raise ComplexError('"maximal_faces" must be a list of lists of integers')
    return from_maximal_faces(m, faces)


def load_complex(path: str | Path) -> SimplicialComplex:
    with open(path) as fh:
        return parse_complex(json.load(fh))


def dumps(obj) -> str:
    # sorted keys and fixed separators keep reports byte-identical across runs
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(obj, path: str | Path | None) -> None:
    text = dumps(obj)
    if path is None or str(path) == "-":
        print(text, end="")
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
