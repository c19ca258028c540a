"""Open-term bisimulation checks for positive GSOS specifications."""

import json
from pathlib import Path

from ._opensos import Error, ParseError, run
from ._opensos import Spec as _Spec

__all__ = ["Error", "ParseError", "Spec", "load", "parse", "run"]


class Spec:
    """A parsed specification document. Results are plain dicts and lists."""

    def __init__(self, text):
        self._spec = _Spec(text)

    @property
    def names(self):
        return self._spec.names()

    def document(self):
        return json.loads(self._spec.document())

    def gsos_check(self, tss):
        return json.loads(self._spec.gsos_check(tss))

    def ruloids(self, tss, term):
        return json.loads(self._spec.ruloids(tss, term))

    def transitions(self, tss, term):
        return json.loads(self._spec.transitions(tss, term))

    def check(self, tss, notion, lhs, rhs, **bounds):
        return json.loads(self._spec.check(tss, notion, lhs, rhs, bounds))

    def advise(self, base, ext, notion="ci", **bounds):
        """Preservation advice for the equations pinned to `base`."""
        return json.loads(self._spec.advise(base, ext, notion, bounds))


def parse(text):
    return Spec(text)


def load(*paths):
    """Concatenates .sos files (directories contribute their sorted *.sos) into one document."""
    files = []
    for p in map(Path, paths):
        files.extend(sorted(p.glob("*.sos")) if p.is_dir() else [p])
    return Spec("\n".join(f.read_text() for f in files))
