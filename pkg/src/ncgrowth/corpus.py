"""Presentation corpus: ``.alg`` files with ``#@ key: value`` annotations.

The default directory is the one shipped with the package; the
``NCGROWTH_CORPUS`` environment variable overrides it.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path

from .model import MonomialPresentation
from .parser import parse_presentation

ENV_VAR = "NCGROWTH_CORPUS"
PACKAGE_CORPUS = Path(__file__).with_name("corpus")


def corpus_dir() -> Path:
    return Path(os.environ.get(ENV_VAR) or PACKAGE_CORPUS)


def _parse_value(s: str):
    s = s.strip()
    if s in ("inf", "+inf"):
        return math.inf
    for conv in (int, float):
        try:
            return conv(s)
        except ValueError:
            pass
    return s


def read_annotations(text: str) -> dict:
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#@") and ":" in line:
            key, _, val = line[2:].partition(":")
            out[key.strip()] = _parse_value(val)
    return out


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    path: Path
    annotations: dict

    def load(self):
        return parse_presentation(self.path.read_text(encoding="utf-8"))

    @property
    def is_monomial(self) -> bool:
        return isinstance(self.load(), MonomialPresentation)

    @property
    def growth(self) -> str | None:
        return self.annotations.get("growth")


def entry_from_path(path) -> CorpusEntry:
    path = Path(path)
    return CorpusEntry(path.stem, path, read_annotations(path.read_text(encoding="utf-8")))


def load_corpus(directory=None) -> list[CorpusEntry]:
    d = Path(directory) if directory is not None else corpus_dir()
    if not d.is_dir():
        raise FileNotFoundError(f"corpus directory {d} not found")
    return [entry_from_path(p) for p in sorted(d.glob("*.alg"))]


def resolve(spec: str, directory=None) -> CorpusEntry:
    """A file path, or a corpus entry name (``xx`` or ``xx.alg``); a missing
    path falls back to the corpus entry with the same file name."""
    p = Path(spec)
    if p.is_file():
        return entry_from_path(p)
    d = Path(directory) if directory is not None else corpus_dir()
    cand = d / (p.name if p.suffix == ".alg" else p.name + ".alg")
    if cand.is_file():
        return entry_from_path(cand)
    raise FileNotFoundError(f"no presentation file or corpus entry named {spec!r}")
