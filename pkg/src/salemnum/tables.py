"""Bundled static data: prime tuples and the embedded Salem corpus.

Each file ships inside the package and is verified against a pinned
sha256 before use; a mismatch raises DataIntegrityError rather than
silently computing with corrupted tables.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache
from importlib import resources

from .errors import DataIntegrityError

_CHECKSUMS = {
    "seven_tuples.txt": "437aa5307ce5cb35ab6afa02baec76981460e8a6dfd8669a90f14fa0b1d6a359",
    "quadruples.txt": "42a6918ee55361bd4e022cc630c9bc3470e8a64fd57af72d65d05d8c78b58b34",
    "salem_corpus.txt": "d8782c21c91d8bf83908042869d2768edbe3514e1af5102af8aca4c43e997e25",
}


@lru_cache(maxsize=None)
def load_text(name: str) -> str:
    raw = resources.files("salemnum.data").joinpath(name).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    expected = _CHECKSUMS[name]
    if digest != expected:
        raise DataIntegrityError(f"{name}: sha256 {digest} != pinned {expected}")
    return raw.decode("ascii")


def load_tuple_rows(name: str) -> list:
    rows = []
    for line in load_text(name).splitlines():
        line = line.strip()
        if line:
            rows.append(tuple(int(v) for v in line.split(",")))
    return rows


def load_corpus_rows() -> list:
    """(degree, descending half coefficients a_{2d}..a_d) per corpus row."""
    rows = []
    for line in load_text("salem_corpus.txt").splitlines():
        line = line.strip()
        if not line:
            continue
        head, _, tail = line.partition(":")
        rows.append((int(head), tuple(int(v) for v in tail.split(","))))
    return rows
