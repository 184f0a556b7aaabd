"""Plain-text archives for spaces and eigendecompositions.

One datum per concept, line-oriented, LF-only, UTF-8:

    QSEM 1 space                     QSEM 1 eigen
    vocab <n>                        vocab <n>
    <n word lines>                   <n word lines>
    provenance global|centered ...   provenance global|centered ...
    entries <count>                  active <m>
    <count lines: row col weight>    <m lines: vocab index, ascending>
                                     pairs <k>
                                     <k blocks:
                                        value <hexfloat>
                                        vector <m hexfloats>>

Space entries are the upper triangle (row <= col), row-major, integer
weights; the lower triangle is implied by symmetry. Eigen floats are
written in hexadecimal (`float.hex`) so a load returns the exact bits that
were saved. Writing is deterministic: the same object always produces the
same bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from .errors import ArchiveCorruptionError, ArchiveFormatError, ParameterError
from .space import Provenance, SemanticSpace, Vocabulary
from .spectral import EigenSystem

__all__ = [
    "save_space",
    "load_space",
    "save_eigen",
    "load_eigen",
    "read_archive_info",
    "ArchiveInfo",
]

_MAGIC = "QSEM"
_VERSION = "1"


@dataclass(frozen=True)
class ArchiveInfo:
    """Header of an archive, readable without loading the body."""

    kind: str
    vocabulary_size: int
    provenance: Provenance
    n_entries: int | None = None  # space archives
    n_active: int | None = None  # eigen archives
    n_pairs: int | None = None  # eigen archives


class _Reader:
    """Line cursor that blames the current line number in every error."""

    def __init__(self, path: Path):
        self.lines = path.read_text("utf-8").split("\n")
        if self.lines and self.lines[-1] == "":
            self.lines.pop()  # trailing newline
        self.pos = 0

    def next(self) -> str:
        if self.pos >= len(self.lines):
            raise ArchiveCorruptionError(f"line {self.pos + 1}: archive is truncated")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def fail(self, message: str, kind=ArchiveFormatError):
        raise kind(f"line {self.pos}: {message}")

    def expect_count(self, keyword: str) -> int:
        line = self.next()
        parts = line.split(" ")
        if len(parts) != 2 or parts[0] != keyword:
            self.fail(f"expected '{keyword} <count>', got {line!r}")
        try:
            value = int(parts[1])
        except ValueError:
            self.fail(f"{keyword} count is not an integer: {parts[1]!r}")
        if value < 0:
            self.fail(f"{keyword} count is negative")
        return value

    def done(self):
        if self.pos < len(self.lines):
            self.fail(f"unexpected trailing content: {self.lines[self.pos]!r}")


def _check_words(vocabulary: Vocabulary):
    for w in vocabulary.words:
        if not w or any(c.isspace() for c in w):
            raise ParameterError(f"cannot archive word {w!r}: empty or contains whitespace")


def _provenance_line(p: Provenance) -> str:
    if p.kind == "centered":
        return f"provenance centered {p.word} {p.radius}"
    return "provenance global"


def _read_header(reader: _Reader) -> tuple[str, Vocabulary, Provenance]:
    magic = reader.next().split(" ")
    if len(magic) != 3 or magic[0] != _MAGIC:
        reader.fail("not a QSEM archive")
    if magic[1] != _VERSION:
        reader.fail(f"unsupported archive version {magic[1]!r}")
    kind = magic[2]
    if kind not in ("space", "eigen"):
        reader.fail(f"unknown archive kind {kind!r}")

    n = reader.expect_count("vocab")
    words = []
    for _ in range(n):
        w = reader.next()
        if not w or any(c.isspace() for c in w):
            reader.fail(f"invalid vocabulary word {w!r}", ArchiveCorruptionError)
        words.append(w)
    try:
        vocabulary = Vocabulary(words)
    except ParameterError as exc:
        reader.fail(str(exc), ArchiveCorruptionError)

    parts = reader.next().split(" ")
    if parts[0] != "provenance" or len(parts) < 2:
        reader.fail("expected a provenance line")
    if parts[1] == "global" and len(parts) == 2:
        provenance = Provenance("global")
    elif parts[1] == "centered" and len(parts) == 4:
        try:
            provenance = Provenance("centered", parts[2], int(parts[3]))
        except ValueError:
            reader.fail(f"centered radius is not an integer: {parts[3]!r}")
    else:
        reader.fail(f"malformed provenance line: {' '.join(parts)!r}")
    return kind, vocabulary, provenance


def save_space(space: SemanticSpace, path: str | Path):
    """Write a space archive (upper triangle only)."""
    _check_words(space.vocabulary)
    upper = sp.triu(space.matrix, k=0).tocoo()
    order = np.lexsort((upper.col, upper.row))
    rows, cols, data = upper.row[order], upper.col[order], upper.data[order]
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write(f"{_MAGIC} {_VERSION} space\n")
        out.write(f"vocab {len(space.vocabulary)}\n")
        for w in space.vocabulary.words:
            out.write(w + "\n")
        out.write(_provenance_line(space.provenance) + "\n")
        out.write(f"entries {len(data)}\n")
        for r, c, d in zip(rows, cols, data):
            out.write(f"{r} {c} {d}\n")


def load_space(path: str | Path) -> SemanticSpace:
    reader = _Reader(Path(path))
    kind, vocabulary, provenance = _read_header(reader)
    if kind != "space":
        raise ArchiveFormatError(f"archive holds {kind!r} data, expected a space")
    n = len(vocabulary)
    count = reader.expect_count("entries")
    rows = np.empty(count, dtype=np.int64)
    cols = np.empty(count, dtype=np.int64)
    data = np.empty(count, dtype=np.int64)
    last = (-1, -1)
    for i in range(count):
        parts = reader.next().split(" ")
        if len(parts) != 3:
            reader.fail("entry line must be 'row col weight'")
        try:
            r, c, d = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            reader.fail("entry fields must be integers")
        if not (0 <= r <= c < n):
            reader.fail(f"entry ({r}, {c}) outside the upper triangle of a {n}-word space",
                        ArchiveCorruptionError)
        if (r, c) <= last:
            reader.fail("entries out of order or duplicated", ArchiveCorruptionError)
        last = (r, c)
        rows[i], cols[i], data[i] = r, c, d
    reader.done()

    strict = rows != cols
    full_rows = np.concatenate([rows, cols[strict]])
    full_cols = np.concatenate([cols, rows[strict]])
    full_data = np.concatenate([data, data[strict]])
    matrix = sp.csr_matrix((full_data, (full_rows, full_cols)), shape=(n, n), dtype=np.int64)
    matrix.sort_indices()
    return SemanticSpace(matrix, vocabulary, provenance)


def save_eigen(system: EigenSystem, path: str | Path):
    """Write an eigendecomposition archive (exact hex floats)."""
    _check_words(system.parent_vocabulary)
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write(f"{_MAGIC} {_VERSION} eigen\n")
        out.write(f"vocab {len(system.parent_vocabulary)}\n")
        for w in system.parent_vocabulary.words:
            out.write(w + "\n")
        out.write(_provenance_line(system.provenance) + "\n")
        out.write(f"active {system.dimension}\n")
        for idx in system.index_map:
            out.write(f"{idx}\n")
        out.write(f"pairs {len(system)}\n")
        for i in range(len(system)):
            out.write(f"value {float(system.values[i]).hex()}\n")
            out.write("vector " + " ".join(float(x).hex() for x in system.vectors[:, i]) + "\n")


def load_eigen(path: str | Path) -> EigenSystem:
    reader = _Reader(Path(path))
    kind, parent, provenance = _read_header(reader)
    if kind != "eigen":
        raise ArchiveFormatError(f"archive holds {kind!r} data, expected an eigendecomposition")
    m = reader.expect_count("active")
    index_map = np.empty(m, dtype=np.int64)
    last = -1
    for i in range(m):
        line = reader.next()
        try:
            idx = int(line)
        except ValueError:
            reader.fail(f"active index is not an integer: {line!r}")
        if not 0 <= idx < len(parent):
            reader.fail(f"active index {idx} outside the vocabulary", ArchiveCorruptionError)
        if idx <= last:
            reader.fail("active indices out of order", ArchiveCorruptionError)
        last = idx
        index_map[i] = idx

    k = reader.expect_count("pairs")
    values = np.empty(k, dtype=np.float64)
    vectors = np.empty((m, k), dtype=np.float64)
    for i in range(k):
        parts = reader.next().split(" ")
        if len(parts) != 2 or parts[0] != "value":
            reader.fail("expected a 'value <hexfloat>' line")
        try:
            values[i] = float.fromhex(parts[1])
        except ValueError:
            reader.fail(f"bad hex float {parts[1]!r}")
        parts = reader.next().split(" ")
        if parts[0] != "vector" or len(parts) != m + 1:
            reader.fail(f"expected a 'vector' line with {m} components")
        try:
            vectors[:, i] = [float.fromhex(p) for p in parts[1:]]
        except ValueError:
            reader.fail("bad hex float in vector line")
    reader.done()

    vocabulary = Vocabulary(parent.words[j] for j in index_map)
    return EigenSystem(values, vectors, vocabulary, index_map, parent, provenance)


def read_archive_info(path: str | Path) -> ArchiveInfo:
    """Parse just enough of an archive to describe it."""
    reader = _Reader(Path(path))
    kind, vocabulary, provenance = _read_header(reader)
    if kind == "space":
        count = reader.expect_count("entries")
        return ArchiveInfo("space", len(vocabulary), provenance, n_entries=count)
    m = reader.expect_count("active")
    for _ in range(m):
        reader.next()
    k = reader.expect_count("pairs")
    return ArchiveInfo("eigen", len(vocabulary), provenance, n_active=m, n_pairs=k)
