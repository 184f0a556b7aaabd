"""Co-occurrence matrices and symmetric semantic spaces.

The association matrix is accumulated by sliding a window of length
``window`` over each document one token at a time: every word in the window
co-occurs with the window's last word with strength ``window + 1 - distance``
(so an adjacent pair scores ``window`` and a pair at the full window span
scores 1). Row i holds the weighted counts of words that preceded word i;
symmetrizing (``S = H + H^T``) forgets direction. A word-centered space sums
the symmetrized matrices of the slices of ``radius`` tokens on each side of
every occurrence of the word, and the global space is the elementwise sum of
the centered spaces of every vocabulary word.

All accumulation is exact int64 arithmetic; nothing is rescaled before the
spectral stage.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from . import _kernels
from .errors import ParameterError, UnknownWordError
from .ingest import Document

logger = logging.getLogger(__name__)

__all__ = [
    "Vocabulary",
    "Corpus",
    "Provenance",
    "CooccurrenceMatrix",
    "SemanticSpace",
    "StateVector",
    "build_hal",
    "symmetrize",
    "corpus_space",
    "word_space",
    "global_space",
    "word_vector",
    "top_associates",
]


class Vocabulary:
    """Bijection between word strings and dense indices 0..n-1.

    Word order is the identity of the coordinate system: spaces can only be
    added or compared when they share one Vocabulary instance (or an equal
    word list).
    """

    __slots__ = ("words", "_index")

    def __init__(self, words: Iterable[str]):
        self.words: tuple[str, ...] = tuple(words)
        self._index = {w: i for i, w in enumerate(self.words)}
        if len(self._index) != len(self.words):
            raise ParameterError("vocabulary contains duplicate words")

    @classmethod
    def from_documents(cls, documents: Iterable[Document]) -> "Vocabulary":
        """Collect the distinct tokens of a corpus, in sorted order."""
        seen: set[str] = set()
        for doc in documents:
            seen.update(doc.tokens)
        return cls(sorted(seen))

    def index(self, word: str) -> int:
        try:
            return self._index[word]
        except KeyError:
            raise UnknownWordError(word) from None

    def word(self, index: int) -> str:
        return self.words[index]

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def __iter__(self):
        return iter(self.words)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vocabulary) and self.words == other.words

    def __hash__(self):
        return hash(self.words)

    def __repr__(self):
        return f"Vocabulary({len(self.words)} words)"


class Corpus:
    """Tokenized documents bound to a fixed Vocabulary.

    Token indices are held as one concatenated int32 array plus document
    boundary offsets, the layout the kernels consume. The vocabulary is
    fixed at construction (one full scan) so every space built from the same
    corpus shares coordinates.
    """

    def __init__(self, documents: Sequence[Document], vocabulary: Vocabulary | None = None):
        self.documents = tuple(documents)
        self.vocabulary = vocabulary or Vocabulary.from_documents(self.documents)
        lengths = [len(d.tokens) for d in self.documents]
        self.doc_offsets = np.zeros(len(lengths) + 1, dtype=np.int64)
        np.cumsum(lengths, out=self.doc_offsets[1:])
        ids = np.empty(int(self.doc_offsets[-1]), dtype=np.int32)
        index = self.vocabulary._index
        pos = 0
        for doc in self.documents:
            for tok in doc.tokens:
                ids[pos] = index[tok]
                pos += 1
        self.token_ids = ids

    @property
    def n_tokens(self) -> int:
        return int(self.token_ids.size)

    def frequency(self, word: str) -> int:
        """Number of occurrences of `word` across all documents."""
        idx = self.vocabulary.index(word)
        return int(np.count_nonzero(self.token_ids == idx))

    def __len__(self) -> int:
        return len(self.documents)

    def __repr__(self):
        return f"Corpus({len(self.documents)} documents, {self.n_tokens} tokens, n={len(self.vocabulary)})"


@dataclass(frozen=True)
class Provenance:
    """How a space was built: the whole corpus, or centered on one word."""

    kind: str  # "global" | "centered"
    word: str | None = None
    radius: int | None = None

    def __post_init__(self):
        if self.kind not in ("global", "centered"):
            raise ParameterError(f"unknown provenance kind: {self.kind!r}")
        if self.kind == "centered" and (self.word is None or self.radius is None):
            raise ParameterError("centered provenance needs a word and a radius")


def _csr(rows, cols, weights, n) -> sp.csr_matrix:
    mat = sp.csr_matrix((weights, (rows, cols)), shape=(n, n), dtype=np.int64)
    mat.sort_indices()
    return mat


class CooccurrenceMatrix:
    """Directional sliding-window accumulation H over a vocabulary."""

    def __init__(self, matrix: sp.csr_matrix, vocabulary: Vocabulary, window_length: int):
        self.matrix = matrix
        self.vocabulary = vocabulary
        self.window_length = window_length

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def weight(self, row_word: str, col_word: str) -> int:
        i = self.vocabulary.index(row_word)
        j = self.vocabulary.index(col_word)
        return int(self.matrix[i, j])

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def __add__(self, other: "CooccurrenceMatrix") -> "CooccurrenceMatrix":
        _check_same_vocab(self.vocabulary, other.vocabulary)
        out = (self.matrix + other.matrix).tocsr()
        out.sort_indices()
        return CooccurrenceMatrix(out, self.vocabulary, self.window_length)

    def __repr__(self):
        return f"CooccurrenceMatrix(n={self.n}, nnz={self.matrix.nnz}, window={self.window_length})"


class SemanticSpace:
    """Symmetric nonnegative association matrix over a vocabulary.

    `missing_target` is transient metadata (not persisted): it flags a
    centered space whose target word never occurred, which is data rather
    than an error.
    """

    def __init__(
        self,
        matrix: sp.csr_matrix,
        vocabulary: Vocabulary,
        provenance: Provenance,
        missing_target: bool = False,
    ):
        self.matrix = matrix
        self.vocabulary = vocabulary
        self.provenance = provenance
        self.missing_target = missing_target

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def nnz(self) -> int:
        return self.matrix.nnz

    def weight(self, word_a: str, word_b: str) -> int:
        i = self.vocabulary.index(word_a)
        j = self.vocabulary.index(word_b)
        return int(self.matrix[i, j])

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def column(self, word: str) -> "StateVector":
        idx = self.vocabulary.index(word)
        col = np.asarray(self.matrix.getcol(idx).todense()).ravel()
        return StateVector(col, self.vocabulary, label=word)

    def active_indices(self) -> np.ndarray:
        """Indices of rows/columns carrying at least one nonzero entry."""
        return np.nonzero(self.matrix.getnnz(axis=1))[0]

    def restricted(self) -> tuple["SemanticSpace", np.ndarray]:
        """Drop all-zero rows/columns.

        Returns the sub-space over a fresh Vocabulary of the active words
        plus the index map back into this space's vocabulary.
        """
        active = self.active_indices()
        sub = self.matrix[np.ix_(active, active)].tocsr()
        sub.sort_indices()
        vocab = Vocabulary(self.vocabulary.words[i] for i in active)
        return SemanticSpace(sub, vocab, self.provenance, self.missing_target), active

    def __add__(self, other: "SemanticSpace") -> "SemanticSpace":
        _check_same_vocab(self.vocabulary, other.vocabulary)
        out = (self.matrix + other.matrix).tocsr()
        out.sort_indices()
        return SemanticSpace(out, self.vocabulary, self.provenance)

    def equal(self, other: "SemanticSpace") -> bool:
        """Exact elementwise equality (integer arithmetic)."""
        if self.vocabulary != other.vocabulary:
            return False
        return (self.matrix != other.matrix).nnz == 0

    def __repr__(self):
        return f"SemanticSpace(n={self.n}, nnz={self.nnz}, {self.provenance})"


class StateVector:
    """A word's association profile: one real component per vocabulary word."""

    def __init__(self, components: np.ndarray, vocabulary: Vocabulary, label: str | None = None):
        components = np.asarray(components)
        if components.ndim != 1 or components.shape[0] != len(vocabulary):
            raise ParameterError("state vector length must equal the vocabulary size")
        self.components = components
        self.vocabulary = vocabulary
        self.label = label

    def norm(self) -> float:
        return float(np.linalg.norm(self.components.astype(np.float64)))

    def unit(self) -> "StateVector":
        from .errors import NormalizationError

        n = self.norm()
        if n == 0.0 or not np.isfinite(n):
            raise NormalizationError(f"cannot normalize state {self.label!r}: norm is {n}")
        return StateVector(self.components.astype(np.float64) / n, self.vocabulary, self.label)

    def weight(self, word: str) -> float:
        return self.components[self.vocabulary.index(word)]

    def is_zero(self) -> bool:
        return not np.any(self.components)

    def __len__(self) -> int:
        return self.components.shape[0]

    def __repr__(self):
        return f"StateVector(label={self.label!r}, n={len(self)}, norm={self.norm():.6g})"


def _check_same_vocab(a: Vocabulary, b: Vocabulary):
    if a is not b and a != b:
        raise ParameterError("operands are over different vocabularies")


def build_hal(corpus: Corpus, window: int) -> CooccurrenceMatrix:
    """Accumulate the directional sliding-window matrix of a corpus.

    Every position contributes ``window + 1 - distance`` to
    (its word, each predecessor within `window`); windows never span
    document boundaries.
    """
    if window < 1:
        raise ParameterError("window length must be >= 1")
    n = len(corpus.vocabulary)
    triplets = _kernels.hal_pairs(corpus.token_ids, corpus.doc_offsets, window)
    return CooccurrenceMatrix(_csr(*_kernels.coalesce(*triplets, n), n), corpus.vocabulary, window)


def symmetrize(hal: CooccurrenceMatrix) -> SemanticSpace:
    """S = H + H^T: direction-free association strengths."""
    mat = (hal.matrix + hal.matrix.T).tocsr()
    mat.sort_indices()
    return SemanticSpace(mat, hal.vocabulary, Provenance("global"))


def corpus_space(corpus: Corpus, window: int) -> SemanticSpace:
    """Symmetrized whole-corpus space, `symmetrize(build_hal(...))`."""
    return symmetrize(build_hal(corpus, window))


def word_space(corpus: Corpus, word: str, radius: int, window: int) -> SemanticSpace:
    """Sum of the symmetrized spaces of the slices centered on `word`.

    Each occurrence contributes the space of the token slice reaching
    `radius` tokens each side (clipped at document edges); overlapping
    slices are summed without deduplication. A word absent from the corpus
    yields the zero space with `missing_target` set, not an error.
    """
    if radius < 1:
        raise ParameterError("radius must be >= 1")
    if window < 1:
        raise ParameterError("window length must be >= 1")
    n = len(corpus.vocabulary)
    missing = word not in corpus.vocabulary or corpus.frequency(word) == 0
    if missing:
        logger.warning("word %r does not occur in the corpus; centered space is zero", word)
        triplets = (np.empty(0, np.int32), np.empty(0, np.int32), np.empty(0, np.int64))
    else:
        triplets = _kernels.centered_pairs(
            corpus.token_ids, corpus.doc_offsets, corpus.vocabulary.index(word), radius, window
        )
    rows, cols, weights = _kernels.coalesce(*triplets, n)
    hal = _csr(rows, cols, weights, n)
    mat = (hal + hal.T).tocsr()
    mat.sort_indices()
    return SemanticSpace(mat, corpus.vocabulary, Provenance("centered", word, radius), missing)


def global_space(corpus: Corpus, radius: int, window: int) -> SemanticSpace:
    """Elementwise sum of `word_space` over the whole vocabulary.

    Computed in one pass: a token pair at distance d is covered by one
    centered slice per position within `radius` of both ends, so it weighs
    ``(window+1-d) * count`` with `count` clipped at document edges. The
    identity with the definitional sum is exact in integers.
    """
    if radius < 1:
        raise ParameterError("radius must be >= 1")
    if window < 1:
        raise ParameterError("window length must be >= 1")
    n = len(corpus.vocabulary)
    triplets = _kernels.global_pairs(corpus.token_ids, corpus.doc_offsets, radius, window)
    rows, cols, weights = _kernels.coalesce(*triplets, n)
    hal = _csr(rows, cols, weights, n)
    mat = (hal + hal.T).tocsr()
    mat.sort_indices()
    return SemanticSpace(mat, corpus.vocabulary, Provenance("global"))


def word_vector(space: SemanticSpace, word: str) -> StateVector:
    """Column `word` of the space: the word's association strengths."""
    return space.column(word)


def top_associates(vector: StateVector, k: int) -> list[tuple[str, float]]:
    """The k largest components, descending; exact ties fall back to
    vocabulary order; zero components never appear."""
    if k < 0:
        raise ParameterError("k must be >= 0")
    comp = vector.components
    order = np.argsort(-comp, kind="stable")
    out = []
    for idx in order[: int(k)]:
        w = comp[idx]
        if w <= 0:
            break  # descending order: nothing positive remains
        out.append((vector.vocabulary.word(int(idx)), w.item()))
    return out
