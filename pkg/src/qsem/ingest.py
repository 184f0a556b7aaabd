"""Tokenization and corpus loading.

A token is a maximal run of word characters (letters, digits, marks;
underscore excluded), so "U.S." splits into "u", "s" and "mid-1987" into
"mid", "1987". Filtering (stopwords, length) happens after case folding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator

from .errors import ParameterError

__all__ = [
    "Document",
    "TokenizerConfig",
    "tokenize",
    "default_stopwords",
    "load_stopword_file",
    "load_corpus",
    "iter_plain_documents",
]

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class Document:
    """One unit of text; co-occurrence windows never cross documents."""

    id: str
    tokens: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class TokenizerConfig:
    lowercase: bool = True
    stopwords: frozenset[str] = field(default_factory=frozenset)
    min_token_length: int = 1

    def __post_init__(self):
        if self.min_token_length < 1:
            raise ParameterError("min_token_length must be >= 1")
        if self.lowercase:
            # fold the stoplist too so matching is case-insensitive
            object.__setattr__(self, "stopwords", frozenset(w.lower() for w in self.stopwords))


def tokenize(text: str, config: TokenizerConfig | None = None) -> list[str]:
    """Split raw text into filtered tokens, in order."""
    config = config or TokenizerConfig()
    tokens = _TOKEN_RE.findall(text)
    if config.lowercase:
        tokens = [t.lower() for t in tokens]
    stop = config.stopwords
    min_len = config.min_token_length
    return [t for t in tokens if len(t) >= min_len and t not in stop]


def default_stopwords() -> frozenset[str]:
    """The packaged English function-word list."""
    text = resources.files("qsem").joinpath("data/stopwords_en.txt").read_text("utf-8")
    return _parse_stopwords(text)


def load_stopword_file(path: str | Path) -> frozenset[str]:
    """One word per line; blank lines and '#' comments ignored."""
    return _parse_stopwords(Path(path).read_text("utf-8"))


def _parse_stopwords(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.add(line)
    return frozenset(words)


def iter_plain_documents(
    path: str | Path,
    config: TokenizerConfig,
    per_block: bool = False,
) -> Iterator[Document]:
    """Yield documents from a text file or a directory of text files.

    By default each file is one document (id = file name without suffix);
    with `per_block` every blank-line-separated block is its own document,
    id "<name>#<k>" with k counting from 0. Directories are walked in
    sorted order, non-recursively, taking *.txt files.
    """
    path = Path(path)
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.is_file() and p.suffix == ".txt")
        if not files:
            raise ParameterError(f"no .txt files in directory {path}")
    elif path.is_file():
        files = [path]
    else:
        raise FileNotFoundError(f"corpus path does not exist: {path}")

    for file in files:
        text = file.read_text("utf-8", errors="replace")
        if per_block:
            for k, block in enumerate(re.split(r"\n\s*\n", text)):
                tokens = tokenize(block, config)
                if tokens:
                    yield Document(f"{file.stem}#{k}", tuple(tokens))
        else:
            tokens = tokenize(text, config)
            if tokens:
                yield Document(file.stem, tuple(tokens))


def load_corpus(
    path: str | Path,
    format: str = "plain",
    config: TokenizerConfig | None = None,
    per_block: bool = False,
):
    """Load a corpus from disk; returns a Corpus.

    format "plain": text files (see iter_plain_documents).
    format "reuters-sgml": a directory of .sgm files or one such file.
    """
    from .space import Corpus  # deferred: space imports Document from here

    config = config or TokenizerConfig(stopwords=default_stopwords())
    if format == "plain":
        docs = list(iter_plain_documents(path, config, per_block))
    elif format == "reuters-sgml":
        from .reuters import iter_sgml_documents

        docs = list(iter_sgml_documents(path, config))
    else:
        raise ParameterError(f"unknown corpus format: {format!r}")
    if not docs:
        raise ParameterError(f"corpus at {path} produced no documents")
    return Corpus(docs)
