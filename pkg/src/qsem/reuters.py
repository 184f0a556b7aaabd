"""Reader for the Reuters-21578 SGML distribution.

Each .sgm file holds a sequence of <REUTERS ...> elements. We take the
NEWID attribute as the document id and the <BODY> element as the text,
falling back to the whole <TEXT> element for the BRIEF/UNPROC items that
have no body. No external SGML parser: the format is regular enough for a
scanner, and the real files contain stray markup that strict parsers
reject.
"""

from __future__ import annotations

import html
import re
from pathlib import Path
from typing import Iterator

from .errors import ParameterError, SgmlError
from .ingest import Document, TokenizerConfig, tokenize

__all__ = ["iter_sgml_documents", "extract_articles"]

_OPEN_RE = re.compile(rb"<REUTERS\b([^>]*)>", re.IGNORECASE)
_CLOSE = b"</REUTERS>"
_NEWID_RE = re.compile(rb'NEWID="(\d+)"', re.IGNORECASE)
_BODY_RE = re.compile(rb"<BODY\b[^>]*>(.*?)</BODY>", re.IGNORECASE | re.DOTALL)
_TEXT_RE = re.compile(rb"<TEXT\b[^>]*>(.*?)</TEXT>", re.IGNORECASE | re.DOTALL)
_TAG_RE = re.compile(r"<[^>]*>")


def extract_articles(raw: bytes) -> Iterator[tuple[str, str]]:
    """Yield (id, text) pairs from one SGML file's bytes.

    Raises SgmlError (with the byte offset) for a <REUTERS> element that
    never closes; everything outside the elements (including the DOCTYPE
    line) is ignored.
    """
    pos = 0
    while True:
        m = _OPEN_RE.search(raw, pos)
        if m is None:
            return
        end = raw.find(_CLOSE, m.end())
        if end < 0:
            raise SgmlError("unclosed <REUTERS> element", offset=m.start())
        block = raw[m.end() : end]
        pos = end + len(_CLOSE)

        idm = _NEWID_RE.search(m.group(1))
        art_id = idm.group(1).decode("ascii") if idm else f"@{m.start()}"

        content = _BODY_RE.search(block)
        if content is None:
            content = _TEXT_RE.search(block)
        if content is None:
            continue
        text = content.group(1).decode("latin-1")
        text = _TAG_RE.sub(" ", text)
        yield art_id, html.unescape(text)


def iter_sgml_documents(path: str | Path, config: TokenizerConfig) -> Iterator[Document]:
    """Documents from one .sgm file or a directory of them (sorted order)."""
    path = Path(path)
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.is_file() and p.suffix == ".sgm")
        if not files:
            raise ParameterError(f"no .sgm files in directory {path}")
    elif path.is_file():
        files = [path]
    else:
        raise FileNotFoundError(f"corpus path does not exist: {path}")

    for file in files:
        raw = file.read_bytes()
        for art_id, text in extract_articles(raw):
            tokens = tokenize(text, config)
            if tokens:
                yield Document(art_id, tuple(tokens))
