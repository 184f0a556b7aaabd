"""Command-line interface.

Subcommands:
    build     tokenize a corpus and archive its association space
    space     archive the centered space of one word
    vector    top associates of a word in an archived space
    eigen     eigendecompose a space; report senses or archive the result
    collapse  condition a word's state on a context word
    compare   associate lists before and after a collapse, side by side
    info      describe an archive without loading its body

Exit status: 0 on success, 1 for usage errors, 2 for data errors (bad
corpus, malformed archive, unknown word, degenerate collapse).

Corpus-level spaces are cached under a content hash of the corpus bytes
plus the build configuration, so repeated collapse/compare invocations
skip the rebuild. --no-cache disables, --cache-dir relocates.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import collapse as collapse_mod
from . import spectral, store
from .errors import ParameterError, QsemError
from .ingest import TokenizerConfig, default_stopwords, load_corpus, load_stopword_file
from .space import Corpus, SemanticSpace, StateVector, corpus_space, global_space, top_associates, word_space

logger = logging.getLogger(__name__)

_CACHE_ENV = "QSEM_CACHE_DIR"
_STOPWORDS_ENV = "QSEM_STOPWORDS"


class _Parser(argparse.ArgumentParser):
    # usage problems are exit 1; argparse's default of 2 is reserved for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return f"{value:.6g}"


def _print_associates(pairs, output: str):
    for word, weight in pairs:
        if output == "tsv":
            print(f"{word}\t{_fmt(weight)}")
        else:
            print(f"{word} ({_fmt(weight)})")


def _add_corpus_options(p: _Parser):
    p.add_argument("--corpus", help="corpus file or directory")
    p.add_argument("--format", choices=("plain", "reuters-sgml"), default="plain",
                   help="corpus layout (default: plain)")
    p.add_argument("--per-block", action="store_true",
                   help="treat each blank-line-separated block as its own document")
    p.add_argument("--stopwords", metavar="FILE", help="stopword list (one word per line)")
    p.add_argument("--no-stopwords", action="store_true", help="disable stopword filtering")
    p.add_argument("--l", type=int, default=5, dest="l", metavar="N",
                   help="co-occurrence window length (default: 5)")
    p.add_argument("--radius", type=int, default=None, metavar="N",
                   help="centered-space slice radius (default: same as --l)")
    p.add_argument("--cache-dir", default=None, help="space cache location")
    p.add_argument("--no-cache", action="store_true", help="never read or write the cache")


def _add_output_option(p: _Parser):
    p.add_argument("--output", choices=("human", "tsv"), default="human",
                   help="line format (default: human)")


def _stopwords(args) -> frozenset[str]:
    if args.no_stopwords:
        return frozenset()
    if args.stopwords:
        return load_stopword_file(args.stopwords)
    env = os.environ.get(_STOPWORDS_ENV)
    if env:
        return load_stopword_file(env)
    return default_stopwords()


def _tokenizer_config(args) -> TokenizerConfig:
    return TokenizerConfig(stopwords=_stopwords(args))


def _require_corpus(args) -> Corpus:
    if not args.corpus:
        raise ParameterError("this invocation needs --corpus")
    return load_corpus(args.corpus, args.format, _tokenizer_config(args), args.per_block)


def _radius(args) -> int:
    return args.radius if args.radius is not None else args.l


# ---------------------------------------------------------------- caching

def _corpus_digest(path: Path) -> str:
    h = hashlib.sha256()
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.is_file())
    else:
        files = [path]
    for f in files:
        h.update(f.name.encode("utf-8"))
        h.update(b"\0")
        h.update(f.read_bytes())
        h.update(b"\0")
    return h.hexdigest()


def _cache_dir(args) -> Path | None:
    if args.no_cache:
        return None
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get(_CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or str(Path.home() / ".cache")
    return Path(base) / "qsem"


def _cached_corpus_space(args, corpus: Corpus, mixture: bool) -> SemanticSpace:
    """Corpus-level space, through the content-hash cache when enabled."""
    radius = _radius(args)
    cache = _cache_dir(args)
    key = None
    if cache is not None and args.corpus:
        config = {
            "format": args.format,
            "per_block": bool(args.per_block),
            "stopwords": sorted(_stopwords(args)),
            "l": args.l,
            "mixture": mixture,
            "radius": radius if mixture else None,
        }
        h = hashlib.sha256()
        h.update(_corpus_digest(Path(args.corpus)).encode("ascii"))
        h.update(json.dumps(config, sort_keys=True).encode("utf-8"))
        key = h.hexdigest()
        hit = cache / f"{key}.space"
        if hit.is_file():
            logger.info("space cache hit: %s", hit)
            return store.load_space(hit)

    space = (global_space(corpus, radius, args.l) if mixture
             else corpus_space(corpus, args.l))
    if key is not None:
        cache.mkdir(parents=True, exist_ok=True)
        store.save_space(space, cache / f"{key}.space")
        with open(cache / f"{key}.freq", "w", encoding="utf-8", newline="\n") as out:
            for w in corpus.vocabulary.words:
                out.write(f"{w} {corpus.frequency(w)}\n")
    return space


# ------------------------------------------------------------- subcommands

def _cmd_build(args) -> int:
    corpus = _require_corpus(args)
    space = _cached_corpus_space(args, corpus, args.mixture)
    store.save_space(space, args.out)
    logger.info("wrote %s (n=%d, nnz=%d)", args.out, space.n, space.nnz)
    return 0


def _cmd_space(args) -> int:
    corpus = _require_corpus(args)
    space = word_space(corpus, args.word, _radius(args), args.l)
    store.save_space(space, args.out)
    return 0


def _cmd_vector(args) -> int:
    space = store.load_space(args.space)
    vector = space.column(args.word)
    _print_associates(top_associates(vector, args.k), args.output)
    return 0


def _cmd_eigen(args) -> int:
    if args.space:
        space = store.load_space(args.space)
    else:
        corpus = _require_corpus(args)
        space = _cached_corpus_space(args, corpus, mixture=False)
    system = spectral.eigendecompose(space, top_k=args.top)
    if args.out:
        store.save_eigen(system, args.out)
        return 0
    rows = spectral.eigenstate_rows(system, args.states, args.k)
    if args.output == "tsv":
        print("state\tword\tweight", end="")
        for state, word, weight in rows:
            print(f"\n{state}\t{word}\t{weight:.6g}", end="")
        print()
    else:
        current = None
        for state, word, weight in rows:
            if state != current:
                value = system.values[state - 1]
                print(f"sense {state} (eigenvalue {value:.6g}):")
                current = state
            print(f"  {word} ({weight:.6g})")
    return 0


def _context_operator_space(args, corpus: Corpus | None) -> SemanticSpace:
    if args.context_space:
        return store.load_space(args.context_space)
    if corpus is None or not args.context:
        raise ParameterError("collapse needs --context-space, or --corpus with --context")
    return word_space(corpus, args.context, _radius(args), args.l)


def _state_before(args, corpus: Corpus | None) -> StateVector:
    if args.space:
        return store.load_space(args.space).column(args.word)
    if corpus is None:
        raise ParameterError("need --space or --corpus to take the word's state from")
    return _cached_corpus_space(args, corpus, mixture=False).column(args.word)


def _run_collapse(args, corpus: Corpus | None):
    """Shared by collapse and compare: (before, after) state vectors."""
    ctx_space = _context_operator_space(args, corpus)
    if args.mode == "column":
        before = _state_before(args, corpus)
        return before, ctx_space.column(args.word)
    before = _state_before(args, corpus).unit()
    if args.mode == "operator":
        rho = spectral.density_from_space(ctx_space)
        result = collapse_mod.collapse_with_operator(before, rho)
    else:
        system = spectral.eigendecompose(ctx_space)
        if args.state is not None:
            result = collapse_mod.piece_of_context(before, system, args.state)
        else:
            proj = spectral.Projector.from_eigensystem(system, args.rank)
            result = collapse_mod.collapse_with_projector(before, proj)
    logger.info("collapse normalizer <v|M|v> = %.6g", result.normalizer)
    return before, result.state


def _cmd_collapse(args) -> int:
    corpus = _require_corpus(args) if args.corpus else None
    _, after = _run_collapse(args, corpus)
    _print_associates(top_associates(after, args.k), args.output)
    return 0


def _cmd_compare(args) -> int:
    corpus = _require_corpus(args) if args.corpus else None
    before, after = _run_collapse(args, corpus)
    rows = collapse_mod.association_delta(before, after, args.k)
    for r in rows:
        rb = str(r.rank_before) if r.rank_before else "-"
        ra = str(r.rank_after) if r.rank_after else "-"
        if args.output == "tsv":
            print(f"{r.word}\t{rb}\t{ra}\t{_fmt(r.weight_before)}\t{_fmt(r.weight_after)}")
        else:
            print(f"{r.word}: {rb} ({_fmt(r.weight_before)}) -> {ra} ({_fmt(r.weight_after)})")
    return 0


def _cmd_info(args) -> int:
    info = store.read_archive_info(args.archive)
    print(f"kind: {info.kind}")
    print(f"vocabulary: {info.vocabulary_size}")
    if info.provenance.kind == "centered":
        print(f"provenance: centered on {info.provenance.word!r}, radius {info.provenance.radius}")
    else:
        print("provenance: global")
    if info.n_entries is not None:
        print(f"entries: {info.n_entries}")
    if info.n_pairs is not None:
        print(f"active words: {info.n_active}")
        print(f"eigenpairs: {info.n_pairs}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="qsem", description="sliding-window semantic spaces and context collapse")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND",
                                parser_class=_Parser)

    p = sub.add_parser("build", help="archive a corpus association space")
    _add_corpus_options(p)
    p.add_argument("--mixture", action="store_true",
                   help="sum of all centered spaces instead of the plain corpus space")
    p.add_argument("--out", required=True, help="archive path to write")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("space", help="archive one word's centered space")
    _add_corpus_options(p)
    p.add_argument("--word", required=True, help="word to center on")
    p.add_argument("--out", required=True, help="archive path to write")
    p.set_defaults(func=_cmd_space)

    p = sub.add_parser("vector", help="top associates of a word")
    p.add_argument("--space", required=True, help="space archive")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, default=20, help="list length (default: 20)")
    _add_output_option(p)
    p.set_defaults(func=_cmd_vector)

    p = sub.add_parser("eigen", help="sense decomposition of a space")
    _add_corpus_options(p)
    p.add_argument("--space", help="space archive (instead of --corpus)")
    p.add_argument("--top", type=int, default=None, metavar="K",
                   help="retain only the K largest-magnitude eigenpairs")
    p.add_argument("--states", type=int, default=5, help="senses to report (default: 5)")
    p.add_argument("--k", type=int, default=10, help="words per sense (default: 10)")
    p.add_argument("--out", help="write an eigendecomposition archive instead of a report")
    _add_output_option(p)
    p.set_defaults(func=_cmd_eigen)

    for name, helptext, func in (
        ("collapse", "condition a word's state on a context", _cmd_collapse),
        ("compare", "associates before and after a collapse", _cmd_compare),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_corpus_options(p)
        p.add_argument("--word", required=True, help="word whose state collapses")
        p.add_argument("--context", help="context word")
        p.add_argument("--space", help="corpus space archive (instead of rebuilding)")
        p.add_argument("--context-space", help="centered space archive for the context")
        p.add_argument("--mode", choices=("operator", "projector", "column"), default="operator",
                       help="collapse rule (default: operator)")
        p.add_argument("--state", type=int, default=None, metavar="J",
                       help="projector mode: collapse onto sense J alone (1-based)")
        p.add_argument("--rank", type=int, default=1,
                       help="projector mode: span of the leading N senses (default: 1)")
        p.add_argument("--k", type=int, default=20, help="list length (default: 20)")
        _add_output_option(p)
        p.set_defaults(func=func)

    p = sub.add_parser("info", help="describe an archive")
    p.add_argument("archive", help="archive path")
    p.set_defaults(func=_cmd_info)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="qsem: %(levelname)s: %(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (QsemError, OSError) as exc:
        print(f"qsem: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
