import re
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from qsem import Corpus, Document, Vocabulary

# The running example: one seven-token sentence, window 5. The directional
# accumulation below was worked out by hand, row = later word, column =
# earlier word, weight = 6 - distance.
FIXTURE_SENTENCE = "president reagan ignorant of the arms scandal"

# vocabulary in sorted order: arms, ignorant, of, president, reagan, scandal, the
FIXTURE_H = np.array(
    [
        [0, 3, 4, 1, 2, 0, 5],
        [0, 0, 0, 4, 5, 0, 0],
        [0, 5, 0, 3, 4, 0, 0],
        [0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 5, 0, 0, 0],
        [5, 2, 3, 0, 1, 0, 4],
        [0, 4, 5, 2, 3, 0, 0],
    ],
    dtype=np.int64,
)


@pytest.fixture
def fixture_corpus():
    doc = Document("d0", tuple(FIXTURE_SENTENCE.split()))
    return Corpus([doc])


@pytest.fixture
def make_random_corpus():
    """Factory for random corpora with a fixed-size synthetic vocabulary.

    Returns (docs, corpus): `docs` as plain int lists for the oracles,
    `corpus` bound to a vocabulary whose sorted word order equals id order.
    """

    def make(seed, n_vocab, n_docs, max_len, min_len=1):
        rng = np.random.default_rng(seed)
        words = [f"w{i:03d}" for i in range(n_vocab)]
        vocab = Vocabulary(words)
        docs = []
        documents = []
        for d in range(n_docs):
            length = int(rng.integers(min_len, max_len + 1))
            toks = rng.integers(0, n_vocab, size=length).tolist()
            docs.append(toks)
            documents.append(Document(f"d{d}", tuple(words[t] for t in toks)))
        return docs, Corpus(documents, vocab)

    return make


# ---------------------------------------------------------------------------
# Acceptance reporting: every test named test_criterion_<id>_* contributes to
# one line in the summary below; a criterion passes only if all of its tests
# passed.

CRITERIA = {
    "01": "small-corpus accumulation matches the hand-built fixture, bit-exact",
    "02": "one-pass mixture space equals the per-word definitional sum",
    "03": "window accumulation matches the all-pairs oracle on random documents",
    "04": "eigendecomposition invariants on random symmetric spaces",
    "05": "density operators: trace one, no negative weights, purity bounds",
    "06": "collapse contracts: normalization, idempotence, typed degeneracy",
    "07": "energy is preserved in a complete eigenbasis",
    "08a": "newswire: president associates overlap the published list",
    "08b": "newswire: iran-conditioned reagan profile finds the affair words",
    "08c": "newswire: iran senses separate the scandal from the gulf war",
    "08d": "newswire: association strength is asymmetric",
    "09": "dominant sense of a connected centered space is nonnegative",
    "10": "archives round-trip bit-exact and write deterministic bytes",
}

_CRIT_RE = re.compile(r"test_acceptance\.py::test_criterion_([0-9]+[a-z]?)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    stats = terminalreporter.stats
    outcomes = {}
    for status in ("passed", "failed", "error", "skipped"):
        for report in stats.get(status, []):
            m = _CRIT_RE.search(getattr(report, "nodeid", ""))
            if not m:
                continue
            crit = m.group(1)
            rank = {"failed": 3, "error": 3, "skipped": 1, "passed": 2}[status]
            outcomes[crit] = max(outcomes.get(crit, 0), rank)
    if not outcomes:
        return
    tr = terminalreporter
    tr.write_sep("-", "acceptance criteria")
    label = {1: "SKIP", 2: "PASS", 3: "FAIL"}
    for crit in sorted(CRITERIA):
        if crit in outcomes:
            tr.write_line(f"criterion {crit:<3} {label[outcomes[crit]]:<4} {CRITERIA[crit]}")
    missing = [c for c in CRITERIA if c not in outcomes]
    if missing:
        tr.write_line("not run: " + ", ".join(sorted(missing)))
