"""Context collapse: conditioning a word's state on another word.

A word's profile (a column of a space) is treated as a state vector; a
context word supplies an operator (the density operator or a projector
built from the context word's centered space). Collapse applies the
operator and renormalizes:

    v' = M v / sqrt(<v| M |v>)

so for a projector the result is the unit vector along P v. The quadratic
form <v|M|v> is reported as the collapse normalizer; when it vanishes the
context carries no component of the state and a typed error is raised
instead of producing NaNs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateCollapseError,
    NormalizationError,
    OrthogonalContextError,
    ParameterError,
)
from .space import Corpus, SemanticSpace, StateVector, word_space
from .spectral import DensityMatrix, EigenSystem, Projector, eigendecompose

__all__ = [
    "CollapseResult",
    "AssociationDelta",
    "collapse_with_operator",
    "collapse_with_projector",
    "piece_of_context",
    "context_vector",
    "association_delta",
    "span_projector",
]

_DEGENERATE_EPS = 1e-12


@dataclass
class CollapseResult:
    """Outcome of one collapse: the conditioned state and its normalizer.

    `normalizer` is <v|M|v> before renormalization; for projector collapse
    it equals the squared length of the projected vector, so it measures
    how much of the state the context retains.
    """

    state: StateVector
    normalizer: float
    mode: str  # "operator" | "projector"


@dataclass
class AssociationDelta:
    """One word's standing before and after a collapse.

    Ranks are 1-based positions in the respective top-k lists, None when
    the word is absent from that list.
    """

    word: str
    weight_before: float
    weight_after: float
    rank_before: int | None
    rank_after: int | None


def _expand(components: np.ndarray, index_map: np.ndarray, parent_vocab) -> np.ndarray:
    full = np.zeros(len(parent_vocab))
    full[index_map] = components
    return full


def _checked(components: np.ndarray, label) -> np.ndarray:
    if not np.all(np.isfinite(components)):
        raise NormalizationError(f"collapse of {label!r} produced non-finite components")
    return components


def collapse_with_operator(state: StateVector, operator: DensityMatrix) -> CollapseResult:
    """Apply a density operator and renormalize by sqrt(<v|rho|v>).

    The result generally has norm below one: a mixed operator shrinks the
    parts of the state outside its dominant senses.
    """
    x = _restrict(state, operator.vocabulary, operator.parent_vocabulary, operator.index_map)
    quad = operator.quad(x)
    # threshold is relative to the state's energy so collapse stays exactly
    # scale invariant
    if not np.isfinite(quad) or quad <= _DEGENERATE_EPS * float(np.dot(x, x)):
        raise DegenerateCollapseError(
            f"state {state.label!r} has no weight inside the context operator "
            f"(<v|M|v> = {quad:.3g})"
        )
    out = operator.apply(x) / np.sqrt(quad)
    full = _expand(_checked(out, state.label), operator.index_map, operator.parent_vocabulary)
    return CollapseResult(
        StateVector(full, operator.parent_vocabulary, state.label), float(quad), "operator"
    )


def collapse_with_projector(state: StateVector, projector: Projector) -> CollapseResult:
    """Project onto the context subspace and renormalize to unit length."""
    x = _restrict(state, projector.vocabulary, projector.parent_vocabulary, projector.index_map)
    proj = projector.apply(x)
    quad = float(np.dot(proj, proj))  # <v|P|v> since P is idempotent
    if not np.isfinite(quad) or quad <= _DEGENERATE_EPS * float(np.dot(x, x)):
        raise OrthogonalContextError(
            f"state {state.label!r} is orthogonal to the context subspace"
        )
    out = proj / np.sqrt(quad)
    full = _expand(_checked(out, state.label), projector.index_map, projector.parent_vocabulary)
    return CollapseResult(
        StateVector(full, projector.parent_vocabulary, state.label), quad, "projector"
    )


def _restrict(state: StateVector, vocab, parent_vocab, index_map) -> np.ndarray:
    comp = np.asarray(state.components, dtype=np.float64)
    if state.vocabulary == vocab:
        return comp
    if state.vocabulary == parent_vocab:
        return comp[index_map]
    raise ParameterError("state vector is over a different vocabulary than the operator")


def piece_of_context(state: StateVector, system: EigenSystem, j: int) -> CollapseResult:
    """Collapse onto the j-th sense (1-based, algebraic-descending order)."""
    if j < 1:
        raise ParameterError("sense index j is 1-based; got " + str(j))
    return collapse_with_projector(state, Projector.onto_eigenstate(system, j - 1))


def context_vector(
    corpus: Corpus,
    word: str,
    context: str,
    radius: int,
    window: int,
) -> StateVector:
    """`word`'s profile inside `context`'s centered space (raw counts)."""
    space = word_space(corpus, context, radius, window)
    return space.column(word)


def association_delta(
    before: StateVector,
    after: StateVector,
    k: int,
) -> list[AssociationDelta]:
    """How the top-k associate lists differ between two states.

    Rows cover the union of both lists, ordered by rank after the collapse
    (absent ranks sort last, then by rank before, then alphabetically).
    """
    from .space import top_associates

    if before.vocabulary != after.vocabulary:
        raise ParameterError("states are over different vocabularies")
    rank_b = {w: i + 1 for i, (w, _) in enumerate(top_associates(before, k))}
    rank_a = {w: i + 1 for i, (w, _) in enumerate(top_associates(after, k))}
    words = set(rank_b) | set(rank_a)
    big = 1 << 30
    rows = [
        AssociationDelta(
            w,
            float(before.weight(w)),
            float(after.weight(w)),
            rank_b.get(w),
            rank_a.get(w),
        )
        for w in words
    ]
    rows.sort(key=lambda r: (r.rank_after or big, r.rank_before or big, r.word))
    return rows


def span_projector(
    corpus: Corpus,
    words: list[str],
    radius: int,
    window: int,
    rank: int = 1,
) -> Projector:
    """Projector onto the leading senses of a multi-word context.

    The context space is the elementwise sum of the centered spaces of the
    given words. Experimental: summing spaces merges senses in proportion
    to raw frequency, which drowns rare words; interpret with care.
    """
    if not words:
        raise ParameterError("span_projector needs at least one context word")
    total: SemanticSpace | None = None
    for w in words:
        piece = word_space(corpus, w, radius, window)
        total = piece if total is None else total + piece
    system = eigendecompose(total)
    return Projector.from_eigensystem(system, rank)
