"""Eigendecomposition of semantic spaces and the operators built from it.

A symmetric space factors into orthonormal eigenvectors; each eigenvector
is read as a "sense": a weighted bundle of words that tend to occur in the
same contexts. The decomposition also yields the two operator forms used
downstream: a density operator (eigenvalues clipped to be nonnegative and
renormalized to trace one) and rank-k projectors onto leading senses.

Ordering conventions, fixed here and relied on everywhere else:
  - retained eigenpairs are the top-k by |eigenvalue| (what a sparse
    largest-magnitude solver returns); k = None keeps all pairs;
  - stored and reported order is algebraic descending;
  - reconstruction truncates by |eigenvalue|, largest first.

Sign convention: each eigenvector is flipped so its largest-magnitude
component is positive (first such index on exact ties), making output
deterministic across solvers and BLAS builds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import DegenerateSpaceError, ParameterError
from .space import Provenance, SemanticSpace, StateVector, Vocabulary

__all__ = [
    "EigenSystem",
    "DensityMatrix",
    "Projector",
    "eigendecompose",
    "spectral_reconstruct",
    "density_from_space",
    "express_in_eigenbasis",
    "eigenstate_rows",
    "eigenstate_report",
    "purity",
]

# centered spaces above this dimension go to the iterative sparse solver
DENSE_DIM_CAP = 2000
DEFAULT_TOP_K = 50


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so the largest-|component| entry of each is positive."""
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        lead = int(np.argmax(np.abs(col)))
        if col[lead] < 0:
            vectors[:, j] = -col
    return vectors


@dataclass
class EigenSystem:
    """Eigenpairs of a space, over the active sub-vocabulary.

    `vectors[:, i]` belongs to `values[i]`; values are algebraic
    descending. `index_map` sends active-space rows back to positions in
    `parent_vocabulary` (the identity when nothing was dropped).
    """

    values: np.ndarray
    vectors: np.ndarray
    vocabulary: Vocabulary
    index_map: np.ndarray
    parent_vocabulary: Vocabulary
    provenance: Provenance

    def __len__(self) -> int:
        return int(self.values.shape[0])

    @property
    def dimension(self) -> int:
        return int(self.vectors.shape[0])

    def eigenstate(self, i: int, expand: bool = False) -> StateVector:
        """Eigenvector i as a StateVector; `expand` pads it back to the
        parent vocabulary with zeros."""
        if not 0 <= i < len(self):
            raise ParameterError(f"eigenstate index {i} out of range (have {len(self)})")
        vec = self.vectors[:, i]
        label = f"sense-{i + 1}"
        if expand:
            full = np.zeros(len(self.parent_vocabulary))
            full[self.index_map] = vec
            return StateVector(full, self.parent_vocabulary, label)
        return StateVector(vec.copy(), self.vocabulary, label)

    def restrict_state(self, state: StateVector) -> np.ndarray:
        """Components of a parent-vocabulary state at the active indices."""
        if state.vocabulary != self.parent_vocabulary:
            if state.vocabulary == self.vocabulary:
                return np.asarray(state.components, dtype=np.float64)
            raise ParameterError("state vector is over a different vocabulary")
        return np.asarray(state.components, dtype=np.float64)[self.index_map]


def eigendecompose(
    space: SemanticSpace,
    top_k: int | None = None,
    dim_cap: int = DENSE_DIM_CAP,
) -> EigenSystem:
    """Eigenpairs of a symmetric space.

    Centered spaces are first restricted to the words that actually occur
    in them; zero rows carry no information and break connectivity-based
    reasoning downstream. Dimensions up to `dim_cap` use a full dense
    solve; larger spaces use an iterative solver for the `top_k` (default
    50) largest-magnitude pairs, with a fixed starting vector so repeated
    runs agree to the bit.
    """
    if space.provenance.kind == "centered":
        sub, index_map = space.restricted()
    else:
        sub, index_map = space, np.arange(space.n, dtype=np.int64)
    n = sub.n
    if n == 0:
        raise ParameterError("space has dimension 0 (no active words)")
    if top_k is not None and top_k < 1:
        raise ParameterError("top_k must be >= 1")

    if n <= dim_cap or (top_k is not None and top_k >= n - 1):
        values, vectors = np.linalg.eigh(sub.to_dense().astype(np.float64))
        if top_k is not None and top_k < n:
            keep = np.argsort(-np.abs(values), kind="stable")[:top_k]
            values, vectors = values[keep], vectors[:, keep]
    else:
        k = min(int(top_k or DEFAULT_TOP_K), n - 1)
        v0 = np.full(n, 1.0 / np.sqrt(n))
        values, vectors = spla.eigsh(sub.matrix.astype(np.float64), k=k, which="LM", v0=v0)

    order = np.argsort(-values, kind="stable")
    values = np.ascontiguousarray(values[order])
    vectors = _fix_signs(np.ascontiguousarray(vectors[:, order]))
    return EigenSystem(values, vectors, sub.vocabulary, index_map, space.vocabulary, space.provenance)


def spectral_reconstruct(system: EigenSystem, k: int) -> np.ndarray:
    """Sum of the k largest-|eigenvalue| rank-one terms, as a dense array."""
    if not 1 <= k <= len(system):
        raise ParameterError(f"k must be in 1..{len(system)}, got {k}")
    keep = np.argsort(-np.abs(system.values), kind="stable")[:k]
    vecs = system.vectors[:, keep]
    return (vecs * system.values[keep]) @ vecs.T


@dataclass
class DensityMatrix:
    """Trace-one nonnegative mixture of sense projectors.

    Kept in spectral form: `weights[i]` (descending, summing to one) on the
    orthonormal columns of `vectors`. Never materialized densely except on
    request.
    """

    weights: np.ndarray
    vectors: np.ndarray
    vocabulary: Vocabulary
    index_map: np.ndarray
    parent_vocabulary: Vocabulary

    @classmethod
    def from_eigensystem(cls, system: EigenSystem) -> "DensityMatrix":
        """Clip negative eigenvalues to zero and renormalize to trace one.

        Association matrices have zero diagonal, hence zero trace, hence
        genuinely negative eigenvalues; clipping is the minimal repair that
        keeps the leading senses and their proportions.
        """
        clipped = np.maximum(system.values, 0.0)
        total = float(clipped.sum())
        if total <= 0.0:
            raise DegenerateSpaceError("no positive eigenvalues: cannot form a density operator")
        weights = clipped / total
        order = np.argsort(-weights, kind="stable")
        return cls(
            np.ascontiguousarray(weights[order]),
            np.ascontiguousarray(system.vectors[:, order]),
            system.vocabulary,
            system.index_map,
            system.parent_vocabulary,
        )

    @property
    def dimension(self) -> int:
        return int(self.vectors.shape[0])

    def trace(self) -> float:
        return float(self.weights.sum())

    def purity(self) -> float:
        """tr(rho^2) = sum of squared weights; 1 for a pure state."""
        return float(np.dot(self.weights, self.weights))

    def apply(self, components: np.ndarray) -> np.ndarray:
        """rho @ x without forming the dense matrix."""
        coeff = self.vectors.T @ np.asarray(components, dtype=np.float64)
        return self.vectors @ (self.weights * coeff)

    def quad(self, components: np.ndarray) -> float:
        """<x| rho |x> = sum_i w_i (v_i . x)^2, never negative."""
        coeff = self.vectors.T @ np.asarray(components, dtype=np.float64)
        return float(np.dot(self.weights, coeff * coeff))

    def to_dense(self) -> np.ndarray:
        return (self.vectors * self.weights) @ self.vectors.T


@dataclass
class Projector:
    """Orthogonal projector onto the span of some orthonormal columns."""

    vectors: np.ndarray
    vocabulary: Vocabulary
    index_map: np.ndarray
    parent_vocabulary: Vocabulary

    @classmethod
    def from_eigensystem(cls, system: EigenSystem, rank: int = 1) -> "Projector":
        """Span of the `rank` leading (algebraic-descending) eigenstates."""
        if not 1 <= rank <= len(system):
            raise ParameterError(f"rank must be in 1..{len(system)}, got {rank}")
        return cls(
            np.ascontiguousarray(system.vectors[:, :rank]),
            system.vocabulary,
            system.index_map,
            system.parent_vocabulary,
        )

    @classmethod
    def onto_eigenstate(cls, system: EigenSystem, i: int) -> "Projector":
        """Rank-one projector onto eigenstate i (0-based)."""
        if not 0 <= i < len(system):
            raise ParameterError(f"eigenstate index {i} out of range (have {len(system)})")
        return cls(
            np.ascontiguousarray(system.vectors[:, i : i + 1]),
            system.vocabulary,
            system.index_map,
            system.parent_vocabulary,
        )

    @property
    def rank(self) -> int:
        return int(self.vectors.shape[1])

    @property
    def dimension(self) -> int:
        return int(self.vectors.shape[0])

    def apply(self, components: np.ndarray) -> np.ndarray:
        """P @ x = V (V^T x)."""
        return self.vectors @ (self.vectors.T @ np.asarray(components, dtype=np.float64))

    def to_dense(self) -> np.ndarray:
        return self.vectors @ self.vectors.T


def density_from_space(
    space: SemanticSpace,
    top_k: int | None = None,
    dim_cap: int = DENSE_DIM_CAP,
) -> DensityMatrix:
    """Decompose, clip, renormalize: the space as a density operator."""
    return DensityMatrix.from_eigensystem(eigendecompose(space, top_k, dim_cap))


def express_in_eigenbasis(system: EigenSystem, state: StateVector) -> np.ndarray:
    """Coefficients <e_i | state> against the retained eigenvectors.

    When the system is complete (all n pairs), the squared coefficients
    sum to the squared norm of the state restricted to the active words.
    """
    return system.vectors.T @ system.restrict_state(state)


def eigenstate_rows(
    system: EigenSystem,
    n_states: int,
    n_words: int,
) -> list[tuple[int, str, float]]:
    """(state, word, weight) rows for the leading eigenstates.

    States are numbered from 1 in algebraic-descending order; within a
    state, words come in signed-weight descending order, at most `n_words`,
    skipping weights below 1e-12 in magnitude.
    """
    if n_states < 0 or n_words < 0:
        raise ParameterError("n_states and n_words must be >= 0")
    rows = []
    for i in range(min(n_states, len(system))):
        col = system.vectors[:, i]
        order = np.argsort(-col, kind="stable")
        taken = 0
        for idx in order:
            if taken >= n_words:
                break
            w = float(col[idx])
            if abs(w) < 1e-12:
                continue
            rows.append((i + 1, system.vocabulary.word(int(idx)), w))
            taken += 1
    return rows


def eigenstate_report(system: EigenSystem, n_states: int = 5, n_words: int = 10) -> str:
    """Tab-separated eigenstate summary: state, word, weight per line."""
    lines = ["state\tword\tweight"]
    for state, word, weight in eigenstate_rows(system, n_states, n_words):
        lines.append(f"{state}\t{word}\t{weight:.6g}")
    return "\n".join(lines) + "\n"


def purity(density: DensityMatrix) -> float:
    return density.purity()
