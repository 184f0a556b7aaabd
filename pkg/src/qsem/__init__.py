"""Sliding-window semantic spaces with spectral sense structure.

Build symmetric word-association spaces from tokenized corpora, decompose
them into orthonormal "sense" states, and condition word states on context
by operator or projector collapse. All counting is exact integer
arithmetic; decompositions are deterministic including eigenvector signs.
"""

from ._kernels import active_backend
from .collapse import (
    AssociationDelta,
    CollapseResult,
    association_delta,
    collapse_with_operator,
    collapse_with_projector,
    context_vector,
    piece_of_context,
    span_projector,
)
from .errors import (
    ArchiveCorruptionError,
    ArchiveError,
    ArchiveFormatError,
    DegenerateCollapseError,
    DegenerateSpaceError,
    NormalizationError,
    OrthogonalContextError,
    ParameterError,
    QsemError,
    SgmlError,
    UnknownWordError,
)
from .ingest import (
    Document,
    TokenizerConfig,
    default_stopwords,
    load_corpus,
    load_stopword_file,
    tokenize,
)
from .space import (
    CooccurrenceMatrix,
    Corpus,
    Provenance,
    SemanticSpace,
    StateVector,
    Vocabulary,
    build_hal,
    corpus_space,
    global_space,
    symmetrize,
    top_associates,
    word_space,
    word_vector,
)
from .spectral import (
    DensityMatrix,
    EigenSystem,
    Projector,
    density_from_space,
    eigendecompose,
    eigenstate_report,
    eigenstate_rows,
    express_in_eigenbasis,
    purity,
    spectral_reconstruct,
)
from .store import ArchiveInfo, load_eigen, load_space, read_archive_info, save_eigen, save_space

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    # ingest
    "Document",
    "TokenizerConfig",
    "tokenize",
    "default_stopwords",
    "load_stopword_file",
    "load_corpus",
    # spaces
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
    # spectral
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
    # collapse
    "CollapseResult",
    "AssociationDelta",
    "collapse_with_operator",
    "collapse_with_projector",
    "piece_of_context",
    "context_vector",
    "association_delta",
    "span_projector",
    # archives
    "ArchiveInfo",
    "save_space",
    "load_space",
    "save_eigen",
    "load_eigen",
    "read_archive_info",
    # errors
    "QsemError",
    "ParameterError",
    "UnknownWordError",
    "NormalizationError",
    "DegenerateSpaceError",
    "DegenerateCollapseError",
    "OrthogonalContextError",
    "SgmlError",
    "ArchiveError",
    "ArchiveFormatError",
    "ArchiveCorruptionError",
]
