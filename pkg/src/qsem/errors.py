"""Exception hierarchy. Everything raised on purpose derives from QsemError."""


class QsemError(Exception):
    """Base class for all qsem errors."""


class ParameterError(QsemError, ValueError):
    """A parameter violates an operation's precondition (l = 0, k > n, ...)."""


class UnknownWordError(QsemError, LookupError):
    """A word is not present in the vocabulary in use."""

    def __init__(self, word: str):
        super().__init__(f"unknown word: {word!r}")
        self.word = word


class NormalizationError(QsemError):
    """A zero (or non-finite) vector cannot be normalized."""


class DegenerateSpaceError(QsemError):
    """A space has no positive spectral mass and admits no density operator."""


class DegenerateCollapseError(QsemError):
    """The quadratic form <v|M|v> is not positive; the state lies outside
    the operator's positive region and the collapse normalizer is undefined."""


class OrthogonalContextError(DegenerateCollapseError):
    """The state has no component inside the context subspace."""


class SgmlError(QsemError):
    """Malformed SGML input; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ArchiveError(QsemError):
    """Base class for persistence failures."""


class ArchiveFormatError(ArchiveError):
    """Bad magic, unsupported version, or wrong archive kind."""


class ArchiveCorruptionError(ArchiveError):
    """Structurally broken archive; names the first offending line."""
