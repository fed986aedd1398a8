"""Exception types raised by trisample."""


class TriSampleError(Exception):
    """Base class for all trisample errors."""


class ZeroMassError(TriSampleError):
    """The mesh has no sampleable area (all weights zero or all triangles degenerate)."""


class AllZeroWeightsError(TriSampleError):
    """Relative weights are undefined for a triangle whose vertex weights are all zero."""


class IterationCapError(TriSampleError):
    """Rejection sampling exceeded its trial cap; indicates a logic bug, not bad luck."""


class EmptySampleError(TriSampleError):
    """A statistic was requested for an empty sample."""


class MeshFileError(TriSampleError):
    """Base class for mesh / weight file problems, carrying a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(MeshFileError):
    """A record in an input file could not be parsed."""


class IndexOutOfRangeError(MeshFileError):
    """A face references a vertex index outside the file's vertex list."""


class CountMismatchError(MeshFileError):
    """A weight file's entry count does not match the mesh vertex count."""


class NegativeWeightError(MeshFileError):
    """A weight file contains a negative value."""
