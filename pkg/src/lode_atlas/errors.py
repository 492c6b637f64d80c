"""Exception types shared across the library."""


class LodeAtlasError(Exception):
    """Base class for all library errors."""


class ConductorMismatch(LodeAtlasError):
    """Arithmetic between cyclotomic numbers with different conductors."""


class EmbedUnsupported(LodeAtlasError):
    """Embedding requested into a field whose conductor is not a multiple."""


class DivisionByZero(LodeAtlasError):
    """Inversion of the zero element."""


class ShapeMismatch(LodeAtlasError):
    """Matrix size does not match the number of variables."""


class NotSemiInvariant(LodeAtlasError):
    """Image under a generator is not a scalar multiple of the polynomial."""


class ClosureBoundExceeded(LodeAtlasError):
    """Group closure enumeration exceeded its element bound."""


class CatalogIntegrityError(LodeAtlasError):
    """A transcribed catalog object failed its integrity check."""


class DegenerateGauge(LodeAtlasError):
    """Gauge vectors generate a module of lower rank."""


class ConstantPullback(LodeAtlasError):
    """Pullback by a constant map."""


class ZeroScale(LodeAtlasError):
    """Exp-product with the zero function."""


class SingularExpansionPoint(LodeAtlasError):
    """Series expansion requested at a singular point."""


class InvalidParameter(LodeAtlasError):
    """Hypergeometric lower parameter is a non-positive integer."""


class InconclusiveTruncation(LodeAtlasError):
    """Truncation window too short for a reliable span decision."""


class UnsupportedFactor(LodeAtlasError):
    """A denominator factor does not split into rational linear factors."""


class NoHypergeometricStandard(LodeAtlasError):
    """The group has no hypergeometric standard equation."""


class FixtureError(LodeAtlasError):
    """Fixture file missing, malformed, or failing its checksum."""
