class KenstatError(Exception):
    """Base kenstat exception"""


class CommandError(KenstatError):
    """Raised when there is an error in command-line arguments"""


class ConfigError(KenstatError):
    """Raised when a suite configuration cannot be parsed or validated"""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if field is not None:
            where.append('field {}'.format(field))
        if line is not None:
            where.append('line {}'.format(line))
        if where:
            message = '{} ({})'.format(message, ', '.join(where))
        super(ConfigError, self).__init__(message)


class CatalogMissError(KenstatError):
    """Raised when a catalog name is unknown"""


class PreconditionError(KenstatError):
    """Raised when a bound variant is evaluated outside its hypotheses"""


class GeometryError(KenstatError):
    """Base class for invalid geometric input"""


class DomainViolationError(GeometryError):
    """Raised when a point or a stencil node leaves the chart domain"""


class DegenerateFrameError(GeometryError):
    """Raised when vectors to orthonormalize are linearly dependent"""


class SingularMetricError(GeometryError):
    """Raised when the metric cannot be inverted at a point"""


class DegeneratePlaneError(GeometryError):
    """Raised when two vectors do not span a plane"""


class RankDeficiencyError(GeometryError):
    """Raised when an immersion differential loses rank"""


class InvalidNormalError(GeometryError):
    """Raised when a vector expected to be normal has a tangential component"""


class ReportError(KenstatError):
    """Raised when a report cannot be written"""
