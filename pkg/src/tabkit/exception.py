class TabkitException(Exception):
    ...


class DuplicateLabel(TabkitException):
    """Two alphabets being joined share a label"""


class ShapeMismatch(TabkitException):
    """Entries do not cover the declared shape"""


class RectangleTooSmall(TabkitException):
    """Rectangle width is smaller than the first part"""


class InverseMismatch(TabkitException):
    """Pair is not in the image of the forward map"""


class NotHorizontalStrip(TabkitException):
    """Recording cells of one value do not form a horizontal strip"""


class NotLR(TabkitException):
    """Tableau is not a Littlewood-Richardson tableau"""


class MalformedPrefix(TabkitException):
    """Leading rows do not have the required rectangular form"""


class StabilityViolation(TabkitException):
    """Stable coefficient changed under a larger shift"""


class AlphabetMismatch(TabkitException):
    """Alphabets do not carry the same letters"""


class NotCanonical(TabkitException):
    """A/B tableau is not in canonical form"""


class ConfigError(TabkitException):
    """Invalid configuration value"""
