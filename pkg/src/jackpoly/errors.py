"""Exception types raised by the library."""


class JackError(Exception):
    """Base class for all library errors."""


class VariableCountMismatch(JackError, ValueError):
    pass


class NonzeroRemainder(JackError, ArithmeticError):
    """Raised when a polynomial is not exactly divisible by (x_i - x_j)."""


class NotSymmetric(JackError, ValueError):
    pass


class NotHomogeneous(JackError, ValueError):
    pass


class PartitionTooLong(JackError, ValueError):
    """A partition has more parts than the available variables."""


class DegenerateGram(JackError, ArithmeticError):
    """A Gram-Schmidt pivot vanished; indicates an implementation fault."""


class ParseError(JackError, ValueError):
    pass


class TruncatedExpansion(JackError, ValueError):
    """Fewer variables than the weight: some m_mu (including m_{1^N}) are lost."""
