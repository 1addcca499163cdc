"""Exception hierarchy shared by every module of the package."""


class CodecError(Exception):
    """Base class for all errors raised by constrained_codes."""


class SpecError(CodecError, ValueError):
    """A constraint spec is malformed or violates an invariant."""


class UnknownLetter(CodecError, ValueError):
    pass


class AlphabetMismatch(CodecError, ValueError):
    pass


class NotInLanguage(CodecError, ValueError):
    """The word breaks a constraint or has the wrong length."""


class RankOutOfRange(CodecError, ValueError):
    pass


class RankOverflow(CodecError, ValueError):
    """The word is a valid codeword but its rank is not a payload image."""


class EmptyLanguage(CodecError, ValueError):
    pass


class LengthMismatch(CodecError, ValueError):
    pass


class FormatError(CodecError, ValueError):
    """A table file or stream container cannot be parsed."""


class FingerprintMismatch(CodecError, ValueError):
    pass


class TooLarge(CodecError, ValueError):
    """Brute-force enumeration refused because the search space is too big."""


class WeightMismatch(CodecError, ValueError):
    pass
