class PeriodicityError(Exception):
    """Base exception for periodic power spectrum errors"""


class InputError(PeriodicityError):
    """Raised when input cannot be read or holds nothing to analyse"""


class ValidationError(PeriodicityError):
    """Raised when input or parameters violate an operation's preconditions"""


class EmptyInputError(InputError):
    """Raised when the input stream is empty or whitespace only"""

    def __init__(self, msg: str = "empty input") -> None:
        super().__init__(msg)


class EmptyRecordError(ValidationError):
    """Raised when a FASTA record carries no residues"""

    def __init__(self, record_id: str) -> None:
        self.record_id = record_id
        super().__init__(f"record '{record_id}' has no residues")


class InvalidResidueError(ValidationError):
    """Raised in strict mode when a residue falls outside {A,C,G,T}"""

    def __init__(self, position: int, char: str) -> None:
        self.position = position
        self.char = char
        super().__init__(f"invalid residue '{char}' at position {position}")


class PeriodOutOfRangeError(ValidationError):
    """Raised when a periodicity or periodicity range is not admissible"""


class UnsupportedClosedFormError(ValidationError):
    """Raised when no closed-form PPS polynomial exists for a periodicity"""


class WindowTooLargeError(ValidationError):
    """Raised when a sliding window is longer than the sequence"""


class InvalidEditError(ValidationError):
    """Raised when a fixture edit points outside the sequence"""


class InvalidParameterError(ValidationError):
    """Raised for out-of-range numeric parameters (step, threshold, width, ...)"""


class InvalidSignalError(ValidationError):
    """Raised when a real-valued signal holds unparsable or non-finite values"""
