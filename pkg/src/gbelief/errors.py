"""Exception hierarchy shared by all modules."""


class BeliefError(Exception):
    """Base class for every error raised by gbelief."""


class UnknownLabel(BeliefError, KeyError):
    def __init__(self, label):
        super().__init__(label)
        self.label = label

    def __str__(self):
        return f"unknown label {self.label!r}"


class FrameTooLarge(BeliefError, ValueError):
    """A frame exceeds the size an operation supports."""


class FrameMismatch(BeliefError, ValueError):
    """Two propositions belong to frames of different width."""


class ZeroArgument(BeliefError, ValueError):
    """The phase of the zero complex number is undefined."""


class NegativeModulus(BeliefError, ValueError):
    pass


class InvalidMass(BeliefError, ValueError):
    """A mass assignment violates one of the defining conditions.

    ``report`` holds the full :class:`~gbelief.cbba.ValidationReport` when the
    error comes out of a builder that validated every condition.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class EmptySetAssigned(InvalidMass):
    pass


class MagnitudeOutOfRange(InvalidMass):
    pass


class SumNotUnity(InvalidMass):
    pass


class DuplicateEntry(InvalidMass):
    pass


class ZeroMassPhase(BeliefError, ValueError):
    pass


class EmptyProposition(BeliefError, ValueError):
    pass


class NotClassical(BeliefError, ValueError):
    pass


class Unsatisfiable(BeliefError, ValueError):
    pass


class InvalidTable(BeliefError, ValueError):
    """A belief table does not satisfy the invariants of its kind."""


class DocumentError(BeliefError, ValueError):
    """An input document is malformed or does not follow its schema."""


class PhaseOutOfRange(InvalidMass):
    pass
