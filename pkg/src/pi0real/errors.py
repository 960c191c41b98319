"""Exception hierarchy.

Everything derived from :class:`InputError` means the caller handed us bad
data (the CLI maps it to exit code 2).  :class:`InternalInconsistency` means
two independent computations disagreed, i.e. a bug (exit code 1).
"""


class Pi0Error(Exception):
    pass


class InputError(Pi0Error, ValueError):
    pass


class NotContained(InputError):
    pass


class NotUnimodular(InputError):
    pass


class AxiomViolation(InputError):
    pass


class InvalidType(InputError):
    pass


class NotInvolution(InputError):
    pass


class CorootSetNotStable(InputError):
    pass


class NoIntegralRestriction(InputError):
    pass


class UnknownForm(InputError):
    pass


class InternalInconsistency(Pi0Error, AssertionError):
    pass


class SchemaError(InputError):
    pass
