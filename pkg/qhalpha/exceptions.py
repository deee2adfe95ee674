
class QHAlphaError(Exception):
    pass


class InvalidPartition(QHAlphaError, ValueError):
    pass


class OutOfBox(InvalidPartition):
    pass


class InvalidPermutation(QHAlphaError, ValueError):
    pass


class ParamsMismatch(QHAlphaError):
    pass


class DomainError(QHAlphaError, ValueError):
    pass


class PreconditionViolated(QHAlphaError):
    pass


class DegreeCapExceeded(QHAlphaError):
    pass


class InternalInconsistency(QHAlphaError):
    '''Raised for states that the underlying theorems rule out. Seeing one
    means a bug in this package, not bad input.
    '''
    pass

