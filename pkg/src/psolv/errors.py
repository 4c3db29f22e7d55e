"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: InputError -> 2, CapacityError -> 3.
ContractViolation signals a broken precondition (caller bug) and
InvariantFailure an internal inconsistency (library bug).
"""


class PsolvError(Exception):
    pass


class InputError(PsolvError, ValueError):
    pass


class CapacityError(PsolvError):
    def __init__(self, what, size, cap):
        super().__init__(f"{what}: {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class ContractViolation(PsolvError, ValueError):
    pass


class InvariantFailure(PsolvError, AssertionError):
    pass
