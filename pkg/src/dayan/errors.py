"""Exceptions shared across the library."""


class NotInvertibleError(ValueError):
    """The requested inverse does not exist because the inputs share a factor."""

    def __init__(self, a: int, m: int, gcd: int):
        super().__init__(f"{a} is not invertible modulo {m}: gcd = {gcd}")
        self.a = a
        self.m = m
        self.gcd = gcd


class ContractViolationError(ArithmeticError):
    """An identity that must hold exactly did not; indicates a bug, not bad input."""
