"""Exception types shared across the package."""


class HeavenlyError(ValueError):
    pass


class DomainError(HeavenlyError):
    """A function or formula was evaluated outside its domain (pole, zero denominator, overflow)."""


class ArityError(HeavenlyError):
    pass


class ConstraintError(HeavenlyError):
    """Class parameters violate a side condition."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class UnknownEquation(HeavenlyError):
    pass


class UnknownClass(HeavenlyError):
    pass


class SingularDenominator(HeavenlyError):
    def __init__(self, factor, value=None):
        self.factor = factor
        self.value = value
        msg = f"vanishing denominator: {factor}"
        if value is not None:
            msg += f" = {complex(value):.3g}"
        super().__init__(msg)
