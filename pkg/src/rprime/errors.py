"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range arguments."""


class FeasibilityError(ValueError):
    """A requested regular gadget or substitution does not exist."""


class DomainError(ValueError):
    """Arguments are well-formed but fall outside the regime a formula covers."""
