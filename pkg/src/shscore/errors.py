class ShsError(Exception):
    """Base class for all errors raised by shscore."""


class ModelError(ShsError):
    """A model or presentation file is malformed or referentially broken."""


class InhomogeneousRelation(ShsError):
    def __init__(self, index: int, first, second):
        self.index = index
        self.pair = (first, second)
        super().__init__(
            f"relation {index} is not homogeneous: monomial {first[0]} has weight "
            f"{first[1]} but monomial {second[0]} has weight {second[1]}"
        )


class MissingOverride(ShsError):
    """Core Betti numbers need an explicit override (positive-dimensional intersections)."""


class DuplicateMinimum(ShsError):
    def __init__(self, first: str, second: str, owner: str):
        self.actions = (first, second)
        self.owner = owner
        super().__init__(f"weight-1 actions {first!r} and {second!r} share the minimal component {owner!r}")


class NotAllMinimal(ShsError):
    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__("components without a certifying weight-1 action: " + ", ".join(self.missing))


class FloerError(ShsError):
    pass
