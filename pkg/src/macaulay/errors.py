"""Exception hierarchy.

``DomainError`` subclasses are mathematical outcomes the caller asked about
(no isolated point, irrational roots, ...); the CLI maps them to exit code 1.
Everything deriving from ``InputError`` is a malformed request (exit code 2).
"""


class MacaulayError(Exception):
    pass


class InputError(MacaulayError, ValueError):
    pass


class DomainError(MacaulayError):
    pass


class PolySyntaxError(InputError):
    """Malformed polynomial expression or system file."""

    def __init__(self, message, position=None, line=None, source=None):
        self.message = message
        self.position = position
        self.line = line
        self.source = source
        super().__init__(self._render())

    def _render(self):
        where = []
        if self.source is not None:
            where.append(str(self.source))
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.position is not None:
            where.append(f"column {self.position + 1}")
        prefix = ", ".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message


class UnknownVariable(InputError):
    def __init__(self, name, position=None):
        self.name = name
        self.position = position
        super().__init__(f"unknown variable {name!r}")


class ArityMismatch(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class WrongArity(InputError):
    pass


class InvalidRoot(InputError):
    def __init__(self, point):
        self.point = tuple(point)
        coords = ",".join(str(c) for c in self.point)
        super().__init__(f"({coords}) is not a common zero of the system")


class NonIsolatedPoint(DomainError):
    def __init__(self, point, cap):
        self.point = tuple(point)
        self.cap = cap
        coords = ",".join(str(c) for c in self.point)
        super().__init__(
            f"dual space at ({coords}) still growing at degree cap {cap}; "
            "the point is not isolated"
        )


class NotZeroDimensional(DomainError):
    pass


class IrrationalRoots(DomainError):
    def __init__(self, factors):
        self.factors = list(factors)
        super().__init__(
            "system has roots outside the rationals; unresolved factors: "
            + "; ".join(self.factors)
        )


class NotVanishing(DomainError):
    def __init__(self, point):
        self.point = tuple(point)
        coords = ",".join(str(c) for c in self.point)
        super().__init__(f"polynomial does not vanish at common zero ({coords})")


class BoundViolation(DomainError):
    pass
