"""Exception types shared across the package."""


class LieModuliError(Exception):
    """Base class for every error raised by this package."""


class DenominatorVanishes(LieModuliError):
    """A denominator evaluated to zero at the given parameter assignment."""


class MissingParameter(LieModuliError):
    """A parameter assignment does not cover all declared parameters."""


class ParametricEntry(LieModuliError):
    """A plain-rational value was required but the entry still carries parameters."""


class NoValidSample(LieModuliError):
    """The sampling budget ran out without finding a point off the excluded loci."""


class ParseError(LieModuliError):
    """Syntax error in an expression or catalog file, with position info."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = " at line %d" % line
            if col is not None:
                where += ", col %d" % col
        super().__init__(message + where)


class DuplicateTerm(ParseError):
    """The same structure-constant slot was declared twice."""


class IndexOutOfRange(ParseError):
    """A basis index lies outside 1..dim or violates the increasing-order rule."""


class DimensionMismatch(LieModuliError):
    """Cochains of different ambient dimensions were combined."""


class SingularMatrix(LieModuliError):
    """A basis change or witness matrix has identically zero determinant."""


class JacobiFails(LieModuliError):
    """The codifferential does not square to zero where it was required to."""


class OutOfRange(LieModuliError):
    """A degree or index argument lies outside its valid range."""


class UnknownId(LieModuliError):
    """No catalog entry with the requested id."""


class RangeViolation(LieModuliError):
    """Extension data breaks the index-range discipline of its role."""


class ConditionFailed(LieModuliError):
    """One or more extension conditions failed; .failed names them."""

    def __init__(self, failed):
        self.failed = tuple(failed)
        super().__init__("extension condition(s) failed: " + ", ".join(self.failed))


class UndefinedAtPoint(LieModuliError):
    """A symmetry map is undefined at the point; .denominator names the factor."""

    def __init__(self, denominator):
        self.denominator = denominator
        super().__init__("map undefined: %s = 0 at this point" % denominator)


class InvariantMismatch(LieModuliError):
    """Cheap invariants already distinguish the two algebras."""


class BudgetExhausted(LieModuliError):
    """Witness search used up its trial budget; result is inconclusive."""


class OrderTooSmall(LieModuliError):
    """Truncation order below the minimum of 2."""
