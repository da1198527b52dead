"""Exception hierarchy for catmate.

Every error that carries a witness stores it on the exception so property
tests and reports can surface it.
"""


class CatmateError(Exception):
    pass


class SizeBudgetExceeded(CatmateError):
    def __init__(self, what, count, limit):
        super().__init__(f"{what}: {count} exceeds budget {limit}")
        self.what, self.count, self.limit = what, count, limit


class ShapeMismatch(CatmateError):
    pass


# -- category validation ----------------------------------------------------

class ValidationError(CatmateError):
    pass


class DanglingId(ValidationError):
    pass


class MissingComposite(ValidationError):
    def __init__(self, g, f):
        super().__init__(f"no composite for ({g} . {f})")
        self.pair = (g, f)


class AssociativityViolation(ValidationError):
    def __init__(self, h, g, f):
        super().__init__(f"(({h} . {g}) . {f}) != ({h} . ({g} . {f}))")
        self.triple = (h, g, f)


class IdentityViolation(ValidationError):
    def __init__(self, mor, detail=""):
        super().__init__(f"identity law fails at {mor} {detail}".rstrip())
        self.mor = mor


# -- adjunctions and mates --------------------------------------------------

class TriangleFailure(CatmateError):
    def __init__(self, side, obj):
        super().__init__(f"triangle identity ({side}) fails at object {obj}")
        self.side, self.obj = side, obj


class NotMates(CatmateError):
    def __init__(self, witness=None):
        super().__init__(f"cells are not mates (witness: {witness})")
        self.witness = witness


class MissingAdjunction(CatmateError):
    pass


# -- localization -----------------------------------------------------------

class NotHomotopical(CatmateError):
    def __init__(self, mor):
        super().__init__(f"weak equivalence {mor} is not preserved")
        self.mor = mor


class UndecidedLocalization(CatmateError):
    pass


class NoInitialObject(CatmateError):
    pass


# -- derived functors ---------------------------------------------------------

class QNotWeq(CatmateError):
    def __init__(self, obj, mor):
        super().__init__(f"q_{obj} = {mor} is not a weak equivalence")
        self.obj, self.mor = obj, mor


class SquareFailure(CatmateError):
    def __init__(self, mor):
        super().__init__(f"replacement square fails at {mor}")
        self.mor = mor


class HoQNotFunctorial(CatmateError):
    def __init__(self, witness):
        super().__init__(f"H0 Q is not functorial (witness: {witness})")
        self.witness = witness


class QNotFunctorial(CatmateError):
    def __init__(self, witness):
        super().__init__(f"Q is not a functor (witness: {witness})")
        self.witness = witness


class PreconditionFailure(CatmateError):
    def __init__(self, detail, witness=None):
        super().__init__(detail)
        self.witness = witness


class NoSolution(CatmateError):
    def __init__(self, what, count):
        super().__init__(f"{what}: solution set has size {count}, expected 1")
        self.count = count


class NoLeftAdjoint(CatmateError):
    pass


class CompositionHypothesisFailed(CatmateError):
    pass


# -- hocolim ------------------------------------------------------------------

class MissingStructure(CatmateError):
    pass


class EndomorphismObstruction(CatmateError):
    def __init__(self, j):
        super().__init__(f"End({j}) contains a non-identity endomorphism")
        self.j = j


class NotFullyFaithful(CatmateError):
    def __init__(self, witness=None):
        super().__init__(f"functor is not fully faithful (witness: {witness})")
        self.witness = witness


class NoObjectwiseIso(CatmateError):
    pass


# -- cli ----------------------------------------------------------------------

class ParseError(CatmateError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line, self.msg = line, message
