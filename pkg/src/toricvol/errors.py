"""Exception hierarchy.  Every error carries a short machine-readable ``code``."""


class ToricVolError(Exception):
    code = "ToricVolError"


class DegenerateInput(ToricVolError, ValueError):
    code = "DegenerateInput"


class OriginNotInterior(ToricVolError, ValueError):
    code = "OriginNotInterior"


class NotLattice(ToricVolError, ValueError):
    code = "NotLattice"


class ToleranceNotReached(ToricVolError, RuntimeError):
    code = "ToleranceNotReached"


class NotPointed(ToricVolError, ValueError):
    code = "NotPointed"


class NotFullDimensional(ToricVolError, ValueError):
    code = "NotFullDimensional"


class NotQGorenstein(ToricVolError, ValueError):
    code = "NotQGorenstein"


class AmbiguousU(ToricVolError, ValueError):
    code = "AmbiguousU"


class Unbounded(ToricVolError, ValueError):
    code = "Unbounded"


class WrongCount(ToricVolError, ValueError):
    code = "WrongCount"


class DegenerateSpan(ToricVolError, ValueError):
    code = "DegenerateSpan"


class BudgetExceeded(ToricVolError, RuntimeError):
    code = "BudgetExceeded"


class FormatError(ToricVolError, ValueError):
    code = "FormatError"
