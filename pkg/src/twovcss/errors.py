"""Exception hierarchy.  The CLI maps each class to a fixed exit code."""


class TwoVCError(Exception):
    exit_code = 4


class ParseError(TwoVCError):
    exit_code = 2


class NotTwoVCError(TwoVCError):
    exit_code = 3


class InvariantError(TwoVCError):
    """An internal guarantee failed: a defect, never an expected outcome."""

    exit_code = 4


class BudgetExceeded(TwoVCError):
    """An exact search hit its node or size budget and refused to answer."""

    exit_code = 5
