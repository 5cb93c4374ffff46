class ContractError(ValueError):
    """An operation was called outside its documented preconditions."""


class NotApplicable(Exception):
    """The requested check has no meaning for this input (e.g. an even-dimensional
    middle relation, or a bound stated only for a range of dimensions)."""
