class LinkageLabError(Exception):
    """Base class of every error raised by the workbench."""


class StructuralError(LinkageLabError):
    """Ranks, rings or twists of the operands do not fit together."""


class HomogeneityError(StructuralError):
    def __init__(self, message, monomial=None):
        self.monomial = monomial
        if monomial is not None:
            message = f'{message} (offending term: {monomial})'
        super().__init__(message)


class BudgetExceededError(LinkageLabError):
    """A degree, rank or time cap was hit; no partial answer is returned."""


class InapplicableError(LinkageLabError):
    def __init__(self, hypothesis, witness=None):
        self.hypothesis = hypothesis
        self.witness = witness
        message = f'precondition failed: {hypothesis}'
        if witness is not None:
            message = f'{message} [{witness}]'
        super().__init__(message)


class InconsistentLinkageError(LinkageLabError):
    """Two criteria that must agree disagreed on a resolved instance."""


class ScriptSyntaxError(LinkageLabError):
    def __init__(self, message, line=None, column=None, expected=()):
        self.message = message
        self.line, self.column = line, column
        self.expected = tuple(sorted(expected))
        if line is not None:
            message = f'Line {line}, column {column}: {message}'
        if self.expected:
            message = f'{message} (expected one of: {", ".join(self.expected)})'
        super().__init__(message)
