# pylint: disable=empty-docstring


class XModError(Exception):
    """ """


class GroupError(XModError):
    """ """


class NotAGroup(GroupError, ValueError):
    """
    Attributes:
        witness (tuple | None): The first offending triple (or pair / element) found during validation.
    """

    def __init__(self, message: str, witness: tuple = None):
        super().__init__(message)
        self.witness = witness


class NotNormal(GroupError, ValueError):
    """ """


class NotAbelian(GroupError, ValueError):
    """ """


class NotAutomorphism(GroupError, ValueError):
    """ """


class NotAHomomorphism(GroupError, ValueError):
    """ """


class NotAnAction(GroupError, ValueError):
    """ """


class NumericalError(XModError):
    """ """


class NumericalDegeneracy(NumericalError):
    """ """


class NonIntegerMultiplicity(NumericalError):
    """ """


class InvariantFailure(NumericalError):
    """ """


class CriterionMismatch(NumericalError):
    """ """


class ProjectorRankMismatch(NumericalError):
    """ """


class AxiomViolation(XModError, ValueError):
    """
    Attributes:
        witness (dict[str, int]): Element indices exhibiting the violation.
    """

    axiom = "crossed module"

    def __init__(self, message: str = "", **witness: int):
        self.witness = witness
        if not message:
            message = f"{self.axiom} axiom fails at " + ", ".join(f"{key}={value}" for key, value in witness.items())
        super().__init__(message)


class EquivarianceViolation(AxiomViolation):
    """ """

    axiom = "equivariance"


class PeifferViolation(AxiomViolation):
    """ """

    axiom = "Peiffer"


class IllDefined(XModError):
    """ """


class IllDefinedQuotient(IllDefined):
    """ """


class DocumentError(XModError, ValueError):
    """ """


class DocumentSyntaxError(DocumentError):
    """
    Attributes:
        line (int): 1-based line number of the syntax error.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ShapeError(DocumentError):
    """
    Attributes:
        field (str): Dotted path of the malformed field.
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class CorpusError(XModError):
    """ """


class CorpusNotFoundError(CorpusError, KeyError):
    """ """


class SettingNotFound(Exception):
    """ """


class InvalidSettingError(Exception):
    """ """
