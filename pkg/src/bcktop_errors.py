# file: src/bcktop_errors.py
from typing import Any, Optional, Sequence, Tuple


class BckError(Exception):
    """Базовая ошибка bcktop: всё, что CLI превращает в exit status 2."""


# -----------------------------
# Tables / axioms
# -----------------------------

class MalformedTable(BckError):
    def __init__(self, what: str, detail: str) -> None:
        self.what = what
        self.detail = detail
        super().__init__(f"malformed {what}: {detail}")


class AxiomViolation(BckError):
    """First failing axiom with its witness tuple (lexicographic scan)."""

    def __init__(self, axiom: str, witnesses: Tuple[int, ...]) -> None:
        self.axiom = axiom
        self.witnesses = tuple(witnesses)
        super().__init__(f"{axiom} fails at {self.witnesses}")


class GroupAxiomViolation(AxiomViolation):
    pass


class ModuleAxiomViolation(AxiomViolation):
    pass


class HomomorphismViolation(AxiomViolation):
    pass


class NotBoundedImplicative(BckError):
    def __init__(self, bounded: bool, implicative: bool) -> None:
        self.bounded = bounded
        self.implicative = implicative
        super().__init__(f"algebra is not bounded implicative (bounded={bounded}, implicative={implicative})")


class ConstructionFailed(BckError):
    def __init__(self, what: str, cause: BckError) -> None:
        self.what = what
        self.cause = cause
        super().__init__(f"{what} rejected by validator: {cause}")


# -----------------------------
# Submodules / chains / topologies
# -----------------------------

class NotASubmodule(BckError):
    def __init__(self, elements: Sequence[int], reason: str) -> None:
        self.elements = tuple(sorted(elements))
        self.reason = reason
        super().__init__(f"{format_set(self.elements)} is not a submodule: {reason}")


class DssViolation(BckError):
    def __init__(self, index: int, reason: str) -> None:
        self.index = index
        self.reason = reason
        super().__init__(f"chain entry M_{index}: {reason}")


class CarrierTooLarge(BckError):
    def __init__(self, size: int, limit: int, what: str = "carrier") -> None:
        self.size = size
        self.limit = limit
        super().__init__(f"{what} has {size} points, limit is {limit} (see BCKTOP_MAX_CARRIER / BCKTOP_MAX_PRODUCT)")


class NotCompatible(BckError):
    def __init__(self, n: int, witness: Optional[Any] = None) -> None:
        self.n = n
        self.witness = witness
        super().__init__(f"homomorphism is not compatible at n={n}")


class InvariantBroken(BckError):
    """Внутренний postcondition не выполнился: это баг, а не плохой ввод."""


# -----------------------------
# Instance files / CLI
# -----------------------------

class ParseError(BckError):
    def __init__(self, line: int, column: int, message: str) -> None:
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class InstanceValidationError(BckError):
    def __init__(self, line: int, message: str) -> None:
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class UsageError(BckError):
    pass


def format_set(elements: Sequence[int]) -> str:
    return "{" + ",".join(str(e) for e in sorted(elements)) + "}"
