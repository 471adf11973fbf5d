"""Violation reports and error types shared by every validator in the package.

Validators never raise on an axiom failure: they collect witnessed violations
into a ValidationReport so that each law can be tested independently.  Only
malformed data (wrong shapes, out-of-range indices, mismatched references)
raises StructuralError, and unmet operation preconditions raise
PreconditionError.
"""

from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_MAX_VIOLATIONS = 10


class StructuralError(Exception):
    """Malformed table or mismatched object references, as opposed to a failed axiom."""


class PreconditionError(Exception):
    """An operation was invoked on inputs that fail its stated precondition."""

    def __init__(self, condition: str, message: str = ""):
        self.condition = condition
        super().__init__(message or condition)


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance.

    law is a dotted identifier (e.g. "associativity", "gxmod.peiffer"),
    witness the tuple of element indices at which the law fails, and detail a
    human-readable rendering of the failing equation.
    """

    law: str
    witness: tuple[int, ...]
    detail: str = ""

    def prefixed(self, prefix: str) -> "Violation":
        return Violation(f"{prefix}.{self.law}", self.witness, self.detail)


@dataclass(frozen=True)
class ValidationReport:
    subject: str = field(compare=False, default="")
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def laws(self) -> set[str]:
        return {v.law for v in self.violations}

    def first(self, law: str) -> Violation | None:
        for v in self.violations:
            if v.law == law or v.law.endswith("." + law):
                return v
        return None

    def merged(self, other: "ValidationReport", prefix: str = "") -> "ValidationReport":
        extra = other.violations
        if prefix:
            extra = tuple(v.prefixed(prefix) for v in extra)
        return ValidationReport(self.subject, self.violations + extra)

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject or 'object'}: ok"
        lines = [f"{self.subject or 'object'}: {len(self.violations)} violation(s)"]
        for v in self.violations:
            lines.append(f"  {v.law} at {v.witness}: {v.detail}")
        return "\n".join(lines)


class _Collector:
    """Accumulates violations with a per-law cap so every broken law is witnessed."""

    def __init__(self, max_per_law: int = DEFAULT_MAX_VIOLATIONS):
        self.max_per_law = max_per_law
        self._by_law: dict[str, int] = {}
        self.violations: list[Violation] = []

    def add(self, law: str, witness: tuple[int, ...], detail: str = "") -> None:
        seen = self._by_law.get(law, 0)
        if seen < self.max_per_law:
            self.violations.append(Violation(law, witness, detail))
        self._by_law[law] = seen + 1

    def saturated(self, law: str) -> bool:
        return self._by_law.get(law, 0) >= self.max_per_law

    def report(self, subject: str) -> ValidationReport:
        return ValidationReport(subject, tuple(self.violations))
