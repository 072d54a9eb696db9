"""Structured check reports.

Every verifier in the package returns a CheckReport: one CheckItem per law,
with a pass/fail flag and, on failure, the first offending basis tuple in
lexicographic order.  Reports are plain values so the CLI and the tests can
consume them programmatically; rendering to text or JSON lives here too.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CheckFailure


@dataclass(frozen=True)
class CheckItem:
    law: str
    passed: bool
    witness: tuple[int, ...] | None = None
    note: str = ""

    def as_dict(self) -> dict:
        d: dict = {"law": self.law, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class CheckReport:
    subject: str
    items: tuple[CheckItem, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> tuple[CheckItem, ...]:
        return tuple(item for item in self.items if not item.passed)

    def item(self, law: str) -> CheckItem:
        for it in self.items:
            if it.law == law:
                return it
        raise KeyError(f"no law {law!r} in report for {self.subject}")

    def require(self, context: str = "") -> "CheckReport":
        if not self.ok:
            laws = ", ".join(item.law for item in self.failures())
            where = f" ({context})" if context else ""
            raise CheckFailure(f"{self.subject}{where}: failed {laws}", report=self)
        return self

    def prefixed(self, prefix: str) -> "CheckReport":
        return CheckReport(self.subject, tuple(
            CheckItem(f"{prefix}.{it.law}", it.passed, it.witness, it.note)
            for it in self.items))

    def as_dict(self) -> dict:
        return {"subject": self.subject, "ok": self.ok,
                "items": [item.as_dict() for item in self.items]}

    def table(self) -> str:
        width = max((len(item.law) for item in self.items), default=4)
        lines = [f"subject: {self.subject}"]
        for item in self.items:
            status = "PASS" if item.passed else "FAIL"
            line = f"  {status}  {item.law.ljust(width)}"
            if item.witness is not None:
                line += f"  witness={item.witness}"
            if item.note:
                line += f"  [{item.note}]"
            lines.append(line)
        lines.append(f"result: {'all passed' if self.ok else f'{len(self.failures())} failed'}")
        return "\n".join(lines)


def merge_reports(subject: str, **sections: CheckReport) -> CheckReport:
    """Concatenate several reports, prefixing each item's law with its section name."""
    items: list[CheckItem] = []
    for name, report in sections.items():
        items.extend(report.prefixed(name).items)
    return CheckReport(subject, tuple(items))


class LawChecker:
    """Accumulates one CheckItem per law, keeping the first failure witness."""

    def __init__(self, subject: str):
        self.subject = subject
        self._items: list[CheckItem] = []

    def add(self, law: str, passed: bool, witness: tuple[int, ...] | None = None,
            note: str = "") -> bool:
        self._items.append(CheckItem(law, passed, witness if not passed else None, note))
        return passed

    def add_matrix_eq(self, law: str, a, b, note: str = "") -> bool:
        """Exact matrix equality with the first differing entry as witness."""
        if a.shape() != b.shape():
            return self.add(law, False, witness=a.shape(), note=note or "shape mismatch")
        for i in range(a.rows):
            for j in range(a.cols):
                if a[i, j] != b[i, j]:
                    return self.add(law, False, witness=(i, j), note=note)
        return self.add(law, True, note=note)

    def scan(self, law: str, pairs, note: str = "") -> bool:
        """pairs: iterable of (witness_tuple, ok_bool) in deterministic order."""
        for witness, ok in pairs:
            if not ok:
                self._items.append(CheckItem(law, False, tuple(witness), note))
                return False
        self._items.append(CheckItem(law, True, None, note))
        return True

    def report(self) -> CheckReport:
        return CheckReport(self.subject, tuple(self._items))
