"""Pass/counterexample reporting shared by every axiom checker."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable


@dataclass
class CheckResult:
    """Outcome of an axiom check.

    ``ok`` is True for a pass.  On failure ``law`` names the violated
    identity, ``witness`` is the first violating input (usually a basis
    word or a pair of them) and ``lhs``/``rhs`` hold both evaluated sides.
    """

    ok: bool
    law: str = ""
    witness: Any = None
    lhs: Any = None
    rhs: Any = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self, render: Callable[[Any], str] = str) -> str:
        if self.ok:
            return "PASS"
        parts = [f"FAIL {self.law}", f"at {self.witness!r}"]
        if self.lhs is not None or self.rhs is not None:
            parts.append(f"lhs = {render(self.lhs)}")
            parts.append(f"rhs = {render(self.rhs)}")
        return "; ".join(parts)


PASS = CheckResult(True)


def fail(law: str, witness, lhs=None, rhs=None) -> CheckResult:
    return CheckResult(False, law, witness, lhs, rhs)
