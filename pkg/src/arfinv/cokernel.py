"""Classes in the Artin-Schreier cokernel k/P(k)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True, eq=False)
class ASClass:
    """The class of ``rep`` modulo {x^2 + x}.

    Over a binary field ``rep`` is canonical (0 or the field's trace-1
    witness) and equality is plain comparison. Over the F2(t) tower the
    representative is whatever the computation produced; equality asks
    the field to decide membership of the difference.
    """

    field: Any
    rep: Any

    def __eq__(self, other):
        if not isinstance(other, ASClass):
            return NotImplemented
        common = self.field.join(other.field)
        return common.class_eq(self.rep, other.rep)

    __hash__ = None

    def __add__(self, other: ASClass) -> ASClass:
        common = self.field.join(other.field)
        return make_class(common, common.add(self.rep, other.rep))

    def is_zero(self) -> bool:
        return self.field.is_member(self.rep)

    @property
    def bit(self) -> int:
        """0 for the trivial class, 1 otherwise."""
        return 0 if self.is_zero() else 1

    def __repr__(self):
        return f"ASClass({self.field.spec}, {self.field.format_elem(self.rep)})"


def make_class(field, value) -> ASClass:
    return ASClass(field, field.cokernel_rep(value))
