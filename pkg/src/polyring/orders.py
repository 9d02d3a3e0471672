# src/polyring/orders.py
import re
from dataclasses import dataclass
from typing import Tuple

from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder
from sympy.polys.orderings import grevlex, lex

_ELIMINATION = re.compile(r"^elimination\((\d+)\)$")


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``degrevlex`` or ``elimination`` of the first ``block`` variables.

    The elimination order compares the first ``block`` exponents by degrevlex
    and breaks ties by degrevlex on the remaining ones.
    """

    kind: str = "degrevlex"
    block: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("lex", "degrevlex", "elimination"):
            raise ValueError(f"Unknown monomial order {self.kind!r}")
        if (self.kind == "elimination") != (self.block > 0):
            raise ValueError("Only elimination orders take a positive block size")

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        text = text.strip().lower()
        if text in ("lex", "degrevlex"):
            return cls(text)
        if text == "grevlex":
            return cls("degrevlex")
        match = _ELIMINATION.match(text)
        if match:
            return cls("elimination", int(match.group(1)))
        raise ValueError(f"Unknown monomial order {text!r}")

    def to_sympy(self, nvars: int) -> SympyMonomialOrder:
        if self.kind == "lex":
            return lex
        if self.kind == "degrevlex":
            return grevlex
        if self.block >= nvars:
            raise ValueError(f"Cannot eliminate {self.block} of {nvars} variables")
        return EliminationOrder(self.block)

    def __str__(self) -> str:
        if self.kind == "elimination":
            return f"elimination({self.block})"
        return self.kind


class EliminationOrder(SympyMonomialOrder):
    """Degrevlex on the first ``block`` exponents, ties broken by degrevlex on the rest."""

    alias = "elimination"
    is_global = True
    is_default = False

    def __init__(self, block: int):
        self.block = block

    def __call__(self, monomial: Tuple[int, ...]) -> tuple:
        return (grevlex(monomial[: self.block]), grevlex(monomial[self.block :]))

    def __repr__(self) -> str:
        return f"EliminationOrder({self.block})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EliminationOrder) and other.block == self.block

    def __hash__(self) -> int:
        return hash((self.alias, self.block))


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")
