# src/polyring/textio.py
"""Ideal files: a ``ring <n> <order>`` header, then one generator per line."""
from typing import Optional

from src.exceptions import TableParseError
from src.polyring.ideal import Ideal
from src.polyring.orders import MonomialOrder
from src.polyring.ring import format_polynomial, order_of, parse_polynomial, polynomial_ring


def dumps_ideal(ideal: Ideal, order: Optional[MonomialOrder] = None) -> str:
    order = order or order_of(ideal.ring)
    lines = [f"ring {ideal.ring.ngens} {order}"]
    lines += [format_polynomial(g) for g in ideal.generators]
    return "\n".join(lines) + "\n"


def loads_ideal(text: str) -> Ideal:
    lines = [
        (n, line.strip())
        for n, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise TableParseError("missing ring header", 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "ring" or not parts[1].isdigit():
        raise TableParseError(f"expected 'ring <n> <order>', got {header!r}", lineno)
    try:
        ring = polynomial_ring(int(parts[1]), MonomialOrder.parse(parts[2]))
    except ValueError as e:
        raise TableParseError(str(e), lineno) from e
    gens = []
    for lineno, line in lines[1:]:
        try:
            gens.append(parse_polynomial(line, ring))
        except ValueError as e:
            raise TableParseError(str(e), lineno) from e
    return Ideal(gens, ring)
