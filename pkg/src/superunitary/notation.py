"""Text notation for rationals, weights, roots, signatures and sweeps."""

import re
from fractions import Fraction

# An optional sign, digits, and an optional "/digits" denominator
RE_RATIONAL = r"^[+-]?[0-9]+(/[0-9]+)?$"

# Comma separated integers, spaces allowed around the commas
RE_INT_LIST = r"^\s*[+-]?[0-9]+(\s*,\s*[+-]?[0-9]+)*\s*$"

# One signed basis vector with an optional integer coefficient, e.g. "e1", "-e2", "+2d1"
RE_ROOT_TERM = r"([+-]?)([0-9]*)([ed])([0-9]+)"

WEIGHT_SEPARATOR = "|"


def parse_rational(text: str) -> Fraction:
    """Parse an integer or "p/q" rational."""
    raw = str(text).strip()
    if not re.match(RE_RATIONAL, raw):
        raise ValueError(f'Could not parse "{text}" as a rational. Use an integer or p/q.')
    try:
        return Fraction(raw)
    except ZeroDivisionError as exc:
        raise ValueError(f'Rational "{text}" has a zero denominator.') from exc


def format_rational(value: Fraction | int) -> str:
    """Format a rational as "p/q", or as a bare integer when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse a comma separated list of integers."""
    if not re.match(RE_INT_LIST, text):
        raise ValueError(f'Could not parse "{text}" as a comma separated list of integers.')
    return tuple(int(part) for part in text.split(","))


def parse_signature(text: str) -> tuple[int, int, int]:
    """Parse a "p,q,n" signature into its three integers."""
    try:
        values = parse_int_list(text)
    except ValueError:
        values = ()
    if len(values) != 3:
        raise ValueError(f'Could not parse signature "{text}". Use p,q,n, for example 2,0,1.')
    p, q, n = values
    return p, q, n


def parse_weight(text: str) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Parse "l1,...,lm|u1,...,un" into its even and odd coordinate blocks."""
    if text.count(WEIGHT_SEPARATOR) != 1:
        raise ValueError(f'Could not parse weight "{text}". Use l1,...,lm|u1,...,un.')
    left, right = text.split(WEIGHT_SEPARATOR)
    blocks = []
    for block in (left, right):
        if not block.strip():
            raise ValueError(f'Weight "{text}" has an empty block.')
        blocks.append(tuple(parse_rational(part) for part in block.split(",")))
    return blocks[0], blocks[1]


def format_weight(coords: tuple[Fraction, ...], m: int) -> str:
    """Format weight coordinates as "l1,...,lm|u1,...,un"."""
    left = ",".join(format_rational(value) for value in coords[:m])
    right = ",".join(format_rational(value) for value in coords[m:])
    return f"{left}{WEIGHT_SEPARATOR}{right}"


def parse_root(text: str, m: int, n: int) -> tuple[int, ...]:
    """Parse a root written as signed basis vectors, such as "e1-d2" or "-e2+d1"."""
    raw = text.replace(" ", "")
    if not raw or re.sub(RE_ROOT_TERM, "", raw):
        raise ValueError(f'Could not parse root "{text}". Use terms like e1, -e2, +2d1.')
    coords = [0] * (m + n)
    for sign, coefficient, block, index in re.findall(RE_ROOT_TERM, raw):
        position = int(index)
        limit = m if block == "e" else n
        if not 1 <= position <= limit:
            raise ValueError(f'Index {block}{position} in root "{text}" is out of range.')
        slot = position - 1 if block == "e" else m + position - 1
        scale = int(coefficient) if coefficient else 1
        coords[slot] += -scale if sign == "-" else scale
    return tuple(coords)


def format_root(coords: tuple[int, ...], m: int) -> str:
    """Format an integer coordinate tuple as signed basis vectors."""
    terms: list[str] = []
    for slot, value in enumerate(coords):
        if value == 0:
            continue
        name = f"e{slot + 1}" if slot < m else f"d{slot - m + 1}"
        magnitude = "" if abs(value) == 1 else str(abs(value))
        sign = "-" if value < 0 else ("+" if terms else "")
        terms.append(f"{sign}{magnitude}{name}")
    return "".join(terms) or "0"


def parse_sweep(text: str) -> tuple[Fraction, ...]:
    """Parse "from:to:step" into the inclusive grid of rationals."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f'Could not parse sweep "{text}". Use from:to:step, for example 0:5:1/2.')
    start, stop, step = (parse_rational(part) for part in parts)
    if step <= 0:
        raise ValueError(f'Sweep step must be positive, got "{parts[2]}".')
    if stop < start:
        raise ValueError(f'Sweep end "{parts[1]}" lies before its start "{parts[0]}".')
    count = int((stop - start) / step)
    return tuple(start + index * step for index in range(count + 1))
