"""Reader for the printed polynomial format ``-1//4*s₁⁽¹⁾^2 + 1//2*y⁽¹⁾*y⁽²⁾``.

Test-only oracle: independent of the package's own printer.
"""
import re
from fractions import Fraction

from sigbary.ncpoly import Symbol

_SUB = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_SUP = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_FACTOR = re.compile(r"^(s([₀-₉]+)|y)⁽([⁰¹²³⁴⁵⁶⁷⁸⁹]+)⁾(?:\^(\d+))?$")


def _factor(text):
    m = _FACTOR.match(text)
    if not m:
        raise ValueError(f"bad factor {text!r}")
    level = int(m.group(3).translate(_SUP))
    power = int(m.group(4) or 1)
    if m.group(2):
        sym = Symbol("s", int(m.group(2).translate(_SUB)), level)
    else:
        sym = Symbol("y", 0, level)
    return (sym,) * power


def parse(text):
    """Map ``{monomial: coefficient}`` for a sum of signed terms."""
    flat = " ".join(text.split())
    if not flat.startswith(("-", "+")):
        flat = "+ " + flat
    out = {}
    for sign, body in re.findall(r"([+-])\s*([^+-]+)", flat):
        parts = body.strip().split("*")
        coef = Fraction(1)
        if "//" in parts[0]:
            p, q = parts.pop(0).split("//")
            coef = Fraction(int(p), int(q))
        mono = tuple(s for part in parts for s in _factor(part))
        out[mono] = out.get(mono, 0) + (coef if sign == "+" else -coef)
    return out
