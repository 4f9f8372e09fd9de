"""JSON helpers that keep large integers exact.

Integers beyond 2**53 are written as decimal strings so that readers backed by
IEEE doubles cannot silently round them.
"""

from fractions import Fraction

SAFE_INT = 2**53


def int_to_json(x: int):
    return str(x) if abs(x) > SAFE_INT else x


def int_from_json(x) -> int:
    if isinstance(x, bool):
        raise TypeError("boolean is not an integer")
    return int(x)


def rational_to_dict(x: Fraction) -> dict:
    return {"num": int_to_json(x.numerator), "den": int_to_json(x.denominator)}


def rational_from_dict(d: dict) -> Fraction:
    return Fraction(int_from_json(d["num"]), int_from_json(d["den"]))
