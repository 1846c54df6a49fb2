"""Integer/string conversion past the interpreter's digit limit.

CPython 3.11+ caps int<->str conversions at 4300 digits by default; the
coordinates of faithful-mode units blow straight through that.  These
helpers raise the interpreter limit on demand (never lowering it).
"""

import sys


def _ensure_digits(n):
    if hasattr(sys, "get_int_max_str_digits"):
        current = sys.get_int_max_str_digits()
        if current and n + 10 > current:
            sys.set_int_max_str_digits(n + 10)


def int_to_str(value):
    _ensure_digits(value.bit_length() // 3 + 3)
    return str(value)


def str_to_int(text):
    text = text.strip()
    _ensure_digits(len(text))
    return int(text)
