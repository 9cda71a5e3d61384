"""Positional notation: digit strings, literal parsing and formatting.

A :class:`DigitString` stores the digits of a non-negative integer most
significant first.  The *index* of a digit counts positions to the left of
the units column, so index 0 is the units digit and ``s[k]`` returns the
digit at index ``k`` (zero beyond the top).

Zero is the one-digit string ``"0"``.  Note that its string length is 1
while the digit-count function of :mod:`conway13.digit_ops` gives 0 for it;
the two notions are deliberately kept apart.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, ParseError
from .numeric import as_natural

ALPHABET = "0123456789ABC"
MAX_RADIX = len(ALPHABET)

A, B, C = 10, 11, 12

_SUFFIX = re.compile(r"_(\d+)$")


def check_base(base: int) -> int:
    if isinstance(base, bool) or not isinstance(base, int) or base < 2:
        raise DomainError(f"base must be an integer >= 2, got {base!r}")
    return base


def check_digit(p: int, base: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p < base:
        raise DomainError(f"digit {p!r} is not valid in base {base}")
    return p


@dataclass(frozen=True)
class DigitString:
    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        check_base(self.base)
        if not self.digits:
            raise DomainError("a digit string needs at least one digit")
        for d in self.digits:
            check_digit(d, self.base)

    def __len__(self):
        return len(self.digits)

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise DomainError("fractional digit positions are not stored")
        if k >= len(self.digits):
            return 0
        return self.digits[-1 - k]

    @property
    def top_index(self) -> int:
        """Index of the most significant digit (0 for the string "0")."""
        return len(self.digits) - 1

    @property
    def is_canonical(self) -> bool:
        return self.digits[0] != 0 or len(self.digits) == 1

    def canonical(self) -> DigitString:
        digits = self.digits
        i = 0
        while i < len(digits) - 1 and digits[i] == 0:
            i += 1
        return DigitString(self.base, digits[i:])

    def __str__(self):
        return format_literal(self)


def parse_literal(text: str, base: int) -> DigitString:
    """Parse an unsigned literal such as ``"b17c11"`` in the given base.

    Input is case-insensitive; leading zeros are stripped.  Errors report
    the offending character position.
    """
    check_base(base)
    if base > MAX_RADIX:
        raise DomainError(f"bases above {MAX_RADIX} have no digit alphabet here")
    if not text:
        raise ParseError("empty literal", None)
    digits = []
    for pos, ch in enumerate(text):
        value = ALPHABET.find(ch.upper())
        if value < 0:
            raise ParseError(f"invalid character {ch!r} at position {pos}", pos)
        if value >= base:
            raise ParseError(
                f"digit {ch!r} at position {pos} is not valid in base {base}", pos
            )
        digits.append(value)
    return DigitString(base, tuple(digits)).canonical()


def parse_signed_literal(text: str, base: int = 13) -> tuple[int, DigitString]:
    """Parse ``[+-]? [0-9A-Ca-c]+ (_radix)?`` into ``(sign, digits)``.

    A ``_radix`` suffix overrides ``base``.  ``sign`` is -1 or +1 (also +1
    for zero).
    """
    if not text:
        raise ParseError("empty literal", None)
    body, offset = text, 0
    match = _SUFFIX.search(body)
    if match:
        base = int(match.group(1))
        body = body[: match.start()]
        if not 2 <= base <= MAX_RADIX:
            raise ParseError(
                f"radix suffix {base} at position {match.start()} is outside 2..{MAX_RADIX}",
                match.start(),
            )
    sign = 1
    if body[:1] in ("+", "-"):
        sign = -1 if body[0] == "-" else 1
        body, offset = body[1:], 1
    if not body:
        raise ParseError(f"literal has no digits (position {offset})", offset)
    try:
        digits = parse_literal(body, base)
    except ParseError as exc:
        pos = None if exc.position is None else exc.position + offset
        message = str(exc)
        if exc.position is not None:
            message = message.replace(f"position {exc.position}", f"position {pos}")
        raise ParseError(message, pos) from None
    return sign, digits


def format_literal(s: DigitString) -> str:
    if s.base > MAX_RADIX:
        raise DomainError(f"bases above {MAX_RADIX} have no digit alphabet here")
    return "".join(ALPHABET[d] for d in s.canonical().digits)


def to_natural(s: DigitString) -> int:
    value = 0
    for d in s.digits:
        value = value * s.base + d
    return value


def from_natural(x: int, base: int) -> DigitString:
    x = as_natural(x)
    check_base(base)
    if x == 0:
        return DigitString(base, (0,))
    out = []
    while x:
        x, d = divmod(x, base)
        out.append(d)
    return DigitString(base, tuple(reversed(out)))


def contains_digit_sequence(needle: DigitString, haystack: DigitString) -> bool:
    """Whether ``needle``'s digits occur contiguously inside ``haystack``."""
    if needle.base != haystack.base:
        raise DomainError(
            f"base mismatch: {needle.base} vs {haystack.base}"
        )
    n, h = needle.digits, haystack.digits
    return any(h[i : i + len(n)] == n for i in range(len(h) - len(n) + 1))
