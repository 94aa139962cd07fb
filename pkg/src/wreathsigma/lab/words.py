"""Words over a named alphabet.

A word is a tuple of ``(letter, sign)`` pairs with sign +1 or -1.  Text
syntax: letters separated by optional spaces, each optionally followed by
``^-1``, ``⁻¹`` or ``^k``.  Letters are matched longest first, so multi
character names such as ``t1`` work without spaces.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from ..errors import LabError

Letter = tuple[str, int]
Word = tuple[Letter, ...]

_EXP = re.compile(r"\^\(?(-?\d+)\)?|⁻¹")


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    names = sorted(alphabet, key=len, reverse=True)
    out: list[Letter] = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isspace() or text[i] in "*·.":
            i += 1
            continue
        if text[i] == "1" and (i + 1 == n or not text[i + 1].isalnum()) and "1" not in alphabet:
            i += 1  # the identity
            continue
        name = next((a for a in names if text.startswith(a, i)), None)
        if name is None:
            raise LabError(f"unknown letter at position {i} in {text!r}; alphabet is {list(alphabet)}")
        i += len(name)
        power = 1
        m = _EXP.match(text, i)
        if m:
            power = -1 if m.group(0) == "⁻¹" else int(m.group(1))
            i = m.end()
        sign = 1 if power > 0 else -1
        out.extend([(name, sign)] * abs(power))
    return tuple(out)


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(name if s > 0 else f"{name}^-1" for name, s in word)


def inverse(word: Word) -> Word:
    return tuple((name, -s) for name, s in reversed(word))


def reduce(word: Iterable[Letter]) -> Word:
    """Free reduction."""
    stack: list[Letter] = []
    for letter in word:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def letters(alphabet: Sequence[str]) -> list[Letter]:
    """The symmetric generating set in a fixed order: a, a^-1, b, b^-1, ..."""
    return [(a, s) for a in alphabet for s in (1, -1)]
