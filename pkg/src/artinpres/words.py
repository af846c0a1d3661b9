"""Free-group word arithmetic on flat integer sequences.

A word in the free group F_n is a tuple of nonzero integers: the letter
k > 0 is the generator x_k and -k is its inverse.  Every function here
returns freely reduced words (no adjacent x x^-1 pair), so group equality
is plain tuple equality and the empty tuple is the identity element.
Words are n-agnostic; the ambient rank is a property of the context they
are used in.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

Word = tuple[int, ...]


class ParseError(ValueError):
    """Malformed textual input (word grammar, presentation or braid files)."""


def free_reduce(letters: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain.

    Idempotent and length-nonincreasing.  Raises ValueError on the letter 0,
    which encodes no generator.
    """
    stack: list[int] = []
    for letter in letters:
        if letter == 0:
            raise ValueError("0 is not a valid letter")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def concat(*factors: Word) -> Word:
    """Reduced product of reduced words.  Associative, with identity ()."""
    stack: list[int] = []
    for word in factors:
        for letter in word:
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
    return tuple(stack)


def invert(word: Word) -> Word:
    """Inverse word: letters reversed, signs flipped."""
    return tuple(-letter for letter in reversed(word))


def generator_power(index: int, exponent: int) -> Word:
    """The word x_index^exponent (empty when exponent is 0)."""
    if index < 1:
        raise ValueError(f"generator index must be >= 1, got {index}")
    return (index if exponent > 0 else -index,) * abs(exponent)


def conjugate(word: Word, by: Word) -> Word:
    """by^-1 * word * by, reduced."""
    return concat(invert(by), word, by)


def substitute(word: Word, images: Mapping[int, Word]) -> Word:
    """Image of a word under the endomorphism x_j -> images[j].

    Inverse letters map to the inverted image.  Every generator index
    appearing in the word must have an image.
    """
    pieces: list[Word] = []
    for letter in word:
        image = images.get(abs(letter))
        if image is None:
            raise ValueError(f"no image given for generator x{abs(letter)}")
        pieces.append(image if letter > 0 else invert(image))
    return concat(*pieces)


def exponent_sum(word: Word, index: int) -> int:
    """Signed count of occurrences of x_index; additive under concat."""
    if index < 1:
        raise ValueError(f"generator index must be >= 1, got {index}")
    total = 0
    for letter in word:
        if letter == index:
            total += 1
        elif letter == -index:
            total -= 1
    return total


def max_generator(word: Word) -> int:
    """Largest generator index used, 0 for the empty word."""
    return max((abs(letter) for letter in word), default=0)


_TOKEN = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def parse_word(text: str) -> Word:
    """Parse whitespace-separated ``x<k>`` / ``x<k>^<e>`` tokens.

    The token ``1`` denotes the empty word and exponents may be negative or
    zero.  The result is freely reduced.
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty word text; write '1' for the identity")
    letters: list[int] = []
    for position, token in enumerate(tokens, start=1):
        if token == "1":
            continue
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise ParseError(f"bad word token {token!r} at position {position}")
        index = int(match.group(1))
        if index < 1:
            raise ParseError(
                f"generator index must be >= 1 in token {token!r} at position {position}"
            )
        exponent = 1 if match.group(2) is None else int(match.group(2))
        letters.extend(generator_power(index, exponent))
    return free_reduce(letters)


def format_word(word: Word) -> str:
    """Inverse of parse_word; the empty word prints as ``1``.

    Runs of one letter collapse to a power token.  This is unambiguous on
    reduced words, which never mix signs inside a run.
    """
    if not word:
        return "1"
    parts: list[str] = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        exponent = (j - i) if word[i] > 0 else -(j - i)
        name = f"x{abs(word[i])}"
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
        i = j
    return " ".join(parts)
