"""Word primitives: alphabets, borders, the global period, reversal.

Words are plain Python strings over a small ordered alphabet, ternary
"012" by default.  Letter indices and positions are 1-based in every
public interface: position p denotes the cut w = x.y with |x| = p, so a
word of length n has exactly n - 1 positions.  All functions here are
pure; words never mutate.
"""

from __future__ import annotations

from .errors import AlphabetError, EmptyWord

TERNARY = "012"
BINARY = "01"


def parse_word(text: str, alphabet: str = TERNARY) -> str:
    """Validate that every character of ``text`` belongs to ``alphabet``.

    Returns the word unchanged.  Raises AlphabetError naming the first
    offending character and its 1-based index.
    """
    allowed = set(alphabet)
    for i, ch in enumerate(text):
        if ch not in allowed:
            raise AlphabetError(
                f"character {ch!r} at index {i + 1} is not in alphabet {alphabet!r}"
            )
    return text


def border_array(w: str) -> list[int]:
    """Longest proper border length of every prefix of ``w``.

    Entry i (0-based) is the length of the longest word that is both a
    proper prefix and a proper suffix of w[1..i+1].  The empty word
    yields an empty list.  Standard failure-function recurrence, O(n).
    """
    n = len(w)
    b = [0] * n
    k = 0
    for i in range(1, n):
        while k > 0 and w[i] != w[k]:
            k = b[k - 1]
        if w[i] == w[k]:
            k += 1
        b[i] = k
    return b


def global_period(w: str) -> int:
    """Minimal period of ``w``: the smallest p >= 1 such that w is a
    prefix of u^n for its own length-p prefix u.

    Equals |w| minus the longest border length.  Raises EmptyWord on "".
    """
    if not w:
        raise EmptyWord("the empty word has no period")
    return len(w) - border_array(w)[-1]


def is_unbordered(w: str) -> bool:
    """True iff ``w`` has no nonempty proper border, i.e. per(w) = |w|."""
    if not w:
        raise EmptyWord("the empty word is neither bordered nor unbordered")
    return border_array(w)[-1] == 0


def reverse(w: str) -> str:
    """Letters of ``w`` in reverse order."""
    return w[::-1]
