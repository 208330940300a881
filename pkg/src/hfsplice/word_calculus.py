"""Digit-string combinatorics relating A-side multiplications to D-side paths.

Strings are over the digits ``1, 2, 3``.  A string is *alternating* when its
digits alternate in parity; on three digits that means neighbouring digits
differ by exactly one.  Increasing runs (``1, 2, 3, 12, 23, 123``) label Reeb
chords; decreasing runs (``1, 2, 3, 21, 32, 321``) are what ``psi`` produces.
"""

from __future__ import annotations

from typing import Sequence

from .torus_algebra import RHO_WORDS

DECREASING_RUNS = ("1", "2", "3", "21", "32", "321")

_SWAP = str.maketrans("13", "31")


def is_alternating(s: str) -> bool:
    return all((int(a) + int(b)) % 2 == 1 for a, b in zip(s, s[1:]))


def swap13(s: str) -> str:
    return s.translate(_SWAP)


def psi(s: str) -> tuple[str, ...]:
    """Split an alternating string into decreasing runs with last(J_i) < first(J_i+1).

    Greedy: extend the current run while the next digit is one less.
    """
    if not s:
        raise ValueError("psi of the empty string")
    if set(s) - set("123") or not is_alternating(s):
        raise ValueError(f"not an alternating string: {s!r}")
    runs = [s[0]]
    for d in s[1:]:
        if int(d) == int(runs[-1][-1]) - 1:
            runs[-1] += d
        else:
            runs.append(d)
    return tuple(runs)


def phi(run: str) -> str:
    """Bijection from decreasing runs to Reeb chord words (swap 1 and 3)."""
    if run not in DECREASING_RUNS:
        raise ValueError(f"not a decreasing run: {run!r}")
    return swap13(run)


def is_a_side_sequence(words: Sequence[str]) -> bool:
    """True if the words index a (possibly) nonzero multiplication.

    Requires every word to be a chord, the concatenation to alternate, and
    last(I_i) > first(I_i+1) at every junction.
    """
    if not words or any(w not in RHO_WORDS for w in words):
        return False
    if not is_alternating("".join(words)):
        return False
    return all(a[-1] > b[0] for a, b in zip(words, words[1:]))


def is_canonical_d_sequence(labels: Sequence[str]) -> bool:
    """D-side label sequences in the image of :func:`a_index_to_d_labels`.

    Same shape condition as the A side: alternating concatenation and
    last > first at every junction.
    """
    return is_a_side_sequence(labels)


def a_index_to_d_labels(words: Sequence[str]) -> tuple[str, ...] | None:
    """D-labels whose composition defines ``m_{k+1}(. x rho_I1 x ... x rho_Ik)``.

    Returns ``None`` when the multiplication vanishes by definition.
    """
    if not words:
        raise ValueError("empty index sequence")
    if not is_a_side_sequence(words):
        return None
    return tuple(phi(run) for run in psi("".join(words)))


def split_increasing(s: str) -> tuple[str, ...]:
    runs = [s[0]]
    for d in s[1:]:
        if int(d) == int(runs[-1][-1]) + 1:
            runs[-1] += d
        else:
            runs.append(d)
    return tuple(runs)


def d_labels_to_a_index(labels: Sequence[str]) -> tuple[str, ...] | None:
    """Inverse direction: swap 1 and 3 in the concatenation, then cut into chords.

    ``None`` when the swapped string is not alternating.
    """
    if not labels:
        raise ValueError("empty label sequence")
    if any(w not in RHO_WORDS for w in labels):
        raise ValueError(f"unknown labels in {labels!r}")
    s = swap13("".join(labels))
    if not is_alternating(s):
        return None
    return split_increasing(s)


def merge_rule(left: tuple[str, ...], right: tuple[str, ...], last: str, first: str) -> tuple[str, ...]:
    """Psi of a concatenation from Psi of the two halves (the concatenation lemma)."""
    if int(last) < int(first):
        return left + right
    return left[:-1] + (left[-1] + right[0],) + right[1:]
