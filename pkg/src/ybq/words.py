"""Free-group words as tuples of nonzero ints.

Letter ``k`` (k >= 1) is the generator f_k and ``-k`` its inverse, so a
word is a plain tuple that hashes and sorts.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def multiply(*words: Sequence[int]) -> Word:
    return reduce(x for w in words for x in w)


def power(word: Sequence[int], k: int) -> Word:
    if k < 0:
        return power(inverse(word), -k)
    return reduce(tuple(word) * k)


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = reduce(word)
    start, end = 0, len(w)
    while end - start > 1 and w[start] == -w[end - 1]:
        start += 1
        end -= 1
    return w[start:end]


def rotations(word: Sequence[int]) -> list[Word]:
    w = tuple(word)
    return [w[i:] + w[:i] for i in range(max(len(w), 1))]


def _letter_key(x):
    return (abs(x), x < 0)


def _word_key(w):
    return (len(w), [_letter_key(x) for x in w])


def canonical(word: Sequence[int]) -> Word:
    """Least of a freely reduced word and its inverse."""
    w = reduce(word)
    return min(w, inverse(w), key=_word_key)


def cyclic_canonical(word: Sequence[int]) -> Word:
    """Canonical representative of a relator up to rotation and inversion."""
    w = cyclic_reduce(word)
    if not w:
        return ()
    cands = rotations(w) + rotations(inverse(w))
    return min(cands, key=_word_key)


def substitute(word: Sequence[int], images: dict) -> Word:
    """Replace each generator k by ``images[k]`` (a word); others are kept."""
    out: list[int] = []
    for x in word:
        g = abs(x)
        if g in images:
            out.extend(images[g] if x > 0 else inverse(images[g]))
        else:
            out.append(x)
    return reduce(out)


def letters(word: Sequence[int]) -> set[int]:
    return {abs(x) for x in word}


def exponent_sums(word: Sequence[int], gens: Sequence[int]) -> list[int]:
    pos = {g: i for i, g in enumerate(gens)}
    v = [0] * len(gens)
    for x in word:
        v[pos[abs(x)]] += 1 if x > 0 else -1
    return v


def syllables(word: Sequence[int]) -> list[tuple[int, int]]:
    """Run-length form [(generator, exponent), ...]."""
    out: list[list[int]] = []
    for x in word:
        g, e = abs(x), (1 if x > 0 else -1)
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return [(g, e) for g, e in out]


def format_word(word: Sequence[int], labels=None) -> str:
    """Render a word as e.g. ``f1^2 f3^-1``; the empty word is ``1``."""
    if not word:
        return "1"
    parts = []
    for g, e in syllables(word):
        name = labels[g] if labels is not None else f"f{g}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)


def parse_word(text: str) -> Word:
    """Inverse of :func:`format_word` for default ``f<k>`` labels."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out: list[int] = []
    for token in text.replace("*", " ").split():
        base, _, exp = token.partition("^")
        if not base.startswith("f"):
            raise ValueError(f"cannot parse letter {token!r}")
        g = int(base[1:])
        e = int(exp) if exp else 1
        out.extend([g if e > 0 else -g] * abs(e))
    return reduce(out)
