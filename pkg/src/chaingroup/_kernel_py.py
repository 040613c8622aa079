"""Pure-Python word-rewriting kernel.

Same contract as the C module chaingroup._speedups: apply a sequence of braid
letters to a tuple of reduced free-group words, keeping every intermediate
word freely reduced. This is the inner loop of the word-problem oracle;
chaingroup.kernel picks this module when the compiled one is unavailable.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def apply_letters(
    n: int,
    letters: Sequence[int],
    images: Sequence[Sequence[int]],
) -> tuple[tuple[int, ...], ...]:
    """Rewrite each image word through the given braid letters, in order.

    The braid letter i substitutes x_i -> x_i x_{i+1} x_i^{-1} and
    x_{i+1} -> x_i; the letter -i applies the inverse substitution. The first
    letter of the braid word acts first. Words stay reduced throughout.
    """
    words = [list(w) for w in images]
    for s in letters:
        i = abs(s)
        if not 1 <= i <= n - 1:
            raise ValueError(f"letter {s} out of range for rank {n}")
        j = i + 1
        if s > 0:
            table = {i: (i, j, -i), -i: (i, -j, -i), j: (i,), -j: (-i,)}
        else:
            table = {i: (j,), -i: (-j,), j: (-j, i, j), -j: (-j, -i, j)}
        for idx, w in enumerate(words):
            out: list[int] = []
            push = out.append
            for t in w:
                repl = table.get(t)
                if repl is None:
                    if out and out[-1] == -t:
                        out.pop()
                    else:
                        push(t)
                else:
                    for r in repl:
                        if out and out[-1] == -r:
                            out.pop()
                        else:
                            push(r)
            words[idx] = out
    return tuple(tuple(w) for w in words)


def reduce_word(word: Sequence[int]) -> tuple[int, ...]:
    """Freely reduce a word over the rank-n generators."""
    out: list[int] = []
    for t in word:
        if out and out[-1] == -t:
            out.pop()
        else:
            out.append(t)
    return tuple(out)
