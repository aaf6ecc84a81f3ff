"""
Permutations of 1..N in one-line notation.

w is stored as (w(1), ..., w(N)). Left multiplication by s_i swaps the
values i and i+1, right multiplication swaps the entries at positions i and
i+1.
"""

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Tuple


@dataclass(frozen=True)
class Perm:
    one_line: Tuple[int, ...]
    length: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise ValueError(f"{self.one_line} is not a permutation of 1..{len(self.one_line)}")
        w = self.one_line
        inversions = sum(1 for a, b in itertools.combinations(range(len(w)), 2) if w[a] > w[b])
        object.__setattr__(self, "length", inversions)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Perm":
        return cls.identity(n).right_mul_simple(i)

    @property
    def size(self) -> int:
        return len(self.one_line)

    def __call__(self, k: int) -> int:
        return self.one_line[k - 1]

    def left_mul_simple(self, i: int) -> "Perm":
        """s_i w"""
        swap = {i: i + 1, i + 1: i}
        return Perm(tuple(swap.get(v, v) for v in self.one_line))

    def right_mul_simple(self, i: int) -> "Perm":
        """w s_i"""
        w = list(self.one_line)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Perm(tuple(w))

    def has_left_descent(self, i: int) -> bool:
        """l(s_i w) < l(w): the value i+1 comes before i"""
        return self.one_line.index(i + 1) < self.one_line.index(i)

    def reduced_word(self) -> List[int]:
        """i_1, ..., i_k with w = s_{i_1} ... s_{i_k}"""
        word = []
        w = self
        while w.length:
            i = next(i for i in range(1, w.size) if w.has_left_descent(i))
            word.append(i)
            w = w.left_mul_simple(i)
        return word

    def inverse(self) -> "Perm":
        return Perm(tuple(self.one_line.index(k) + 1 for k in range(1, self.size + 1)))

    def __mul__(self, other: "Perm") -> "Perm":
        """(self * other)(k) = self(other(k))"""
        return Perm(tuple(self(other(k)) for k in range(1, self.size + 1)))

    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cycle.append(k)
                seen.add(k)
                k = self(k)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "e"
        return "".join("(" + " ".join(str(k) for k in c) + ")" for c in cycles)


@lru_cache(maxsize=None)
def all_perms(n: int) -> Tuple[Perm, ...]:
    """S_n sorted by length, then one-line notation"""
    perms = [Perm(p) for p in itertools.permutations(range(1, n + 1))]
    return tuple(sorted(perms, key=lambda w: (w.length, w.one_line)))
