"""Independent brute-force oracles used only by the test suite.

Each function here recomputes a quantity by a different route than the
library (unfolded inversion counts, breadth-first word search, exhaustive
factorization, lattice words) so that agreement is meaningful.
"""

from __future__ import annotations

import itertools
from collections import Counter

from cylkit.affine import AffinePermutation, CyclicSet, proper_subsets
from cylkit.partitions import Partition


def unfolded_inversions(w: AffinePermutation, periods: int = 6) -> int:
    """Inversion count of the bi-infinite extension by direct unfolding."""
    n = w.n
    total = 0
    for i in range(1, n + 1):
        wi = w.value(i)
        for j in range(i + 1, i + periods * n + 1):
            if w.value(j) < wi:
                total += 1
    return total


def bfs_word_length(w: AffinePermutation, cap: int) -> int | None:
    """Minimal word length reaching ``w`` from the identity, or None."""
    if w.is_identity():
        return 0
    frontier = {AffinePermutation.identity(w.n).window}
    seen = set(frontier)
    for dist in range(1, cap + 1):
        nxt = set()
        for win in frontier:
            u = AffinePermutation(w.n, win)
            for i in range(w.n):
                v = u.times_s(i)
                if v.window == w.window:
                    return dist
                if v.window not in seen:
                    seen.add(v.window)
                    nxt.add(v.window)
        frontier = nxt
    return None


def all_words_brute(w: AffinePermutation) -> set[tuple[int, ...]]:
    """All reduced words by plain descent recursion (no memo, no cap)."""
    if w.is_identity():
        return {()}
    out = set()
    for i in range(w.n):
        if w.has_right_descent(i):
            out.update(word + (i,) for word in all_words_brute(w.times_s(i)))
    return out


def word_has_braid_factor(n: int, word: tuple[int, ...]) -> bool:
    """True iff the word contains a consecutive ``s_i s_{i+-1} s_i``."""
    for a in range(len(word) - 2):
        i, j, l = word[a], word[a + 1], word[a + 2]
        if i == l and (j - i) % n in (1, n - 1):
            return True
    return False


def stanley_coefficient_brute(w: AffinePermutation, alpha: tuple[int, ...]) -> int:
    """Number of factorizations ``w = w_1 ... w_N`` into cyclically
    decreasing elements with ``len(w_t) == alpha_t``, by exhaustive search."""
    n = w.n

    def rec(u: AffinePermutation, remaining: tuple[int, ...]) -> int:
        if not remaining:
            return 1 if u.is_identity() else 0
        size = remaining[0]
        total = 0
        for members in proper_subsets(n, size):
            d = CyclicSet(n, members, True)
            rest = d.reversed().element() * u
            if rest.length == u.length - size:
                total += rec(rest, remaining[1:])
        return total

    return rec(w, alpha)


def lr_coefficient_lattice(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient by counting lattice-word skew SSYT.

    Tableaux of shape lam/mu and content nu whose reverse reading word
    (right to left along rows, top to bottom) is a lattice word.
    """
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    rows = len(lam)
    mu_full = tuple(mu) + (0,) * (rows - len(mu))
    height = len(nu)

    grid = [[0] * lam[r] for r in range(rows)]

    def lattice_ok(word: list[int]) -> bool:
        seen = Counter()
        for x in word:
            seen[x] += 1
            if x > 1 and seen[x] > seen[x - 1]:
                return False
        return True

    cells = [(r, c) for r in range(rows) for c in range(mu_full[r], lam[r])]

    def rec(idx: int, content: Counter) -> int:
        if idx == len(cells):
            word = [grid[r][c] for r in range(rows)
                    for c in reversed(range(mu_full[r], lam[r]))]
            return 1 if lattice_ok(word) else 0
        r, c = cells[idx]
        total = 0
        for v in range(1, height + 1):
            if content[v] >= nu[v - 1]:
                continue
            if c > mu_full[r] and grid[r][c - 1] > v:
                continue
            if r > 0 and c < lam[r - 1] and c >= mu_full[r - 1] and grid[r - 1][c] >= v:
                continue
            grid[r][c] = v
            content[v] += 1
            total += rec(idx + 1, content)
            content[v] -= 1
            grid[r][c] = 0
        return total

    return rec(0, Counter())


def poly_mul_monomial_tables(nvars: int, p: dict, q: dict) -> dict:
    """Multiply two symmetric polynomials given as partition-keyed monomial
    tables; returns a partition-keyed table.  Expands each m_lambda into its
    full exponent-vector orbit, convolves, and reads off dominant exponents.
    """

    def orbit(lam: tuple[int, ...]) -> set[tuple[int, ...]]:
        padded = tuple(lam) + (0,) * (nvars - len(lam))
        return set(itertools.permutations(padded))

    full_p: Counter = Counter()
    for lam, c in p.items():
        for expo in orbit(lam):
            full_p[expo] += c
    full_q: Counter = Counter()
    for lam, c in q.items():
        for expo in orbit(lam):
            full_q[expo] += c

    prod: Counter = Counter()
    for e1, c1 in full_p.items():
        for e2, c2 in full_q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            prod[e] += c1 * c2

    out: dict[tuple[int, ...], int] = {}
    for expo, c in prod.items():
        if c and tuple(sorted(expo, reverse=True)) == expo:
            key = tuple(v for v in expo if v)
            out[key] = c
    return out
