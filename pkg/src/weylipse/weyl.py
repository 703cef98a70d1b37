"""Matrix realization of the Weyl group and its transfer onto the main orbit.

Matrices act on column vectors of simple-root coordinates; the simple
reflection s_i sends e_j to e_j - A_ij e_i.  Words multiply left to right,
so word_to_element([1, 2]) is s_1 s_2 acting as x |-> s_1(s_2(x)).

P(w) = delta - w delta maps the group bijectively onto the main orbit of the
primary quadric (the identity goes to the origin); S(w) = A w delta = 1 - A P(w)
is the corresponding point of the secondary quadric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .cartan import CartanData, Root, weyl_order
from .errors import (
    CapExceededError,
    IndexOutOfRangeError,
    NotAMultipleError,
    NotInMainOrbitError,
)
from .exact import Matrix, identity, mat_mul, mat_vec

__all__ = [
    "WeylElement",
    "GroupTable",
    "DEFAULT_TABLE_CAP",
    "simple_reflection",
    "word_to_element",
    "P_map",
    "S_map",
    "build_group_table",
    "star",
    "p_alpha_b",
    "element_from_pvector",
]

DEFAULT_TABLE_CAP = 1_000_000


@dataclass(frozen=True)
class WeylElement:
    """An integer matrix in the simple-root basis, with a word that produced it."""

    mat: Matrix
    word: tuple[int, ...] | None = None

    @property
    def length(self) -> int | None:
        return None if self.word is None else len(self.word)


def _reflection_matrix(i: int, cd: CartanData) -> Matrix:
    # row i-1 of the identity is replaced by (delta_ij - A_ij)
    return tuple(
        tuple(
            (1 if r == c else 0) - (cd.A[i - 1][c] if r == i - 1 else 0)
            for c in range(cd.n)
        )
        for r in range(cd.n)
    )


def simple_reflection(i: int, cd: CartanData) -> WeylElement:
    """s_i as a WeylElement; i is 1-based."""
    if not isinstance(i, int) or not 1 <= i <= cd.n:
        raise IndexOutOfRangeError(f"reflection index {i} out of range 1..{cd.n}")
    return WeylElement(mat=_reflection_matrix(i, cd), word=(i,))


def word_to_element(word, cd: CartanData) -> WeylElement:
    """Product s_{i1} s_{i2} ... of the word read left to right; [] is the identity."""
    word = tuple(word)
    mat = identity(cd.n)
    for i in word:
        if not isinstance(i, int) or not 1 <= i <= cd.n:
            raise IndexOutOfRangeError(f"reflection index {i} out of range 1..{cd.n}")
        mat = mat_mul(mat, _reflection_matrix(i, cd))
    return WeylElement(mat=mat, word=word)


def P_map(w: WeylElement, cd: CartanData) -> tuple[int, ...]:
    """delta - w delta, always an integer vector on the primary quadric."""
    wd = mat_vec(w.mat, cd.delta)
    out = tuple(d - v for d, v in zip(cd.delta, wd))
    assert all(Fraction(v).denominator == 1 for v in out)
    return tuple(int(v) for v in out)


def S_map(w: WeylElement, cd: CartanData) -> tuple[int, ...]:
    """A w delta = 1 - A P(w); the identity element maps to (1,...,1)."""
    p = P_map(w, cd)
    return tuple(
        1 - sum(cd.A[i][j] * p[j] for j in range(cd.n)) for i in range(cd.n)
    )


@dataclass(eq=False)
class GroupTable:
    """The fully enumerated group, keyed by P-vectors (treat as immutable)."""

    cd: CartanData
    elements: dict[tuple[int, ...], WeylElement]
    order: int

    @cached_property
    def nodes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.elements))

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {p: i for i, p in enumerate(self.nodes)}

    @cached_property
    def right_multiplication(self) -> list[list[int]]:
        """right_multiplication[g-1][i] = index of nodes[i] * s_g (g 1-based)."""
        by_mat = {self.elements[p].mat: self.index[p] for p in self.nodes}
        tables = []
        for g in range(1, self.cd.n + 1):
            gm = _reflection_matrix(g, self.cd)
            tables.append(
                [by_mat[mat_mul(self.elements[p].mat, gm)] for p in self.nodes]
            )
        return tables

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(self.elements[p].word) for p in self.nodes)


def build_group_table(cd: CartanData, cap: int = DEFAULT_TABLE_CAP) -> GroupTable:
    """Breadth-first closure of the identity under right multiplication by the s_i.

    Keys are P-vectors (a collision would falsify injectivity of P and raises);
    each element keeps the first word that reached it, whose length is the
    Coxeter length.
    """
    total = weyl_order(cd)
    if total > cap:
        raise CapExceededError(f"|W({cd.spec})| = {total} exceeds cap {cap}")
    gens = [_reflection_matrix(i, cd) for i in range(1, cd.n + 1)]
    ident = WeylElement(mat=identity(cd.n), word=())
    elements = {P_map(ident, cd): ident}
    seen_mats = {ident.mat}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in range(cd.n):
                mat = mat_mul(w.mat, gens[g])
                if mat in seen_mats:
                    continue
                seen_mats.add(mat)
                elem = WeylElement(mat=mat, word=w.word + (g + 1,))
                key = P_map(elem, cd)
                assert key not in elements, f"P-vector collision at {key}"
                elements[key] = elem
                nxt.append(elem)
        frontier = nxt
    assert len(elements) == total
    return GroupTable(cd=cd, elements=elements, order=total)


def star(a, b, table: GroupTable) -> tuple[int, ...]:
    """The group operation transferred to P-vectors: P(P^-1(a) P^-1(b))."""
    a, b = tuple(a), tuple(b)
    try:
        wa, wb = table.elements[a], table.elements[b]
    except KeyError as missing:
        raise NotInMainOrbitError(
            f"{missing.args[0]} is not a main-orbit vector of {table.cd.spec}"
        ) from None
    product = WeylElement(mat=mat_mul(wa.mat, wb.mat))
    return P_map(product, table.cd)


def p_alpha_b(alpha: Root, b, table: GroupTable) -> int:
    """The nonzero integer p with (grade(alpha) alpha) * b = p alpha + b."""
    b = tuple(b)
    scaled = tuple(alpha.grade * c for c in alpha.coords)
    moved = star(scaled, b, table)
    diff = tuple(m - v for m, v in zip(moved, b))
    pivot = next(i for i, c in enumerate(alpha.coords) if c)
    p, rem = divmod(diff[pivot], alpha.coords[pivot])
    if rem or any(d != p * c for d, c in zip(diff, alpha.coords)):
        raise NotAMultipleError(
            f"(grade*alpha)*b - b = {diff} is not an integer multiple of {alpha.coords}"
        )
    if p == 0:
        raise NotAMultipleError(f"multiplier for alpha={alpha.coords}, b={b} is zero")
    return p


def element_from_pvector(a, cd: CartanData) -> WeylElement:
    """Invert P without enumerating the group, by stripping descents.

    If S(a) = 1 - A a has a negative entry i then a = P(s_i w') with
    P(w') = e_i + s_i(a) one step shorter; iterating reconstructs a word.
    """
    a = tuple(a)
    if len(a) != cd.n or any(not isinstance(v, int) for v in a):
        raise NotInMainOrbitError(f"{a} is not an integer {cd.n}-vector")
    word = []
    cur = a
    # any element's length is at most the number of positive roots
    from .cartan import positive_roots

    for _ in range(len(positive_roots(cd)) + 1):
        s = tuple(1 - sum(cd.A[i][j] * cur[j] for j in range(cd.n)) for i in range(cd.n))
        neg = [i for i in range(cd.n) if s[i] < 0]
        if not neg:
            break
        i = neg[0]
        refl = _reflection_matrix(i + 1, cd)
        moved = mat_vec(refl, cur)
        cur = tuple(moved[r] + (1 if r == i else 0) for r in range(cd.n))
        word.append(i + 1)
    if any(cur):
        raise NotInMainOrbitError(f"{a} is not in the main orbit of {cd.spec}")
    elem = word_to_element(word, cd)
    if P_map(elem, cd) != a:
        raise NotInMainOrbitError(f"{a} is not in the main orbit of {cd.spec}")
    return elem
