"""Todd-Coxeter coset enumeration over the trivial subgroup.

The enumerator semidecides finiteness of a finitely presented group: when
the coset table closes, the number of live cosets equals the group order.
A budget bounds the total number of cosets ever defined (live plus
collapsed), so infinite groups come back as Exceeded, which callers must
treat as "no information", never as "infinite".

Two deterministic strategies are provided.  RELATOR_FIRST is the classic
scan-and-fill loop: each coset in definition order is traced around every
relator, defining new cosets to bridge gaps, and then has its remaining
table entries filled.  DEFINITION_FIRST defines one coset at a time at the
first hole in the table and propagates consequences (deductions and
coincidences) to a fixed point between definitions.  Both agree on the
group order whenever both terminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .words import Word, free_reduce, max_generator


@dataclass(frozen=True)
class FinitePresentation:
    """Plain finite presentation: generator count plus relator words.

    No Artin condition; any relator count is allowed.
    """

    ngens: int
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        if self.ngens < 0:
            raise ValueError("generator count must be nonnegative")
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))
        for i, relator in enumerate(self.relators, start=1):
            if max_generator(relator) > self.ngens:
                raise ValueError(f"relator {i} uses a generator beyond x{self.ngens}")


class Strategy(Enum):
    RELATOR_FIRST = "relator-first"
    DEFINITION_FIRST = "definition-first"


@dataclass(frozen=True)
class Finite:
    """The table closed: order is the group order, cosets_defined the total
    allocation (live plus collapsed)."""

    order: int
    cosets_defined: int


@dataclass(frozen=True)
class Exceeded:
    """The allocation budget ran out before the table closed."""

    limit: int


EnumResult = Finite | Exceeded


class CosetTable:
    """Partial multiplication table on cosets of the trivial subgroup.

    Columns alternate generator and inverse: column 2(k-1) holds the x_k
    image, column 2(k-1)+1 the x_k^-1 image.  Coincidences are handled by
    union-find with immediate folding of the dead row into the survivor;
    coset 0 is the minimum of its class and therefore never dies.  Dead
    rows keep their storage; readers resolve entries through rep().
    """

    def __init__(self, ngens: int) -> None:
        self.ngens = ngens
        self.ncols = 2 * ngens
        self.rows: list[list[int | None]] = [[None] * self.ncols]
        self.parent: list[int] = [0]
        self.live = 1
        self.defined = 1

    @staticmethod
    def column(letter: int) -> int:
        return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1

    def rep(self, coset: int) -> int:
        root = coset
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[coset] != root:
            self.parent[coset], coset = root, self.parent[coset]
        return root

    def is_live(self, coset: int) -> bool:
        return self.parent[coset] == coset

    def entry(self, coset: int, letter: int) -> int | None:
        column = self.column(letter)
        raw = self.rows[coset][column]
        if raw is None:
            return None
        rep = self.rep(raw)
        self.rows[coset][column] = rep
        return rep

    def set_entry(self, coset: int, letter: int, target: int) -> None:
        self.rows[coset][self.column(letter)] = target
        self.rows[target][self.column(-letter)] = coset

    def define(self, coset: int, letter: int) -> int:
        new = len(self.rows)
        self.rows.append([None] * self.ncols)
        self.parent.append(new)
        self.live += 1
        self.defined += 1
        self.set_entry(coset, letter, new)
        return new

    def merge(self, a: int, b: int) -> None:
        """Identify two cosets and fold tables, queueing induced
        coincidences until none remain."""
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            a, b = self.rep(a), self.rep(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            self.parent[b] = a
            self.live -= 1
            row_a, row_b = self.rows[a], self.rows[b]
            for column in range(self.ncols):
                target = row_b[column]
                if target is None:
                    continue
                if row_a[column] is None:
                    row_a[column] = target
                else:
                    queue.append((row_a[column], target))

    def scan(self, start: int, word: Word, fill: bool) -> bool:
        """Trace the cycle that a relator forces at a coset.

        Walks forward along defined entries, then backward from the far end.
        A one-letter gap becomes a deduction, a mismatch at the meeting
        point a coincidence.  With fill=True, wider gaps are bridged by
        defining new cosets, so the scan always completes.  Returns True if
        the table changed.
        """
        changed = False
        f = self.rep(start)
        b = f
        i, j = 0, len(word) - 1
        while True:
            while i <= j:
                nxt = self.entry(f, word[i])
                if nxt is None:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self.merge(f, b)
                    changed = True
                return changed
            while j >= i:
                nxt = self.entry(b, -word[j])
                if nxt is None:
                    break
                b = nxt
                j -= 1
            if j < i:
                # both walks covered the word; the junction cosets coincide
                if f != b:
                    self.merge(f, b)
                    changed = True
                return changed
            if i == j:
                self.set_entry(f, word[i], b)
                return True
            if not fill:
                return changed
            f = self.define(f, word[i])
            changed = True
            i += 1

    def check_consistency(self) -> None:
        """Inverse-pair invariant: entry(k, x) = k' iff entry(k', x^-1) = k,
        up to union-find representatives.  Assertable between scans."""
        for coset in range(len(self.rows)):
            if not self.is_live(coset):
                continue
            for column in range(self.ncols):
                raw = self.rows[coset][column]
                if raw is None:
                    continue
                target = self.rep(raw)
                back = self.rows[target][column ^ 1]
                if back is None or self.rep(back) != coset:
                    raise AssertionError(
                        f"table inconsistent at coset {coset}, column {column}"
                    )


def _column_letter(column: int) -> int:
    k = column // 2 + 1
    return k if column % 2 == 0 else -k


def enumerate_cosets(
    presentation: FinitePresentation,
    max_cosets: int = 100_000,
    strategy: Strategy = Strategy.RELATOR_FIRST,
    validate: bool = False,
) -> EnumResult:
    """Enumerate cosets of the trivial subgroup.

    Returns Finite(order, total defined) when the table closes, in which
    case order is exactly the group order, or Exceeded(max_cosets) once the
    allocation budget is exhausted.  Deterministic for a fixed strategy;
    raising the budget never changes a Finite answer.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    relators = tuple(r for r in presentation.relators if r)
    table = CosetTable(presentation.ngens)
    if strategy is Strategy.RELATOR_FIRST:
        return _relator_first(table, relators, max_cosets, validate)
    return _definition_first(table, relators, max_cosets, validate)


def _relator_first(
    table: CosetTable, relators: tuple[Word, ...], max_cosets: int, validate: bool
) -> EnumResult:
    alpha = 0
    while alpha < len(table.rows):
        if not table.is_live(alpha):
            alpha += 1
            continue
        for relator in relators:
            table.scan(alpha, relator, fill=True)
            if table.defined > max_cosets:
                return Exceeded(max_cosets)
            if validate:
                table.check_consistency()
            if not table.is_live(alpha):
                break
        if table.is_live(alpha):
            row = table.rows[alpha]
            for column in range(table.ncols):
                if row[column] is None:
                    table.define(alpha, _column_letter(column))
                    if table.defined > max_cosets:
                        return Exceeded(max_cosets)
        alpha += 1
    return Finite(table.live, table.defined)


def _definition_first(
    table: CosetTable, relators: tuple[Word, ...], max_cosets: int, validate: bool
) -> EnumResult:
    while True:
        while True:
            changed = False
            alpha = 0
            while alpha < len(table.rows):
                if table.is_live(alpha):
                    for relator in relators:
                        if table.scan(alpha, relator, fill=False):
                            changed = True
                        if not table.is_live(alpha):
                            break
                alpha += 1
            if validate:
                table.check_consistency()
            if not changed:
                break
        hole = None
        for coset in range(len(table.rows)):
            if not table.is_live(coset):
                continue
            row = table.rows[coset]
            for column in range(table.ncols):
                if row[column] is None:
                    hole = (coset, column)
                    break
            if hole:
                break
        if hole is None:
            return Finite(table.live, table.defined)
        if table.defined + 1 > max_cosets:
            return Exceeded(max_cosets)
        table.define(hole[0], _column_letter(hole[1]))
