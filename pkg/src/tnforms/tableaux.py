"""Partitions, skew shapes, semistandard and Littlewood-Richardson tableaux.

Conventions: partitions are weakly decreasing tuples indexed from 0 and may
carry significant trailing zeros; tableau entries start at 0; fillings are
enumerated row by row, lexicographically smallest first, so every stream is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import ContractError

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int], length: int | None = None) -> Partition:
    """Validate weak decrease and pad with trailing zeros to ``length``."""
    out = tuple(int(p) for p in parts)
    if any(p < 0 for p in out):
        raise ContractError(f"partition parts must be nonnegative: {out}")
    if any(a < b for a, b in zip(out, out[1:])):
        raise ContractError(f"partition parts must weakly decrease: {out}")
    if length is not None:
        if len(out) > length:
            if any(out[length:]):
                raise ContractError(f"partition {out} longer than {length}")
            out = out[:length]
        out = out + (0,) * (length - len(out))
    return out


def partition_size(parts: Sequence[int]) -> int:
    return sum(parts)


def conjugate(parts: Sequence[int]) -> Partition:
    parts = as_partition(parts)
    if not parts or parts[0] == 0:
        return ()
    return tuple(sum(1 for p in parts if p > col) for col in range(parts[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Whether the inner diagram fits inside the outer one."""
    length = max(len(outer), len(inner))
    o = as_partition(outer, length)
    i = as_partition(inner, length)
    return all(ip <= op for op, ip in zip(o, i))


def iter_partitions(max_size: int, max_part: int | None = None,
                    max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of total size 0..max_size, largest part first."""

    def rec(remaining: int, cap: int, length: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if remaining == 0 or length == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - part, part, length - 1):
                yield (part,) + rest

    cap = max_size if max_part is None else max_part
    length = max_size if max_length is None else max_length
    yield from rec(max_size, cap, length)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        length = max(len(self.outer), len(self.inner))
        outer = as_partition(self.outer, length)
        inner = as_partition(self.inner, length)
        if any(ip > op for op, ip in zip(outer, inner)):
            raise ContractError(
                f"inner shape {inner} does not fit inside {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def straight(cls, outer: Sequence[int]) -> "SkewShape":
        outer = as_partition(outer)
        return cls(outer, (0,) * len(outer))

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    def row_span(self, p: int) -> tuple[int, int]:
        """Column interval [start, end) of the boxes in row p."""
        return self.inner[p], self.outer[p]

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def column_of_box_above(self, p: int, col: int) -> bool:
        """Whether row p-1 has a box in this column."""
        return p > 0 and self.inner[p - 1] <= col < self.outer[p - 1]

    def ascii_diagram(self, filling: Sequence[Sequence[int]] | None = None) -> str:
        lines = []
        for p in range(self.n_rows):
            start, end = self.row_span(p)
            cells = ["." ] * start
            if filling is None:
                cells += ["[]"] * (end - start)
            else:
                cells += [f"{v}" for v in filling[p]]
            lines.append(" ".join(cells))
        return "\n".join(lines)


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.shape.n_rows:
            raise ContractError("filling has the wrong number of rows")
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        for p, row in enumerate(rows):
            start, end = self.shape.row_span(p)
            if len(row) != end - start:
                raise ContractError(
                    f"row {p} needs {end - start} entries, got {len(row)}")
        object.__setattr__(self, "rows", rows)

    def entry(self, p: int, col: int) -> int:
        start, _ = self.shape.row_span(p)
        return self.rows[p][col - start]

    def max_entry(self) -> int:
        return max((v for row in self.rows for v in row), default=-1)

    def content(self, length: int | None = None) -> tuple[int, ...]:
        """Occurrence counts of 0, 1, 2, ...; optionally padded/truncated."""
        top = self.max_entry()
        counts = [0] * (top + 1)
        for row in self.rows:
            for v in row:
                counts[v] += 1
        if length is not None:
            if len(counts) > length:
                raise ContractError("entries exceed the requested content length")
            counts += [0] * (length - len(counts))
        return tuple(counts)

    def is_semistandard(self) -> bool:
        """Rows weakly increase left to right, columns strictly increase down."""
        shape = self.shape
        for p, row in enumerate(self.rows):
            if any(a > b for a, b in zip(row, row[1:])):
                return False
            start, end = shape.row_span(p)
            for col in range(start, end):
                if shape.column_of_box_above(p, col):
                    if self.entry(p - 1, col) >= self.entry(p, col):
                        return False
        return True


def row_word(tableau: Tableau) -> tuple[int, ...]:
    """Entries read bottom row first, each row left to right."""
    word: list[int] = []
    for row in reversed(tableau.rows):
        word.extend(row)
    return tuple(word)


def is_reverse_lattice_word(word: Sequence[int]) -> bool:
    """Every suffix, read from the end backwards, has #0 >= #1 >= #2 >= ..."""
    counts: dict[int, int] = {}
    for letter in reversed(tuple(word)):
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 0 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


def enumerate_ssyt(shape: SkewShape, max_entry: int) -> Iterator[Tableau]:
    """All semistandard fillings with entries in {0, ..., max_entry-1}.

    Boxes are filled in reading order; at each box candidate values run from
    the smallest legal one upward, so the stream is deterministic and the
    empty shape yields exactly the empty tableau.
    """
    if max_entry < 1:
        raise ContractError("max_entry must be at least 1")
    boxes = [(p, col) for p in range(shape.n_rows)
             for col in range(*shape.row_span(p))]
    filling: dict[tuple[int, int], int] = {}

    def rec(pos: int) -> Iterator[Tableau]:
        if pos == len(boxes):
            rows = tuple(
                tuple(filling[p, col] for col in range(*shape.row_span(p)))
                for p in range(shape.n_rows))
            yield Tableau(shape, rows)
            return
        p, col = boxes[pos]
        start, _ = shape.row_span(p)
        low = 0
        if col > start:
            low = filling[p, col - 1]
        if shape.column_of_box_above(p, col):
            low = max(low, filling[p - 1, col] + 1)
        for value in range(low, max_entry):
            filling[p, col] = value
            yield from rec(pos + 1)
        filling.pop((p, col), None)

    yield from rec(0)


def enumerate_lr_tableaux(shape: SkewShape) -> Iterator[Tableau]:
    """Semistandard fillings whose row word is a reverse lattice word.

    Entries of such fillings never exceed the row index, so entries drawn
    from {0, ..., n_rows - 1} cover every Littlewood-Richardson tableau.
    """
    if shape.n_rows == 0 or shape.size() == 0:
        if shape.size() == 0:
            yield Tableau(shape, tuple(() for _ in range(shape.n_rows)))
        return
    for tableau in enumerate_ssyt(shape, shape.n_rows):
        if is_reverse_lattice_word(row_word(tableau)):
            assert tableau.is_semistandard()
            yield tableau


def lr_partitions(shape: SkewShape) -> dict[Partition, int]:
    """Contents of the Littlewood-Richardson fillings with multiplicities."""
    out: dict[Partition, int] = {}
    for tableau in enumerate_lr_tableaux(shape):
        content = tableau.content(length=shape.n_rows)
        assert all(a >= b for a, b in zip(content, content[1:]))
        out[content] = out.get(content, 0) + 1
    return out


def lr_coefficient(outer: Sequence[int], inner: Sequence[int],
                   content: Sequence[int]) -> int:
    """Number of Littlewood-Richardson fillings of outer/inner with the content."""
    if not contains(outer, inner):
        raise ContractError("inner shape must fit inside the outer shape")
    shape = SkewShape(as_partition(outer), as_partition(inner, len(outer)))
    target = as_partition(content)
    count = 0
    for tableau in enumerate_lr_tableaux(shape):
        got = tableau.content()
        if tuple(v for v in got if v) == tuple(v for v in target if v):
            count += 1
    return count
