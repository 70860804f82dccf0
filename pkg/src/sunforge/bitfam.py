"""Core data model: packed binary vectors, q-ary vectors, and families.

Binary vectors of length n are packed into a single Python int whose binary
digits, most significant first, read off coordinates 1..n.  With this layout
the lexicographic order on coordinate strings coincides with integer order,
parsing is ``int(s, 2)`` and coordinate c (1-based) lives at bit ``n - c``.
All bit-level machinery (xor masks, popcounts, column accumulators) works on
these ints directly.

q-ary vectors store one symbol per byte, so q <= 256.  Families are
deduplicated ordered collections; member indices into a family are stable and
0-based, while coordinates are 1-based in every external report.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TextIO

MAX_N = 4096  # fixed ceiling on vector length; desk-scale experiments only


def _check_length(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise ValueError(f"vector length {n} outside [0, {MAX_N}]")


@dataclass(frozen=True)
class BitVector:
    """Length-n binary vector packed into an int (MSB = coordinate 1)."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_length(self.n)
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError("mask has bits outside positions 1..n")

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        s = s.strip()
        if s and set(s) - {"0", "1"}:
            raise ValueError(f"not a binary string: {s!r}")
        return cls(len(s), int(s, 2) if s else 0)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        m = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit {b!r} not in {{0,1}}")
            m = (m << 1) | b
        return cls(len(bits), m)

    def bit(self, coord: int) -> int:
        """Entry at 1-based coordinate."""
        if not 1 <= coord <= self.n:
            raise IndexError(f"coordinate {coord} outside [1, {self.n}]")
        return (self.mask >> (self.n - coord)) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> (self.n - c)) & 1 for c in range(1, self.n + 1))

    def weight(self) -> int:
        return self.mask.bit_count()

    def complement(self) -> "BitVector":
        return BitVector(self.n, self.mask ^ ((1 << self.n) - 1))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return BitVector(self.n, self.mask ^ other.mask)

    def __str__(self) -> str:
        return format(self.mask, f"0{self.n}b") if self.n else ""


def symmetric_difference(a: BitVector, b: BitVector) -> BitVector:
    """Coordinate-wise xor; its weight is the Hamming distance."""
    return a ^ b


@dataclass(frozen=True)
class QVector:
    """Length-n vector over the alphabet {0, ..., q-1}, one symbol per byte."""

    q: int
    symbols: bytes

    def __post_init__(self) -> None:
        if not 2 <= self.q <= 256:
            raise ValueError(f"alphabet size {self.q} outside [2, 256]")
        _check_length(len(self.symbols))
        if any(s >= self.q for s in self.symbols):
            raise ValueError("symbol out of alphabet range")

    @property
    def n(self) -> int:
        return len(self.symbols)

    def diff_mask(self, other: "QVector") -> int:
        """Int mask of coordinates where the two vectors differ."""
        if self.n != other.n or self.q != other.q:
            raise ValueError("length or alphabet mismatch")
        m = 0
        for a, b in zip(self.symbols, other.symbols):
            m = (m << 1) | (a != b)
        return m

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.symbols)


class Family:
    """Ordered, duplicate-free collection of equal-length BitVectors.

    Immutable after construction; safe to share across workers.  Insertion
    order is retained so witness index tuples are reproducible.
    """

    __slots__ = ("n", "_members", "_masks", "_index")

    def __init__(self, n: int, members: Iterable[BitVector] = ()):
        _check_length(n)
        self.n = n
        mem: list[BitVector] = []
        idx: dict[int, int] = {}
        for v in members:
            if v.n != n:
                raise ValueError(f"member length {v.n} != family length {n}")
            if v.mask in idx:
                raise ValueError(f"duplicate member {v}")
            idx[v.mask] = len(mem)
            mem.append(v)
        self._members = tuple(mem)
        self._masks = tuple(v.mask for v in mem)
        self._index = idx

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Family":
        return cls(n, (BitVector(n, m) for m in masks))

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "Family":
        vecs = [BitVector.from_string(s) for s in strings]
        if not vecs:
            raise ValueError("cannot infer n from an empty string list")
        return cls(vecs[0].n, vecs)

    @property
    def members(self) -> tuple[BitVector, ...]:
        return self._members

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def index_of(self, v: BitVector) -> int:
        return self._index[v.mask]

    def index_of_mask(self, mask: int) -> int:
        return self._index[mask]

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self._members)

    def __getitem__(self, i: int) -> BitVector:
        return self._members[i]

    def __contains__(self, v: BitVector) -> bool:
        return isinstance(v, BitVector) and v.n == self.n and v.mask in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Family(n={self.n}, size={len(self)})"


class QFamily:
    """Ordered, duplicate-free collection of q-ary vectors sharing (n, q)."""

    __slots__ = ("n", "q", "_members", "_index")

    def __init__(self, n: int, q: int, members: Iterable[QVector] = ()):
        _check_length(n)
        if not 2 <= q <= 256:
            raise ValueError(f"alphabet size {q} outside [2, 256]")
        self.n = n
        self.q = q
        mem: list[QVector] = []
        idx: dict[bytes, int] = {}
        for v in members:
            if v.n != n or v.q != q:
                raise ValueError("member (n, q) does not match family")
            if v.symbols in idx:
                raise ValueError(f"duplicate member {v}")
            idx[v.symbols] = len(mem)
            mem.append(v)
        self._members = tuple(mem)
        self._index = idx

    @property
    def members(self) -> tuple[QVector, ...]:
        return self._members

    def index_of(self, v: QVector) -> int:
        return self._index[v.symbols]

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[QVector]:
        return iter(self._members)

    def __getitem__(self, i: int) -> QVector:
        return self._members[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QFamily):
            return NotImplemented
        return (self.n, self.q) == (other.n, other.q) and all(
            a.symbols == b.symbols for a, b in zip(self._members, other._members)
        ) and len(self) == len(other)

    def __repr__(self) -> str:
        return f"QFamily(n={self.n}, q={self.q}, size={len(self)})"


@dataclass(frozen=True)
class ColumnProfile:
    """Per-coordinate count of 1 entries over a selected tuple of members."""

    counts: tuple[int, ...]


@dataclass(frozen=True)
class Params:
    """Validated parameter bundle shared by searches and constructions."""

    n: int
    r: int
    q: int = 2
    k: int = 0
    b: int = 1

    def __post_init__(self) -> None:
        _check_length(self.n)
        if self.r < 3:
            raise ValueError(f"family size r={self.r} must be >= 3")
        if self.q < 2:
            raise ValueError(f"alphabet size q={self.q} must be >= 2")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"uniformity k={self.k} outside [0, {self.n}]")
        if self.b not in (0, 1):
            raise ValueError(f"side bit b={self.b} not in {{0,1}}")


def _checked_indices(size: int, indices: Sequence[int]) -> tuple[int, ...]:
    idx = tuple(indices)
    for i in idx:
        if not 0 <= i < size:
            raise IndexError(f"member index {i} outside [0, {size})")
    if len(set(idx)) != len(idx):
        raise ValueError(f"duplicate member indices in {idx}")
    return idx


def _accumulate_counts(masks: Sequence[int]) -> list[int]:
    """Word-parallel column counter: binary planes with ripple carry."""
    planes: list[int] = []
    for m in masks:
        carry = m
        for lvl in range(len(planes)):
            planes[lvl], carry = planes[lvl] ^ carry, planes[lvl] & carry
            if not carry:
                break
        if carry:
            planes.append(carry)
    return planes


def column_profile(family: Family, indices: Sequence[int]) -> ColumnProfile:
    """Count, for each coordinate, how many selected members carry a 1.

    The accumulation is word-parallel over bit planes and agrees bit for bit
    with a per-coordinate loop.
    """
    idx = _checked_indices(len(family), indices)
    masks = [family.masks[i] for i in idx]
    planes = _accumulate_counts(masks)
    n = family.n
    counts = [0] * n
    for lvl, plane in enumerate(planes):
        add = 1 << lvl
        while plane:
            low = plane & -plane
            counts[n - low.bit_length()] += add
            plane ^= low
    return ColumnProfile(tuple(counts))


def complement_family(family: Family) -> Family:
    """Complement every member coordinate-wise; an involution on families."""
    full = (1 << family.n) - 1
    return Family.from_masks(family.n, (m ^ full for m in family.masks))


# ---------------------------------------------------------------------------
# Text format: header line "n=<n> q=<q>", then one vector per line (binary as
# a 0/1 string, q-ary as comma-separated decimal symbols); '#' opens a comment.
# Leftmost character is coordinate 1.
# ---------------------------------------------------------------------------


class FamilyParseError(ValueError):
    """Raised when a family file does not follow the text format."""


def _parse_header(line: str) -> tuple[int, int]:
    fields = dict(
        part.split("=", 1) for part in line.split() if "=" in part
    )
    try:
        n = int(fields["n"])
        q = int(fields["q"])
    except (KeyError, ValueError) as exc:
        raise FamilyParseError(f"bad header line: {line!r}") from exc
    return n, q


def load_family(source: str | TextIO) -> Family | QFamily:
    """Parse the text format; returns a Family for q=2, else a QFamily."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            return load_family(fh)
    lines = [
        ln.strip()
        for ln in source
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise FamilyParseError("empty family file")
    n, q = _parse_header(lines[0])
    body = lines[1:]
    try:
        if q == 2:
            vecs = [BitVector.from_string(ln) for ln in body]
            for v in vecs:
                if v.n != n:
                    raise ValueError(f"vector length {v.n} != header n={n}")
            return Family(n, vecs)
        qvecs = []
        for ln in body:
            syms = bytes(int(tok) for tok in ln.split(","))
            if len(syms) != n:
                raise ValueError(f"vector length {len(syms)} != header n={n}")
            qvecs.append(QVector(q, syms))
        return QFamily(n, q, qvecs)
    except ValueError as exc:
        raise FamilyParseError(str(exc)) from exc


def dump_family(family: Family | QFamily, sink: str | TextIO | None = None) -> str:
    """Serialize to the text format; returns the text, optionally writing it."""
    q = 2 if isinstance(family, Family) else family.q
    out = io.StringIO()
    out.write(f"n={family.n} q={q}\n")
    for v in family:
        out.write(f"{v}\n")
    text = out.getvalue()
    if isinstance(sink, str):
        with open(sink, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif sink is not None:
        sink.write(text)
    return text
