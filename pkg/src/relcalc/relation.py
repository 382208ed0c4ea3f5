"""Relations over q-state hypercubes stored as packed bit tables.

A relation on k named points with q states per point is a subset of the
q^k assignment tuples.  Tuple (s0, ..., s_{k-1}) gets the ordinal
s0 + s1*q + s2*q^2 + ... (little-endian, s0 belongs to the first point),
and bit i of the table is set iff the tuple with ordinal i is a member.
Tables live in Python ints, so the set operations are single bitwise ops.
"""

from dataclasses import dataclass, field

from .errors import DomainError, FormatError, UnsupportedError

# Guard against accidentally astronomic tables (q^k cells).
MAX_TABLE_CELLS = 2 ** 32


@dataclass(frozen=True)
class Domain:
    """Ordered point names plus the common state count q."""

    points: tuple[str, ...]
    q: int
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if not points:
            raise DomainError("domain needs at least one point")
        if len(set(points)) != len(points):
            raise DomainError(f"duplicate point names in {points}")
        if self.q < 2:
            raise DomainError(f"state count must be >= 2, got {self.q}")
        if self.q ** len(points) > MAX_TABLE_CELLS:
            raise UnsupportedError(
                f"table would need {self.q}^{len(points)} cells "
                f"(limit {MAX_TABLE_CELLS})")
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(points)})

    @property
    def k(self):
        return len(self.points)

    @property
    def size(self):
        """Number of cells in the bit table."""
        return self.q ** len(self.points)

    def index(self, point):
        try:
            return self._index[point]
        except KeyError:
            raise DomainError(f"unknown point {point!r} in domain {self.points}") from None

    def face(self, points):
        """Subdomain on the given points, kept in this domain's order."""
        pts = tuple(points)
        for p in pts:
            self.index(p)
        if len(set(pts)) != len(pts):
            raise DomainError(f"duplicate points in face {pts}")
        ordered = tuple(p for p in self.points if p in set(pts))
        return Domain(ordered, self.q)


@dataclass(frozen=True)
class Relation:
    """A subset of a domain's hypercube, one membership bit per tuple."""

    domain: Domain
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.domain.size):
            raise FormatError(
                f"bit table out of range for {self.domain.size} cells")

    @property
    def size(self):
        return self.domain.size

    def bit_string(self):
        """Characters for ordinals 0, 1, 2, ... in that order."""
        return format(self.bits, f"0{self.size}b")[::-1]

    def hex_string(self):
        """Hex digits, most significant nibble covering ordinals 0-3."""
        s = self.bit_string()
        pad = -len(s) % 4
        s += "0" * pad
        return "".join(format(int(s[i:i + 4], 2), "X") for i in range(0, len(s), 4))


def encode_point(states, q):
    """Ordinal of a state tuple: sum of states[j] * q^j."""
    total = 0
    for j, s in enumerate(states):
        if not 0 <= s < q:
            raise DomainError(f"state {s} out of range [0, {q})")
        total += s * q ** j
    return total


def decode_point(ordinal, k, q):
    """State tuple of an ordinal; inverse of encode_point."""
    if not 0 <= ordinal < q ** k:
        raise DomainError(f"ordinal {ordinal} out of range for q^k = {q ** k}")
    states = []
    for _ in range(k):
        ordinal, s = divmod(ordinal, q)
        states.append(s)
    return tuple(states)


def make_relation(domain, bits):
    """Build a relation from an int, a 0/1 string, or a bit iterable."""
    if isinstance(bits, str):
        text = bits.strip()
        if len(text) != domain.size:
            raise FormatError(
                f"bit table has {len(text)} characters, domain needs {domain.size}")
        bad = set(text) - {"0", "1"}
        if bad:
            raise FormatError(f"bit table contains {sorted(bad)}, only 0/1 allowed")
        value = int(text[::-1], 2)
    elif isinstance(bits, int):
        value = bits
    else:
        seq = list(bits)
        if len(seq) != domain.size:
            raise FormatError(
                f"bit sequence has {len(seq)} entries, domain needs {domain.size}")
        value = 0
        for i, b in enumerate(seq):
            if b not in (0, 1):
                raise FormatError(f"bit sequence entry {b!r} is not 0/1")
            value |= b << i
    return Relation(domain, value)


def relation_from_hex(domain, text):
    """Build a relation from hex digits (see Relation.hex_string)."""
    text = text.strip()
    expected = (domain.size + 3) // 4
    if len(text) != expected:
        raise FormatError(
            f"hex table has {len(text)} digits, domain needs {expected}")
    try:
        chunks = [format(int(c, 16), "04b") for c in text]
    except ValueError:
        raise FormatError(f"bad hex digit in {text!r}") from None
    bitstr = "".join(chunks)
    if len(bitstr) > domain.size and bitstr[domain.size:].strip("0"):
        raise FormatError("hex table has nonzero padding past the last ordinal")
    return make_relation(domain, bitstr[:domain.size])


def relation_from_members(domain, tuples):
    """Relation containing exactly the given state tuples."""
    value = 0
    for t in tuples:
        if len(t) != domain.k:
            raise DomainError(f"tuple {t} has arity {len(t)}, domain has {domain.k}")
        value |= 1 << encode_point(t, domain.q)
    return Relation(domain, value)


def empty_relation(domain):
    return Relation(domain, 0)


def trivial_relation(domain):
    return Relation(domain, (1 << domain.size) - 1)


def is_empty(rel):
    return rel.bits == 0


def is_trivial(rel):
    return rel.bits == (1 << rel.size) - 1


def contains(rel, states):
    """Membership test for one state tuple."""
    if len(states) != rel.domain.k:
        raise DomainError(
            f"tuple arity {len(states)} does not match domain arity {rel.domain.k}")
    return bool(rel.bits >> encode_point(states, rel.domain.q) & 1)


def members(rel):
    """Iterate member tuples in ordinal order."""
    k, q = rel.domain.k, rel.domain.q
    bits = rel.bits
    i = 0
    while bits:
        if bits & 1:
            yield decode_point(i, k, q)
        bits >>= 1
        i += 1


def cardinality(rel):
    return rel.bits.bit_count()


def _same_domain(r1, r2):
    if r1.domain != r2.domain:
        raise DomainError(
            f"domain mismatch: {r1.domain.points} q={r1.domain.q} "
            f"vs {r2.domain.points} q={r2.domain.q}")


def intersect(r1, r2):
    _same_domain(r1, r2)
    return Relation(r1.domain, r1.bits & r2.bits)


def union(r1, r2):
    _same_domain(r1, r2)
    return Relation(r1.domain, r1.bits | r2.bits)


def complement(rel):
    return Relation(rel.domain, ~rel.bits & (1 << rel.size) - 1)


def extend(rel, superdomain):
    """Cylinder of a relation over a larger domain.

    A tuple belongs to the result iff its restriction to the original
    points belongs to the relation.
    """
    if superdomain.q != rel.domain.q:
        raise DomainError(f"state counts differ: {rel.domain.q} vs {superdomain.q}")
    positions = [superdomain.index(p) for p in rel.domain.points]
    q, k = superdomain.q, superdomain.k
    value = 0
    for i in range(superdomain.size):
        t = decode_point(i, k, q)
        sub = tuple(t[j] for j in positions)
        if rel.bits >> encode_point(sub, q) & 1:
            value |= 1 << i
    return Relation(superdomain, value)


def project(rel, subdomain):
    """Strongest consequence on a face: tuples with at least one extension in rel.

    The result is the smallest relation on the face whose cylinder contains rel.
    """
    if isinstance(subdomain, (tuple, list, set, frozenset)):
        subdomain = rel.domain.face(subdomain)
    if subdomain.q != rel.domain.q:
        raise DomainError(f"state counts differ: {rel.domain.q} vs {subdomain.q}")
    positions = [rel.domain.index(p) for p in subdomain.points]
    q = rel.domain.q
    value = 0
    for t in members(rel):
        sub = tuple(t[j] for j in positions)
        value |= 1 << encode_point(sub, q)
    return Relation(subdomain, value)


def permute_points(rel, new_order):
    """Same abstract relation, stored with the points in a new order."""
    new_pts = tuple(new_order)
    if sorted(new_pts) != sorted(rel.domain.points):
        raise DomainError(
            f"{new_pts} is not a permutation of {rel.domain.points}")
    new_dom = Domain(new_pts, rel.domain.q)
    positions = [rel.domain.index(p) for p in new_pts]
    q, k = new_dom.q, new_dom.k
    old = [0] * k
    value = 0
    for i in range(new_dom.size):
        t = decode_point(i, k, q)
        for j, pos in enumerate(positions):
            old[pos] = t[j]
        if rel.bits >> encode_point(old, q) & 1:
            value |= 1 << i
    return Relation(new_dom, value)


def rename_points(rel, mapping):
    """Substitute point names; bit table is untouched."""
    new_pts = tuple(mapping.get(p, p) for p in rel.domain.points)
    return Relation(Domain(new_pts, rel.domain.q), rel.bits)
