"""Permutations and permutation groups with a deterministic stabilizer chain.

Points are 0-indexed internally. Cycle notation shown to users is 1-indexed.
Products act on the right: ``(a * b)(i) == b(a(i))``, so ``g ** x`` style
conjugation is ``x.inverse() * g * x``.
"""

import itertools
import math
import re
from collections import deque

from .config import LIMITS
from .errors import CapacityError, ContractViolation, InputError


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise InputError("permutation degree must be positive")
        if sorted(images) != list(range(n)):
            raise InputError(f"not a bijection of 0..{n - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images):
        # trusted constructor, skips the bijection check
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree, one_indexed=True):
        """Build from an iterable of cycles such as ``[(1, 2), (3, 4, 5)]``."""
        images = list(range(degree))
        seen = set()
        shift = 1 if one_indexed else 0
        for cyc in cycles:
            pts = [c - shift for c in cyc]
            for q in pts:
                if not 0 <= q < degree:
                    raise InputError(f"point {q + shift} out of range for degree {degree}")
                if q in seen:
                    raise InputError(f"point {q + shift} repeated in cycles")
                seen.add(q)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls._raw(tuple(images))

    @classmethod
    def parse(cls, text, degree):
        """Parse 1-indexed disjoint-cycle notation, e.g. ``"(1 2)(3 4 5)"``."""
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(degree)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", re.sub(r"\)\s+\(", ")(", text)):
            raise InputError(f"malformed cycle notation: {text!r}")
        cycles = [
            [int(t) for t in re.split(r"[\s,]+", body.strip())]
            for body in re.findall(r"\(([^()]*)\)", text)
        ]
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise InputError("degree mismatch in product")
        b = other.images
        return Permutation._raw(tuple([b[i] for i in self.images]))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    __invert__ = inverse

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, x):
        """Return ``x^-1 * self * x``."""
        xi = x.images
        out = [0] * len(xi)
        for i, j in enumerate(self.images):
            out[xi[i]] = xi[j]
        return Permutation._raw(tuple(out))

    def commutator(self, other):
        """``[a, b] = a^-1 b^-1 a b``."""
        return self.inverse() * other.inverse() * self * other

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self):
        return [i for i, j in enumerate(self.images) if i != j]

    def cycles(self):
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def cycle_string(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


class _Level:
    __slots__ = ("base", "gens", "trans", "trans_inv")

    def __init__(self, base):
        self.base = base
        self.gens = []
        self.trans = {}
        self.trans_inv = {}

    def rebuild_orbit(self, identity):
        """Breadth-first Schreier tree; deterministic in generator order."""
        b = self.base
        self.trans = {b: identity}
        queue = deque([b])
        while queue:
            pt = queue.popleft()
            u = self.trans[pt]
            for s in self.gens:
                q = s.images[pt]
                if q not in self.trans:
                    self.trans[q] = u * s
                    queue.append(q)
        self.trans_inv = {pt: u.inverse() for pt, u in self.trans.items()}

    def add_generator(self, g):
        """Append g and extend the orbit; existing transversal entries are kept."""
        self.gens.append(g)
        queue = deque()
        for pt in list(self.trans):
            q = g.images[pt]
            if q not in self.trans:
                self.trans[q] = self.trans[pt] * g
                self.trans_inv[q] = self.trans[q].inverse()
                queue.append(q)
        while queue:
            pt = queue.popleft()
            u = self.trans[pt]
            for s in self.gens:
                q = s.images[pt]
                if q not in self.trans:
                    self.trans[q] = u * s
                    self.trans_inv[q] = self.trans[q].inverse()
                    queue.append(q)


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    New base points are always the smallest point moved by the element that
    forced the new level, so the chain is reproducible.
    """

    def __init__(self, generators, degree):
        self.degree = degree
        self.identity = Permutation.identity(degree)
        self.levels = []
        gens = [g for g in generators if not g.is_identity()]
        if gens:
            self._schreier_sims(gens)

    @property
    def base(self):
        return [lv.base for lv in self.levels]

    @property
    def strong_generators(self):
        return list(self.levels[0].gens) if self.levels else []

    def orbit_sizes(self):
        return [len(lv.trans) for lv in self.levels]

    def order(self):
        return math.prod(self.orbit_sizes())

    def sift(self, g, start=0):
        """Return (residue, level at which sifting stopped)."""
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            beta = g.images[lv.base]
            inv = lv.trans_inv.get(beta)
            if inv is None:
                return g, i
            g = g * inv
        return g, len(self.levels)

    def contains(self, g):
        h, i = self.sift(g)
        return i == len(self.levels) and h.is_identity()

    def _schreier_sims(self, gens):
        first = gens[0].moved_points()[0]
        for g in gens[1:]:
            first = min(first, g.moved_points()[0])
        self.levels.append(_Level(first))
        self.levels[0].gens = list(gens)
        self.levels[0].rebuild_orbit(self.identity)
        # (point, generator index) pairs whose Schreier generator is known to
        # lie in the next stabilizer; stays valid because orbits only grow
        checked = [set()]
        i = 0
        while i >= 0:
            lv = self.levels[i]
            done = checked[i]
            restart = None
            for pt in list(lv.trans):
                u = lv.trans[pt]
                for k, s in enumerate(lv.gens):
                    if (pt, k) in done:
                        continue
                    q = s.images[pt]
                    y = u * s * lv.trans_inv[q]
                    if not y.is_identity():
                        h, j = self.sift(y, i + 1)
                        if j < len(self.levels) or not h.is_identity():
                            if j == len(self.levels):
                                lvl = _Level(h.moved_points()[0])
                                lvl.rebuild_orbit(self.identity)
                                self.levels.append(lvl)
                                checked.append(set())
                            for l in range(i + 1, j + 1):
                                self.levels[l].add_generator(h)
                            restart = j
                            break
                    done.add((pt, k))
                if restart is not None:
                    break
            i = restart if restart is not None else i - 1

    def elements(self):
        """Yield every element exactly once, via products of transversals."""
        if not self.levels:
            yield self.identity
            return
        per_level = [[lv.trans[pt] for pt in sorted(lv.trans)] for lv in self.levels]
        for combo in itertools.product(*reversed(per_level)):
            g = combo[0]
            for u in combo[1:]:
                g = g * u
            yield g


class PermGroup:
    """A finitely generated permutation group. Immutable after construction."""

    def __init__(self, generators, degree):
        if degree < 1:
            raise InputError("degree must be positive")
        if degree > LIMITS.max_degree:
            raise CapacityError("degree", degree, LIMITS.max_degree)
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                raise InputError(f"generator is not a Permutation: {g!r}")
            if g.degree != degree:
                raise InputError(f"generator of degree {g.degree} in a group of degree {degree}")
            if not g.is_identity() and g not in seen:
                seen.add(g)
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.chain = StabilizerChain(gens, degree)
        self.order = self.chain.order()
        self._cache = {}

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order}, ngens={len(self.generators)})"

    @property
    def identity(self):
        return self.chain.identity

    def is_trivial(self):
        return self.order == 1

    def contains(self, g):
        if g.degree != self.degree:
            raise InputError(f"degree mismatch: element {g.degree}, group {self.degree}")
        return self.chain.contains(g)

    __contains__ = contains

    def is_subgroup_of(self, other):
        return (
            self.degree == other.degree
            and other.order % self.order == 0
            and all(other.contains(g) for g in self.generators)
        )

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.order == other.order and self.is_subgroup_of(other)

    def __hash__(self):
        return hash((self.degree, self.order))

    def elements(self):
        """All elements as a list (cached). Capped by ``LIMITS.enumeration_cap``."""
        if "elements" not in self._cache:
            if self.order > LIMITS.enumeration_cap:
                raise CapacityError("enumeration", self.order, LIMITS.enumeration_cap)
            self._cache["elements"] = list(self.chain.elements())
        return self._cache["elements"]

    def element_set(self):
        if "element_set" not in self._cache:
            self._cache["element_set"] = frozenset(self.elements())
        return self._cache["element_set"]

    def sort_key(self):
        """Deterministic tie-break: order, then sorted generator images."""
        return (self.order, tuple(sorted(g.images for g in self.generators)))


def group_from_generators(gens, degree):
    return PermGroup(list(gens), degree)


def trivial_group(degree):
    return PermGroup([], degree)


def closure_elements(gens, degree, cap=None):
    """Exhaustive closure of ``gens`` by breadth-first multiplication.

    Independent of the stabilizer chain; used as an oracle.
    """
    cap = LIMITS.enumeration_cap if cap is None else cap
    e = Permutation.identity(degree)
    seen = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g * s
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise CapacityError("closure", len(seen), cap)
                queue.append(h)
    return seen


def is_normal(G, H):
    """True iff every G-generator conjugate of every H-generator lies in H."""
    if not H.is_subgroup_of(G):
        raise ContractViolation("is_normal: H is not a subgroup of G")
    return all(h.conjugate(x) in H for x in G.generators for h in H.generators)


def quotient_group(G, N):
    """Action of G on the right cosets of a normal subgroup N.

    Returns ``(Q, epi)`` where Q has degree |G:N| and ``epi(g)`` is the
    permutation induced by g on the cosets.
    """
    if not is_normal(G, N):
        raise ContractViolation("quotient_group: N is not normal in G")
    index = G.order // N.order
    if index > LIMITS.quotient_degree_cap:
        raise CapacityError("quotient degree", index, LIMITS.quotient_degree_cap)
    coset_of = {}
    reps = []
    n_elems = N.elements()
    for g in G.elements():
        if g in coset_of:
            continue
        c = len(reps)
        reps.append(g)
        for n in n_elems:
            coset_of[n * g] = c

    def epi(g):
        return Permutation._raw(tuple(coset_of[r * g] for r in reps))

    Q = PermGroup([epi(s) for s in G.generators], index)
    return Q, epi


_LINE_RE = re.compile(r"^(degree|gen)\b\s*(.*)$")


def parse_group_text(text):
    """Parse the group text format: ``degree <n>`` then ``gen <cycles>`` lines."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE_RE.match(line)
        if not m:
            raise InputError(f"line {lineno}: unrecognised directive {line!r}")
        key, rest = m.groups()
        if key == "degree":
            if degree is not None:
                raise InputError(f"line {lineno}: duplicate degree line")
            if gens:
                raise InputError(f"line {lineno}: degree must precede generators")
            try:
                degree = int(rest)
            except ValueError:
                raise InputError(f"line {lineno}: bad degree {rest!r}") from None
            if degree < 1:
                raise InputError(f"line {lineno}: degree must be positive")
        else:
            if degree is None:
                raise InputError(f"line {lineno}: gen before degree")
            try:
                gens.append(Permutation.parse(rest, degree))
            except InputError as exc:
                raise InputError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise InputError("missing degree line")
    return group_from_generators(gens, degree)


def format_group_text(G, comment=None):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"degree {G.degree}")
    lines.extend(f"gen {g.cycle_string()}" for g in G.generators)
    return "\n".join(lines) + "\n"
