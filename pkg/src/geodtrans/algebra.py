"""Finite fields GF(p^e), PSL(2, p), and coset graphs.

Field elements are integers ``0 .. q-1``: the element ``c0 + c1 x + ...`` is
stored as ``c0 + c1 p + c2 p^2 + ...`` (coefficient-vector rank).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from .errors import ConstructionError, GraphError
from .graph import Graph


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, e)`` with ``q = p**e``, or ``None``."""
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            return (p, e) if q == 1 and is_prime(p) else None
    return None


# -- polynomials over F_p, coefficient lists low degree first ----------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, m, p):
    a = _trim(list(a))
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        f = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return a


def _polymul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Monic-or-not irreducibility over F_p by trial division (desk scale)."""
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for coeffs in itertools.product(range(p), repeat=d):
            divisor = list(coeffs) + [1]
            if not _polymod(poly, divisor, p):
                return False
    return True


def _monic_polys(p, e):
    """Monic degree-e polynomials, lexicographic on (c_{e-1}, ..., c_0)."""
    for high_first in itertools.product(range(p), repeat=e):
        yield list(reversed(high_first)) + [1]


class FiniteField:
    """GF(p^e) with a verified irreducible modulus and log/antilog tables."""

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise GraphError(f"{p} is not prime")
        if e < 1:
            raise GraphError("extension degree must be positive")
        self.p, self.e, self.q = p, e, p ** e
        if modulus is None:
            if e == 1:
                modulus = [0, 1]
            else:
                modulus = next(m for m in _monic_polys(p, e) if is_irreducible(m, p))
        modulus = [c % p for c in modulus]
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise GraphError(f"modulus must be monic of degree {e}")
        if e > 1 and not is_irreducible(modulus, p):
            raise GraphError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = tuple(modulus)
        self._digits = [self._to_vec(a) for a in range(self.q)]
        self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def _to_vec(self, a):
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_vec(self, v):
        a = 0
        for c in reversed(list(v) + [0] * (self.e - len(v))):
            a = a * self.p + c
        return a

    def _polymul_elems(self, a, b):
        prod = _polymul(_trim(self._to_vec(a)), _trim(self._to_vec(b)), self.p)
        return self._from_vec(_polymod(prod, list(self.modulus), self.p))

    def _build_tables(self):
        q = self.q
        # primitive element: smallest element of exact multiplicative order q-1
        for w in range(1, q):
            x, k = w, 1
            while x != 1:
                x = self._polymul_elems(x, w)
                k += 1
            if k == q - 1:
                break
        else:
            raise ConstructionError("no primitive element found")
        self.primitive = w
        exp = [1] * (q - 1)
        for k in range(1, q - 1):
            exp[k] = self._polymul_elems(exp[k - 1], w)
        if len(set(exp)) != q - 1:
            raise ConstructionError("powers of the primitive element are not distinct")
        self._exp = exp
        self._log = {x: k for k, x in enumerate(exp)}

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        p = self.p
        return self._from_vec([(x + y) % p for x, y in zip(self._digits[a], self._digits[b])])

    def neg(self, a: int) -> int:
        p = self.p
        return self._from_vec([(-x) % p for x in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k > 0 else 1
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def order_of(self, a: int) -> int:
        from math import gcd
        return (self.q - 1) // gcd(self._log[a], self.q - 1)

    def format(self, a: int) -> str:
        """Polynomial in ``x`` with coefficients in ``0..p-1``, e.g. ``2x+1``."""
        terms = []
        for deg in range(self.e - 1, -1, -1):
            c = self._digits[a][deg]
            if c == 0:
                continue
            coef = "" if (c == 1 and deg > 0) else str(c)
            mono = "" if deg == 0 else ("x" if deg == 1 else f"x^{deg}")
            terms.append(coef + mono)
        return "+".join(terms) or "0"

    def parse(self, text: str) -> int:
        text = text.replace(" ", "")
        if text == "0":
            return 0
        vec = [0] * self.e
        for term in text.split("+"):
            if "x" in term:
                coef, _, power = term.partition("x")
                deg = int(power[1:]) if power.startswith("^") else 1
                c = int(coef) if coef else 1
            else:
                deg, c = 0, int(term)
            vec[deg] = (vec[deg] + c) % self.p
        return self._from_vec(vec)


def field_make(p: int, e: int = 1, poly: Sequence[int] | None = None) -> FiniteField:
    """GF(p^e); default modulus is the lexicographically smallest irreducible monic polynomial."""
    return FiniteField(p, e, poly)


def squares(field: FiniteField) -> frozenset[int]:
    """The nonzero squares ``{w^2, w^4, ..., w^(q-1) = 1}``."""
    return frozenset(field.pow(field.primitive, 2 * k) for k in range(1, (field.q - 1) // 2 + 1))


# -- PSL(2, p) ----------------------------------------------------------------

Matrix = tuple[int, int, int, int]


def normalize(m: Sequence[int], p: int) -> Matrix:
    """Representative of ``{M, -M}`` whose first nonzero entry lies in ``1..(p-1)/2``."""
    m = tuple(x % p for x in m)
    first = next(x for x in m if x)
    if first > (p - 1) // 2:
        m = tuple((-x) % p for x in m)
    return m


def matmul(a: Matrix, b: Matrix, p: int) -> Matrix:
    return normalize((a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                      a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]), p)


def matinv(a: Matrix, p: int) -> Matrix:
    # determinant is 1
    return normalize((a[3], -a[1], -a[2], a[0]), p)


def format_matrix(m: Matrix) -> str:
    return "(" + ",".join(map(str, m)) + ")"


class EnumeratedGroup:
    """A finite group listed element by element, with its multiplication."""

    def __init__(self, elements: Iterable[Hashable], mul: Callable, identity: Hashable,
                 inv: Callable | None = None, name: str = ""):
        self.elements = sorted(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.mul = mul
        self.identity = identity
        self._inv = inv
        self.name = name
        if identity not in self.index:
            raise GraphError("identity is not among the elements")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    @property
    def order(self) -> int:
        return len(self.elements)

    def inv(self, x):
        if self._inv is not None:
            return self._inv(x)
        for y in self.elements:
            if self.mul(x, y) == self.identity:
                return y
        raise GraphError(f"{x!r} has no inverse")

    def power(self, x, k: int):
        out = self.identity
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def element_order(self, x) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def closure(self, gens: Iterable) -> frozenset:
        """Subgroup generated by ``gens``."""
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    def is_subgroup(self, subset: Iterable) -> bool:
        s = set(subset)
        if self.identity not in s:
            return False
        return all(self.mul(x, y) in s for x in s for y in s)

    @classmethod
    def from_generators(cls, gens, mul, identity, inv=None, name=""):
        tmp = cls([identity], mul, identity, inv)
        return cls(tmp.closure(gens), mul, identity, inv, name)


def psl2(p: int) -> EnumeratedGroup:
    """All normalized determinant-one 2x2 matrices over F_p, modulo ``±I``."""
    if p == 2 or not is_prime(p):
        raise GraphError(f"psl2 needs an odd prime, got {p}")
    elems = set()
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            elems.add(normalize((a, b, c, d), p))
    group = EnumeratedGroup(elems, lambda x, y: matmul(x, y, p), normalize((1, 0, 0, 1), p),
                            inv=lambda x: matinv(x, p), name=f"PSL(2,{p})")
    if group.order != p * (p * p - 1) // 2:
        raise ConstructionError(f"|PSL(2,{p})| = {group.order}")
    return group


@dataclass
class CosetGraph:
    graph: Graph
    representatives: list  # vertex -> canonical coset representative
    coset_of: dict  # group element -> vertex
    valency: int


def coset_graph(group: EnumeratedGroup, H: Iterable, g) -> Graph:
    """``Cos(G, H, HgH)``: right cosets ``Hx``, with ``Hx ~ Hy`` iff ``y x^-1`` lies in ``HgH``."""
    return coset_graph_data(group, H, g).graph


def coset_graph_data(group: EnumeratedGroup, H: Iterable, g) -> CosetGraph:
    H = frozenset(H)
    if not H <= set(group.index) or not group.is_subgroup(H):
        raise GraphError("H is not a subgroup")
    mul = group.mul
    if mul(g, g) not in H:
        raise GraphError("g^2 is not in H")
    if len(group.closure(list(H) + [g])) != group.order:
        raise GraphError("<H, g> is not the whole group; the coset graph would be disconnected")
    coset_of: dict = {}
    reps = []
    for x in group.elements:  # ascending: the first unseen element is its coset's minimum
        if x in coset_of:
            continue
        v = len(reps)
        reps.append(x)
        for h in H:
            coset_of[mul(h, x)] = v
    double = {mul(mul(h1, g), h2) for h1 in H for h2 in H}
    # neighbours of Hx are the cosets H d x, d in HgH; H d only depends on the coset of d
    steps = sorted({min(mul(h, d) for h in H) for d in double}, key=group.index.get)
    edges = set()
    for v, x in enumerate(reps):
        for d in steps:
            w = coset_of[mul(d, x)]
            if w == v:
                raise GraphError("HgH meets H; g must lie outside H")
            edges.add((min(v, w), max(v, w)))
    graph = Graph(len(reps), edges, labels=reps)
    valency = len(steps)
    if graph.valency != valency:
        raise ConstructionError("coset graph is not regular of valency |HgH|/|H|")
    return CosetGraph(graph, reps, coset_of, valency)


def smallest_primitive_root(p: int) -> int:
    return field_make(p).primitive


@dataclass
class TaylorData:
    p: int
    group: EnumeratedGroup
    a: Matrix
    b: Matrix
    g: Matrix
    H: frozenset
    coset: CosetGraph = field(repr=False)

    @property
    def graph(self) -> Graph:
        return self.coset.graph

    def right_multiplication_generators(self) -> list[tuple[int, ...]]:
        """Vertex permutations ``Hx -> Hxs`` for generators ``s`` of G."""
        mul = self.group.mul
        perms = []
        for s in (self.a, self.b, self.g):
            perms.append(tuple(self.coset.coset_of[mul(x, s)] for x in self.coset.representatives))
        return perms


def taylor_data(p: int, alt_g: int = 0) -> TaylorData:
    """Construction of the prime-valency double cover of ``K_{p+1}`` as a coset graph in PSL(2, p).

    ``alt_g = i`` uses the involution ``b^i g`` in place of ``g``.
    """
    if not is_prime(p) or p % 4 != 1:
        raise GraphError(f"p must be a prime congruent to 1 mod 4, got {p}")
    G = psl2(p)
    t = smallest_primitive_root(p)
    a = normalize((1, 1, 0, 1), p)
    b = normalize((t, 0, 0, pow(t, -1, p)), p)
    g0 = normalize((0, 1, -1, 0), p)
    g = G.mul(G.power(b, alt_g % ((p - 1) // 2)), g0)
    checks = {
        "o(a) = p": G.element_order(a) == p,
        "o(b) = (p-1)/2": G.element_order(b) == (p - 1) // 2,
        "g is an involution": G.element_order(g) == 2,
    }
    b2 = G.mul(b, b)
    H = G.closure([a, b2])
    checks["|H| = p(p-1)/4"] = len(H) == p * (p - 1) // 4
    cyc_b2 = G.closure([b2])
    checks["g normalizes <b^2>"] = {G.mul(G.mul(G.inv(g), x), g) for x in cyc_b2} == set(cyc_b2)
    checks["|<b, g>| = p-1"] = len(G.closure([b, g])) == p - 1
    checks["G = <H, g>"] = len(G.closure(list(H) + [g])) == G.order
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise ConstructionError(f"construction checks failed for p={p}: {failed}")
    coset = coset_graph_data(G, H, g)
    if coset.graph.order != 2 * p + 2 or coset.valency != p:
        raise ConstructionError("coset graph does not have 2p+2 vertices of valency p")
    coset.graph.name = f"taylor:{p}" + (f",{alt_g}" if alt_g else "")
    return TaylorData(p, G, a, b, g, H, coset)


def taylor_construction(p: int, alt_g: int = 0) -> Graph:
    return taylor_data(p, alt_g).graph
