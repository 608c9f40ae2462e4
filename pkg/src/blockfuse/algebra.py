"""Group-algebra arithmetic, the Brauer projection, traces, Galois action,
and primitive central idempotent (block) computation.

An `AlgebraElement` stores one field code per element of its owner group.
The owner is either a root group G or a localized subgroup view
(`Subgroup.as_group()`), which is how centralizer algebras k C_G(P) are
handled: local coefficient vectors, with the embedding back into kG kept
on the view.  Conjugation by an ambient group element moves an element of
k C_G(Q) to k C_G(xQx^-1) through that embedding.

Blocks are found by the classical center-splitting loop: starting from
the identity, each conjugacy-class sum acts on the current summand, its
minimal polynomial is factored (over L, or over the Frobenius-fixed
subfield K for blocks of KG computed inside L), and coprime factor powers
split the summand through the corresponding Bezout idempotents.  All zero
tests are exact; no tolerances exist anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldTower, Poly, factor, factor_over_subfield, _pdivmod, _pinvmod, _pmod, _pmul
from .groups import FiniteGroup, Subgroup, centralizer, conjugacy_classes, coset_reps
from .linalg import Echelon


class VerificationError(RuntimeError):
    """A property that is a theorem failed; signals an implementation bug."""


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Element of L[group]; coeffs[i] is the field code at group element i."""

    group: FiniteGroup
    tower: FieldTower
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError("coefficient vector length mismatch")

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement)
                and self.group is other.group
                and self.tower is other.tower
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((id(self.group), id(self.tower), self.coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_owner(self, other)
        t = self.tower
        return AlgebraElement(self.group, t,
                              tuple(t.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_owner(self, other)
        t = self.tower
        return AlgebraElement(self.group, t,
                              tuple(t.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def scale(self, code: int) -> "AlgebraElement":
        t = self.tower
        return AlgebraElement(self.group, t, tuple(t.mul(code, c) for c in self.coeffs))

    def to_sparse(self) -> dict[str, list[int]]:
        """Serialization form: {element index: coefficient array} on the support."""
        return {str(i): list(self.tower.coeffs(c))
                for i, c in enumerate(self.coeffs) if c}

    def __repr__(self) -> str:
        parts = [f"{self.tower.coeffs(c)}*g{i}" for i, c in enumerate(self.coeffs) if c]
        return "AlgebraElement(" + (" + ".join(parts) or "0") + ")"


def _check_owner(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.group is not b.group or a.tower is not b.tower:
        raise ValueError("algebra elements have different owners")


def zero(group: FiniteGroup, tower: FieldTower) -> AlgebraElement:
    return AlgebraElement(group, tower, (0,) * group.order)


def one(group: FiniteGroup, tower: FieldTower) -> AlgebraElement:
    return AlgebraElement(group, tower, (1,) + (0,) * (group.order - 1))


def basis_element(group: FiniteGroup, tower: FieldTower, g: int, code: int = 1) -> AlgebraElement:
    coeffs = [0] * group.order
    coeffs[g] = code
    return AlgebraElement(group, tower, tuple(coeffs))


def from_sparse(group: FiniteGroup, tower: FieldTower, sparse) -> AlgebraElement:
    coeffs = [0] * group.order
    for key, arr in sparse.items():
        coeffs[int(key)] = tower.from_coeffs(arr)
    return AlgebraElement(group, tower, tuple(coeffs))


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution product in the owner's group algebra."""
    _check_owner(a, b)
    t = a.tower
    mul = a.group.mul
    out = [0] * a.group.order
    bsupp = [(j, c) for j, c in enumerate(b.coeffs) if c]
    for i, ca in enumerate(a.coeffs):
        if ca:
            row = mul[i]
            for j, cb in bsupp:
                k = row[j]
                out[k] = t.add(out[k], t.mul(ca, cb))
    return AlgebraElement(a.group, t, tuple(out))


def augmentation(a: AlgebraElement) -> int:
    acc = 0
    for c in a.coeffs:
        acc = a.tower.add(acc, c)
    return acc


def conjugate_element(x: int, a: AlgebraElement) -> AlgebraElement:
    """Coefficient permutation g -> x g x^-1 by an ambient group element.

    For a root-owned element the owner is unchanged.  For an element of a
    localized subgroup algebra the result lives in the algebra of the
    conjugated subgroup (the same owner exactly when x normalizes it).
    """
    g = a.group
    if g.ambient is None:
        out = [0] * g.order
        for i, c in enumerate(a.coeffs):
            if c:
                out[g.conj(x, i)] = c
        return AlgebraElement(g, a.tower, tuple(out))
    amb = g.ambient
    moved = {amb.conj(x, g.ambient_elems[i]): c
             for i, c in enumerate(a.coeffs) if c}
    target_elems = tuple(sorted(amb.conj(x, e) for e in g.ambient_elems))
    target = Subgroup(amb, target_elems, _checked=True).as_group()
    out = [0] * target.order
    for i, e in enumerate(target_elems):
        out[i] = moved.get(e, 0)
    return AlgebraElement(target, a.tower, tuple(out))


def is_stable(a: AlgebraElement, S: Subgroup) -> bool:
    """True iff conjugation by every element of S fixes a."""
    amb = a.group.ambient or a.group
    if S.parent is not amb:
        raise ValueError("subgroup does not live in the owner's ambient group")
    return all(conjugate_element(x, a) == a for x in S.elems if x != 0)


def embed(a: AlgebraElement) -> AlgebraElement:
    """Extend an element of a localized subgroup algebra by zero into the
    ambient group algebra."""
    g = a.group
    if g.ambient is None:
        return a
    out = [0] * g.ambient.order
    for i, c in enumerate(a.coeffs):
        out[g.ambient_elems[i]] = c
    return AlgebraElement(g.ambient, a.tower, tuple(out))


def brauer_map(a: AlgebraElement, P: Subgroup, *, check_stable: bool = True) -> AlgebraElement:
    """Projection of a P-fixed element of kG onto k C_G(P).

    An algebra homomorphism on P-stable inputs; the stability precheck can
    be disabled in inner loops.
    """
    G = a.group
    if G.ambient is not None:
        raise ValueError("apply the Brauer projection to ambient-owned elements")
    if P.parent is not G:
        raise ValueError("subgroup lives in a different group")
    if check_stable and not is_stable(a, P):
        raise ValueError("element is not stable under the given subgroup")
    C = centralizer(G, P)
    owner = C.as_group()
    return AlgebraElement(owner, a.tower, tuple(a.coeffs[g] for g in C.elems))


def trace_map(a: AlgebraElement, I: Subgroup, H: Subgroup) -> AlgebraElement:
    """Relative trace: sum of the conjugates of a over coset representatives
    of I in H; requires a to be I-stable, so the result is transversal
    independent."""
    if not I.is_subset_of(H):
        raise ValueError("I is not contained in H")
    if not is_stable(a, I):
        raise ValueError("element is not stable under I")
    acc = zero(a.group, a.tower)
    for x in coset_reps(H, I):
        acc = acc + conjugate_element(x, a)
    return acc


def galois_apply(j: int, a: AlgebraElement) -> AlgebraElement:
    """Coefficientwise power of the Galois generator."""
    t = a.tower
    return AlgebraElement(a.group, t, tuple(t.frob_power(c, j) for c in a.coeffs))


def is_k_rational(a: AlgebraElement) -> bool:
    return all(a.tower.is_k_rational(c) for c in a.coeffs)


def center_basis(G: FiniteGroup, tower: FieldTower) -> list[AlgebraElement]:
    """Class sums, one per conjugacy class, ordered by smallest member."""
    out = []
    for cls in conjugacy_classes(G):
        coeffs = [0] * G.order
        for g in cls:
            coeffs[g] = 1
        out.append(AlgebraElement(G, tower, tuple(coeffs)))
    return out


def is_central(a: AlgebraElement) -> bool:
    classes = conjugacy_classes(a.group)
    return all(len({a.coeffs[g] for g in cls}) == 1 for cls in classes)


@dataclass(frozen=True)
class BlockIdempotent:
    """Primitive central idempotent of the owner's group algebra over L,
    or over the distinguished subfield K when over_k is set (still stored
    with L-coefficients, necessarily Frobenius fixed)."""

    elem: AlgebraElement
    over_k: bool
    index: int
    primitive_central: bool = True

    @property
    def owner(self) -> FiniteGroup:
        return self.elem.group

    def __repr__(self) -> str:
        field = "K" if self.over_k else "L"
        return f"Block[{self.index}/{field}]({self.elem!r})"


def _minimal_polynomial(z: AlgebraElement, c: AlgebraElement) -> tuple[tuple[int, ...], list[AlgebraElement]]:
    """Monic minimal polynomial mu with mu(z) * c = 0, plus the Krylov
    vectors c, z c, z^2 c, ... of length deg(mu)."""
    t = z.tower
    ech = Echelon(t, c.group.order)
    vectors = []
    cur = c
    while True:
        combo = ech.insert(list(cur.coeffs))
        if combo is not None:
            k = len(vectors)
            mu = [t.neg(x) for x in combo] + [1]
            assert len(mu) == k + 1
            return tuple(mu), vectors
        vectors.append(cur)
        cur = multiply(z, cur)


def _bezout_idempotents(t: FieldTower, mu, factors, vectors) -> list[AlgebraElement]:
    """Split the identity of k[z]c along coprime factor powers of mu."""
    parts = []
    for poly, mult in factors:
        qpow = (1,)
        for _ in range(mult):
            qpow = _pmul(t, qpow, poly.codes)
        u, r = _pdivmod(t, mu, qpow)
        assert not r
        w = _pinvmod(t, u, qpow)
        s = _pmod(t, _pmul(t, u, w), mu)
        acc = zero(vectors[0].group, t)
        for k, coef in enumerate(s):
            if coef:
                acc = acc + vectors[k].scale(coef)
        parts.append(acc)
    return parts


def primitive_central_idempotents(G: FiniteGroup, tower: FieldTower,
                                  over_k: bool = False, seed: int = 0
                                  ) -> tuple[BlockIdempotent, ...]:
    """The complete set of blocks of L[G], or of K[G] when over_k.

    Splitting runs per class sum in deterministic order, leftmost summand
    first; the output is sorted by coefficient sequence, so block indices
    are reproducible.  Results are cached on the group object.
    """
    cache_key = (tower.key, over_k)
    cached = G._block_cache.get(cache_key)
    if cached is not None:
        return cached
    summands = [one(G, tower)]
    for z in center_basis(G, tower):
        refined = []
        for c in summands:
            mu, vectors = _minimal_polynomial(z, c)
            mu_poly = Poly(tower, mu)
            if over_k:
                if not all(tower.is_k_rational(x) for x in mu):
                    raise VerificationError("minimal polynomial left the subfield")
                fac = factor_over_subfield(mu_poly, seed)
            else:
                fac = factor(mu_poly, seed)
            if len(fac.factors) == 1:
                refined.append(c)
                continue
            parts = _bezout_idempotents(tower, mu, fac.factors, vectors)
            total = zero(G, tower)
            for part in parts:
                if part.is_zero:
                    raise VerificationError("zero part in idempotent splitting")
                total = total + part
            if total != c:
                raise VerificationError("idempotent splitting does not sum back")
            refined.extend(parts)
        summands = refined
    summands.sort(key=lambda a: a.coeffs)
    blocks = tuple(BlockIdempotent(elem, over_k, i) for i, elem in enumerate(summands))
    G._block_cache[cache_key] = blocks
    return blocks


def find_block(blocks, elem: AlgebraElement) -> BlockIdempotent:
    for b in blocks:
        if b.elem == elem:
            return b
    raise VerificationError("element is not in the block list")


def principal_block(blocks) -> BlockIdempotent:
    """The block with augmentation 1; unique, since augmentation is an
    algebra map onto the field."""
    hits = [b for b in blocks if augmentation(b.elem) == 1]
    if len(hits) != 1:
        raise VerificationError("principal block is not unique")
    return hits[0]
