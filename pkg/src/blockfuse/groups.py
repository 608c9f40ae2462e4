"""Finite groups as validated multiplication tables, with subgroup services.

Element indices run 0..order-1 and index 0 is always the identity.  Groups
built from permutation generators enumerate elements by breadth-first
closure in the given generator order, so indices are reproducible.

A `Subgroup` is a sorted index set inside a parent group.  Its
`as_group()` view re-labels the subgroup as a standalone multiplication
table group (needed to treat centralizer algebras as group algebras in
their own right); the re-map back to parent indices is kept on the view
as `ambient` / `ambient_elems`, and views are cached per element set so
identical subgroups share one object.
"""

from __future__ import annotations

import numpy as np

DEFAULT_MAX_ORDER = 2000
DEFAULT_SUBGROUP_BOUND = 256


class FiniteGroup:
    """Multiplication-table group; immutable after construction."""

    def __init__(self, name, mul, inv, *, ambient=None, ambient_elems=None,
                 _validate=True):
        self.name = str(name)
        self.mul = tuple(tuple(int(x) for x in row) for row in mul)
        self.order = len(self.mul)
        self.inv = tuple(int(x) for x in inv)
        self.id = 0
        self.ambient: FiniteGroup | None = ambient
        self.ambient_elems: tuple[int, ...] | None = (
            tuple(ambient_elems) if ambient_elems is not None else None)
        self._ambient_pos = (
            {g: i for i, g in enumerate(self.ambient_elems)}
            if self.ambient_elems is not None else None)
        if _validate:
            _validate_group_table(self.mul, self.inv)
        # lazily filled caches; values are deterministic, so concurrent
        # population is harmless
        self._localized: dict[tuple[int, ...], FiniteGroup] = {}
        self._classes: tuple[tuple[int, ...], ...] | None = None
        self._block_cache: dict = {}

    def elements(self) -> range:
        return range(self.order)

    def conj(self, x: int, g: int) -> int:
        """x g x^-1."""
        return self.mul[self.mul[x][g]][self.inv[x]]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv[g], -k)
        acc = 0
        for _ in range(k):
            acc = self.mul[acc][g]
        return acc

    def element_order(self, g: int) -> int:
        k, cur = 1, g
        while cur != 0:
            cur = self.mul[cur][g]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


def _validate_group_table(mul, inv) -> None:
    n = len(mul)
    if n == 0:
        raise ValueError("empty multiplication table")
    arr = np.asarray(mul, dtype=np.int64)
    if arr.shape != (n, n):
        raise ValueError("multiplication table is not square")
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError("multiplication table entry out of range")
    ar = np.arange(n)
    if not (np.sort(arr, axis=1) == ar).all() or not (np.sort(arr, axis=0) == ar[:, None]).all():
        raise ValueError("multiplication table rows/columns are not permutations")
    if not (arr[0] == ar).all() or not (arr[:, 0] == ar).all():
        raise ValueError("index 0 is not a two-sided identity")
    for a in range(n):
        if not np.array_equal(arr[arr[a]], arr[a][arr]):
            raise ValueError(f"multiplication table is not associative (row {a})")
    if len(inv) != n:
        raise ValueError("inverse table length mismatch")
    for a in range(n):
        if mul[a][inv[a]] != 0 or mul[inv[a]][a] != 0:
            raise ValueError(f"inverse table wrong at {a}")


def _table_from_spec(spec, max_order):
    table = spec["table"]
    if len(table) > max_order:
        raise ValueError(f"group order {len(table)} exceeds bound {max_order}")
    inv = []
    for a, row in enumerate(table):
        try:
            inv.append(list(row).index(0))
        except ValueError:
            raise ValueError(f"row {a} has no inverse entry") from None
    return table, inv


def _perm_compose(f, g):
    # (f*g)(x) = f(g(x))
    return tuple(f[x] for x in g)


def _bfs_from_generators(degree, generators, max_order):
    gens = []
    for gen in generators:
        gen = tuple(int(x) for x in gen)
        if sorted(gen) != list(range(degree)):
            raise ValueError(f"generator {list(gen)} is not a permutation of 0..{degree - 1}")
        gens.append(gen)
    identity = tuple(range(degree))
    elems = [identity]
    index = {identity: 0}
    queue = [identity]
    while queue:
        cur = queue.pop(0)
        for gen in gens:
            nxt = _perm_compose(cur, gen)
            if nxt not in index:
                if len(elems) >= max_order:
                    raise ValueError(f"group order exceeds bound {max_order}")
                index[nxt] = len(elems)
                elems.append(nxt)
                queue.append(nxt)
    n = len(elems)
    mul = [[index[_perm_compose(a, b)] for b in elems] for a in elems]
    inv = [0] * n
    for i, e in enumerate(elems):
        out = [0] * degree
        for src, dst in enumerate(e):
            out[dst] = src
        inv[i] = index[tuple(out)]
    return mul, inv


def build_group(spec, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build a validated group from a description mapping.

    Accepted kinds: {"kind": "table", "name": ..., "table": [[...]]} with a
    full multiplication table (identity must be index 0), or
    {"kind": "perm", "name": ..., "degree": d, "generators": [[0-based
    images], ...]} enumerated by breadth-first closure in generator order.
    """
    kind = spec.get("kind")
    name = spec.get("name", "G")
    if kind == "table":
        table, inv = _table_from_spec(spec, max_order)
        return FiniteGroup(name, table, inv)
    if kind == "perm":
        mul, inv = _bfs_from_generators(int(spec["degree"]), spec["generators"], max_order)
        # BFS tables are groups by construction; skip the cubic associativity scan
        g = FiniteGroup(name, mul, inv, _validate=False)
        _validate_light(g)
        return g
    raise ValueError(f"unknown group description kind: {kind!r}")


def _validate_light(g: FiniteGroup) -> None:
    n = g.order
    arr = np.asarray(g.mul, dtype=np.int64)
    ar = np.arange(n)
    assert (arr[0] == ar).all() and (arr[:, 0] == ar).all()
    assert (np.sort(arr, axis=1) == ar).all()


class Subgroup:
    """Sorted element-index set, closed under the parent multiplication."""

    __slots__ = ("parent", "elems")

    def __init__(self, parent: FiniteGroup, elems, *, _checked=False):
        self.parent = parent
        self.elems = tuple(sorted(set(int(x) for x in elems)))
        if not _checked:
            if not self.elems or self.elems[0] != 0:
                raise ValueError("subgroup must contain the identity")
            if self.elems[-1] >= parent.order:
                raise ValueError("subgroup element out of range")
            member = set(self.elems)
            mul = parent.mul
            for a in self.elems:
                for b in self.elems:
                    if mul[a][b] not in member:
                        raise ValueError("element set is not closed under multiplication")

    @property
    def order(self) -> int:
        return len(self.elems)

    def __contains__(self, g: int) -> bool:
        return g in self.elems

    def is_subset_of(self, other: "Subgroup") -> bool:
        return set(self.elems) <= set(other.elems)

    def conjugate(self, x: int) -> "Subgroup":
        conj = self.parent.conj
        return Subgroup(self.parent, (conj(x, g) for g in self.elems), _checked=True)

    def as_group(self) -> FiniteGroup:
        """Standalone multiplication-table copy, re-map kept on the view.

        The full subgroup is its own view, so algebras over G and over
        C_G(1) share one owner and one cache.
        """
        if len(self.elems) == self.parent.order:
            return self.parent
        cached = self.parent._localized.get(self.elems)
        if cached is not None:
            return cached
        pos = {g: i for i, g in enumerate(self.elems)}
        pmul = self.parent.mul
        pinv = self.parent.inv
        mul = [[pos[pmul[a][b]] for b in self.elems] for a in self.elems]
        inv = [pos[pinv[a]] for a in self.elems]
        view = FiniteGroup(
            f"{self.parent.name}[{','.join(map(str, self.elems))}]",
            mul, inv, ambient=self.parent, ambient_elems=self.elems,
            _validate=False)
        self.parent._localized[self.elems] = view
        return view

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.elems == self.elems)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elems))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, elems={list(self.elems)})"


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,), _checked=True)


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.order), _checked=True)


def generated_subgroup(G: FiniteGroup, gens) -> Subgroup:
    seen = {0}
    queue = [0]
    gens = [int(g) for g in gens]
    mul = G.mul
    while queue:
        cur = queue.pop()
        for g in gens:
            nxt = mul[cur][g]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return Subgroup(G, seen, _checked=True)


def cyclic_subgroup(G: FiniteGroup, g: int) -> Subgroup:
    return generated_subgroup(G, (g,))


def centralizer_in(H: Subgroup, S: Subgroup) -> Subgroup:
    G = H.parent
    mul = G.mul
    members = [h for h in H.elems
               if all(mul[h][s] == mul[s][h] for s in S.elems)]
    return Subgroup(G, members, _checked=True)


def centralizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    """C_G(S) = elements commuting with every member of S."""
    return centralizer_in(full_subgroup(G), S)


def normalizer_in(H: Subgroup, S: Subgroup) -> Subgroup:
    G = H.parent
    sset = set(S.elems)
    conj = G.conj
    members = [h for h in H.elems
               if all(conj(h, s) in sset for s in S.elems)]
    return Subgroup(G, members, _checked=True)


def normalizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    """N_G(S) = elements whose conjugation preserves S."""
    return normalizer_in(full_subgroup(G), S)


def p_part(num: int, p: int) -> int:
    out = 1
    while num % p == 0:
        num //= p
        out *= p
    return out


def sylow_p_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown inside its own normalizer.

    Deterministic given the element ordering; returns the trivial
    subgroup when p does not divide the group order.
    """
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise ValueError(f"p={p} is not prime")
    target = p_part(G.order, p)
    H = trivial_subgroup(G)
    while H.order < target:
        N = normalizer(G, H)
        hset = set(H.elems)
        grown = False
        for x in N.elems:
            if x in hset:
                continue
            d, cur = 1, x
            while cur not in hset:
                cur = G.mul[cur][x]
                d += 1
            if d % p == 0:
                y = G.power(x, d // p)
                H = generated_subgroup(G, H.elems + (y,))
                grown = True
                break
        if not grown:  # cannot happen for p | [N : H]
            raise AssertionError("sylow growth stalled")
    return H


def all_subgroups(P: Subgroup, *, max_order: int = DEFAULT_SUBGROUP_BOUND) -> list[Subgroup]:
    """Every subgroup of P, sorted by (order, element set).

    Exhaustive closure: cyclic subgroups, then joins with single elements
    until stable.  Intended for p-groups of modest order.
    """
    if P.order > max_order:
        raise ValueError(f"subgroup enumeration bound exceeded ({P.order} > {max_order})")
    G = P.parent
    found: dict[tuple[int, ...], Subgroup] = {}
    triv = trivial_subgroup(G)
    found[triv.elems] = triv
    queue = []
    for g in P.elems:
        H = cyclic_subgroup(G, g)
        if H.elems not in found:
            found[H.elems] = H
            queue.append(H)
    while queue:
        H = queue.pop()
        hset = set(H.elems)
        for x in P.elems:
            if x in hset:
                continue
            J = generated_subgroup(G, H.elems + (x,))
            if J.elems not in found:
                found[J.elems] = J
                queue.append(J)
    return sorted(found.values(), key=lambda s: (s.order, s.elems))


def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Classes as sorted tuples, ordered by smallest member; cached."""
    if G._classes is None:
        seen = [False] * G.order
        classes = []
        for g in range(G.order):
            if seen[g]:
                continue
            orbit = sorted({G.conj(x, g) for x in range(G.order)})
            for h in orbit:
                seen[h] = True
            classes.append(tuple(orbit))
        G._classes = tuple(classes)
    return G._classes


def coset_reps(H: Subgroup, I: Subgroup) -> list[int]:
    """Representatives of the left cosets xI inside H, smallest first."""
    if not I.is_subset_of(H):
        raise ValueError("I is not contained in H")
    G = H.parent
    covered = set()
    reps = []
    for x in H.elems:
        if x in covered:
            continue
        reps.append(x)
        covered.update(G.mul[x][i] for i in I.elems)
    return reps


class GroupMap:
    """Injective homomorphism between subgroups of one parent group."""

    __slots__ = ("domain", "codomain", "images", "_pos")

    def __init__(self, domain: Subgroup, codomain: Subgroup, images, *, _checked=False):
        self.domain = domain
        self.codomain = codomain
        self.images = tuple(int(x) for x in images)
        self._pos = None
        if not _checked:
            if domain.parent is not codomain.parent:
                raise ValueError("domain and codomain live in different groups")
            if len(self.images) != domain.order:
                raise ValueError("image array length mismatch")
            cset = set(codomain.elems)
            if not set(self.images) <= cset:
                raise ValueError("image not contained in codomain")
            if len(set(self.images)) != len(self.images):
                raise ValueError("map is not injective")
            mul = domain.parent.mul
            pos = self._positions()
            for i, a in enumerate(domain.elems):
                for j, b in enumerate(domain.elems):
                    if self.images[pos[mul[a][b]]] != mul[self.images[i]][self.images[j]]:
                        raise ValueError("map does not respect multiplication")

    def _positions(self):
        if self._pos is None:
            self._pos = {g: i for i, g in enumerate(self.domain.elems)}
        return self._pos

    def apply(self, g: int) -> int:
        return self.images[self._positions()[g]]

    @property
    def image_elems(self) -> tuple[int, ...]:
        return tuple(sorted(self.images))

    def image_subgroup(self) -> Subgroup:
        return Subgroup(self.domain.parent, self.images, _checked=True)

    def is_iso_onto_codomain(self) -> bool:
        return self.image_elems == self.codomain.elems

    def onto_image(self) -> "GroupMap":
        return GroupMap(self.domain, self.image_subgroup(), self.images, _checked=True)

    def inverse(self) -> "GroupMap":
        if not self.is_iso_onto_codomain():
            raise ValueError("only isomorphisms onto the codomain can be inverted")
        back = {img: src for src, img in zip(self.domain.elems, self.images)}
        return GroupMap(self.codomain, self.domain,
                        (back[g] for g in self.codomain.elems), _checked=True)

    def restrict(self, Q: Subgroup) -> "GroupMap":
        if not Q.is_subset_of(self.domain):
            raise ValueError("restriction domain is not contained")
        images = tuple(self.apply(g) for g in Q.elems)
        return GroupMap(Q, Subgroup(self.domain.parent, images, _checked=True),
                        images, _checked=True)

    def with_codomain(self, R: Subgroup) -> "GroupMap":
        if not set(self.images) <= set(R.elems):
            raise ValueError("image not contained in new codomain")
        return GroupMap(self.domain, R, self.images, _checked=True)

    def compose(self, inner: "GroupMap") -> "GroupMap":
        """self after inner; inner's image must lie in self's domain."""
        if not set(inner.images) <= set(self.domain.elems):
            raise ValueError("maps are not composable")
        return GroupMap(inner.domain, self.codomain,
                        (self.apply(g) for g in inner.images), _checked=True)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupMap)
                and self.domain == other.domain
                and self.codomain == other.codomain
                and self.images == other.images)

    def __hash__(self) -> int:
        return hash((id(self.domain.parent), self.domain.elems,
                     self.codomain.elems, self.images))

    def __repr__(self) -> str:
        return f"GroupMap({list(self.domain.elems)} -> {list(self.images)})"


def identity_map(Q: Subgroup) -> GroupMap:
    return GroupMap(Q, Q, Q.elems, _checked=True)


def inclusion_map(Q: Subgroup, R: Subgroup) -> GroupMap:
    if not Q.is_subset_of(R):
        raise ValueError("not an inclusion")
    return GroupMap(Q, R, Q.elems, _checked=True)


def conjugation_map(G: FiniteGroup, x: int, Q: Subgroup, R: Subgroup) -> GroupMap | None:
    """The map u -> x u x^-1 as a GroupMap Q -> R, if the image fits in R."""
    images = tuple(G.conj(x, g) for g in Q.elems)
    if not set(images) <= set(R.elems):
        return None
    return GroupMap(Q, R, images, _checked=True)
