"""Fusion systems over a finite p-group: construction from groups and from
blocks, saturation axioms, generated closure, Alperin generation, and the
twist-factorization checker.

Morphisms are stored extensionally as `GroupMap` image arrays.  A system
is carried by its set of isomorphisms onto their images; hom sets for any
ordered pair (Q, R) are derived from those by post-composing with
inclusions, which is exact because a fusion system is determined by the
isomorphisms it contains.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .algebra import VerificationError
from .brauer import (BrauerPair, conjugate_block, is_pair_of_block, maximal_pairs,
                     subpair_table)
from .gf import FieldTower
from .groups import (FiniteGroup, GroupMap, Subgroup, all_subgroups, centralizer_in,
                     normalizer_in)


class FusionSystem:
    """Category on the subgroups of a p-group P, carried by its isos."""

    def __init__(self, P: Subgroup, isos):
        self.p_subgroup = P
        self.subgroups = tuple(all_subgroups(P))
        self.isos = frozenset(isos)
        self._by_domain: dict[tuple[int, ...], list[GroupMap]] = {}
        for m in sorted(self.isos, key=lambda m: (m.domain.elems, m.images)):
            self._by_domain.setdefault(m.domain.elems, []).append(m)
        self._hom_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], frozenset] = {}
        self._iso_classes: list[tuple[Subgroup, ...]] | None = None

    @property
    def prime(self) -> int | None:
        n = self.p_subgroup.order
        if n == 1:
            return None
        p = 2
        while n % p:
            p += 1
        return p

    def hom_set(self, Q: Subgroup, R: Subgroup) -> frozenset:
        """All morphisms Q -> R: isos out of Q whose image lies inside R,
        with codomain R."""
        key = (Q.elems, R.elems)
        got = self._hom_cache.get(key)
        if got is None:
            rset = set(R.elems)
            got = frozenset(
                GroupMap(m.domain, R, m.images, _checked=True)
                for m in self._by_domain.get(Q.elems, ())
                if set(m.images) <= rset)
            self._hom_cache[key] = got
        return got

    def homs(self) -> dict:
        return {(Q.elems, R.elems): self.hom_set(Q, R)
                for Q in self.subgroups for R in self.subgroups}

    def aut_set(self, Q: Subgroup) -> frozenset:
        return self.hom_set(Q, Q)

    def iso_classes(self) -> list[tuple[Subgroup, ...]]:
        if self._iso_classes is None:
            by_elems = {S.elems: S for S in self.subgroups}
            parent: dict[tuple[int, ...], tuple[int, ...]] = {e: e for e in by_elems}

            def find(e):
                while parent[e] != e:
                    parent[e] = parent[parent[e]]
                    e = parent[e]
                return e

            for m in self.isos:
                a, b = find(m.domain.elems), find(m.image_elems)
                if a != b:
                    parent[a] = b
            groups: dict[tuple[int, ...], list[Subgroup]] = {}
            for e, S in by_elems.items():
                groups.setdefault(find(e), []).append(S)
            self._iso_classes = [tuple(sorted(v, key=lambda s: s.elems))
                                 for v in groups.values()]
        return self._iso_classes

    def iso_class_of(self, Q: Subgroup) -> tuple[Subgroup, ...]:
        for cls in self.iso_classes():
            if Q in cls:
                return cls
        raise ValueError("subgroup is not an object of this fusion system")

    def __repr__(self) -> str:
        return (f"FusionSystem(|P|={self.p_subgroup.order}, "
                f"objects={len(self.subgroups)}, isos={len(self.isos)})")


@dataclass(frozen=True)
class Nphi:
    """The intertwining subgroup of N_P(Q) attached to an isomorphism."""

    phi: GroupMap
    subgroup: Subgroup


def _inner_isos(P: Subgroup):
    """Conjugation isos between subgroups of P induced by elements of P."""
    G = P.parent
    out = set()
    for Q in all_subgroups(P):
        for u in P.elems:
            images = tuple(G.conj(u, g) for g in Q.elems)
            target = Subgroup(G, images, _checked=True)
            out.add(GroupMap(Q, target, images, _checked=True))
    return out


def group_fusion(P: Subgroup, G: FiniteGroup) -> FusionSystem:
    """The fusion system of G on P: all conjugation maps between
    subgroups of P realized by elements of G."""
    if P.parent is not G:
        raise ValueError("P must be a subgroup of G")
    pset = set(P.elems)
    isos = set()
    for Q in all_subgroups(P):
        for x in range(G.order):
            images = tuple(G.conj(x, g) for g in Q.elems)
            if set(images) <= pset:
                target = Subgroup(G, images, _checked=True)
                isos.add(GroupMap(Q, target, images, _checked=True))
    return FusionSystem(P, isos)


def block_fusion(G: FiniteGroup, tower: FieldTower, b, root: BrauerPair,
                 seed: int = 0) -> FusionSystem:
    """The fusion system of the block b at the maximal pair root: the
    conjugation maps c_x with x(Q, e_Q) under (R, e_R), decided through
    the subpair table by x e_Q = e_{xQ}."""
    if not is_pair_of_block(root, b):
        raise ValueError("root is not a pair of the given block")
    mp = maximal_pairs(G, tower, b, seed)
    if root.subgroup.order != mp.defect_order:
        raise ValueError("root pair is not maximal for the block")
    P = root.subgroup
    pset = set(P.elems)
    table = subpair_table(root, seed)
    isos = set()
    for Q in all_subgroups(P):
        e_q = table[Q.elems]
        for x in range(G.order):
            images = tuple(G.conj(x, g) for g in Q.elems)
            if not set(images) <= pset:
                continue
            target_elems = tuple(sorted(images))
            if conjugate_block(x, e_q) != table[target_elems]:
                continue
            target = Subgroup(G, target_elems, _checked=True)
            isos.add(GroupMap(Q, target, images, _checked=True))
    return FusionSystem(P, isos)


def closure(P: Subgroup, seeds) -> FusionSystem:
    """Least fusion system over P containing the seed morphisms: fixpoint
    closure of the inner isos plus the seeds under inversion, restriction
    and composition."""
    contained: dict[tuple[int, ...], list[Subgroup]] = {}
    subs = all_subgroups(P)
    for Q in subs:
        contained[Q.elems] = [S for S in subs if S.is_subset_of(Q)]
    maps: set[GroupMap] = set()
    by_dom: dict[tuple[int, ...], list[GroupMap]] = {}
    by_cod: dict[tuple[int, ...], list[GroupMap]] = {}
    queue: deque[GroupMap] = deque()

    def add(m: GroupMap):
        if m not in maps:
            maps.add(m)
            by_dom.setdefault(m.domain.elems, []).append(m)
            by_cod.setdefault(m.codomain.elems, []).append(m)
            queue.append(m)

    for m in _inner_isos(P):
        add(m)
    for s in seeds:
        if s.domain.elems not in contained or not set(s.images) <= set(P.elems):
            raise ValueError("seed morphism is not between subgroups of P")
        add(s.onto_image())
    while queue:
        m = queue.popleft()
        add(m.inverse())
        for Q in contained[m.domain.elems]:
            if Q.order < m.domain.order:
                add(m.restrict(Q))
        for other in list(by_dom.get(m.codomain.elems, ())):
            add(other.compose(m))
        for other in list(by_cod.get(m.domain.elems, ())):
            add(m.compose(other))
    return FusionSystem(P, maps)


def fusion_equal(F1: FusionSystem, F2: FusionSystem) -> bool:
    """Hom-set equality over every ordered pair of subgroups."""
    if F1.p_subgroup != F2.p_subgroup:
        raise ValueError("fusion systems live over different p-groups")
    return all(F1.hom_set(Q, R) == F2.hom_set(Q, R)
               for Q in F1.subgroups for R in F1.subgroups)


def fully_centralized(F: FusionSystem, Q: Subgroup) -> bool:
    P = F.p_subgroup
    mine = centralizer_in(P, Q).order
    return all(mine >= centralizer_in(P, R).order for R in F.iso_class_of(Q))


def fully_normalized(F: FusionSystem, Q: Subgroup) -> bool:
    P = F.p_subgroup
    mine = normalizer_in(P, Q).order
    return all(mine >= normalizer_in(P, R).order for R in F.iso_class_of(Q))


def is_centric(F: FusionSystem, Q: Subgroup) -> bool:
    """True iff every isomorphic copy R has C_P(R) = Z(R)."""
    P = F.p_subgroup
    return all(centralizer_in(P, R).elems == centralizer_in(R, R).elems
               for R in F.iso_class_of(Q))


def n_phi(P: Subgroup, phi: GroupMap) -> Nphi:
    """All y in N_P(Q) whose conjugation is carried by phi onto some
    conjugation on the image."""
    if len(set(phi.images)) != phi.domain.order:
        raise ValueError("phi must be an isomorphism onto its image")
    G = P.parent
    Q = phi.domain
    R = phi.image_subgroup()
    NQ = normalizer_in(P, Q)
    NR = normalizer_in(P, R)
    members = []
    for y in NQ.elems:
        for z in NR.elems:
            if all(phi.apply(G.conj(y, u)) == G.conj(z, phi.apply(u)) for u in Q.elems):
                members.append(y)
                break
    return Nphi(phi, Subgroup(G, members))


def inner_automorphisms(P: Subgroup, Q: Subgroup) -> frozenset:
    """Aut_P(Q): conjugations of Q by normalizer elements in P."""
    G = P.parent
    out = set()
    for u in normalizer_in(P, Q).elems:
        out.add(GroupMap(Q, Q, tuple(G.conj(u, g) for g in Q.elems), _checked=True))
    return frozenset(out)


def sylow_index(F: FusionSystem) -> int:
    P = F.p_subgroup
    aut_f = F.aut_set(P)
    aut_p = inner_automorphisms(P, P)
    if len(aut_f) % len(aut_p):
        raise VerificationError("inner automorphisms do not divide Aut_F(P)")
    return len(aut_f) // len(aut_p)


def check_sylow_axiom(F: FusionSystem) -> bool:
    """Aut_P(P) has p-prime index in Aut_F(P)."""
    p = F.prime
    if p is None:
        return True
    return sylow_index(F) % p != 0


def _extension_counterexample(F: FusionSystem):
    P = F.p_subgroup
    for Q in F.subgroups:
        for phi in F.hom_set(Q, P):
            image = phi.image_subgroup()
            if not fully_normalized(F, image):
                continue
            n = n_phi(P, phi.onto_image()).subgroup
            extended = any(
                all(psi.apply(g) == phi.apply(g) for g in Q.elems)
                for psi in F.hom_set(n, P))
            if not extended:
                return phi
    return None


def check_extension_axiom(F: FusionSystem) -> bool:
    """Every morphism into P with fully normalized image extends to its
    intertwining subgroup."""
    return _extension_counterexample(F) is None


def is_saturated(F: FusionSystem) -> bool:
    return check_sylow_axiom(F) and check_extension_axiom(F)


def alperin_check(F: FusionSystem) -> bool:
    """True iff F is generated by the automorphism groups of its centric,
    fully normalized subgroups."""
    seeds = []
    for Q in F.subgroups:
        if is_centric(F, Q) and fully_normalized(F, Q):
            seeds.extend(F.aut_set(Q))
    return fusion_equal(closure(F.p_subgroup, seeds), F)


def _map_power(sigma: GroupMap, k: int) -> GroupMap:
    acc = sigma
    if k == 0:
        return GroupMap(sigma.domain, sigma.codomain, sigma.domain.elems, _checked=True)
    for _ in range(k - 1):
        acc = sigma.compose(acc)
    return acc


def map_order(sigma: GroupMap) -> int:
    ident = sigma.domain.elems
    k, acc = 1, sigma
    while acc.images != ident:
        acc = sigma.compose(acc)
        k += 1
    return k


def factorization_check(F: FusionSystem, F_big: FusionSystem, sigma: GroupMap) -> bool:
    """Every morphism of the larger system factors, for a single exponent
    i, both as (sigma^i restricted) after a morphism of F and as a
    morphism of F after (sigma^i restricted)."""
    P = F.p_subgroup
    if sigma not in F_big.aut_set(P):
        raise ValueError("sigma is not an automorphism in the larger system")
    order = map_order(sigma)
    powers = [_map_power(sigma, k) for k in range(order)]
    inverses = [powers[(-k) % order] for k in range(order)]
    for Q in F_big.subgroups:
        for R in F_big.subgroups:
            for phi in F_big.hom_set(Q, R):
                ok = False
                for i in range(order):
                    sig_inv = inverses[i]
                    # psi = sigma^-i . phi : Q -> sigma^-i(R)
                    left = sig_inv.compose(phi.onto_image()).onto_image()
                    target_l = Subgroup(P.parent,
                                        tuple(sig_inv.apply(g) for g in R.elems),
                                        _checked=True)
                    in_f_left = left.with_codomain(target_l) in F.hom_set(Q, target_l)
                    if not in_f_left:
                        continue
                    # psi' = phi . sigma^-i : sigma^i(Q) -> R
                    dom_r = Subgroup(P.parent,
                                     tuple(powers[i].apply(g) for g in Q.elems),
                                     _checked=True)
                    right = phi.compose(sig_inv.restrict(dom_r))
                    if right.with_codomain(R) in F.hom_set(dom_r, R):
                        ok = True
                        break
                if not ok:
                    return False
    return True


@dataclass(frozen=True)
class SaturationReport:
    sylow_ok: bool
    extension_ok: bool
    aut_index: int
    witness: dict | None

    @property
    def saturated(self) -> bool:
        return self.sylow_ok and self.extension_ok


def saturation_report(F: FusionSystem) -> SaturationReport:
    idx = sylow_index(F)
    sylow_ok = check_sylow_axiom(F)
    counter = _extension_counterexample(F)
    witness = None
    if not sylow_ok:
        witness = {"kind": "sylow_index", "index": idx}
    elif counter is not None:
        witness = {"kind": "non_extendable_morphism",
                   "domain": list(counter.domain.elems),
                   "images": list(counter.images)}
    return SaturationReport(sylow_ok, counter is None, idx, witness)


def assert_fusion_axioms(F: FusionSystem) -> None:
    """Raise unless F satisfies the defining axioms of a fusion system:
    inner maps present, injectivity, closure under restriction to the
    image with inverses, and under composition."""
    P = F.p_subgroup
    G = P.parent
    pset = set(P.elems)
    for Q in F.subgroups:
        for u in P.elems:
            images = tuple(G.conj(u, g) for g in Q.elems)
            assert set(images) <= pset
            target = Subgroup(G, images, _checked=True)
            if GroupMap(Q, target, images, _checked=True) not in F.isos:
                raise VerificationError("inner conjugation map is missing")
    for m in F.isos:
        if len(set(m.images)) != m.domain.order:
            raise VerificationError("non-injective morphism stored")
        if m.inverse() not in F.isos:
            raise VerificationError("inverse morphism is missing")
        for Q in F.subgroups:
            if Q.order < m.domain.order and Q.is_subset_of(m.domain):
                if m.restrict(Q) not in F.isos:
                    raise VerificationError("restriction is missing")
    by_dom: dict[tuple[int, ...], list[GroupMap]] = {}
    for m in F.isos:
        by_dom.setdefault(m.domain.elems, []).append(m)
    for m in F.isos:
        for other in by_dom.get(m.image_elems, ()):
            if other.compose(m.onto_image()).onto_image() not in F.isos:
                raise VerificationError("composition is missing")
