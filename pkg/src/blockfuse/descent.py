"""Galois descent for blocks and fusion systems.

The cyclic Galois group of the tower acts on L[G] coefficientwise.  Orbit
sums of L-blocks are K-blocks, maximal pairs descend coordinatewise, and
the fusion system over K is generated by the fusion system over L
together with a single twist automorphism of the defect group, obtained
by conjugating with a generator of the cyclic quotient
N_G(P, orbit-sum e) / N_G(P, e).  This module computes those objects and
verifies the advertised identities; the identities are theorems, so any
failure raises `VerificationError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (BlockIdempotent, VerificationError, find_block, galois_apply,
                      is_k_rational, primitive_central_idempotents)
from .brauer import BrauerPair, maximal_pairs, pair_stabilizer, subpair_table
from .fusion import (FusionSystem, alperin_check, block_fusion, check_extension_axiom,
                     closure, factorization_check, fully_centralized, fully_normalized,
                     fusion_equal, is_centric, is_saturated)
from .gf import FieldTower
from .groups import FiniteGroup, GroupMap, Subgroup


def frobenius_stabilizer_order(a) -> int:
    """Order of the stabilizer of an algebra element inside the cyclic
    Galois group."""
    t = a.tower
    for j in range(1, t.gamma_order + 1):
        if t.gamma_order % j == 0 and galois_apply(j, a) == a:
            return t.gamma_order // j
    raise AssertionError("unreachable: gamma_order always fixes")


def galois_orbit(b: BlockIdempotent) -> list[BlockIdempotent]:
    """The distinct Galois conjugates of a block, starting at b."""
    blocks = primitive_central_idempotents(b.owner, b.elem.tower, b.over_k)
    orbit = [b]
    cur = galois_apply(1, b.elem)
    while cur != b.elem:
        orbit.append(find_block(blocks, cur))
        cur = galois_apply(1, cur)
    return orbit


def orbit_sum(b: BlockIdempotent) -> BlockIdempotent:
    """Sum of the distinct Galois conjugates of an L-block: the unique
    K-block of the same algebra lying over it."""
    if b.over_k:
        raise ValueError("orbit_sum applies to blocks over the top field")
    total = b.elem
    cur = galois_apply(1, b.elem)
    while cur != b.elem:
        total = total + cur
        cur = galois_apply(1, cur)
    if not is_k_rational(total):
        raise VerificationError("orbit sum is not Frobenius fixed")
    k_blocks = primitive_central_idempotents(b.owner, b.elem.tower, over_k=True)
    return find_block(k_blocks, total)


def descend_pair(pair: BrauerPair) -> BrauerPair:
    """(P, e) -> (P, orbit sum of e), a pair over the subfield."""
    return BrauerPair(pair.subgroup, orbit_sum(pair.block))


@dataclass(frozen=True)
class Correspondence:
    """Orbit sums set up a bijection from Galois orbits of L-blocks to
    K-blocks, preserving defect-group orders."""

    orbits: tuple[tuple[int, ...], ...]          # L-block indices per orbit
    k_block_of_orbit: tuple[int, ...]            # K-block index per orbit
    defect_orders_l: tuple[int, ...]             # per orbit (shared by members)
    defect_orders_k: tuple[int, ...]             # per K-block, aligned with orbits
    bijective: bool
    defects_match: bool


def block_correspondence(G: FiniteGroup, tower: FieldTower, seed: int = 0) -> Correspondence:
    l_blocks = primitive_central_idempotents(G, tower, over_k=False, seed=seed)
    k_blocks = primitive_central_idempotents(G, tower, over_k=True, seed=seed)
    seen: set[int] = set()
    orbits = []
    k_of_orbit = []
    defects_l = []
    defects_k = []
    for b in l_blocks:
        if b.index in seen:
            continue
        orbit = galois_orbit(b)
        seen.update(x.index for x in orbit)
        orbits.append(tuple(sorted(x.index for x in orbit)))
        tilde = orbit_sum(b)
        k_of_orbit.append(tilde.index)
        orders = {maximal_pairs(G, tower, x, seed).defect_order for x in orbit}
        if len(orders) != 1:
            raise VerificationError("orbit members have different defect orders")
        defects_l.append(orders.pop())
        defects_k.append(maximal_pairs(G, tower, tilde, seed).defect_order)
    bijective = (sorted(k_of_orbit) == [b.index for b in k_blocks]
                 and len(set(k_of_orbit)) == len(k_of_orbit))
    defects_match = tuple(defects_l) == tuple(defects_k)
    return Correspondence(tuple(orbits), tuple(k_of_orbit), tuple(defects_l),
                          tuple(defects_k), bijective, defects_match)


@dataclass(frozen=True)
class GoursatInvariants:
    """The four projections of the stabilizer of a maximal pair inside
    G x Gamma, with the theorem-backed identities asserted on creation.
    Galois subgroups are recorded by their orders."""

    k1: Subgroup          # N_G(P, e)
    p1: Subgroup          # N_G(P, orbit sum of e)
    k2_order: int         # |Gamma_e|
    p2_order: int         # |Gamma_b|
    index: int            # common cyclic quotient size


def _coset_order(G: FiniteGroup, x: int, H: Subgroup) -> int:
    hset = set(H.elems)
    d, cur = 1, x
    while cur not in hset:
        cur = G.mul[cur][x]
        d += 1
    return d


def _is_normal(H: Subgroup, N: Subgroup) -> bool:
    """H normal in N (H <= N assumed)."""
    G = H.parent
    hset = set(H.elems)
    return all(G.conj(x, h) in hset for x in N.elems for h in H.elems)


def goursat_invariants(pair: BrauerPair, b: BlockIdempotent) -> GoursatInvariants:
    if b.over_k:
        raise ValueError("expected a block over the top field")
    k1 = pair_stabilizer(pair)
    p1 = pair_stabilizer(descend_pair(pair))
    k2 = frobenius_stabilizer_order(pair.block.elem)
    p2 = frobenius_stabilizer_order(b.elem)
    if not k1.is_subset_of(p1) or not _is_normal(k1, p1):
        raise VerificationError("pair stabilizer is not normal in the orbit-sum stabilizer")
    if p2 % k2:
        raise VerificationError("Galois stabilizers are not nested")
    index = p1.order // k1.order
    if index != p2 // k2:
        raise VerificationError("group-side and Galois-side indices differ")
    G = pair.group
    if index > 1 and not any(_coset_order(G, x, k1) == index for x in p1.elems):
        raise VerificationError("stabilizer quotient is not cyclic")
    return GoursatInvariants(k1, p1, k2, p2, index)


def twist_automorphism(pair: BrauerPair, b: BlockIdempotent,
                       inv: GoursatInvariants | None = None) -> tuple[int, GroupMap]:
    """The first element of N_G(P, orbit sum) whose coset generates the
    cyclic quotient over N_G(P, e), together with its conjugation action
    on P."""
    if inv is None:
        inv = goursat_invariants(pair, b)
    G = pair.group
    P = pair.subgroup
    if inv.index == 1:
        g0 = 0
    else:
        g0 = next(x for x in inv.p1.elems if _coset_order(G, x, inv.k1) == inv.index)
    images = tuple(G.conj(g0, g) for g in P.elems)
    return g0, GroupMap(P, P, images, _checked=True)


@dataclass
class GaloisContext:
    """Everything the descent verifiers need for one L-block."""

    group: FiniteGroup
    tower: FieldTower
    block: BlockIdempotent           # b, block of L[G]
    k_block: BlockIdempotent         # its orbit sum, block of K[G]
    root: BrauerPair                 # maximal pair of b over L
    k_root: BrauerPair               # (P, orbit sum of e), maximal for the K-block
    goursat: GoursatInvariants
    g0: int
    sigma: GroupMap
    system_l: FusionSystem = field(repr=False)
    system_k: FusionSystem = field(repr=False)


def galois_context(G: FiniteGroup, tower: FieldTower, b: BlockIdempotent,
                   seed: int = 0) -> GaloisContext:
    from .algebra import multiply
    k_block = orbit_sum(b)
    if multiply(b.elem, k_block.elem) != b.elem:
        raise VerificationError("orbit sum does not cover the block")
    mp_l = maximal_pairs(G, tower, b, seed)
    root = mp_l.pairs[0]
    k_root = descend_pair(root)
    mp_k = maximal_pairs(G, tower, k_block, seed)
    if mp_k.defect_order != mp_l.defect_order:
        raise VerificationError("defect orders differ across the descent")
    if k_root not in mp_k.pairs:
        raise VerificationError("descended root is not a maximal pair over K")
    inv = goursat_invariants(root, b)
    g0, sigma = twist_automorphism(root, b, inv)
    system_l = block_fusion(G, tower, b, root, seed)
    system_k = block_fusion(G, tower, k_block, k_root, seed)
    return GaloisContext(G, tower, b, k_block, root, k_root, inv, g0, sigma,
                         system_l, system_k)


def check_generation(ctx: GaloisContext) -> bool:
    """The K-side system equals the closure of the L-side system plus the
    twist, and every K-side morphism factors through twist powers on
    either side."""
    generated = closure(ctx.root.subgroup, ctx.system_l.isos | {ctx.sigma})
    if not fusion_equal(generated, ctx.system_k):
        return False
    return factorization_check(ctx.system_l, ctx.system_k, ctx.sigma)


@dataclass(frozen=True)
class SaturationTransfer:
    holds: bool
    saturated_l: bool
    saturated_k: bool
    index_group: int      # [N_G(P, orbit sum) : N_G(P, e)]
    index_galois: int     # [Gamma_b : Gamma_e]
    index_field: int      # degree of K(e) over K(b)


def check_saturation_transfer(ctx: GaloisContext) -> SaturationTransfer:
    """Saturation over K holds iff it holds over L and p does not divide
    the descent index; the three index expressions must agree."""
    inv = ctx.goursat
    index_group = inv.p1.order // inv.k1.order
    index_galois = inv.p2_order // inv.k2_order
    # fixed-field degrees: [K(e):K] = gamma/|Gamma_e|, [K(b):K] = gamma/|Gamma_b|
    index_field = (ctx.tower.gamma_order // inv.k2_order) // (ctx.tower.gamma_order // inv.p2_order)
    if not index_group == index_galois == index_field:
        raise VerificationError("descent index expressions disagree")
    sat_l = is_saturated(ctx.system_l)
    sat_k = is_saturated(ctx.system_k)
    holds = sat_k == (sat_l and index_galois % ctx.tower.p != 0)
    return SaturationTransfer(holds, sat_l, sat_k, index_group, index_galois, index_field)


def check_local_agreement(ctx: GaloisContext) -> bool:
    """Fully centralized, fully normalized and centric agree between the
    L-side and K-side systems on every subgroup of P."""
    for Q in ctx.system_l.subgroups:
        if fully_centralized(ctx.system_l, Q) != fully_centralized(ctx.system_k, Q):
            return False
        if fully_normalized(ctx.system_l, Q) != fully_normalized(ctx.system_k, Q):
            return False
        if is_centric(ctx.system_l, Q) != is_centric(ctx.system_k, Q):
            return False
    return True


def check_order_preservation(ctx: GaloisContext, seed: int = 0) -> bool:
    """Descending every subpair of the maximal root lands under the
    descended root: the orbit-sum map on pairs preserves the order."""
    table_l = subpair_table(ctx.root, seed)
    table_k = subpair_table(ctx.k_root, seed)
    return all(orbit_sum(e_q) == table_k[elems] for elems, e_q in table_l.items())


@dataclass
class DescentReport:
    group_name: str
    tower_key: tuple[int, int, int]
    block_index: int
    k_block_index: int
    orbit_size: int
    defect_order: int
    root_subgroup: tuple[int, ...]
    root_block_index: int
    k_root_block_index: int
    stab_order_l: int
    stab_order_k: int
    gamma_b_order: int
    gamma_e_order: int
    index: int
    g0: int
    sigma_images: tuple[int, ...]
    generation_ok: bool
    saturation: SaturationTransfer
    extension_ok_l: bool
    extension_ok_k: bool
    alperin_ok_l: bool
    alperin_ok_k: bool
    local_agreement_ok: bool
    order_preserved_ok: bool
    sigma_in_k_system: bool

    @property
    def all_ok(self) -> bool:
        return (self.generation_ok and self.saturation.holds and self.extension_ok_l
                and self.extension_ok_k and self.alperin_ok_l and self.alperin_ok_k
                and self.local_agreement_ok and self.order_preserved_ok
                and self.sigma_in_k_system)

    def to_json(self) -> dict:
        sat = self.saturation
        return {
            "group": self.group_name,
            "tower": {"p": self.tower_key[0], "m": self.tower_key[1], "n": self.tower_key[2]},
            "block_index": self.block_index,
            "k_block_index": self.k_block_index,
            "orbit_size": self.orbit_size,
            "defect_order": self.defect_order,
            "root": {"P": list(self.root_subgroup), "e": self.root_block_index,
                     "defect_order": self.defect_order},
            "k_root": {"P": list(self.root_subgroup), "e": self.k_root_block_index,
                       "defect_order": self.defect_order},
            "stabilizers": {"pair_l": self.stab_order_l, "pair_k": self.stab_order_k,
                            "gamma_b": self.gamma_b_order, "gamma_e": self.gamma_e_order},
            "index": self.index,
            "g0": self.g0,
            "sigma": list(self.sigma_images),
            "verdicts": {
                "generation": self.generation_ok,
                "saturation_transfer": sat.holds,
                "extension_axiom_l": self.extension_ok_l,
                "extension_axiom_k": self.extension_ok_k,
                "alperin_l": self.alperin_ok_l,
                "alperin_k": self.alperin_ok_k,
                "local_agreement": self.local_agreement_ok,
                "order_preserved": self.order_preserved_ok,
                "sigma_in_k_system": self.sigma_in_k_system,
            },
            "saturated": {"l": sat.saturated_l, "k": sat.saturated_k},
            "index_expressions": {"group": sat.index_group, "galois": sat.index_galois,
                                  "field": sat.index_field},
            "all_ok": self.all_ok,
        }


def run_descent(G: FiniteGroup, tower: FieldTower, b: BlockIdempotent,
                seed: int = 0) -> tuple[DescentReport, GaloisContext]:
    ctx = galois_context(G, tower, b, seed)
    sat = check_saturation_transfer(ctx)
    report = DescentReport(
        group_name=G.name,
        tower_key=tower.key,
        block_index=b.index,
        k_block_index=ctx.k_block.index,
        orbit_size=len(galois_orbit(b)),
        defect_order=ctx.root.subgroup.order,
        root_subgroup=ctx.root.subgroup.elems,
        root_block_index=ctx.root.block.index,
        k_root_block_index=ctx.k_root.block.index,
        stab_order_l=ctx.goursat.k1.order,
        stab_order_k=ctx.goursat.p1.order,
        gamma_b_order=ctx.goursat.p2_order,
        gamma_e_order=ctx.goursat.k2_order,
        index=ctx.goursat.index,
        g0=ctx.g0,
        sigma_images=ctx.sigma.images,
        generation_ok=check_generation(ctx),
        saturation=sat,
        extension_ok_l=check_extension_axiom(ctx.system_l),
        extension_ok_k=check_extension_axiom(ctx.system_k),
        alperin_ok_l=alperin_check(ctx.system_l),
        alperin_ok_k=alperin_check(ctx.system_k),
        local_agreement_ok=check_local_agreement(ctx),
        order_preserved_ok=check_order_preservation(ctx, seed),
        sigma_in_k_system=ctx.sigma in ctx.system_k.aut_set(ctx.root.subgroup),
    )
    return report, ctx
