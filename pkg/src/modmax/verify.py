"""Verdict harness for the numbered structural results.

Each check evaluates a hypothesis and a conclusion on a concrete group and
returns a :class:`VerdictReport`.  The soundness contract of the whole
harness: a report counts as a failure only when the hypothesis holds (or
is vacuous, which counts as satisfied) while the conclusion fails.  Across
the standard suite no check may ever fail; a failure would mean either a
counterexample to a published result or a bug in this package, and both
break the build.

Check identifiers, fixed as part of the report schema:

- ThmA, Thm2.12: soluble groups whose n-maximal subgroups are all modular
  (2.12 also allows S-quasinormal), n bounded by the number of prime
  divisors; conclusion is strong supersolubility plus a square-free
  automizer bound on non-Frattini chief factors.
- ThmB, Thm3.4: same hypotheses with the bound relaxed by one; conclusion
  is that the strongly supersoluble residual is a nilpotent Hall subgroup.
- Prop2.9: closure facts for nearly nilpotent groups.
- Prop2.11: all maximal or all 2-maximal subgroups modular/S-quasinormal
  forces nearly nilpotent (hence strongly supersoluble).
- Prop3.2, Cor4.4: non-supersoluble groups whose 3-maximal subgroups are
  all well placed have order p*q^2 or are a quaternion group of order 8
  extended by an order-3 element.
- Lem2.1, Lem2.2, Lem2.3, Lem2.10: the supporting property suites, run
  exhaustively over all qualifying subgroups.
- Cor4.1, Cor4.2, Cor4.3: specialisations of Prop2.11.
- SharpnessA, SharpnessB: the two narratives showing the bounds in
  ThmA/ThmB cannot be weakened (evaluated on A4 and A4xC2).

Hypotheses with an empty quantification domain (no n-maximal subgroups)
are reported as "vacuous" and count as satisfied.  Conclusions are always
evaluated, even under a failed hypothesis, so that sharpness runs can
report them; the --fast mode skips them in exactly that case and reports
"not-evaluated".
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import catalog
from .classify import (
    all_chief_factors,
    is_hypercyclically_embedded,
    is_nearly_nilpotent,
    is_nilpotent,
    is_nilpotent_hall,
    is_p_group_schmidt,
    is_soluble,
    is_strongly_supersoluble,
    is_supersoluble,
    normal_subgroups,
    residual_strongly_supersoluble,
)
from .groups import (
    Group,
    SubgroupSet,
    bits,
    centralizer,
    close_mask,
    core,
    factorize,
    image_mask,
    is_prime,
    normal_closure,
    prime_spectrum,
    quotient,
    restrict_mask,
    squarefree,
    subgroup_as_group,
)
from .lattice import BadDepth, lattice_of

HOLDS = "holds"
FAILS = "fails"
VACUOUS = "vacuous"
NOT_EVALUATED = "not-evaluated"

MAX_WITNESSES = 10


class UnknownSelector(Exception):
    """Suite selector does not name a known group set or check set."""


@dataclass(frozen=True)
class VerdictReport:
    group: str
    theorem: str
    hypothesis: str            # holds | fails | vacuous
    conclusion: str            # holds | fails | not-evaluated
    witnesses: tuple[str, ...]
    ms: float

    def is_failure(self) -> bool:
        return (self.hypothesis in (HOLDS, VACUOUS)
                and self.conclusion == FAILS)

    def to_json_obj(self, deterministic: bool = True) -> dict:
        # "ms" is pinned to 0 in deterministic mode so that identical runs
        # serialise byte for byte; wall time is still shown in text mode.
        return {
            "group": self.group,
            "theorem": self.theorem,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "witnesses": list(self.witnesses),
            "ms": 0.0 if deterministic else round(self.ms, 3),
        }


def _cap_witnesses(items) -> tuple[str, ...]:
    items = list(items)
    if len(items) > MAX_WITNESSES:
        extra = len(items) - (MAX_WITNESSES - 1)
        items = items[:MAX_WITNESSES - 1] + [f"... {extra} more"]
    return tuple(items)


def _descriptor(lat, i: int) -> str:
    return f"subgroup[{i}](order {lat.subgroups[i].order})"


def _offender_witnesses(lat, offenders, cap: int = 4) -> list[str]:
    out = [_descriptor(lat, i) for i in offenders[:cap]]
    if len(offenders) > cap:
        out.append(f"... {len(offenders) - cap} more offenders")
    return out


def _finish(G, theorem, hypothesis, conclusion, witnesses, t0) -> VerdictReport:
    ms = (time.perf_counter() - t0) * 1000.0
    return VerdictReport(G.name, theorem, hypothesis, conclusion,
                         _cap_witnesses(witnesses), ms)


# ---------------------------------------------------------------------------
# the modularity census

@dataclass(frozen=True)
class CensusRow:
    n: int
    total: int
    modular: int
    s_quasinormal: int
    neither: int


@dataclass(frozen=True)
class ModularityCensus:
    group: str
    rows: tuple[CensusRow, ...]
    min_n_all_modular: int | None

    def to_json_obj(self) -> dict:
        return {
            "group": self.group,
            "rows": [
                {"n": r.n, "total": r.total, "modular": r.modular,
                 "s_quasinormal": r.s_quasinormal, "neither": r.neither}
                for r in self.rows
            ],
            "min_n_all_modular": self.min_n_all_modular,
        }


def census(G: Group) -> ModularityCensus:
    """Classify every n-maximal subgroup by modularity and S-quasinormality,
    for each depth up to the longest maximal chain."""
    lat = lattice_of(G)
    rows = []
    min_n = None
    for n in range(1, lat.max_chain_length + 1):
        idxs = lat.n_maximal_indices(n)
        mod = sum(1 for i in idxs if lat.is_modular(i))
        sq = sum(1 for i in idxs if lat.is_s_quasinormal(i))
        neither = sum(
            1 for i in idxs
            if not lat.is_modular(i) and not lat.is_s_quasinormal(i))
        rows.append(CensusRow(n, len(idxs), mod, sq, neither))
        if min_n is None and idxs and mod == len(idxs):
            min_n = n
    return ModularityCensus(G.name, tuple(rows), min_n)


def _depth_quantifier(lat, n: int, modular: bool, s_quasinormal: bool):
    """Status of "every n-maximal subgroup is well placed" plus offenders."""
    idxs = lat.n_maximal_indices(n)
    if not idxs:
        return VACUOUS, []
    offenders = [
        i for i in idxs
        if not ((modular and lat.is_modular(i))
                or (s_quasinormal and lat.is_s_quasinormal(i)))
    ]
    return (HOLDS if not offenders else FAILS), offenders


# ---------------------------------------------------------------------------
# n-maximal theorems

def _conclusion_strong_supersoluble(G: Group, n: int):
    """Strongly supersoluble, and each non-Frattini chief factor has a
    square-free automizer order with at most n prime factors."""
    witnesses = []
    ok = is_strongly_supersoluble(G)
    if not ok:
        witnesses.append("group is not strongly supersoluble")
    for f in all_chief_factors(G):
        if f.is_frattini:
            continue
        aut = f.automizer_order
        if not squarefree(aut) or len(factorize(aut)) > n:
            ok = False
            witnesses.append(f"automizer bound fails: {f.descriptor()}")
    return ok, witnesses


def _conclusion_residual_hall(G: Group, n: int):
    """The strongly supersoluble residual is a nilpotent Hall subgroup."""
    r = residual_strongly_supersoluble(G)
    ok = is_nilpotent_hall(G, r)
    word = "is" if ok else "is not"
    return ok, [f"residual(order {r.order}) {word} nilpotent Hall in order {G.order}"]


def _nmax_theorem(G: Group, n: int, theorem: str, with_squasi: bool,
                  slack: int, conclusion_fn, fast: bool) -> VerdictReport:
    if n < 1:
        raise BadDepth(f"depth must be >= 1, got {n}")
    t0 = time.perf_counter()
    lat = lattice_of(G)
    bound = len(prime_spectrum(G)) + slack
    witnesses = []
    if not is_soluble(G):
        hypothesis = FAILS
        witnesses.append("group is not soluble")
    elif n > bound:
        hypothesis = FAILS
        witnesses.append(f"n={n} exceeds the bound {bound}")
    else:
        hypothesis, offenders = _depth_quantifier(lat, n, True, with_squasi)
        if hypothesis == VACUOUS:
            witnesses.append(f"no {n}-maximal subgroups")
        else:
            witnesses.extend(_offender_witnesses(lat, offenders))
    if fast and hypothesis == FAILS:
        conclusion = NOT_EVALUATED
    else:
        ok, cw = conclusion_fn(G, n)
        conclusion = HOLDS if ok else FAILS
        witnesses.extend(cw)
    return _finish(G, theorem, hypothesis, conclusion, witnesses, t0)


def verify_theorem_A(G: Group, n: int, fast: bool = False) -> VerdictReport:
    return _nmax_theorem(G, n, f"ThmA(n={n})", False, 0,
                         _conclusion_strong_supersoluble, fast)


def verify_theorem_2_12(G: Group, n: int, fast: bool = False) -> VerdictReport:
    return _nmax_theorem(G, n, f"Thm2.12(n={n})", True, 0,
                         _conclusion_strong_supersoluble, fast)


def verify_theorem_B(G: Group, n: int, fast: bool = False) -> VerdictReport:
    return _nmax_theorem(G, n, f"ThmB(n={n})", False, 1,
                         _conclusion_residual_hall, fast)


def verify_theorem_3_4(G: Group, n: int, fast: bool = False) -> VerdictReport:
    return _nmax_theorem(G, n, f"Thm3.4(n={n})", True, 1,
                         _conclusion_residual_hall, fast)


# ---------------------------------------------------------------------------
# propositions

def verify_prop_2_9(G: Group, fast: bool = False) -> VerdictReport:
    """Closure facts: a nearly nilpotent group is strongly supersoluble and
    all its quotients are nearly nilpotent; recovering the property from the
    Frattini quotient is also checked."""
    t0 = time.perf_counter()
    lat = lattice_of(G)
    nn_here = is_nearly_nilpotent(G)
    phi = lat.frattini()
    q_phi, _ = quotient(G, phi)
    nn_frattini_quotient = is_nearly_nilpotent(q_phi)
    hypothesis = HOLDS if (nn_here or nn_frattini_quotient) else VACUOUS
    witnesses = []
    ok = True
    if nn_here:
        if not is_strongly_supersoluble(G):
            ok = False
            witnesses.append("nearly nilpotent but not strongly supersoluble")
        for N in normal_subgroups(G):
            Q, _ = quotient(G, N)
            if not is_nearly_nilpotent(Q):
                ok = False
                witnesses.append(
                    f"quotient by normal subgroup of order {N.order} "
                    "is not nearly nilpotent")
    if nn_frattini_quotient and not nn_here:
        ok = False
        witnesses.append("Frattini quotient nearly nilpotent, group is not")
    if hypothesis == VACUOUS:
        witnesses.append("group is not nearly nilpotent (no closure to check)")
    conclusion = HOLDS if ok else FAILS
    return _finish(G, "Prop2.9", hypothesis, conclusion, witnesses, t0)


def verify_prop_2_11(G: Group, fast: bool = False) -> VerdictReport:
    """All maximal, or all 2-maximal, subgroups modular or S-quasinormal
    forces nearly nilpotent (hence strongly supersoluble)."""
    t0 = time.perf_counter()
    lat = lattice_of(G)
    s1, off1 = _depth_quantifier(lat, 1, True, True)
    s2, off2 = _depth_quantifier(lat, 2, True, True)
    witnesses = []
    if s1 == VACUOUS and s2 == VACUOUS:
        hypothesis = VACUOUS
        witnesses.append("no maximal subgroups at all")
    elif s1 != FAILS or s2 != FAILS:
        # either disjunct suffices; an empty depth counts as satisfied
        hypothesis = HOLDS
    else:
        hypothesis = FAILS
        witnesses.extend(_offender_witnesses(lat, off1, cap=2))
        witnesses.extend(_offender_witnesses(lat, off2, cap=2))
    if fast and hypothesis == FAILS:
        conclusion = NOT_EVALUATED
    else:
        ok = is_nearly_nilpotent(G) and is_strongly_supersoluble(G)
        conclusion = HOLDS if ok else FAILS
        if not ok:
            witnesses.append("group is not nearly nilpotent")
    return _finish(G, "Prop2.11", hypothesis, conclusion, witnesses, t0)


def _quaternion_complement_structure(G: Group) -> bool:
    """A normal self-centralising quaternion Sylow 2-subgroup of order 8
    with an order-3 complement, checked structurally."""
    if G.order != 24:
        return False
    lat = lattice_of(G)
    has_order3 = any(s.order == 3 for s in lat.subgroups)
    for i in lat.normal_indices():
        S = lat.subgroups[i]
        if S.order != 8:
            continue
        sub, _ = subgroup_as_group(G, S)
        orders = sub.element_orders()
        involutions = sum(1 for o in orders if o == 2)
        abelian = all(sub.table[a][b] == sub.table[b][a]
                      for a in range(8) for b in range(8))
        if abelian or involutions != 1:
            continue  # order 8, non-abelian, unique involution = quaternion
        cent = centralizer(G, S)
        if cent.mask & S.mask == cent.mask and has_order3:
            return True
    return False


def _pq2_order(G: Group) -> bool:
    return sorted(factorize(G.order).values()) == [1, 2]


def verify_prop_3_2(G: Group, fast: bool = False) -> VerdictReport:
    """Non-supersoluble with every 3-maximal subgroup modular or
    S-quasinormal: order p*q^2 or quaternion-by-3 structure."""
    return _three_maximal_structure(G, "Prop3.2", with_squasi=True, fast=fast)


def _three_maximal_structure(G: Group, theorem: str, with_squasi: bool,
                             fast: bool) -> VerdictReport:
    t0 = time.perf_counter()
    lat = lattice_of(G)
    witnesses = []
    if is_supersoluble(G):
        # conclusion describes non-supersoluble groups only
        witnesses.append("group is supersoluble, statement out of scope")
        return _finish(G, theorem, FAILS, NOT_EVALUATED, witnesses, t0)
    status, offenders = _depth_quantifier(lat, 3, True, with_squasi)
    hypothesis = status
    if status == VACUOUS:
        witnesses.append("no 3-maximal subgroups")
    else:
        witnesses.extend(_offender_witnesses(lat, offenders))
    if fast and hypothesis == FAILS:
        conclusion = NOT_EVALUATED
    else:
        if _pq2_order(G):
            conclusion = HOLDS
            witnesses.append(f"order {G.order} has shape p*q^2")
        elif _quaternion_complement_structure(G):
            conclusion = HOLDS
            witnesses.append("normal self-centralising quaternion Sylow "
                             "2-subgroup with order-3 complement")
        else:
            conclusion = FAILS
            witnesses.append("neither the p*q^2 shape nor the quaternion shape")
    return _finish(G, theorem, hypothesis, conclusion, witnesses, t0)


# ---------------------------------------------------------------------------
# lemma suites

def verify_lemma_2_1(G: Group, M: SubgroupSet, fast: bool = False) -> VerdictReport:
    """For one modular subgroup M: M over its core is nilpotent, the normal
    closure over the core is hypercyclically embedded, and a core-free M
    exhibits the coprime power-split-by-permutable decomposition."""
    t0 = time.perf_counter()
    lat = lattice_of(G)
    mi = lat.index(M)
    label = f"Lem2.1[{_descriptor(lat, mi)}]"
    if not lat.is_modular(mi):
        return _finish(G, label, VACUOUS, NOT_EVALUATED,
                       ["subgroup is not modular"], t0)
    ok, witnesses = _lemma_2_1_conclusion(G, lat, mi)
    return _finish(G, label, HOLDS, HOLDS if ok else FAILS, witnesses, t0)


def _lemma_2_1_conclusion(G: Group, lat, mi: int):
    M = lat.subgroups[mi]
    witnesses = []
    ok = True
    mg = core(G, M)
    Q, proj = quotient(G, mg)
    qlat = lattice_of(Q)
    m_bar = SubgroupSet(Q, image_mask(proj, M.mask))
    m_bar_group, _ = subgroup_as_group(Q, m_bar)
    if not is_nilpotent(m_bar_group):
        ok = False
        witnesses.append("M over its core is not nilpotent")
    closure_bar = SubgroupSet(Q, image_mask(proj, normal_closure(G, M).mask))
    if not is_hypercyclically_embedded(Q, closure_bar):
        ok = False
        witnesses.append("normal closure over the core is not "
                         "hypercyclically embedded")
    if mg.order == 1:
        decomposition = _core_free_decomposition(G, lat, M)
        if decomposition is None:
            ok = False
            witnesses.append("no coprime decomposition found for core-free M")
        else:
            witnesses.append(decomposition)
    return ok, witnesses


def _core_free_decomposition(G: Group, lat, M: SubgroupSet) -> str | None:
    """Search for G = S1 x ... x Sr x K with pairwise coprime orders, each
    Si a non-abelian power-split group, M meeting each Si in a non-normal
    Sylow subgroup, and M meet K quasinormal in G."""
    norms = [lat.subgroups[i] for i in lat.normal_indices()]
    split_candidates = []
    for N in norms:
        if 1 < N.order:
            sub, _ = subgroup_as_group(G, N)
            if is_p_group_schmidt(sub):
                split_candidates.append(N)
    for r in range(len(split_candidates) + 1):
        for combo in itertools.combinations(split_candidates, r):
            orders = [S.order for S in combo]
            if any(math.gcd(a, b) != 1
                   for a, b in itertools.combinations(orders, 2)):
                continue
            prod = math.prod(orders)
            if G.order % prod:
                continue
            k_order = G.order // prod
            for K in norms:
                if K.order != k_order:
                    continue
                if any(math.gcd(K.order, o) != 1 for o in orders):
                    continue
                if not _is_internal_direct(G, [S.mask for S in combo] + [K.mask]):
                    continue
                pieces_ok = True
                piece_orders = []
                for S in combo:
                    q_mask = M.mask & S.mask
                    if not _is_nonnormal_sylow_of(G, S, q_mask):
                        pieces_ok = False
                        break
                    piece_orders.append(q_mask.bit_count())
                if not pieces_ok:
                    continue
                mk_mask = M.mask & K.mask
                if math.prod(piece_orders) * mk_mask.bit_count() != M.order:
                    continue
                try:
                    mk_idx = lat.index_of_mask(mk_mask)
                except KeyError:
                    continue
                if not lat.is_quasinormal(mk_idx):
                    continue
                return (f"decomposition r={r}, factor orders "
                        f"{orders + [k_order]}, permutable part order "
                        f"{mk_mask.bit_count()}")
    return None


def _is_internal_direct(G: Group, masks: list[int]) -> bool:
    total = math.prod(m.bit_count() for m in masks)
    if total != G.order:
        return False
    union = 0
    for m in masks:
        union |= m
    return close_mask(G.table, bits(union), G.order) == (1 << G.order) - 1


def _is_nonnormal_sylow_of(G: Group, S: SubgroupSet, q_mask: int) -> bool:
    sub, elems = subgroup_as_group(G, S)
    local = restrict_mask(elems, q_mask)
    size = local.bit_count()
    if size <= 1:
        return False
    fac = factorize(size)
    if len(fac) != 1:
        return False
    (p, _), = fac.items()
    p_part = 1
    n = sub.order
    while n % p == 0:
        p_part *= p
        n //= p
    if size != p_part:
        return False
    sublat = lattice_of(sub)
    return not sublat.is_normal(sublat.index_of_mask(local))


def lemma_2_1_suite(G: Group, fast: bool = False) -> VerdictReport:
    """Aggregate Lem2.1 over every modular subgroup of G."""
    t0 = time.perf_counter()
    lat = lattice_of(G)
    witnesses = []
    ok = True
    checked = 0
    for i in range(lat.size):
        if not lat.is_modular(i):
            continue
        checked += 1
        ok_i, w = _lemma_2_1_conclusion(G, lat, i)
        if not ok_i:
            ok = False
            witnesses.append(f"{_descriptor(lat, i)}: " + "; ".join(w))
    witnesses.insert(0, f"{checked} modular subgroups checked")
    return _finish(G, "Lem2.1", HOLDS, HOLDS if ok else FAILS, witnesses, t0)


def verify_lemma_2_2(G: Group, fast: bool = False) -> VerdictReport:
    """Modular subgroups: closed under joins, stable in quotients, include
    all normals, and restrict to intermediate subgroups."""
    t0 = time.perf_counter()
    lat = lattice_of(G)
    witnesses = []
    ok = True
    modular = [i for i in range(lat.size) if lat.is_modular(i)]
    mod_set = set(modular)
    for a in modular:
        for b in modular:
            if b < a:
                continue
            if lat.join_t[a][b] not in mod_set:
                ok = False
                witnesses.append(
                    f"join of {_descriptor(lat, a)} and {_descriptor(lat, b)}"
                    " is not modular")
    for i in lat.normal_indices():
        if i not in mod_set:
            ok = False
            witnesses.append(f"normal {_descriptor(lat, i)} is not modular")
    for ni in lat.normal_indices():
        N = lat.subgroups[ni]
        Q, proj = quotient(G, N)
        qlat = lattice_of(Q)
        for a in modular:
            img = image_mask(proj, lat.subgroups[a].mask)
            if not qlat.is_modular(qlat.index_of_mask(img)):
                ok = False
                witnesses.append(
                    f"image of {_descriptor(lat, a)} not modular in quotient "
                    f"by order {N.order}")
    for a in modular:
        for b in lat.above[a]:
            if b == a or b == lat.top():
                continue
            B = lat.subgroups[b]
            sub, elems = subgroup_as_group(G, B)
            sublat = lattice_of(sub)
            local = restrict_mask(elems, lat.subgroups[a].mask)
            if not sublat.is_modular(sublat.index_of_mask(local)):
                ok = False
                witnesses.append(
                    f"{_descriptor(lat, a)} not modular inside {_descriptor(lat, b)}")
    witnesses.insert(0, f"{len(modular)} modular subgroups")
    return _finish(G, "Lem2.2", HOLDS, HOLDS if ok else FAILS, witnesses, t0)


def verify_lemma_2_3(G: Group, fast: bool = False) -> VerdictReport:
    """S-quasinormal subgroups restrict to intermediates, correspond through
    quotients, and are subnormal with nilpotent closure-over-core."""
    t0 = time.perf_counter()
    lat = lattice_of(G)
    witnesses = []
    ok = True
    squasi = [i for i in range(lat.size) if lat.is_s_quasinormal(i)]
    for h in squasi:
        H = lat.subgroups[h]
        for k in lat.above[h]:
            if k == h or k == lat.top():
                continue
            K = lat.subgroups[k]
            sub, elems = subgroup_as_group(G, K)
            sublat = lattice_of(sub)
            local = restrict_mask(elems, H.mask)
            if not sublat.is_s_quasinormal(sublat.index_of_mask(local)):
                ok = False
                witnesses.append(
                    f"{_descriptor(lat, h)} not S-quasinormal inside "
                    f"{_descriptor(lat, k)}")
    for hi in lat.normal_indices():
        H = lat.subgroups[hi]
        Q, proj = quotient(G, H)
        qlat = lattice_of(Q)
        for k in lat.above[hi]:
            img = image_mask(proj, lat.subgroups[k].mask)
            upstairs = lat.is_s_quasinormal(k)
            downstairs = qlat.is_s_quasinormal(qlat.index_of_mask(img))
            if upstairs != downstairs:
                ok = False
                witnesses.append(
                    f"quotient correspondence fails for {_descriptor(lat, k)} "
                    f"over normal of order {H.order}")
    for h in squasi:
        H = lat.subgroups[h]
        if not lat.is_subnormal(h):
            ok = False
            witnesses.append(f"{_descriptor(lat, h)} is not subnormal")
        hg = normal_closure(G, H)
        hcore = core(G, H)
        closure_group, elems = subgroup_as_group(G, hg)
        Qc, _ = quotient(closure_group,
                         SubgroupSet(closure_group, restrict_mask(elems, hcore.mask)))
        if not is_nilpotent(Qc):
            ok = False
            witnesses.append(
                f"closure over core of {_descriptor(lat, h)} is not nilpotent")
    witnesses.insert(0, f"{len(squasi)} S-quasinormal subgroups")
    return _finish(G, "Lem2.3", HOLDS, HOLDS if ok else FAILS, witnesses, t0)


def _primitive_pairs(G: Group, lat):
    """(R, M) pairs: minimal normal self-centralising R with a core-free
    maximal complement M."""
    pairs = []
    norm = lat.normal_indices()
    minimal_normals = []
    for i in norm:
        if lat.subgroups[i].order == 1:
            continue
        mask = lat.subgroups[i].mask
        if not any(1 < lat.subgroups[j].order
                   and lat.subgroups[j].mask & mask == lat.subgroups[j].mask
                   and lat.subgroups[j].mask != mask
                   for j in norm):
            minimal_normals.append(i)
    for ri in minimal_normals:
        R = lat.subgroups[ri]
        if centralizer(G, R).mask != R.mask:
            continue
        for mi in lat.covers_down[lat.top()]:
            M = lat.subgroups[mi]
            if (core(G, M).order == 1 and R.mask & M.mask == 1
                    and R.order * M.order == G.order):
                pairs.append((ri, mi))
    return pairs


def verify_lemma_2_10(G: Group, fast: bool = False) -> VerdictReport:
    """In a soluble primitive group R x| M that is not nearly nilpotent:
    no nontrivial proper subgroup of the point stabiliser is modular or
    S-quasinormal, and for prime |M| each intermediate size below |R| has
    a subgroup that is neither."""
    t0 = time.perf_counter()
    lat = lattice_of(G)
    witnesses = []
    if not is_soluble(G) or is_nearly_nilpotent(G):
        return _finish(G, "Lem2.10", VACUOUS, HOLDS,
                       ["group is not a primitive non-nearly-nilpotent "
                        "soluble group"], t0)
    pairs = _primitive_pairs(G, lat)
    if not pairs:
        return _finish(G, "Lem2.10", VACUOUS, HOLDS,
                       ["no self-centralising minimal normal with core-free "
                        "complement"], t0)
    ok = True
    for ri, mi in pairs:
        R, M = lat.subgroups[ri], lat.subgroups[mi]
        for ti in lat.below[mi]:
            T = lat.subgroups[ti]
            if T.order in (1, M.order):
                continue
            if lat.is_modular(ti) or lat.is_s_quasinormal(ti):
                ok = False
                witnesses.append(
                    f"{_descriptor(lat, ti)} inside the stabiliser is "
                    "modular or S-quasinormal")
        if is_prime(M.order):
            sizes = sorted({lat.subgroups[v].order for v in lat.below[ri]
                            if 1 < lat.subgroups[v].order < R.order})
            for size in sizes:
                found = any(
                    not lat.is_modular(v) and not lat.is_s_quasinormal(v)
                    for v in lat.below[ri]
                    if lat.subgroups[v].order == size)
                if not found:
                    ok = False
                    witnesses.append(
                        f"every subgroup of order {size} inside the socle is "
                        "modular or S-quasinormal")
    witnesses.insert(0, f"{len(pairs)} primitive decompositions checked")
    return _finish(G, "Lem2.10", HOLDS, HOLDS if ok else FAILS, witnesses, t0)


# ---------------------------------------------------------------------------
# corollaries

def _two_maximal_corollary(G: Group, theorem: str, modular: bool,
                           s_quasinormal: bool, conclusion_pred, label: str,
                           fast: bool) -> VerdictReport:
    t0 = time.perf_counter()
    lat = lattice_of(G)
    hypothesis, offenders = _depth_quantifier(lat, 2, modular, s_quasinormal)
    witnesses = []
    if hypothesis == VACUOUS:
        witnesses.append("no 2-maximal subgroups")
    else:
        witnesses.extend(_offender_witnesses(lat, offenders))
    if fast and hypothesis == FAILS:
        conclusion = NOT_EVALUATED
    else:
        ok = conclusion_pred(G)
        conclusion = HOLDS if ok else FAILS
        if not ok:
            witnesses.append(f"group is not {label}")
    return _finish(G, theorem, hypothesis, conclusion, witnesses, t0)


def verify_corollary_4_1(G: Group, fast: bool = False) -> VerdictReport:
    return _two_maximal_corollary(G, "Cor4.1", True, False,
                                  is_nearly_nilpotent, "nearly nilpotent", fast)


def verify_corollary_4_2(G: Group, fast: bool = False) -> VerdictReport:
    return _two_maximal_corollary(G, "Cor4.2", False, True,
                                  is_nearly_nilpotent, "nearly nilpotent", fast)


def verify_corollary_4_3(G: Group, fast: bool = False) -> VerdictReport:
    return _two_maximal_corollary(G, "Cor4.3", False, True,
                                  is_supersoluble, "supersoluble", fast)


def verify_corollary_4_4(G: Group, fast: bool = False) -> VerdictReport:
    return _three_maximal_structure(G, "Cor4.4", with_squasi=False, fast=fast)


def verify_corollaries(G: Group, fast: bool = False) -> list[VerdictReport]:
    return [
        verify_corollary_4_1(G, fast),
        verify_corollary_4_2(G, fast),
        verify_corollary_4_3(G, fast),
        verify_corollary_4_4(G, fast),
    ]


# ---------------------------------------------------------------------------
# sharpness narratives

def verify_sharpness_A(G: Group, fast: bool = False) -> VerdictReport:
    """The bound n <= |pi(G)| cannot be dropped: on the order-12
    alternating group the only 3-maximal subgroup is trivial (hence
    modular), yet 3 exceeds |pi| = 2 and the group is not even
    supersoluble, so the hypothesis fails only through the bound."""
    t0 = time.perf_counter()
    lat = lattice_of(G)
    spectrum = prime_spectrum(G)
    n3 = lat.n_maximal_indices(3)
    witnesses = []
    structural = (is_soluble(G)
                  and len(n3) == 1
                  and lat.subgroups[n3[0]].order == 1
                  and all(lat.is_modular(i) for i in n3))
    hypothesis = HOLDS if structural else FAILS
    if structural:
        witnesses.append("3-maximal set is exactly the trivial subgroup")
    else:
        witnesses.append("group does not have the expected 3-maximal shape")
    bound_blocks = 3 > len(spectrum)
    conclusion_false = not is_supersoluble(G)
    ok = bound_blocks and conclusion_false
    if bound_blocks:
        witnesses.append(f"3 > |pi(G)| = {len(spectrum)}, the bound is what fails")
    if conclusion_false:
        witnesses.append("group is not supersoluble, so the conclusion "
                         "would be false without the bound")
    return _finish(G, "SharpnessA", hypothesis,
                   HOLDS if ok else FAILS, witnesses, t0)


def verify_sharpness_B(G: Group, fast: bool = False) -> VerdictReport:
    """The bound n <= |pi(G)|+1 cannot be raised: on the order-24 direct
    product the strongly supersoluble residual has order 4 and is not a
    Hall subgroup, while the least depth at which all n-maximal subgroups
    are modular exceeds |pi|+1 = 3."""
    t0 = time.perf_counter()
    spectrum = prime_spectrum(G)
    witnesses = []
    structural = G.order == 24 and len(spectrum) == 2 and is_soluble(G)
    hypothesis = HOLDS if structural else FAILS
    if not structural:
        witnesses.append("group does not have the expected order-24 shape")
    r = residual_strongly_supersoluble(G)
    cen = census(G)
    min_n = cen.min_n_all_modular
    ok = (r.order == 4
          and not is_nilpotent_hall(G, r)
          and (min_n is None or min_n > len(spectrum) + 1))
    witnesses.append(f"residual order {r.order} in group order {G.order}")
    witnesses.append("residual is not a Hall subgroup"
                     if not is_nilpotent_hall(G, r)
                     else "residual unexpectedly Hall")
    witnesses.append(f"min n with all n-maximal modular: {min_n}")
    return _finish(G, "SharpnessB", hypothesis,
                   HOLDS if ok else FAILS, witnesses, t0)


# ---------------------------------------------------------------------------
# the suite runner

THEOREM_CHECKS = ("ThmA", "Thm2.12", "ThmB", "Thm3.4")
LEMMA_CHECKS = ("Lem2.1", "Lem2.2", "Lem2.3", "Lem2.10")
PROP_CHECKS = ("Prop2.9", "Prop2.11", "Prop3.2")
COROLLARY_CHECKS = ("Cor4.1", "Cor4.2", "Cor4.3", "Cor4.4")
SHARPNESS_CHECKS = ("SharpnessA", "SharpnessB")

SHARPNESS_TARGETS = {"SharpnessA": "A4", "SharpnessB": "A4xC2"}

CHECK_SELECTORS = {
    "all": THEOREM_CHECKS + PROP_CHECKS + LEMMA_CHECKS + COROLLARY_CHECKS
            + SHARPNESS_CHECKS,
    "theorems": THEOREM_CHECKS,
    "lemmas": LEMMA_CHECKS,
    "sharpness": SHARPNESS_CHECKS,
}

_NMAX_RUNNERS = {
    "ThmA": verify_theorem_A,
    "Thm2.12": verify_theorem_2_12,
    "ThmB": verify_theorem_B,
    "Thm3.4": verify_theorem_3_4,
}

_SINGLE_RUNNERS = {
    "Prop2.9": verify_prop_2_9,
    "Prop2.11": verify_prop_2_11,
    "Prop3.2": verify_prop_3_2,
    "Lem2.1": lemma_2_1_suite,
    "Lem2.2": verify_lemma_2_2,
    "Lem2.3": verify_lemma_2_3,
    "Lem2.10": verify_lemma_2_10,
    "Cor4.1": verify_corollary_4_1,
    "Cor4.2": verify_corollary_4_2,
    "Cor4.3": verify_corollary_4_3,
    "Cor4.4": verify_corollary_4_4,
    "SharpnessA": verify_sharpness_A,
    "SharpnessB": verify_sharpness_B,
}


def reports_for_group(name: str, checks, fast: bool = False,
                      depth: int | None = None) -> list[VerdictReport]:
    """All requested reports for one catalog group, deterministic order.

    Depth-parameterised checks run at every depth up to the longest maximal
    chain unless ``depth`` pins a single value.
    """
    G = catalog.shared_group(name)
    lat = lattice_of(G)
    if depth is None:
        depth_range = range(1, max(1, lat.max_chain_length) + 1)
    else:
        depth_range = (depth,)
    out = []
    for check in checks:
        if check in _NMAX_RUNNERS:
            runner = _NMAX_RUNNERS[check]
            for n in depth_range:
                out.append(runner(G, n, fast))
        elif check in SHARPNESS_TARGETS:
            if SHARPNESS_TARGETS[check] == name:
                out.append(_SINGLE_RUNNERS[check](G, fast))
        elif check in _SINGLE_RUNNERS:
            out.append(_SINGLE_RUNNERS[check](G, fast))
        else:
            raise UnknownSelector(f"unknown check {check!r}")
    return out


def _suite_worker(args) -> list[VerdictReport]:
    name, checks, fast, depth = args
    return reports_for_group(name, checks, fast, depth)


@dataclass(frozen=True)
class SuiteResult:
    reports: tuple[VerdictReport, ...]

    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "vacuous": 0}
        for r in self.reports:
            if r.is_failure():
                counts["fail"] += 1
            elif r.hypothesis == VACUOUS:
                counts["vacuous"] += 1
            else:
                counts["pass"] += 1
        return counts

    def has_failures(self) -> bool:
        return any(r.is_failure() for r in self.reports)

    def failures(self) -> tuple[VerdictReport, ...]:
        return tuple(r for r in self.reports if r.is_failure())

    def to_json_obj(self, deterministic: bool = True) -> dict:
        return {
            "reports": [r.to_json_obj(deterministic) for r in self.reports],
            "summary": self.summary(),
        }

    def to_text(self) -> str:
        lines = []
        for r in self.reports:
            flag = "FAIL" if r.is_failure() else "ok"
            lines.append(
                f"[{flag:>4}] {r.group:<10} {r.theorem:<28} "
                f"hypothesis={r.hypothesis:<8} conclusion={r.conclusion:<13} "
                f"({r.ms:.1f} ms)")
            for w in r.witnesses:
                lines.append(f"         - {w}")
        s = self.summary()
        lines.append(
            f"summary: pass={s['pass']} fail={s['fail']} vacuous={s['vacuous']}")
        return "\n".join(lines) + "\n"


def resolve_group_selector(selector) -> list[str]:
    """"all", "" (empty), or a comma-separated list of catalog names."""
    if isinstance(selector, (list, tuple)):
        names = list(selector)
    elif selector == "all":
        names = catalog.suite_names()
    elif selector == "":
        names = []
    else:
        names = [part.strip() for part in selector.split(",") if part.strip()]
    for name in names:
        try:
            catalog.shared_group(name)
        except catalog.UnknownName as exc:
            raise UnknownSelector(str(exc)) from exc
    return names


def resolve_check_selector(selector) -> tuple[str, ...]:
    if isinstance(selector, (list, tuple)):
        checks = tuple(selector)
    else:
        if selector not in CHECK_SELECTORS:
            raise UnknownSelector(
                f"unknown suite {selector!r}, expected one of "
                f"{sorted(CHECK_SELECTORS)}")
        checks = CHECK_SELECTORS[selector]
    known = set(_NMAX_RUNNERS) | set(_SINGLE_RUNNERS)
    for c in checks:
        if c not in known:
            raise UnknownSelector(f"unknown check {c!r}")
    return checks


def run_suite(groups="all", theorems="all", jobs: int = 1,
              fast: bool = False, depth: int | None = None) -> SuiteResult:
    """Run the selected checks over the selected groups.

    Reports are merged in deterministic order (group name, then check id)
    regardless of worker scheduling.
    """
    if depth is not None and depth < 1:
        raise BadDepth(f"depth must be >= 1, got {depth}")
    names = resolve_group_selector(groups)
    checks = resolve_check_selector(theorems)
    all_reports: list[VerdictReport] = []
    if jobs > 1 and len(names) > 1:
        work = [(name, checks, fast, depth) for name in names]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_suite_worker, work):
                all_reports.extend(chunk)
    else:
        for name in names:
            all_reports.extend(reports_for_group(name, checks, fast, depth))
    all_reports.sort(key=lambda r: (r.group, r.theorem))
    return SuiteResult(tuple(all_reports))
