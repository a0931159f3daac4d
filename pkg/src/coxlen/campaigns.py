"""Named verification campaigns.

Each campaign re-derives one library claim from scratch (brute force,
exhaustive enumeration, or seeded random sampling) and reports an
outcome with a re-checkable counterexample payload on failure.  The CLI
``verify`` subcommand and the acceptance test suite both run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import coxgen, excess, reps, roots
from .errors import ResourceBudgetError
from .signedperm import SignedCycleType, SignedPermutation, all_cycle_types, all_elements


@dataclass
class VerifyConfig:
    """Knobs shared by the campaigns; seed fully determines random suites."""

    seed: int | None = None
    samples: int | None = None
    flavor: str | None = None
    rank: int | None = None
    max_group_order: int = excess.DEFAULT_MAX_GROUP_ORDER
    big: bool = False
    threads: int = 1

    def rng(self) -> random.Random:
        return random.Random(0 if self.seed is None else self.seed)


@dataclass
class VerificationOutcome:
    statement: str
    passed: bool
    detail: dict
    elapsed: float

    def as_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "status": "pass" if self.passed else "fail",
            "detail": self.detail,
        }


def _random_element(rng: random.Random, n: int, signed: bool = True) -> SignedPermutation:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    if signed:
        perm = [-v if rng.random() < 0.5 else v for v in perm]
    return SignedPermutation(perm)


def _descent_word(w: SignedPermutation, flavor: str) -> list[int]:
    """A reduced generator word for w, by greedy length descent."""
    gens = excess.generators(flavor, w.n)
    word: list[int] = []
    cur = w
    cur_len = roots.length(cur, flavor)
    while cur_len:
        for idx, g in enumerate(gens, start=1):
            cand = cur * g
            cand_len = roots.length(cand, flavor)
            if cand_len < cur_len:
                word.append(idx)
                cur, cur_len = cand, cand_len
                break
        else:
            raise AssertionError("no descent found below a nonzero length")
    word.reverse()
    return word


# ---------------------------------------------------------------------------
# Length-identity and inversion-set suites.
# ---------------------------------------------------------------------------


def run_eq1(cfg: VerifyConfig) -> VerificationOutcome:
    """Product-length identity: exhaustive small pairs plus seeded samples."""
    t0 = time.time()
    failures = []
    b3 = all_elements(3)
    for flavor in ("B", "D"):
        for g in b3:
            for h in b3:
                if not roots.verify_length_identity(g, h, flavor).holds:
                    failures.append(
                        {"flavor": flavor, "g": str(g), "h": str(h)}
                    )
    rng = cfg.rng()
    samples = cfg.samples or 10_000
    n = cfg.rank or 8
    flavor = cfg.flavor or "B"
    for _ in range(samples):
        g = _random_element(rng, n)
        h = _random_element(rng, n)
        if not roots.verify_length_identity(g, h, flavor).holds:
            failures.append({"flavor": flavor, "g": str(g), "h": str(h)})
    detail = {
        "exhaustive_pairs": len(b3) ** 2,
        "random_pairs": samples,
        "random_rank": n,
        "failures": failures[:5],
    }
    return VerificationOutcome("eq1", not failures, detail, time.time() - t0)


def run_lemma12(cfg: VerifyConfig) -> VerificationOutcome:
    """Disjoint-union product rule, on pairs guaranteed to meet the
    hypothesis (reduced-word splits) plus filtered random pairs."""
    t0 = time.time()
    rng = cfg.rng()
    n = cfg.rank or 5
    flavor = cfg.flavor or "B"
    checked = 0
    failures = []
    for _ in range(cfg.samples or 300):
        w = _random_element(rng, n)
        word = _descent_word(w, flavor)
        cut = rng.randint(0, len(word))
        gens = excess.generators(flavor, n)
        g = SignedPermutation.identity(n)
        for i in word[:cut]:
            g = g * gens[i - 1]
        h = SignedPermutation.identity(n)
        for i in word[cut:]:
            h = h * gens[i - 1]
        report = roots.check_product_inversions(g, h, flavor)
        if not report.hypothesis_met:
            failures.append({"kind": "split should meet hypothesis", "w": str(w)})
        elif not report.equality_holds:
            failures.append({"g": str(g), "h": str(h), "detail": report.detail})
        checked += 1
    met = 0
    for _ in range(cfg.samples or 300):
        g = _random_element(rng, n)
        h = _random_element(rng, n)
        report = roots.check_product_inversions(g, h, flavor)
        if report.hypothesis_met:
            met += 1
            if not report.equality_holds:
                failures.append({"g": str(g), "h": str(h), "detail": report.detail})
    detail = {"split_pairs": checked, "random_hypothesis_hits": met, "failures": failures[:5]}
    return VerificationOutcome("lemma12", not failures, detail, time.time() - t0)


def run_lemma13(cfg: VerifyConfig) -> VerificationOutcome:
    """Multi-factor disjoint unions: stair certificate factors and seeded
    disjoint-support involutions."""
    t0 = time.time()
    failures = []
    for parts in ((8, 5), (4, 5), (2, 2, 3), (6, 3, 1)):
        parts = reps.normalize_partition(parts)
        n = sum(parts)
        sigmas, taus = [], []
        for cyc in reps.stair_cycles(parts):
            s, t = reps.cycle_involution_pair(cyc, n)
            sigmas.append(s)
            taus.append(t)
        for fam_name, fam in (("sigma", sigmas), ("tau", taus)):
            report = roots.check_involution_product(fam, "A")
            if not report.passed:
                failures.append({"family": fam_name, "parts": parts, "detail": report.detail})
    rng = cfg.rng()
    n = cfg.rank or 8
    for _ in range(cfg.samples or 200):
        # involutions supported on disjoint contiguous blocks: every
        # inversion root stays inside its block, so the stabilization
        # hypothesis holds by construction
        cuts = sorted(rng.sample(range(1, n), rng.randint(1, 3)))
        blocks = []
        start = 1
        for c in cuts + [n]:
            blocks.append(list(range(start, c + 1)))
            start = c + 1
        factors = []
        for block in blocks:
            images = {a: a for a in block}
            pool = block[:]
            rng.shuffle(pool)
            while len(pool) >= 2:
                a, b = pool.pop(), pool.pop()
                if rng.random() < 0.7:
                    images[a], images[b] = b, a
            window = [images.get(i, i) for i in range(1, n + 1)]
            factors.append(SignedPermutation(window))
        report = roots.check_involution_product(factors, "A")
        if not report.passed:
            failures.append({"factors": [str(f) for f in factors], "detail": report.detail})
    return VerificationOutcome(
        "lemma13", not failures, {"failures": failures[:5]}, time.time() - t0
    )


# ---------------------------------------------------------------------------
# Certificates.
# ---------------------------------------------------------------------------


def _all_partitions(n: int) -> list[tuple[int, ...]]:
    from .signedperm import _partitions

    return _partitions(n)


def run_certs_a(cfg: VerifyConfig) -> VerificationOutcome:
    """Stair-element certificates for every maximal partition of n ≤ 8."""
    t0 = time.time()
    top = cfg.rank or 8
    checked = 0
    failures = []
    for n in range(1, top + 1):
        for parts in _all_partitions(n):
            cert = reps.certificate_A(reps.normalize_partition(parts))
            checked += 1
            problems = cert.problems()
            if problems:
                failures.append({"parts": parts, "problems": problems})
    return VerificationOutcome(
        "certs-a", not failures, {"checked": checked, "failures": failures[:5]},
        time.time() - t0,
    )


def run_certs_bd(cfg: VerifyConfig) -> VerificationOutcome:
    """Signed-block certificates (both flavors) for every maximal split
    partition of n ≤ 6."""
    t0 = time.time()
    top = cfg.rank or 6
    checked = 0
    failures = []
    for n in range(1, top + 1):
        for ct in all_cycle_types(n):
            parts, rho = reps.normalize_split_type(ct)
            for flavor in ("B", "D"):
                if flavor == "D" and not ct.in_type_d():
                    continue
                cert = reps.certificate_BD(parts, rho, flavor)
                checked += 1
                problems = cert.problems()
                if problems:
                    failures.append(
                        {"ct": str(ct), "flavor": flavor, "problems": problems}
                    )
    return VerificationOutcome(
        "certs-bd", not failures, {"checked": checked, "failures": failures[:5]},
        time.time() - t0,
    )


# ---------------------------------------------------------------------------
# Formula-versus-oracle sweeps.
# ---------------------------------------------------------------------------


def run_minmax_b(cfg: VerifyConfig) -> VerificationOutcome:
    """Brute-force min/max of the signed length over every materialized
    class of ranks 2..5 versus the closed forms."""
    t0 = time.time()
    top = cfg.rank or 5
    checked = 0
    failures = []
    for n in range(2, top + 1):
        by_type: dict[SignedCycleType, list[int]] = {}
        for w in all_elements(n):
            by_type.setdefault(w.cycle_type(), []).append(roots.length_B(w))
        for ct, lengths in by_type.items():
            lf = reps.length_formulas(ct)
            checked += 1
            if min(lengths) != lf.min_b or max(lengths) != lf.max_b:
                failures.append(
                    {
                        "ct": str(ct),
                        "brute": [min(lengths), max(lengths)],
                        "formula": [lf.min_b, lf.max_b],
                    }
                )
    return VerificationOutcome(
        "minmax-b", not failures, {"classes": checked, "failures": failures[:5]},
        time.time() - t0,
    )


def run_minmax_d(cfg: VerifyConfig) -> VerificationOutcome:
    """Brute-force extremes of the long-roots length over every class of
    the even subgroup, ranks 2..5 (split classes via orbit closure),
    versus the derivation-based forms; additionally records that the
    alternative closed-form display overstates the identity-class maximum
    at n = 4 by exactly 2n."""
    t0 = time.time()
    top = cfg.rank or 5
    checked = 0
    failures = []
    for n in range(2, top + 1):
        for desc in excess.all_class_descriptors("D", n):
            members = excess.conjugacy_class(desc, cfg.max_group_order)
            lengths = [roots.length_D(w) for w in members]
            lf = reps.length_formulas(desc.label)
            checked += 1
            if max(lengths) != lf.max_d or min(lengths) != lf.min_d:
                failures.append(
                    {
                        "class": desc.label_str(),
                        "n": n,
                        "brute": [min(lengths), max(lengths)],
                        "formula": [lf.min_d, lf.max_d],
                    }
                )
    ident_ct = SignedCycleType((), (1, 1, 1, 1))
    lf4 = reps.length_formulas(ident_ct)
    discrepancy = {
        "class": str(ident_ct),
        "true_max_d": lf4.max_d,
        "alt_display": lf4.max_d_alt,
        "difference": lf4.max_d_alt - lf4.max_d,
        "expected_difference": 2 * 4,
    }
    disc_ok = lf4.max_d == 0 and lf4.max_d_alt - lf4.max_d == 8
    detail = {
        "classes": checked,
        "failures": failures[:5],
        "alt_display_discrepancy": discrepancy,
    }
    return VerificationOutcome(
        "minmax-d", not failures and disc_ok, detail, time.time() - t0
    )


def run_reps_optimal(cfg: VerifyConfig) -> VerificationOutcome:
    """Representatives hit the extremes: exhaustively to rank 5, and by
    formula-versus-direct-count up to rank 12."""
    t0 = time.time()
    failures = []
    for n in range(2, (cfg.rank or 5) + 1):
        by_type: dict[SignedCycleType, list[SignedPermutation]] = {}
        for w in all_elements(n):
            by_type.setdefault(w.cycle_type(), []).append(w)
        for ct, members in by_type.items():
            lf = reps.length_formulas(ct)
            uc = reps.min_length_rep(ct)
            wlr = reps.max_length_rep_for_type(ct)
            min_b = min(roots.length_B(w) for w in members)
            max_b = max(roots.length_B(w) for w in members)
            if roots.length_B(uc) != min_b or lf.min_b != min_b:
                failures.append({"ct": str(ct), "check": "min rep"})
            if roots.length_B(wlr) != max_b or lf.max_b != max_b:
                failures.append({"ct": str(ct), "check": "max rep"})
            if ct.in_type_d():
                max_d = max(roots.length_D(w) for w in members)
                if roots.length_D(wlr) != max_d:
                    failures.append({"ct": str(ct), "check": "max rep D"})
        for desc in excess.all_class_descriptors("D", n):
            members = excess.conjugacy_class(desc, cfg.max_group_order)
            min_d = min(roots.length_D(w) for w in members)
            if desc.split in (None, "plus"):
                rep = reps.min_length_rep(desc.label)
            else:
                rep = reps.min_length_rep_twisted(desc.label)
            if rep not in set(members):
                failures.append({"class": desc.label_str(), "check": "rep in class"})
            elif roots.length_D(rep) != min_d:
                failures.append({"class": desc.label_str(), "check": "min rep D"})
    constructive = 0
    for n in range(1, 13):
        for ct in all_cycle_types(n):
            lf = reps.length_formulas(ct)
            uc = reps.min_length_rep(ct)
            wlr = reps.max_length_rep_for_type(ct)
            constructive += 1
            if roots.length_B(uc) != lf.min_b or roots.length_B(wlr) != lf.max_b:
                failures.append({"ct": str(ct), "check": "constructive B"})
            if ct.in_type_d():
                if roots.length_D(uc) != lf.min_d or roots.length_D(wlr) != lf.max_d:
                    failures.append({"ct": str(ct), "check": "constructive D"})
    detail = {"constructive_classes": constructive, "failures": failures[:5]}
    return VerificationOutcome("reps-optimal", not failures, detail, time.time() - t0)


# ---------------------------------------------------------------------------
# Excess sweeps.
# ---------------------------------------------------------------------------


def run_thm_main(cfg: VerifyConfig) -> VerificationOutcome:
    """Every class of the scaled-down classical sweep has a longest element
    of excess zero; moreover all longest elements have excess zero."""
    t0 = time.time()
    failures = []
    sweeps = [("A", n) for n in range(2, 8)]
    sweeps += [("B", n) for n in range(1, 6)]
    sweeps += [("D", n) for n in range(2, 6)]
    classes = 0
    for flavor, n in sweeps:
        for census in excess.sweep_all_classes(flavor, n, cfg.max_group_order):
            classes += 1
            if not census.exists_max_zero or not census.all_max_zero:
                failures.append(
                    {
                        "group": f"{flavor}{n}",
                        "class": census.descriptor.label_str(),
                        "histogram": census.excess_histogram,
                    }
                )
    detail = {"classes": classes, "failures": failures[:5]}
    return VerificationOutcome("thm-main", not failures, detail, time.time() - t0)


def run_lemma51(cfg: VerifyConfig) -> VerificationOutcome:
    """Pair counts for the fixed short representative: at least 2^n with
    exactly one additive pair; exactly four pairs at n = 2."""
    t0 = time.time()
    ranks = [cfg.rank] if cfg.rank else [2, 3, 4]
    rows = []
    ok = True
    for n in ranks:
        w = SignedPermutation.from_cycles([(-1, 2)], n)
        pairs, additive = excess.involution_pair_count(w, "B", cfg.max_group_order)
        good = pairs >= 2**n and additive == 1 and (n != 2 or pairs == 4)
        ok = ok and good
        rows.append({"n": n, "pairs": pairs, "additive": additive, "bound": 2**n, "ok": good})
    return VerificationOutcome("lemma51", ok, {"rows": rows}, time.time() - t0)


def run_excess_parity(cfg: VerifyConfig) -> VerificationOutcome:
    """Excess is even for every element of the small groups."""
    t0 = time.time()
    failures = []
    jobs = [("B", 3), ("A", 4), ("D", 4)]
    for flavor, n in jobs:
        for w in all_elements(n, unsigned=(flavor == "A")):
            if flavor == "D" and w.parity_negative_entries() != 0:
                continue
            e = excess.excess(w, flavor, cfg.max_group_order).excess
            if e % 2 or e < 0:
                failures.append({"group": f"{flavor}{n}", "w": str(w), "excess": e})
    return VerificationOutcome(
        "excess-parity", not failures, {"failures": failures[:5]}, time.time() - t0
    )


def run_product(cfg: VerifyConfig) -> VerificationOutcome:
    t0 = time.time()
    report = excess.check_product_reduction(budget=cfg.max_group_order)
    detail = {
        "pairs": report.pairs_checked,
        "length_additive": report.length_additive,
        "excess_additive": report.excess_additive,
        "max_iff_componentwise": report.max_iff_componentwise,
    }
    return VerificationOutcome("product", report.passed, detail, time.time() - t0)


# ---------------------------------------------------------------------------
# Generic-engine campaigns.
# ---------------------------------------------------------------------------


def run_cross_engine(cfg: VerifyConfig) -> VerificationOutcome:
    """Window lengths agree with the reflection-table engine through the
    generator correspondence, on seeded samples."""
    t0 = time.time()
    rng = cfg.rng()
    samples = cfg.samples or 1000
    failures = []
    for flavor, name in (("B", "B5"), ("D", "D5")):
        group = coxgen.cached_group(name)
        for _ in range(samples):
            w = _random_element(rng, 5)
            if flavor == "D" and w.parity_negative_entries() != 0:
                w = SignedPermutation((-w.window[0],) + w.window[1:])
            word = _descent_word(w, flavor)
            elt = group.element_from_word(word)
            if elt.length() != roots.length(w, flavor) or elt.length() != len(word):
                failures.append({"group": name, "w": str(w)})
    return VerificationOutcome(
        "cross-engine",
        not failures,
        {"samples_per_group": samples, "failures": failures[:5]},
        time.time() - t0,
    )


E6_WORDS = {
    "order3": ([2, 3, 1, 4, 2, 3, 5, 4, 2, 3, 6, 5, 4, 3], 3, 22, 146, {0: 134, 2: 12}),
    "order6": ([5, 4, 2, 3, 1, 4, 3, 5, 6, 5, 4, 2, 3, 1], 6, 20, 180, {0: 136, 2: 44}),
}

E7_WORD = (
    [1, 3, 1, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5],
    3,
    54,
    708,
)


def run_e6(cfg: VerifyConfig) -> VerificationOutcome:
    """Full sweep of the 51840-element rank-6 group: 25 classes, exactly
    two with nonzero-excess longest elements, with the stated profiles;
    the two quoted words land in them."""
    t0 = time.time()
    group = coxgen.cached_group("E6")
    sweep = group.full_group_sweep(cfg.max_group_order)
    failures = []
    if len(sweep) != 25:
        failures.append({"check": "class count", "got": len(sweep)})
    if not all(c.exists_max_zero for c in sweep):
        failures.append({"check": "existence"})
    bad = [c for c in sweep if not c.all_max_zero]
    profiles = sorted(
        (c.element_order, c.max_length, c.max_count, tuple(sorted(c.excess_histogram.items())))
        for c in bad
    )
    want = sorted(
        (order, maxlen, maxcount, tuple(sorted(hist.items())))
        for _, order, maxlen, maxcount, hist in E6_WORDS.values()
    )
    if profiles != want:
        failures.append({"check": "exceptional profiles", "got": profiles})
    words_detail = {}
    for key, (word, order, maxlen, maxcount, hist) in E6_WORDS.items():
        try:
            label, mapping, census = coxgen.resolve_word_class(
                group, word, order, maxlen, maxcount, cfg.max_group_order
            )
        except Exception as exc:
            failures.append({"check": f"word {key}", "error": str(exc)})
            continue
        if census.excess_histogram != hist:
            failures.append({"check": f"word {key} histogram", "got": census.excess_histogram})
        words_detail[key] = {"labeling": label}
    detail = {
        "classes": len(sweep),
        "exceptional": [
            {
                "order": c.element_order,
                "max_length": c.max_length,
                "max_count": c.max_count,
                "histogram": c.excess_histogram,
            }
            for c in bad
        ],
        "words": words_detail,
        "failures": failures[:5],
    }
    return VerificationOutcome("e6", not failures, detail, time.time() - t0)


def run_e7(cfg: VerifyConfig) -> VerificationOutcome:
    """Gated sweep of the 2,903,040-element rank-7 group."""
    t0 = time.time()
    if not cfg.big:
        raise ResourceBudgetError(
            "the rank-7 sweep materializes ~2.9M elements; pass --big to enable"
        )
    budget = max(cfg.max_group_order, 3_000_000)
    group = coxgen.cached_group("E7")
    sweep = group.full_group_sweep(budget)
    failures = []
    if len(sweep) != 60:
        failures.append({"check": "class count", "got": len(sweep)})
    if not all(c.exists_max_zero for c in sweep):
        failures.append({"check": "existence"})
    bad = [c for c in sweep if not c.all_max_zero]
    if len(bad) != 1:
        failures.append({"check": "exactly one exceptional class", "got": len(bad)})
    word, order, maxlen, maxcount = E7_WORD
    words_detail = {}
    if bad:
        c = bad[0]
        nonzero = sum(v for k, v in c.excess_histogram.items() if k != 0)
        if (
            c.element_order != order
            or c.max_length != maxlen
            or c.max_count != maxcount
            or c.excess_histogram.get(0) != 658
            or nonzero != 50
        ):
            failures.append(
                {
                    "check": "exceptional profile",
                    "want": {"order": order, "max_length": maxlen,
                             "max_count": maxcount, "zero": 658, "nonzero": 50},
                    "got": {
                        "order": c.element_order,
                        "max_length": c.max_length,
                        "max_count": c.max_count,
                        "histogram": c.excess_histogram,
                    },
                }
            )
        # the word is pinned to the exceptional class through the computed
        # fingerprint, so a wrong stated length is reported only once above
        try:
            label, mapping, census = coxgen.resolve_word_class(
                group, word, c.element_order, c.max_length, c.max_count, budget
            )
            words_detail["order3"] = {
                "labeling": label,
                "lands_in_exceptional_class": census.excess_histogram == c.excess_histogram,
                "histogram": census.excess_histogram,
            }
            if census.excess_histogram != c.excess_histogram:
                failures.append({"check": "word class", "got": census.excess_histogram})
        except Exception as exc:
            failures.append({"check": "word", "error": str(exc)})
    detail = {
        "classes": len(sweep),
        "exceptional": [
            {
                "order": c.element_order,
                "max_length": c.max_length,
                "max_count": c.max_count,
                "histogram": c.excess_histogram,
            }
            for c in bad
        ],
        "words": words_detail,
        "failures": failures[:5],
    }
    return VerificationOutcome("e7", not failures, detail, time.time() - t0)


def run_exceptional(cfg: VerifyConfig) -> VerificationOutcome:
    """F4, H3, H4 class sweeps plus full dihedral excess-zero checks."""
    t0 = time.time()
    failures = []
    groups = {}
    for name in ("F4", "H3", "H4"):
        sweep = coxgen.cached_group(name).full_group_sweep(cfg.max_group_order)
        groups[name] = {
            "classes": len(sweep),
            "all_pass": all(c.exists_max_zero for c in sweep),
        }
        if not groups[name]["all_pass"]:
            failures.append({"group": name})
    top_bond = cfg.rank or 12
    for m in range(2, top_bond + 1):
        group = coxgen.ReflectionGroup.from_name(f"I2({m})")
        if not group.all_elements_excess_zero(cfg.max_group_order):
            failures.append({"group": f"I2({m})"})
    groups["dihedral_bonds"] = f"2..{top_bond}"
    detail = {"groups": groups, "failures": failures[:5]}
    return VerificationOutcome("exceptional", not failures, detail, time.time() - t0)


# ---------------------------------------------------------------------------
# Registry.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Statement:
    id: str
    description: str
    runner: Callable[[VerifyConfig], VerificationOutcome]
    randomized: bool = False
    gated: bool = False


REGISTRY: dict[str, Statement] = {
    s.id: s
    for s in [
        Statement("eq1", "product-length identity, exhaustive and sampled", run_eq1, randomized=True),
        Statement("lemma12", "two-factor inversion-set disjoint union", run_lemma12, randomized=True),
        Statement("lemma13", "multi-involution inversion-set disjoint union", run_lemma13, randomized=True),
        Statement("certs-a", "unsigned stair certificates, ranks to 8", run_certs_a),
        Statement("certs-bd", "signed block certificates, ranks to 6", run_certs_bd),
        Statement("minmax-b", "signed length extrema formulas vs brute force", run_minmax_b),
        Statement("minmax-d", "even-subgroup length extrema vs brute force", run_minmax_d),
        Statement("reps-optimal", "representatives attain the extremes", run_reps_optimal),
        Statement("thm-main", "classical sweep: longest elements have excess zero", run_thm_main),
        Statement("lemma51", "pair counts for the short representative", run_lemma51),
        Statement("excess-parity", "excess is even on small groups", run_excess_parity),
        Statement("product", "direct-product length/excess additivity", run_product),
        Statement("cross-engine", "window vs reflection-table lengths", run_cross_engine, randomized=True),
        Statement("e6", "rank-6 exceptional census", run_e6),
        Statement("e7", "rank-7 exceptional census (needs --big)", run_e7, gated=True),
        Statement("exceptional", "F4/H3/H4 sweeps and dihedral excess zero", run_exceptional),
    ]
}

ALIASES = {
    "lemma-5.1": "lemma51",
    "e6-census": "e6",
    "e7-census": "e7",
    "cor-3.4": "minmax-b",
    "thm-1.3": "minmax-d",
    "dihedral": "exceptional",
}

DEFAULT_SUITE = [
    "eq1",
    "lemma12",
    "lemma13",
    "certs-a",
    "certs-bd",
    "minmax-b",
    "minmax-d",
    "reps-optimal",
    "lemma51",
    "excess-parity",
    "product",
    "cross-engine",
    "thm-main",
    "exceptional",
    "e6",
]


def resolve_statement(statement_id: str) -> Statement:
    key = statement_id.strip().lower()
    key = ALIASES.get(key, key)
    if key not in REGISTRY:
        known = ", ".join(sorted(REGISTRY))
        raise KeyError(f"unknown statement {statement_id!r}; known: {known}, all")
    return REGISTRY[key]


def run_statement(statement_id: str, cfg: VerifyConfig) -> VerificationOutcome:
    return resolve_statement(statement_id).runner(cfg)
