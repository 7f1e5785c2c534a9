"""Randomized finite-stage checks of the NHS and c0 criteria for one descriptor."""

from __future__ import annotations

import logging
import random
from typing import Any, Dict, List, Optional

from src.algebra.chains import Ordering, Verdict, WellOrderedChainError
from src.algebra.field import uniformizer_power
from src.config import settings
from src.reports.models import Report
from src.space.orthogonality import (
    LinearlyDependentError,
    PerturbationVerdict,
    geometric_targets,
    gram_schmidt,
    is_orthogonal_system,
    perturb_check,
    renormalize_decreasing,
)
from src.space.vectors import SpaceDescriptor, Vector, format_vector, norm
from src.classify.nhs import (
    SequenceProbe,
    is_nhs,
    is_nhs_from_point,
    non_nhs_witness,
    probe_sequence,
    rigidity_verdict,
)
from src.classify.space_class import (
    INFINITE,
    SpaceClass,
    c0_witness,
    check_consistency,
    contains_c0,
    orbit_census,
)

logger = logging.getLogger(__name__)

NHS_BASIS = "a Banach space is an NHS iff its convex base is well ordered"
SEQUENCE_BASIS = "in an NHS every strictly decreasing norm sequence leaves each copy g0^m B"
C0_BASIS = "E contains c0 iff some orbit class carries infinitely many base vectors"
RIGIDITY_BASIS = "with an orthogonal base, E is rigid iff it is an NHS without c0"


def _random_orthogonal_system(sp: SpaceDescriptor, rng: random.Random) -> Optional[List[Vector]]:
    k = rng.randint(1, sp.dim)
    try:
        return gram_schmidt([sp.random_vector(rng) for _ in range(k)], sp)
    except LinearlyDependentError:
        return None


def _smaller_perturbation(a: Vector, sp: SpaceDescriptor, rng: random.Random) -> Vector:
    """A random vector scaled by a power of p until its norm is below ||a||."""
    w = sp.random_vector(rng)
    target = norm(a, sp)
    n = 0
    while sp.module.norm_compare(norm(w.scale(uniformizer_power(n, sp.field_cfg)), sp), target) is not Ordering.LT:
        n += 1
    return w.scale(uniformizer_power(n, sp.field_cfg))


def _base_point_count(sp: SpaceDescriptor) -> int:
    """Number of distinct chain points among the base norms."""
    chain = sp.module.chain
    points: List[Any] = []
    for x in sp.nu.values():
        if all(chain.compare(x.b, b) is not Ordering.EQ for b in points):
            points.append(x.b)
    return max(len(points), 1)


def nhs_suite(
    sp: SpaceDescriptor,
    sc: SpaceClass,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> Report:
    samples = settings.ULTRANORM_SUITE_SAMPLES if samples is None else samples
    seed = settings.ULTRANORM_DEFAULT_SEED if seed is None else seed
    rng = random.Random(seed)
    module = sp.module
    report = Report(command="suite")

    check_consistency(sp, sc)
    base_census = orbit_census(sp.units(), sp)
    report.add(
        "descriptor-consistency",
        "pass",
        witness={module.chain.format_element(b): n for b, n in base_census.items()},
        basis="the finite space truncates the declared orbit-class census",
    )

    nhs = is_nhs(sc)
    report.add(
        "nhs",
        "info",
        witness={"nhs": nhs, "chain_verdict": sc.chain.is_well_ordered().value},
        basis=NHS_BASIS,
    )

    # Random orthogonal systems: Gram-Schmidt output is orthogonal and no orbit
    # class is used more often than the base allows.
    systems: List[List[Vector]] = []
    failures: List[Dict[str, Any]] = []
    for _ in range(samples):
        system = _random_orthogonal_system(sp, rng)
        if system is None:
            continue
        systems.append(system)
        census = orbit_census(system, sp)
        over = {b: n for b, n in census.items() if n > base_census.get(b, 0)}
        if over or not is_orthogonal_system(system, sp):
            failures.append({"system": [format_vector(v, sp) for v in system]})
    report.add(
        "orthogonal-systems",
        "fail" if failures else "pass",
        witness={"systems": len(systems), "failures": failures[:3]},
        basis="an orthogonal system has at most as many members per orbit class as the base",
    )

    # A class holds one value per base point, so no strictly decreasing run of
    # norms can put more values in one class than 'bound'.
    bound = _base_point_count(sp)
    crowded = 0
    stagnant: List[Dict[str, Any]] = []
    for system in systems:
        targets = geometric_targets(norm(system[0], sp), len(system) - 1)
        fs = renormalize_decreasing(system, targets, sp)
        result = probe_sequence(sc, SequenceProbe(iter([norm(f, sp) for f in fs]), len(fs), stagnation_bound=bound))
        crowded = max(crowded, max(result.occupancy.values(), default=0))
        if result.stagnation:
            stagnant.append({"norms": [module.format_x(norm(f, sp)) for f in fs]})
    report.add(
        "decreasing-orthogonal-norms",
        "fail" if stagnant else "pass",
        witness={"probed": len(systems), "bound": bound, "max_occupancy": crowded, "stagnant": stagnant[:3]},
        basis=SEQUENCE_BASIS,
    )

    # Strictly decreasing norms of arbitrary vectors.
    sequences = 0
    crowded = 0
    stagnant = []
    for _ in range(samples):
        values = [norm(sp.random_vector(rng), sp) for _ in range(rng.randint(2, 2 * sp.dim + 2))]
        distinct: List[Any] = []
        for x in sorted(values, key=module.norm_key(), reverse=True):
            if not distinct or module.x_compare(distinct[-1], x) is Ordering.GT:
                distinct.append(x)
        sequences += 1
        result = probe_sequence(sc, SequenceProbe(iter(distinct), len(distinct), stagnation_bound=bound))
        crowded = max(crowded, max(result.occupancy.values(), default=0))
        if result.stagnation:
            stagnant.append({"norms": [module.format_x(x) for x in distinct]})
    report.add(
        "decreasing-vector-sequences",
        "fail" if stagnant else "pass",
        witness={"probed": sequences, "bound": bound, "max_occupancy": crowded, "stagnant": stagnant[:3]},
        basis=SEQUENCE_BASIS,
    )

    # Perturbing an orthogonal system below its norms keeps it orthogonal.
    broken = []
    for system in systems:
        perturbed = [a + _smaller_perturbation(a, sp, rng) for a in system]
        if perturb_check(system, perturbed, sp) is not PerturbationVerdict.ORTHOGONAL:
            broken.append([format_vector(v, sp) for v in perturbed])
    report.add(
        "perturbation",
        "fail" if broken else "pass",
        witness={"perturbed": len(systems), "broken": broken[:3]},
        basis="||a_k - b_k|| < ||a_k|| for an orthogonal (a_k) keeps (b_k) orthogonal",
    )

    # A descent in B lifts to norms stuck in one exponent class.
    if sc.chain.is_well_ordered() is Verdict.NO:
        k = bound + 1
        witness = non_nhs_witness(sc, k, sp.field_cfg)
        result = probe_sequence(sc, SequenceProbe(iter(witness.norms), k, stagnation_bound=k - 1))
        report.add(
            "non-nhs-witness",
            "pass" if result.stagnation else "fail",
            witness={
                "norms": [module.format_x(x) for x in witness.norms],
                "exponent_class": witness.exponent_class,
            },
            basis=SEQUENCE_BASIS,
        )
    else:
        try:
            sc.chain.descending_witness(2)
            verdict = "fail"
        except WellOrderedChainError:
            verdict = "pass"
        report.add(
            "well-ordered-base",
            verdict,
            witness={"chain": sc.chain.descriptor},
            basis=NHS_BASIS,
        )

    disagreements = []
    for _ in range(20):
        a = module.sample(rng)
        if is_nhs_from_point(sc, a) != nhs:
            disagreements.append(module.format_x(a))
    report.add(
        "nhs-from-point",
        "fail" if disagreements else "pass",
        witness={"points": 20, "disagreements": disagreements},
        basis="E is an NHS iff [a, g0 a) is well ordered for any a",
    )

    c0 = contains_c0(sc)
    if c0:
        infinite = [b for b, m in sc.multiplicity.items() if m is INFINITE]
        if not infinite and base_census:
            infinite = [max(base_census, key=base_census.get)]
        if infinite:
            b = infinite[0]
            system = c0_witness(sp, b, base_census.get(b, 0))
            same_norm = len({norm(v, sp) for v in system}) == 1
            report.add(
                "contains-c0",
                "pass" if same_norm and is_orthogonal_system(system, sp) else "fail",
                witness={
                    "orbit_class": module.chain.format_element(b),
                    "system": [format_vector(v, sp) for v in system],
                },
                basis=C0_BASIS,
            )
        else:
            report.add("contains-c0", "info", witness={"contains_c0": True}, basis=C0_BASIS)
    else:
        report.add("contains-c0", "info", witness={"contains_c0": False}, basis=C0_BASIS)

    rigidity = rigidity_verdict(sc)
    report.add(
        "rigidity",
        "info",
        witness={"rigid": rigidity.rigid, "reason": rigidity.reason},
        basis=RIGIDITY_BASIS,
    )
    logger.info("suite on %s: %d checks, ok=%s", sc.chain.descriptor, len(report.checks), report.ok)
    return report
