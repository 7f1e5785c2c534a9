"""One function per subcommand: load the descriptor, run the operation, build a report.

Every command returns a `CommandResult`; `primary` is the verdict that
`--expect` turns into the exit code.
"""

from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass
from typing import Iterator

from src.algebra.chains import Verdict
from src.algebra.gmodule import GroupElement, XElement
from src.classify.isometry import shift_isometry_demo
from src.classify.nhs import SequenceProbe, is_nhs, probe_sequence, rigidity_verdict
from src.classify.space_class import contains_c0, orbit_census
from src.classify.suite import C0_BASIS, NHS_BASIS, RIGIDITY_BASIS, SEQUENCE_BASIS, nhs_suite
from src.config import settings
from src.errors import DescriptorError, PreconditionError
from src.reports.models import Report
from src.space.orthogonality import (
    distance_to_line,
    distance_to_subspace,
    gram_schmidt_with_basis,
    is_orthogonal_pair,
    is_orthogonal_system,
)
from src.space.vectors import SpaceDescriptor, format_vector, norm
from src.cli.descriptor_file import DescriptorFile, build, load_descriptor, resolve_vector

logger = logging.getLogger(__name__)

DESCENT_PREVIEW = 5


@dataclass
class CommandResult:
    report: Report
    primary: bool


def _load(path: str):
    df = load_descriptor(path)
    sp, sc = build(df)
    return df, sp, sc


def cmd_classify(args: argparse.Namespace) -> CommandResult:
    _, sp, sc = _load(args.file)
    chain = sc.chain
    report = Report(command="classify")
    verdict = chain.is_well_ordered()
    nhs = is_nhs(sc)
    c0 = contains_c0(sc)
    report.add("chain", "info", witness={"descriptor": chain.descriptor, "well_ordered": verdict.value})
    report.add("nhs", "info", witness={"nhs": nhs}, basis=NHS_BASIS)
    report.add("contains-c0", "info", witness={"contains_c0": c0}, basis=C0_BASIS)
    if verdict is Verdict.NO:
        descent = chain.descending_witness(DESCENT_PREVIEW)
        report.add(
            "descent",
            "info",
            witness=[f"b@{chain.format_element(b)}" for b in descent],
            basis=SEQUENCE_BASIS,
        )
    census = orbit_census(sp.units(), sp)
    report.add(
        "census",
        "info",
        witness={f"b@{chain.format_element(b)}": n for b, n in census.items()},
    )
    rigidity = rigidity_verdict(sc)
    report.add("rigidity", "info", witness={"rigid": rigidity.rigid, "reason": rigidity.reason}, basis=RIGIDITY_BASIS)
    return CommandResult(report, nhs)


def cmd_gs(args: argparse.Namespace) -> CommandResult:
    df, sp, _ = _load(args.file)
    vs = [resolve_vector(df, sp, token) for token in args.vectors]
    result = gram_schmidt_with_basis(vs, sp)
    verified = is_orthogonal_system(result.vectors, sp) if result.vectors else True
    report = Report(command="gs")
    report.add(
        "gram-schmidt",
        "info",
        witness={
            "inputs": [format_vector(v, sp) for v in vs],
            "outputs": [format_vector(e, sp) for e in result.vectors],
            "norms": [sp.module.format_x(norm(e, sp)) for e in result.vectors],
            "change_of_basis": [[str(c) for c in row] for row in result.change_of_basis],
        },
    )
    report.add(
        "orthogonal-system",
        "pass" if verified else "fail",
        basis="each output sits at full distance from the span of the previous outputs",
    )
    return CommandResult(report, verified)


def _generator(text: str, df: DescriptorFile, steps: int) -> Iterator[XElement]:
    kind, _, body = text.partition(":")
    module = df.module
    if kind == "geometric" and body:
        x = module.parse_x(body)
        return (module.act(GroupElement(-n), x) for n in range(steps))
    if kind == "inclass" and body:
        try:
            m = int(body)
        except ValueError as exc:
            raise DescriptorError(f"inclass expects an exponent, got {body!r}") from exc
        return (XElement(b, m) for b in df.chain.descending_witness(steps))
    if kind == "list" and body:
        return iter([module.parse_x(part) for part in body.split(";") if part.strip()])
    raise DescriptorError(f"generator must be geometric:<x>, inclass:<m> or list:<x>;<x>..., got {text!r}")


def cmd_probe(args: argparse.Namespace) -> CommandResult:
    df, _, sc = _load(args.file)
    steps = args.steps if args.steps is not None else settings.ULTRANORM_PROBE_STEPS
    probe = SequenceProbe(_generator(args.gen, df, steps), steps, stagnation_bound=args.bound)
    result = probe_sequence(sc, probe)
    report = Report(command="probe")
    report.add(
        "occupancy",
        "info",
        witness=[{"class": m, "count": n} for m, n in result.table()],
    )
    report.add(
        "probe",
        "fail" if result.contradicts_chain_verdict else "info",
        witness={
            "verdict": result.verdict.value,
            "steps": result.steps,
            "bound": result.bound,
            "stagnant_classes": result.stagnant_classes,
        },
        basis=SEQUENCE_BASIS,
    )
    return CommandResult(report, not result.stagnation)


def cmd_suite(args: argparse.Namespace) -> CommandResult:
    _, sp, sc = _load(args.file)
    report = nhs_suite(sp, sc, samples=args.samples, seed=args.seed)
    return CommandResult(report, report.ok)


def _default_shift_norm(sp: SpaceDescriptor) -> XElement:
    census = orbit_census(sp.units(), sp)
    if not census:
        raise PreconditionError("the space has no base vectors")
    b = max(census, key=census.get)
    return next(sp.nu[i] for i in sp.index_set if sp.module.orbit_equivalent(sp.nu[i], XElement(b, 0)))


def cmd_demo_shift(args: argparse.Namespace) -> CommandResult:
    _, sp, _ = _load(args.file)
    s = sp.module.parse_x(args.norm) if args.norm else _default_shift_norm(sp)
    demo = shift_isometry_demo(args.n, s, sp)
    report = Report(command="demo-shift")
    basis = "the shift on a constant-norm orthogonal sequence is an isometry that misses a_1"
    report.add("shift", "info", witness=demo.describe(sp), basis=basis)
    report.add("isometry", "pass" if demo.is_isometry else "fail")
    report.add("non-surjective", "pass" if not demo.is_surjective_on_truncation else "fail")
    return CommandResult(report, demo.is_isometry and not demo.is_surjective_on_truncation)


def cmd_phi(args: argparse.Namespace) -> CommandResult:
    df, _, _ = _load(args.file)
    module = df.module
    x, x0 = module.parse_x(args.x), module.parse_x(args.x0)
    g = module.phi(x, x0)
    report = Report(command="phi")
    report.add(
        "phi",
        "info",
        witness={"x": module.format_x(x), "x0": module.format_x(x0), "phi": str(g)},
        basis="phi(x) is the largest g in G with g x0 <= x",
    )
    return CommandResult(report, True)


def cmd_dist(args: argparse.Namespace) -> CommandResult:
    df, sp, _ = _load(args.file)
    v = resolve_vector(df, sp, args.vector)
    ds = [resolve_vector(df, sp, token) for token in args.span]
    report = Report(command="dist")
    if len(ds) == 1:
        d, lam = distance_to_line(v, ds[0], sp)
        witness = {"distance": sp.module.format_x(d), "lambda": str(lam)}
    else:
        d, best = distance_to_subspace(v, ds, sp)
        witness = {"distance": sp.module.format_x(d), "closest": format_vector(best, sp)}
    report.add("distance", "info", witness=witness)
    return CommandResult(report, True)


def cmd_check_ortho(args: argparse.Namespace) -> CommandResult:
    df, sp, _ = _load(args.file)
    vs = [resolve_vector(df, sp, token) for token in args.vectors]
    if len(vs) == 2:
        orthogonal = is_orthogonal_pair(vs[0], vs[1], sp)
    else:
        orthogonal = is_orthogonal_system(vs, sp)
    report = Report(command="check-ortho")
    report.add(
        "orthogonal",
        "pass" if orthogonal else "fail",
        witness={"vectors": [format_vector(v, sp) for v in vs]},
        basis="u is orthogonal to v iff dist(u, Kv) = ||u||",
    )
    return CommandResult(report, orthogonal)


COMMANDS = {
    "classify": cmd_classify,
    "gs": cmd_gs,
    "probe": cmd_probe,
    "suite": cmd_suite,
    "demo-shift": cmd_demo_shift,
    "phi": cmd_phi,
    "dist": cmd_dist,
    "check-ortho": cmd_check_ortho,
}


def run(args: argparse.Namespace) -> CommandResult:
    return COMMANDS[args.command](args)
