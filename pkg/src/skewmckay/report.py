"""Input parsing, JSON/DOT emission, the verification pipeline and the
golden-corpus comparison.  Everything emitted here is byte-deterministic
for a fixed (input, config) except wall-clock timing fields, which the
golden comparison normalizes away."""

from __future__ import annotations

import difflib
import json
import os
import random
import time
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    GoldenMismatch,
    GroupTooLarge,
    IoError,
    SchemaError,
)
from .groups import (
    Character,
    DiagonalGroup,
    GroupSpec,
    build_group,
    dual_characters,
    k_lattice,
    quotient_group,
)
from .monomials import (
    Monomial,
    invariant_hilbert_basis,
    isotypic_dimension,
)
from .quiver import (
    Quiver,
    beilinson_dims,
    commutation_relations,
    mckay_quiver,
    quiver_bar,
    quiver_tilde,
    radical_columns,
)
from .resolution import (
    build_column_complex,
    verify_exactness,
    verify_nilpotency,
    verify_radical_oracle,
)
from .strata import (
    generator_xf,
    generator_y,
    gtilde0,
    qualifying_pairs,
    verify_identities,
)

SCHEMA_VERSION = 1

GOLDEN_ENV_VAR = "SKEWMCKAY_GOLDEN"

COMMANDS = (
    "info",
    "invariants",
    "quiver",
    "gtilde",
    "generators",
    "resolve",
    "verify",
    "golden",
)

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_VERIFICATION = 3
EXIT_IO = 4


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    variant: str = "full"  # quiver sub-command
    max_degree: int = 6
    shift_convention: str = "theorem"
    fmt: str = "json"
    output_path: str | None = None
    seed: int = 0
    corpus_size: int = 50
    corpus_dir: str | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise SchemaError(f"unknown command {self.command!r}")
        if self.command != "golden" and not self.input_path:
            raise SchemaError("--input is required")
        if self.max_degree < 0:
            raise SchemaError("--max-degree must be >= 0")
        if self.shift_convention not in ("theorem", "ambient"):
            raise SchemaError("--shift-convention must be theorem or ambient")
        if self.fmt not in ("json", "dot"):
            raise SchemaError("--format must be json or dot")
        if self.fmt == "dot" and self.command != "quiver":
            raise SchemaError("--format dot only applies to the quiver command")
        if self.variant not in ("full", "bar", "tilde"):
            raise SchemaError("quiver variant must be full, bar or tilde")
        if self.corpus_size < 0:
            raise SchemaError("--corpus-size must be >= 0")


# -- input ---------------------------------------------------------------


def spec_from_obj(obj) -> GroupSpec:
    if not isinstance(obj, dict):
        raise SchemaError("input must be a JSON object")
    for key in ("dim", "modulus", "generators"):
        if key not in obj:
            raise SchemaError(f"missing field {key!r}")
    dim, modulus, gens = obj["dim"], obj["modulus"], obj["generators"]
    if not isinstance(dim, int) or not isinstance(modulus, int):
        raise SchemaError("dim and modulus must be integers")
    if not isinstance(gens, list) or not all(
        isinstance(v, list) and all(isinstance(x, int) for x in v) for v in gens
    ):
        raise SchemaError("generators must be a list of integer vectors")
    spec = GroupSpec(dim, modulus, tuple(tuple(v) for v in gens))
    spec.validate()
    return spec


def parse_spec(path: str) -> GroupSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc
    return spec_from_obj(obj)


# -- serialization helpers ------------------------------------------------


def group_summary(spec: GroupSpec, group: DiagonalGroup) -> dict:
    return {
        "dim": group.dim,
        "modulus": group.modulus,
        "generators": [list(g) for g in spec.generators],
        "order": group.order,
        "snf": list(group.snf),
        "num_characters": group.order,
    }


def _coords(c: Character) -> list[int]:
    return list(c.coords)


def quiver_payload(q: Quiver) -> dict:
    payload = {
        "kind": q.kind,
        "vertices": [_coords(c) for c in q.vertices],
        "arrows": [[s, t, i] for (s, t, i) in q.arrows],
    }
    if q.kind == "full":
        rel = commutation_relations(q)
        payload["relations"] = {
            "count": len(rel.squares),
            "squares": [[v, i, j] for (v, i, j) in rel.squares],
        }
    return payload


def vertex_name(c: Character) -> str:
    return "v(" + ",".join(str(x) for x in c.coords) + ")"


def emit_dot(q: Quiver) -> str:
    lines = [f"digraph quiver_{q.kind} {{"]
    for c in sorted(q.vertices, key=lambda c: c.coords):
        lines.append(f'  "{vertex_name(c)}";')
    arrows = sorted(
        q.arrows, key=lambda a: (q.vertices[a[0]].coords, a[2], q.vertices[a[1]].coords)
    )
    for s, t, i in arrows:
        lines.append(
            f'  "{vertex_name(q.vertices[s])}" -> "{vertex_name(q.vertices[t])}" '
            f'[label="x{i}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _subgroup_obj(sub) -> dict:
    return {"order": sub.order, "fixed_coords": list(sub.fixed_coords)}


def _generator_obj(desc) -> list:
    out = [
        {
            "quotient_snf": list(s.quotient_snf),
            "variables": list(s.variables),
            "shift": s.shift,
        }
        for s in desc.summands
    ]
    out += [{"e_lambda": j} for j in desc.e_lambda_shifts]
    return out


# -- per-command payloads -------------------------------------------------


def info_payload(group: DiagonalGroup) -> dict:
    dims, total = beilinson_dims(group)
    return {
        "k_lattice": [_subgroup_obj(s) for s in k_lattice(group)],
        "beilinson": {"dims": list(dims), "total": total},
    }


def invariants_payload(group: DiagonalGroup, max_degree: int) -> dict:
    basis = invariant_hilbert_basis(group)
    triv = group.trivial_character
    return {
        "degree_bound": group.order,
        "hilbert_basis": [list(m.exponents) for m in basis],
        "hilbert_function": [
            isotypic_dimension(group, triv, d) for d in range(max_degree + 1)
        ],
    }


def gtilde_payload(group: DiagonalGroup) -> dict:
    classes = []
    for cls in gtilde0(group):
        classes.append(
            {
                "subgroup": _subgroup_obj(cls.sub),
                "restriction": [[list(g), v] for g, v in cls.fingerprint.table],
                "representative": _coords(cls.representative),
                "members": [_coords(c) for c in cls.members],
                "qualifying": list(cls.qualifying),
                "mixed": cls.mixed,
            }
        )
    pairs = [
        {
            "chi": _coords(p.chi),
            "subgroup": _subgroup_obj(p.sub),
            "smaller_members_checked": len(p.witnesses),
        }
        for p in qualifying_pairs(group)
    ]
    return {"classes": classes, "qualifying_pairs": pairs}


def generators_payload(group: DiagonalGroup, primary: str) -> dict:
    payload = {"primary": primary}
    for convention in ("theorem", "ambient"):
        payload[convention] = {
            "x_f": _generator_obj(generator_xf(group, convention)),
            "y": _generator_obj(generator_y(group, convention)),
        }
    return payload


def resolve_payload(group: DiagonalGroup, max_degree: int) -> dict:
    vertices = []
    all_passed = True
    for u in dual_characters(group):
        cc = build_column_complex(group, u)
        rep = verify_exactness(cc, max_degree)
        all_passed &= rep.passed
        vertices.append(
            {
                "vertex": _coords(u),
                "subgroups": [_subgroup_obj(s) for s in cc.subgroups],
                "radical_minimal_supports": [list(s) for s in cc.radical.minimal_supports],
                "degrees": [
                    {
                        "degree": d.degree,
                        "dims": list(d.dims),
                        "ranks": list(d.ranks),
                        "homology": list(d.homology),
                        "euler": d.euler,
                        "composites_zero": d.composites_zero,
                    }
                    for d in rep.degrees
                ],
                "passed": rep.passed,
                "first_failure": list(rep.first_failure) if rep.first_failure else None,
                "seconds": rep.seconds,
            }
        )
    return {"max_degree": max_degree, "vertices": vertices, "passed": all_passed}


def _group_verdicts(group: DiagonalGroup, max_degree: int) -> dict:
    oracle = verify_radical_oracle(group)
    exact_passed = True
    first_failure = None
    exact_start = time.perf_counter()
    for u in dual_characters(group):
        rep = verify_exactness(build_column_complex(group, u), max_degree)
        if not rep.passed and first_failure is None:
            first_failure = [list(u.coords), *rep.first_failure]
            exact_passed = False
    exact_seconds = time.perf_counter() - exact_start
    nil = verify_nilpotency(group, max_degree)
    idents = verify_identities(group)
    passed = oracle.passed and exact_passed and idents.passed
    return {
        "oracle": {
            "checked": oracle.checked,
            "mismatches": [[list(u), list(s)] for u, s in oracle.mismatches],
            "passed": oracle.passed,
            "seconds": oracle.seconds,
        },
        "exactness": {
            "passed": exact_passed,
            "first_failure": first_failure,
            "seconds": exact_seconds,
        },
        "nilpotency": {
            "exponent": nil.exponent,
            "witness": [list(nil.witness[0]), list(nil.witness[1])]
            if nil.witness
            else None,
            "max_degree": nil.max_degree,
            "seconds": nil.seconds,
        },
        "identities": {
            "contexts": idents.contexts,
            "checks": idents.checks,
            "failures": list(idents.failures),
            "passed": idents.passed,
            "seconds": idents.seconds,
        },
        "passed": passed,
    }


def random_group_specs(seed: int, size: int, max_dim: int = 4, max_order: int = 36):
    """Seeded corpus of small special-linear diagonal groups."""
    rng = random.Random(seed)
    specs = []
    while len(specs) < size:
        n = rng.randint(2, max_dim)
        modulus = rng.randint(2, 12)
        gens = []
        for _ in range(rng.randint(1, 2)):
            vec = [rng.randrange(modulus) for _ in range(n - 1)]
            vec.append((-sum(vec)) % modulus)
            gens.append(tuple(vec))
        spec = GroupSpec(n, modulus, tuple(gens))
        try:
            build_group(spec, max_order=max_order)
        except GroupTooLarge:
            continue
        specs.append(spec)
    return specs


def verify_payload(spec: GroupSpec, group: DiagonalGroup, cfg: RunConfig) -> dict:
    input_verdicts = _group_verdicts(group, cfg.max_degree)
    corpus = []
    corpus_passed = True
    for rnd_spec in random_group_specs(cfg.seed, cfg.corpus_size):
        rnd_group = build_group(rnd_spec)
        verdicts = _group_verdicts(rnd_group, cfg.max_degree)
        corpus_passed &= verdicts["passed"]
        corpus.append(
            {
                "spec": {
                    "dim": rnd_spec.dim,
                    "modulus": rnd_spec.modulus,
                    "generators": [list(g) for g in rnd_spec.generators],
                },
                "order": rnd_group.order,
                "verdicts": verdicts,
            }
        )
    return {
        "max_degree": cfg.max_degree,
        "seed": cfg.seed,
        "corpus_size": cfg.corpus_size,
        "input": input_verdicts,
        "random_corpus": corpus,
        "passed": input_verdicts["passed"] and corpus_passed,
    }


# -- report assembly ------------------------------------------------------


def build_quiver(group: DiagonalGroup, variant: str) -> Quiver:
    full = mckay_quiver(group)
    if variant == "full":
        return full
    if variant == "bar":
        return quiver_bar(full)
    return quiver_tilde(full, radical_columns(group))


def run_command(cfg: RunConfig) -> tuple[object, int]:
    """Execute one command; returns (artifact, exit code).

    The artifact is a report dict for JSON output or a string for DOT.
    """
    cfg.validate()
    if cfg.command == "golden":
        return golden_run(cfg)
    spec = parse_spec(cfg.input_path)
    group = build_group(spec)
    start = time.perf_counter()
    exit_code = EXIT_OK
    if cfg.command == "quiver" and cfg.fmt == "dot":
        return emit_dot(build_quiver(group, cfg.variant)), EXIT_OK
    if cfg.command == "info":
        payload = info_payload(group)
        verdicts = None
    elif cfg.command == "invariants":
        payload = invariants_payload(group, cfg.max_degree)
        verdicts = None
    elif cfg.command == "quiver":
        payload = quiver_payload(build_quiver(group, cfg.variant))
        verdicts = None
    elif cfg.command == "gtilde":
        payload = gtilde_payload(group)
        verdicts = None
    elif cfg.command == "generators":
        payload = generators_payload(group, cfg.shift_convention)
        verdicts = None
    elif cfg.command == "resolve":
        payload = resolve_payload(group, cfg.max_degree)
        verdicts = {"passed": payload["passed"]}
        if not payload["passed"]:
            exit_code = EXIT_VERIFICATION
    else:  # verify
        payload = verify_payload(spec, group, cfg)
        verdicts = {"passed": payload["passed"]}
        if not payload["passed"]:
            exit_code = EXIT_VERIFICATION
    command = cfg.command if cfg.command != "quiver" else f"quiver_{cfg.variant}"
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "group": group_summary(spec, group),
        "payload": payload,
        "verdicts": verdicts,
        "timings": {"seconds": time.perf_counter() - start},
    }
    return report, exit_code


def render_report(report: object) -> str:
    if isinstance(report, str):
        return report
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def scrub_timings(obj):
    """Replace wall-clock fields so artifacts compare byte-for-byte."""
    if isinstance(obj, dict):
        return {
            k: 0 if k == "seconds" else scrub_timings(v) for k, v in obj.items()
        }
    if isinstance(obj, list):
        return [scrub_timings(v) for v in obj]
    return obj


# -- golden corpus --------------------------------------------------------

GOLDEN_COMMANDS: tuple[tuple[str, str, str], ...] = (
    # (file stem, command, variant/format)
    ("info", "info", ""),
    ("invariants", "invariants", ""),
    ("quiver_full", "quiver", "full"),
    ("quiver_bar", "quiver", "bar"),
    ("quiver_tilde", "quiver", "tilde"),
    ("quiver_full_dot", "quiver", "full:dot"),
    ("quiver_bar_dot", "quiver", "bar:dot"),
    ("quiver_tilde_dot", "quiver", "tilde:dot"),
    ("gtilde", "gtilde", ""),
    ("generators", "generators", ""),
    ("resolve", "resolve", ""),
    ("verify", "verify", ""),
)


def golden_config(command: str, mode: str, input_path: str) -> RunConfig:
    cfg = RunConfig(command=command, input_path=input_path)
    if mode.endswith(":dot"):
        cfg.variant = mode.split(":")[0]
        cfg.fmt = "dot"
    elif mode:
        cfg.variant = mode
    cfg.corpus_size = 0  # golden verify covers the stored specs themselves
    return cfg


def golden_artifact(stem: str, command: str, mode: str, input_path: str) -> str:
    artifact, _ = run_command(golden_config(command, mode, input_path))
    if isinstance(artifact, str):
        return artifact
    return render_report(scrub_timings(artifact))


def golden_dir_from(cfg: RunConfig) -> Path:
    if cfg.corpus_dir:
        return Path(cfg.corpus_dir)
    env = os.environ.get(GOLDEN_ENV_VAR)
    if env:
        return Path(env)
    return Path("golden")


def golden_run(cfg: RunConfig) -> tuple[object, int]:
    """Regenerate every stored artifact and byte-compare.

    Raises IoError when the corpus directory is missing; mismatches are
    reported (all of them) with a unified diff for the first one.
    """
    root = golden_dir_from(cfg)
    if not root.is_dir():
        raise IoError(f"golden corpus directory {root} does not exist")
    cases = sorted(p for p in root.iterdir() if p.is_dir())
    if not cases:
        raise IoError(f"golden corpus directory {root} has no cases")
    results = []
    mismatches = []
    first_diff = None
    for case in cases:
        input_path = case / "input.json"
        if not input_path.is_file():
            raise IoError(f"{case} has no input.json")
        for stem, command, mode in GOLDEN_COMMANDS:
            ext = "dot" if mode.endswith(":dot") else "json"
            stored_path = case / f"{stem}.{ext}"
            if not stored_path.is_file():
                raise IoError(f"missing golden file {stored_path}")
            stored = stored_path.read_text(encoding="utf-8")
            fresh = golden_artifact(stem, command, mode, str(input_path))
            ok = stored == fresh
            results.append({"case": case.name, "artifact": stored_path.name, "match": ok})
            if not ok:
                mismatches.append(f"{case.name}/{stored_path.name}")
                if first_diff is None:
                    diff = difflib.unified_diff(
                        stored.splitlines(keepends=True),
                        fresh.splitlines(keepends=True),
                        fromfile=str(stored_path),
                        tofile="regenerated",
                    )
                    first_diff = "".join(diff)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "golden",
        "group": None,
        "payload": {
            "corpus_dir": str(root),
            "cases": [c.name for c in cases],
            "results": results,
            "mismatches": mismatches,
        },
        "verdicts": {"passed": not mismatches},
        "timings": {"seconds": 0},
    }
    if mismatches:
        raise GoldenMismatch(", ".join(mismatches), first_diff or "")
    return report, EXIT_OK


def write_golden(root: Path, specs: dict[str, str]) -> None:
    """Generate the golden corpus from scratch (one-time freeze)."""
    for name, spec_text in specs.items():
        case = root / name
        case.mkdir(parents=True, exist_ok=True)
        input_path = case / "input.json"
        input_path.write_text(spec_text, encoding="utf-8")
        for stem, command, mode in GOLDEN_COMMANDS:
            ext = "dot" if mode.endswith(":dot") else "json"
            artifact = golden_artifact(stem, command, mode, str(input_path))
            (case / f"{stem}.{ext}").write_text(artifact, encoding="utf-8")
