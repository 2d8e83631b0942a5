"""Command-line front end: simulate, reproduce, gate, bracket.

Subcommands:
  simulate   --config <json> --out <csv>   run a schedule from a config file
  reproduce  {cnot|swap|cubitt} --out-dir  write the worked-example datasets
  gate cnot  --n N --control I --target J  print the C-NOT coefficient map
  bracket    A B [--anti]                  decompose a basis bracket

Config files are JSON with fields n, initial (state name or component
list), schedule (list of {terms, duration}), optional sample_step, and
optional outputs flags {components, density_eigenvalues, pt_eigenvalues}.
Multi-indexes are digit strings like "033"; partial-transpose cuts are
qubit letters like "A" or "BC".  CSV output starts with one metadata
comment line (n, schedule hash, sample step), then a header row: column t,
then c_<digits> per component, then eig_rho_<k> and eig_pt<cut>_<k> with k
ascending by eigenvalue.  Floats are printed with 17 significant digits,
which round-trips double precision exactly.  Exit codes: 0 success,
2 validation error, 1 internal error.
"""

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import states
from .adjoint import HamiltonianCoeffs, bracket_decompose
from .eigen import eigvalsh
from .gates import cnot_gate, named_state, r_cnot
from .pauli import SQRT2
from .propagate import Schedule, Trajectory, propagate
from .states import CoherenceTensor

COEFF_FMT = "{:.12f}"
FLOAT_FMT = "{:.17g}"


# ---------------------------------------------------------------- scenarios

def swap_case() -> tuple[CoherenceTensor, Schedule]:
    """Entanglement-swap setup: Bell(A,B) x plus(C), two coupling segments."""
    t0 = states.product(named_state("bell_ab", 2), named_state("plus", 1))
    quarter = SQRT2 * np.pi / 2.0  # tau_p / 4 with tau_p = 2 sqrt(2) pi
    sched = Schedule(
        n=3,
        segments=(
            (HamiltonianCoeffs(n=3, terms={"033": 1.0}), quarter),
            (HamiltonianCoeffs(n=3, terms={"220": 1.0}), quarter),
        ),
    )
    return t0, sched


def cubitt_case() -> tuple[CoherenceTensor, Schedule]:
    """Separable-ancilla scheme: two embedded C-NOT gates on cubitt_in."""
    t0 = named_state("cubitt_in", 3)
    g1 = cnot_gate(control=1, target=3, n=3)
    g2 = cnot_gate(control=3, target=2, n=3)
    sched = Schedule(
        n=3,
        segments=((g1.hamiltonian, g1.duration), (g2.hamiltonian, g2.duration)),
    )
    return t0, sched


# ------------------------------------------------------------- config files

def _expect(cond: bool, path: str, msg: str) -> None:
    if not cond:
        raise ValueError(f"{path}: {msg}")


def parse_cut(cut: str, n: int) -> list[int]:
    """Qubit letters like 'A' or 'BC' to sorted 1-based positions."""
    valid = "ABCDEF"[:n]
    _expect(isinstance(cut, str) and cut != "", "outputs.pt_eigenvalues", "cuts must be nonempty strings")
    positions = []
    for ch in cut.upper():
        _expect(ch in valid, "outputs.pt_eigenvalues",
                f"unknown qubit letter {ch!r} in cut {cut!r}; valid letters: {valid}")
        positions.append(ord(ch) - ord("A") + 1)
    _expect(len(set(positions)) == len(positions), "outputs.pt_eigenvalues",
            f"repeated qubit letter in cut {cut!r}")
    return sorted(positions)


def parse_config(text: str) -> tuple[CoherenceTensor, Schedule, dict]:
    """Validate a simulation config document; error messages carry field paths."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"config is not valid JSON: {exc}") from exc
    _expect(isinstance(doc, dict), "config", "top level must be an object")
    known = {"n", "initial", "schedule", "sample_step", "outputs"}
    for key in doc:
        _expect(key in known, key, f"unknown field (known: {', '.join(sorted(known))})")

    n = doc.get("n")
    _expect(isinstance(n, int) and 1 <= n <= 6, "n", "must be an integer in 1..6")

    _expect("initial" in doc, "initial", "missing")
    initial = doc["initial"]
    if isinstance(initial, str):
        t0 = named_state(initial, n)
    else:
        _expect(isinstance(initial, list) and len(initial) == 4**n, "initial",
                f"must be a state name or a list of 4^{n} = {4**n} numbers")
        _expect(all(isinstance(x, (int, float)) for x in initial), "initial",
                "components must be numbers")
        t0 = CoherenceTensor(n=n, components=np.array(initial, dtype=float))
        _expect(abs(t0.affine() - (1.0 / SQRT2) ** n) <= 1e-12, "initial",
                f"affine component must equal (1/sqrt2)^{n}")
        p = states.purity(t0)
        _expect((0.5**n) - 1e-12 <= p <= 1.0 + 1e-12, "initial",
                f"purity {p} outside [(1/2)^{n}, 1]")

    _expect(isinstance(doc.get("schedule"), list) and doc["schedule"], "schedule",
            "must be a nonempty list of segments")
    segments = []
    for i, seg in enumerate(doc["schedule"]):
        path = f"schedule[{i}]"
        _expect(isinstance(seg, dict), path, "must be an object")
        for key in seg:
            _expect(key in ("terms", "duration"), f"{path}.{key}", "unknown field")
        terms = seg.get("terms")
        _expect(isinstance(terms, dict), f"{path}.terms", "must be an object of index: coefficient")
        for m, c in terms.items():
            _expect(isinstance(m, str) and len(m) == n and all(ch in "0123" for ch in m),
                    f"{path}.terms", f"index {m!r} must be {n} digits over 0..3")
            _expect(isinstance(c, (int, float)), f"{path}.terms[{m}]", "coefficient must be a number")
        duration = seg.get("duration")
        _expect(isinstance(duration, (int, float)) and duration > 0, f"{path}.duration",
                "must be a positive number")
        segments.append((HamiltonianCoeffs(n=n, terms=terms), float(duration)))

    sample_step = doc.get("sample_step")
    if sample_step is not None:
        _expect(isinstance(sample_step, (int, float)) and sample_step > 0, "sample_step",
                "must be a positive number")
        shortest = min(d for _, d in segments)
        _expect(sample_step <= shortest + 1e-12, "sample_step",
                f"must not exceed the shortest segment duration {shortest}")
        sample_step = float(sample_step)

    outputs_doc = doc.get("outputs", {"components": True})
    _expect(isinstance(outputs_doc, dict), "outputs", "must be an object")
    for key in outputs_doc:
        _expect(key in ("components", "density_eigenvalues", "pt_eigenvalues"),
                f"outputs.{key}", "unknown field")
    outputs = {
        "components": bool(outputs_doc.get("components", False)),
        "density_eigenvalues": bool(outputs_doc.get("density_eigenvalues", False)),
        "pt_cuts": [],
    }
    cuts = outputs_doc.get("pt_eigenvalues", [])
    _expect(isinstance(cuts, list), "outputs.pt_eigenvalues", "must be a list of cut strings")
    for cut in cuts:
        parse_cut(cut, n)
        outputs["pt_cuts"].append(cut.upper())
    _expect(outputs["components"] or outputs["density_eigenvalues"] or outputs["pt_cuts"],
            "outputs", "at least one output must be requested")

    return t0, Schedule(n=n, segments=tuple(segments), sample_step=sample_step), outputs


# ----------------------------------------------------------------- csv I/O

def schedule_hash(s: Schedule) -> str:
    parts = [f"n={s.n}"]
    for h, duration in s.segments:
        terms = ",".join(f"{m}:{FLOAT_FMT.format(c)}" for m, c in sorted(h.terms.items()))
        parts.append(f"[{terms}]@{FLOAT_FMT.format(duration)}")
    return hashlib.sha256(";".join(parts).encode()).hexdigest()[:12]


def _pt_eigs(state: CoherenceTensor, positions: list[int]) -> np.ndarray:
    t = state
    for p in positions:
        t = states.partial_transpose(t, p)
    return eigvalsh(states.to_density(t))


def write_trajectory_csv(path: Path, traj: Trajectory, s: Schedule, outputs: dict) -> dict:
    """Write one CSV row per sampled time; returns the summary record."""
    n = s.n
    header = ["t"]
    if outputs["components"]:
        header += [f"c_{m}" for m in states.all_multi_indexes(n)]
    if outputs["density_eigenvalues"]:
        header += [f"eig_rho_{k}" for k in range(2**n)]
    for cut in outputs["pt_cuts"]:
        header += [f"eig_pt{cut}_{k}" for k in range(2**n)]

    min_pt = {cut: np.inf for cut in outputs["pt_cuts"]}
    step = s.sample_step if s.sample_step is not None else "default"
    lines = [
        f"# n={n} schedule_sha256={schedule_hash(s)} sample_step="
        + (FLOAT_FMT.format(step) if isinstance(step, float) else step),
        ",".join(header),
    ]
    for t, state in zip(traj.times, traj.states):
        row = [FLOAT_FMT.format(t)]
        if outputs["components"]:
            row += [FLOAT_FMT.format(c) for c in state.components]
        if outputs["density_eigenvalues"]:
            row += [FLOAT_FMT.format(v) for v in eigvalsh(states.to_density(state))]
        for cut in outputs["pt_cuts"]:
            eigs = _pt_eigs(state, parse_cut(cut, n))
            min_pt[cut] = min(min_pt[cut], float(eigs[0]))
            row += [FLOAT_FMT.format(v) for v in eigs]
        lines.append(",".join(row))
    path.write_text("\n".join(lines) + "\n")

    summary = {"rows": len(traj.states), "final_purity": states.purity(traj.states[-1])}
    for cut, val in min_pt.items():
        summary[f"min_pt_{cut}"] = val
    return summary


def _dump_components(path: Path, state: CoherenceTensor, label: str) -> None:
    lines = [f"# {label}: nonzero coherence components"]
    for i, m in enumerate(states.all_multi_indexes(state.n)):
        c = state.components[i]
        if abs(c) > 1e-12:
            lines.append(f"{m}  {FLOAT_FMT.format(c)}")
    path.write_text("\n".join(lines) + "\n")


# ------------------------------------------------------------- subcommands

def run_simulate(config_path: str, out_path: str) -> dict:
    t0, sched, outputs = parse_config(Path(config_path).read_text())
    start = time.perf_counter()
    traj = propagate(t0, sched)
    summary = write_trajectory_csv(Path(out_path), traj, sched, outputs)
    summary["wall_time_s"] = time.perf_counter() - start
    for key, val in summary.items():
        print(f"{key}={FLOAT_FMT.format(val) if isinstance(val, float) else val}")
    print(f"wrote={out_path}")
    return summary


def run_reproduce(example: str, out_dir: str) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if example == "cnot":
        R = r_cnot()  # raises if the computed matrix drifts from the fixture
        grid = "\n".join(" ".join(f"{int(round(v)):2d}" for v in row) for row in R)
        (out / "rcnot_matrix.txt").write_text(grid + "\n")
        print(f"wrote={out / 'rcnot_matrix.txt'}")
        lines = ["state,role," + ",".join(f"c_{m}" for m in states.all_multi_indexes(2))]
        for name in ("comp_00", "comp_01", "comp_10", "comp_11"):
            v = named_state(name, 2).components
            lines.append(f"{name},in," + ",".join(FLOAT_FMT.format(c) for c in v))
            lines.append(f"{name},out," + ",".join(FLOAT_FMT.format(c) for c in R @ v))
        (out / "cnot_basis_map.csv").write_text("\n".join(lines) + "\n")
        print(f"wrote={out / 'cnot_basis_map.csv'}")
    elif example == "swap":
        t0, sched = swap_case()
        traj = propagate(t0, sched)
        s1 = write_trajectory_csv(out / "swap_components.csv", traj, sched,
                                  {"components": True, "density_eigenvalues": False, "pt_cuts": []})
        s2 = write_trajectory_csv(out / "swap_pt_eigenvalues.csv", traj, sched,
                                  {"components": False, "density_eigenvalues": True,
                                   "pt_cuts": ["A", "B", "C"]})
        print(f"wrote={out / 'swap_components.csv'}")
        print(f"wrote={out / 'swap_pt_eigenvalues.csv'}")
        for key in ("min_pt_A", "min_pt_B", "min_pt_C"):
            print(f"{key}={FLOAT_FMT.format(s2[key])}")
        print(f"final_purity={FLOAT_FMT.format(s1['final_purity'])}")
    elif example == "cubitt":
        t0, sched = cubitt_case()
        traj = propagate(t0, sched)
        s1 = write_trajectory_csv(out / "cubitt_pt_single.csv", traj, sched,
                                  {"components": False, "density_eigenvalues": True,
                                   "pt_cuts": ["A", "B", "C"]})
        write_trajectory_csv(out / "cubitt_pt_pairs.csv", traj, sched,
                             {"components": False, "density_eigenvalues": True,
                              "pt_cuts": ["AB", "AC", "BC"]})
        print(f"wrote={out / 'cubitt_pt_single.csv'}")
        print(f"wrote={out / 'cubitt_pt_pairs.csv'}")
        boundary = np.argmin(np.abs(traj.times - sched.segments[0][1]))
        _dump_components(out / "cubitt_rho_int.txt", traj.states[int(boundary)],
                         "state after the first gate")
        _dump_components(out / "cubitt_rho_fin.txt", traj.states[-1],
                         "state after the second gate")
        print(f"wrote={out / 'cubitt_rho_int.txt'}")
        print(f"wrote={out / 'cubitt_rho_fin.txt'}")
        for key in ("min_pt_A", "min_pt_B", "min_pt_C"):
            print(f"{key}={FLOAT_FMT.format(s1[key])}")
    else:
        raise ValueError(f"unknown example {example!r}; choose from cnot, swap, cubitt")


def run_gate(n: int, control: int, target: int) -> None:
    gate = cnot_gate(control=control, target=target, n=n)
    for m, c in sorted(gate.hamiltonian.terms.items(), key=lambda kv: int(kv[0], 4)):
        print(f"{m}  {COEFF_FMT.format(c)}")
    print(f"duration  {COEFF_FMT.format(gate.duration)}")


def run_bracket(a: str, b: str, anti: bool) -> None:
    kind = "anticommutator" if anti else "commutator"
    pairs = bracket_decompose(a, b, kind)
    if not pairs:
        print("(empty)")
        return
    for m, coeff in pairs:
        print(f"{m}  {COEFF_FMT.format(coeff)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohvec",
        description="n-qubit coherence-vector dynamics in the product-operator basis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run a schedule from a JSON config")
    p_sim.add_argument("--config", required=True, help="path to the JSON config file")
    p_sim.add_argument("--out", required=True, help="path of the CSV to write")

    p_rep = sub.add_parser("reproduce", help="write a worked example's datasets")
    p_rep.add_argument("name", choices=["cnot", "swap", "cubitt"])
    p_rep.add_argument("--out-dir", required=True)

    p_gate = sub.add_parser("gate", help="print a named gate's coefficient map")
    sub_gate = p_gate.add_subparsers(dest="gate_name", required=True)
    p_cnot = sub_gate.add_parser("cnot")
    p_cnot.add_argument("--n", type=int, required=True)
    p_cnot.add_argument("--control", type=int, required=True)
    p_cnot.add_argument("--target", type=int, required=True)

    p_br = sub.add_parser("bracket", help="decompose a bracket of two basis elements")
    p_br.add_argument("a")
    p_br.add_argument("b")
    p_br.add_argument("--anti", action="store_true", help="anticommutator instead")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            run_simulate(args.config, args.out)
        elif args.command == "reproduce":
            run_reproduce(args.name, args.out_dir)
        elif args.command == "gate":
            run_gate(args.n, args.control, args.target)
        else:
            run_bracket(args.a, args.b, args.anti)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failures map to a distinct exit code
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
