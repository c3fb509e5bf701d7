"""JSON command-line front end.

Exit status: 0 when every verification passed, 1 when one failed and 2 for
unusable input (bad JSON, schema violations, analyses the ring cannot
support, oracle size cap).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any

from . import __version__
from .arith import RingError, RingSpec
from .cellular import (build_cell_datum, cell_chain_simples, check_cellularity,
                       is_quasi_hereditary, star_agrees)
from .core import (AlgebraElement, basis_matrix, cartan_dims, gabriel_quiver,
                   product_decomposition, radical_basis_basic,
                   rank_formula, structured_basis)
from .frobenius import (GroupSpec, check_frobenius_system, check_separability, cycle_type,
                        dimension_obstruction, find_free_point, group_split_witness,
                        group_trace_system, jordan_trace_system, perm_free_point_criterion,
                        semisimple_predicate, separability_element, split_solver)
from .jordan import JordanType, assemble_matrix, block_index, jordan_type_of_rational
from .linalg import DenseMatrix
from .oracle import (ORACLE_CAP, OracleCapExceeded, SpanBasis, centralizer_nullspace,
                     radical_oracle, simple_count_oracle, span_equal)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


# -- instance parsing -----------------------------------------------------------

def parse_instance(obj: Any) -> dict:
    if not isinstance(obj, dict):
        raise InputError("instance must be a JSON object")
    if "ring" not in obj:
        raise InputError("instance needs a 'ring'")
    try:
        ring = RingSpec.from_json(obj["ring"])
    except RingError as exc:
        raise InputError(str(exc)) from exc
    kinds = [k for k in ("matrix", "jordan_type", "group") if k in obj]
    if len(kinds) != 1:
        raise InputError("give exactly one of 'matrix', 'jordan_type' or 'group'")
    kind = kinds[0]
    try:
        if kind == "jordan_type":
            return {"ring": ring, "jt": JordanType.from_json(ring, obj["jordan_type"])}
        if kind == "matrix":
            m = _matrix(ring, obj["matrix"])
            if not m.is_square():
                raise InputError("matrix must be square")
            return {"ring": ring, "jt": jordan_type_of_rational(m), "matrix": m}
        return {"ring": ring, "group": _group(ring, obj["group"])}
    except InputError:
        raise
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc


def _matrix(ring: RingSpec, rows) -> DenseMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise InputError("a matrix is a non-empty list of rows")
    return DenseMatrix.from_rows(ring, rows)


def _group(ring: RingSpec, obj) -> GroupSpec:
    if not isinstance(obj, dict):
        raise InputError("group must be an object")
    if ("permutations" in obj) == ("matrices" in obj):
        raise InputError("group needs exactly one of 'permutations' or 'matrices'")
    if "permutations" in obj:
        perms = obj["permutations"]
        if not isinstance(perms, list) or not all(isinstance(p, str) for p in perms):
            raise InputError("permutations must be a list of cycle-notation strings")
        return GroupSpec.from_permutations(ring, perms, obj.get("degree"))
    mats = obj["matrices"]
    if not isinstance(mats, list) or not mats:
        raise InputError("matrices must be a non-empty list")
    return GroupSpec.from_matrices(ring, [_matrix(ring, m) for m in mats])


def _require_jt(inst: dict) -> JordanType:
    if "jt" not in inst:
        raise InputError("this analysis needs a 'matrix' or 'jordan_type' instance")
    return inst["jt"]


def _echo(inst: dict) -> dict:
    out = {"ring": inst["ring"].to_json()}
    if "jt" in inst:
        out["jordan_type"] = inst["jt"].to_json()
        out["n"] = inst["jt"].n
    if "group" in inst:
        g = inst["group"]
        out["group"] = {"degree": g.n, "order": g.order}
    return out


class Checks:
    """Accumulates pass/fail verdicts for the exit status."""

    def __init__(self):
        self.failed: list[str] = []

    def __call__(self, name: str, ok: bool) -> bool:
        if not ok:
            self.failed.append(name)
        return ok


def _refused(reason: str) -> dict:
    return {"refused": reason}


def _oracle_allowed(jt: JordanType, opts) -> str | None:
    if opts.no_oracle:
        return "oracle disabled by --no-oracle"
    if not jt.ring.is_field():
        return f"oracle needs a field, ring is {jt.ring}"
    if jt.n > opts.oracle_cap:
        return f"n = {jt.n} exceeds oracle cap {opts.oracle_cap}"
    return None


def _trace_form_allowed(jt: JordanType, opts) -> str | None:
    reason = _oracle_allowed(jt, opts)
    if reason is None and jt.ring.characteristic and jt.ring.characteristic <= jt.n:
        reason = f"trace-form radical needs p > n; p = {jt.ring.characteristic}, n = {jt.n}"
    return reason


# -- commands -------------------------------------------------------------------

def cmd_basis(inst: dict, opts, checks: Checks) -> dict:
    jt = _require_jt(inst)
    basis = structured_basis(jt)
    c = assemble_matrix(jt)
    mats = [basis_matrix(jt, e) for e in basis]
    out: dict = {
        "rank": len(basis),
        "rank_formula": rank_formula(jt),
        "rank_formula_matches": checks("rank_formula", rank_formula(jt) == len(basis)),
        "commutes_with_c": checks("commutation", all(c @ m == m @ c for m in mats)),
        "cartan": cartan_dims(jt),
        "basis": [e.to_json() for e in basis],
    }
    rng = random.Random(opts.seed)
    ok = True
    for _ in range(8):
        a = AlgebraElement.from_vector(jt, [jt.ring.coerce(rng.randint(-3, 3)) for _ in basis])
        b = AlgebraElement.from_vector(jt, [jt.ring.coerce(rng.randint(-3, 3)) for _ in basis])
        ok &= (a * b).materialize() == a.materialize() @ b.materialize()
    out["random_products_match"] = checks("random_products", ok)
    reason = _oracle_allowed(jt, opts)
    if reason:
        out["oracle"] = _refused(reason)
    else:
        ours = SpanBasis.from_matrices(jt.ring, jt.n, mats)
        theirs = centralizer_nullspace(c, opts.oracle_cap)
        out["oracle"] = {"dimension": theirs.dim,
                         "span_equal": checks("oracle_span", span_equal(ours, theirs))}
    return out


def cmd_cell(inst: dict, opts, checks: Checks) -> dict:
    jt = _require_jt(inst)
    d = build_cell_datum(jt)
    report = check_cellularity(d)
    checks("cellularity", report.passed)
    star_ok, _ = star_agrees(d)
    out: dict = {"datum": d.to_json(), "cellularity": report.to_json(),
                 "star_product_agrees": checks("star_product", star_ok)}
    if jt.ring.is_field():
        chain = cell_chain_simples(d)
        checks("cell_chain", chain.agree)
        qh = is_quasi_hereditary(jt, d)
        checks("quasi_hereditary_cross_check", bool(qh.cell_chain_agrees))
        out["cell_chain"] = chain.to_json()
        out["simples"] = chain.count
        out["quasi_hereditary"] = qh.to_json()
    else:
        out["cell_chain"] = _refused(f"simple modules are counted over a field, ring is {jt.ring}")
        out["quasi_hereditary"] = _refused(f"quasi-heredity is decided over a field, ring is {jt.ring}")
    return out


def cmd_frobenius(inst: dict, opts, checks: Checks) -> dict:
    if "group" in inst:
        return _frobenius_group(inst["group"], checks)
    jt = _require_jt(inst)
    system = jordan_trace_system(jt)
    report = check_frobenius_system(system)
    checks("frobenius_system", report.passed)
    sep = check_separability(jt, system, separability_element(jt))
    checks("separability", sep.passed)
    out: dict = {"route": "jordan", "system": report.to_json(), "separability": sep.to_json()}
    if jt.ring.is_field():
        split = split_solver(jt, system)
        checks("split_agreement", split.agree and split.witness_maps_to_identity is not False)
        out["split"] = split.to_json()
        semi = semisimple_predicate(jt)
        entry = {"semisimple": semi}
        reason = _trace_form_allowed(jt, opts)
        if reason is None:
            rad = radical_oracle(centralizer_nullspace(assemble_matrix(jt), opts.oracle_cap),
                                 opts.oracle_cap)
            entry["oracle_radical_dimension"] = rad.dim
            entry["agrees_with_oracle"] = checks("semisimple_oracle", semi == (rad.dim == 0))
        else:
            entry["oracle"] = _refused(reason)
        out["semisimple"] = entry
    else:
        out["split"] = _refused(f"the split solver needs a field, ring is {jt.ring}")
    return out


def _frobenius_group(g: GroupSpec, checks: Checks) -> dict:
    point = find_free_point(g)
    out: dict = {"route": "group", "order": g.order, "free_point": point}
    if g.permutations is not None and len(g.permutations) > 1:
        gens = _cyclic_generator(g)
        if gens is not None:
            ct = cycle_type(gens)
            crit = perm_free_point_criterion(ct)
            out["cycle_type"] = ct
            out["cycle_criterion"] = crit
            checks("cycle_criterion", crit == (point is not None))
    system = group_trace_system(g, point or 1, require_free=False)
    report = check_frobenius_system(system)
    out["system"] = report.to_json()
    out["system"]["point"] = system.details["point"]
    checks("frobenius_system", report.passed)
    obstruction = dimension_obstruction(g.ring, system.subalgebra, g.n)
    if point is not None:
        out["verdict"] = "free point found: system verified" if report.passed else "free point found: system failed"
    elif obstruction:
        out["verdict"] = "no free point; " + obstruction
    else:
        out["verdict"] = "no free point: undetermined by the free-point criterion"
    out["dimension_obstruction"] = obstruction
    split = group_split_witness(g, system)
    if split is None:
        out["split"] = _refused(f"|G| = {g.order} is not invertible in {g.ring}")
    else:
        z, ok = split
        out["split"] = {"witness": z.to_json(), "E_of_witness_is_identity": checks("group_split", ok)}
    return out


def _cyclic_generator(g: GroupSpec):
    for p in g.permutations:
        seen, cur = {p}, p
        while True:
            cur = tuple(p[x - 1] for x in cur)
            if cur in seen:
                break
            seen.add(cur)
        if len(seen) == g.order:
            return p
    return None


def cmd_structure(inst: dict, opts, checks: Checks) -> dict:
    jt = _require_jt(inst)
    idx = block_index(jt)
    out: dict = {
        "block_idempotents": [
            {"group": grp, "block": i, "rows": [idx.first_row(grp, i), idx.offset(grp, i)]}
            for grp, gi in enumerate(idx.groups, start=1) for i in gi.blocks()],
        "group_idempotents": [
            {"group": grp, "rows": [idx.tau[grp - 1] + 1, idx.tau[grp]]} for grp in range(1, jt.t + 1)],
        "cartan": cartan_dims(jt),
        "product_decomposition": [
            {"eigenvalue": jt.ring.format(eig), "jordan_type": sub.to_json(), "rank": rank_formula(sub)}
            for eig, sub in product_decomposition(jt)],
    }
    formula = None
    try:
        formula = radical_basis_basic(jt)
        out["radical"] = {"formula_dimension": len(formula)}
    except ValueError as exc:
        out["radical"] = {"formula": _refused(str(exc))}
    reason = _trace_form_allowed(jt, opts)
    if reason is None:
        rad = radical_oracle(centralizer_nullspace(assemble_matrix(jt), opts.oracle_cap),
                             opts.oracle_cap)
        out["radical"]["oracle_dimension"] = rad.dim
        if formula is not None:
            ours = SpanBasis.from_matrices(jt.ring, jt.n, [basis_matrix(jt, e) for e in formula]) \
                if formula else SpanBasis(jt.ring, jt.n, (), ())
            out["radical"]["span_equal"] = checks("radical_oracle", span_equal(ours, rad))
    else:
        out["radical"]["oracle"] = _refused(reason)
    if formula is not None:
        q = gabriel_quiver(jt)
        checks("quiver_relations", q.relations_hold)
        out["quiver"] = q.to_json()
    else:
        out["quiver"] = _refused("quiver needs one eigenvalue group, multiplicities 1 and a field")
    return out


def cmd_oracle(inst: dict, opts, checks: Checks) -> dict:
    jt = _require_jt(inst)
    if not jt.ring.is_field():
        raise InputError(f"the oracle needs a field, ring is {jt.ring}")
    c = inst["matrix"] if "matrix" in inst else assemble_matrix(jt)
    cent = centralizer_nullspace(c, opts.oracle_cap)
    out: dict = {"centralizer": {"dimension": cent.dim,
                                 "basis": [m.to_json() for m in cent.matrices()]}}
    if jt.ring.characteristic and jt.ring.characteristic <= jt.n:
        out["radical"] = _refused(f"trace-form radical needs p > n = {jt.n}")
    else:
        rad = radical_oracle(cent, opts.oracle_cap)
        out["radical"] = {"dimension": rad.dim, "basis": [m.to_json() for m in rad.matrices()]}
        out["simple_count"] = simple_count_oracle(cent, opts.oracle_cap)
    return out


HELP = {
    "basis": "structured basis, rank formula and oracle span comparison",
    "cell": "cell datum, cellular axioms, cell chain and quasi-heredity",
    "frobenius": "Frobenius system, separability and split checks",
    "structure": "idempotents, radical, Cartan table, quiver and product decomposition",
    "oracle": "raw brute-force centralizer, radical and simple count",
}

COMMANDS = {
    "basis": cmd_basis,
    "cell": cmd_cell,
    "frobenius": cmd_frobenius,
    "structure": cmd_structure,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centralizer",
        description="Structure of centralizer algebras of Jordan-block matrices.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=HELP[name])
        p.add_argument("--input", default="-", help="instance JSON file, '-' for stdin")
        p.add_argument("--output", default="-", help="report file, '-' for stdout")
        p.add_argument("--oracle-cap", type=int, default=ORACLE_CAP,
                       help="largest matrix size handed to the brute-force oracle")
        p.add_argument("--no-oracle", action="store_true", help="skip oracle comparisons")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized spot checks")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, report: dict) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(args: argparse.Namespace) -> tuple[dict, int]:
    report: dict = {"tool": "centralizer", "version": __version__, "command": args.command}
    try:
        raw = json.loads(_read(args.input))
        inst = parse_instance(raw)
        report["instance"] = _echo(inst)
        checks = Checks()
        report["results"] = COMMANDS[args.command](inst, args, checks)
    except json.JSONDecodeError as exc:
        report["error"] = {"type": "input", "message": f"invalid JSON: {exc}"}
        return report, EXIT_INPUT
    except OSError as exc:
        report["error"] = {"type": "input", "message": str(exc)}
        return report, EXIT_INPUT
    except OracleCapExceeded as exc:
        report["error"] = {"type": "oracle_cap", "message": str(exc)}
        return report, EXIT_INPUT
    except (InputError, RingError) as exc:
        report["error"] = {"type": "input", "message": str(exc)}
        return report, EXIT_INPUT
    report["failed_checks"] = checks.failed
    report["status"] = "fail" if checks.failed else "pass"
    return report, EXIT_FAIL if checks.failed else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    report, code = run(args)
    _write(args.output, report)
    return code
