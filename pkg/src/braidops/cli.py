"""Command-line interface.

Subcommands: check-ybe, braid-run, entangle-test, invariant,
check-relations, demo {ghz|aravind|lemma}, fixtures. Output is JSON except
for the exact invariant modes, which print the canonical Laurent text form.
Exit codes: 0 success, 2 input error, 1 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .braids import BraidSyntaxError, BraidWord, parse_braid_word
from .engine import QuantumState, WordOperatorDescriptor, apply_word
from .entangle import EngineConsistencyError, aravind_demo, ghz_state, lemma_demo, product_test_2q, schmidt_rank
from .fixtures import FIXTURE_WORDS, fixture
from .rmatrix import NonUnitParameterError, RParams, build_R, check_unitary, check_yang_baxter
from .statesum import (
    VirtualWordError,
    bracket_state_sum,
    evaluate_at_phases,
    sigma_zero_one,
    z_invariant,
    z_special,
)
from .virtualrel import check_relation, relation_catalog

INVARIANT_MODES = {
    "bracket": bracket_state_sum,
    "z": z_invariant,
    "sigma": sigma_zero_one,
    "zspecial": z_special,
}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _cnum(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _amplitude_entries(state: QuantumState) -> list[dict]:
    return [
        {"basis": label, "re": float(amp.real), "im": float(amp.imag)}
        for label, amp in zip(state.basis_labels(), state.amplitudes)
    ]


def _add_param_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--phases",
        nargs=4,
        type=float,
        metavar=("THETA_A", "THETA_B", "THETA_C", "THETA_D"),
        help="polar parameters, a = exp(i theta_a) and so on",
    )
    group.add_argument(
        "--params",
        nargs=4,
        metavar=("A", "B", "C", "D"),
        help="cartesian parameters as re,im pairs",
    )


def _params_from_args(args) -> RParams:
    if getattr(args, "params", None):
        values = []
        for text in args.params:
            try:
                re_part, im_part = text.split(",")
                values.append(complex(float(re_part), float(im_part)))
            except ValueError:
                raise ValueError(f"malformed complex parameter {text!r}, expected re,im") from None
        params = RParams(*values)
    elif getattr(args, "phases", None):
        params = RParams.from_phases(*args.phases)
    else:
        params = RParams(1, 1, 1, 1)
    params.validate()
    return params


def _word_from_arg(text: str) -> BraidWord:
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as handle:
            text = handle.read()
    return parse_braid_word(text)


def _state_from_args(args) -> QuantumState:
    if getattr(args, "fixture", None):
        table = {
            "ghz": lambda: ghz_state(),
            "bell": lambda: QuantumState(2, [1, 0, 0, 1]),
            "singlet": lambda: QuantumState(2, [0, 1, -1, 0]),
        }
        if args.fixture not in table:
            raise ValueError(f"unknown state fixture {args.fixture!r}; known: {sorted(table)}")
        return table[args.fixture]()
    text = args.state_json
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as handle:
            text = handle.read()
    entries = json.loads(text)
    if not entries:
        raise ValueError("empty amplitude list")
    n = len(entries[0]["basis"])
    amps = np.zeros(2**n, dtype=complex)
    for entry in entries:
        amps[int(entry["basis"], 2)] = complex(entry["re"], entry.get("im", 0.0))
    return QuantumState(n, amps)


def _cmd_check_ybe(args) -> int:
    params = _params_from_args(args)
    op = build_R(params)
    print(_dump({"unitary_residual": check_unitary(op), "ybe_residual": check_yang_baxter(op)}))
    return 0


def _cmd_braid_run(args) -> int:
    params = _params_from_args(args)
    word = _word_from_arg(args.word)
    bits = args.state if args.state else "0" * word.strands
    state = QuantumState.basis(bits)
    if state.qubits != word.strands:
        raise ValueError(f"state on {state.qubits} qubits does not match {word.strands} strands")
    out = apply_word(state, WordOperatorDescriptor(word=word, params=params))
    print(_dump({"input": _amplitude_entries(state), "output": _amplitude_entries(out)}))
    return 0


def _cmd_entangle_test(args) -> int:
    state = _state_from_args(args)
    n = state.qubits
    report: dict = {"qubits": n}
    ranks = {}
    for qubit in range(1, n + 1):
        ranks[f"{qubit}|rest"] = schmidt_rank(state, {qubit}, args.tol)
    report["schmidt_ranks"] = ranks
    report["entangled_any_cut"] = any(r > 1 for r in ranks.values())
    if n == 2:
        result = product_test_2q(state, args.tol)
        report["product_test"] = {
            "discriminant": _cnum(result.discriminant),
            "entangled": result.entangled,
        }
    print(_dump(report))
    return 0


def _cmd_invariant(args) -> int:
    word = _word_from_arg(args.word)
    value = INVARIANT_MODES[args.mode](word)
    if args.numeric:
        if not args.phases:
            raise ValueError("--numeric requires --phases")
        number = evaluate_at_phases(value, args.phases[0], args.phases[1], args.phases[2])
        print(_dump(_cnum(number)))
    else:
        print(value.canonical_str())
    return 0


def _cmd_check_relations(args) -> int:
    params = _params_from_args(args)
    rows = []
    for instance in relation_catalog(args.strands):
        rows.append(
            {
                "name": instance.name,
                "lhs": str(instance.lhs),
                "rhs": str(instance.rhs),
                "residual": check_relation(instance, params),
            }
        )
    print(_dump(rows))
    return 0


def _cmd_demo(args) -> int:
    if args.which == "ghz":
        print(_dump({"state": _amplitude_entries(ghz_state())}))
    elif args.which == "aravind":
        print(_dump(aravind_demo()))
    else:
        params = _params_from_args(args)
        result = lemma_demo(params, args.tol)
        print(
            _dump(
                {
                    "entangled": result.entangled,
                    "discriminant": _cnum(result.discriminant),
                    "ab_minus_cd": _cnum(params.a * params.b - params.c * params.d),
                    "state": _amplitude_entries(result.state),
                }
            )
        )
    return 0


def _cmd_fixtures(args) -> int:
    print(_dump(FIXTURE_WORDS))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidops")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-ybe", help="unitarity and Yang-Baxter residuals of R")
    _add_param_args(p)
    p.set_defaults(func=_cmd_check_ybe)

    p = sub.add_parser("braid-run", help="apply a braid word to a basis state")
    p.add_argument("--word", required=True, help="braid word, inline or @file")
    p.add_argument("--state", help="basis bit string, default all zeros")
    _add_param_args(p)
    p.set_defaults(func=_cmd_braid_run)

    p = sub.add_parser("entangle-test", help="Schmidt ranks and 2-qubit product test")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--fixture", help="named state: ghz, bell, singlet")
    group.add_argument("--state-json", help="amplitude entries as JSON, inline or @file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_entangle_test)

    p = sub.add_parser("invariant", help="state-sum invariants of a closed braid")
    p.add_argument("--word", required=True, help="braid word, inline or @file")
    p.add_argument("--mode", choices=sorted(INVARIANT_MODES), default="bracket")
    p.add_argument("--numeric", action="store_true", help="evaluate at --phases")
    p.add_argument("--phases", nargs=4, type=float, metavar=("THETA_A", "THETA_B", "THETA_C", "THETA_D"))
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("check-relations", help="relation residuals at the gate level")
    p.add_argument("--strands", type=int, required=True)
    _add_param_args(p)
    p.set_defaults(func=_cmd_check_relations)

    p = sub.add_parser("demo", help="ghz, aravind, or lemma demonstration")
    p.add_argument("which", choices=("ghz", "aravind", "lemma"))
    p.add_argument("--tol", type=float, default=1e-9)
    _add_param_args(p)
    p.set_defaults(func=_cmd_demo)

    p = sub.add_parser("fixtures", help="list the bundled braid words")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except EngineConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except (BraidSyntaxError, VirtualWordError, NonUnitParameterError, ValueError, KeyError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
