"""Batch front end: descriptor files in, tables and verdicts out.

Usage: ``lcft COMMAND CONFIG [--json] [--seed N] [--samples N]``.

The config is a line-based key=value file describing one extension
(p, t, f, e, u0, precision) plus optional defaults for seed and samples;
field elements are written as g^k, a bare integer, or a comma-separated
coefficient list. LCFT_PRECISION in the environment overrides the default
precision. Exit codes: 0 success, 1 descriptor validation failure,
2 property-suite failure, 3 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import brauer, checks, reciprocity as rc
from .extension import TameAbelianExtension
from .series import LaurentSeries

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PROPERTY = 2
EXIT_IO = 3

COMMANDS = ("validate", "galois", "recip", "norm-group", "hasse", "check")


def parse_config(path: str) -> dict:
    raw = {}
    with open(path) as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            raw[key.strip()] = value.strip()
    return raw


def build_extension(raw: dict, precision_override=None) -> TameAbelianExtension:
    try:
        p = int(raw["p"])
        t = int(raw["t"])
        f = int(raw["f"])
        e = int(raw["e"])
    except KeyError as exc:
        raise ValueError(f"missing descriptor key: {exc}") from exc
    precision = precision_override or int(
        raw.get("precision", os.environ.get("LCFT_PRECISION", 32)))
    return TameAbelianExtension.from_parameters(
        p, t, f, e, raw.get("u0", "1"), precision)


def _galois_json(g) -> dict:
    return {"a": g.a, "c": str(g.c)}


def cmd_validate(ext, raw, args, out):
    report = {
        "descriptor": ext.descriptor(),
        "modulus": ext.tower.modulus_str(),
        "generator_order": ext.tower.order,
        "degree": ext.degree,
        "structure": list(ext.structure()),
    }
    if args.json:
        out(json.dumps(report, indent=2))
    else:
        out(f"valid extension: degree {ext.degree} "
            f"(e={ext.e}, f={ext.f}) over F_{ext.q}((t))")
        out(f"residue modulus over F_{ext.p}: {report['modulus']}")
        out(f"galois structure: {report['structure']}")
    return EXIT_OK


def cmd_galois(ext, raw, args, out):
    group = ext.galois_group()
    rows = [_galois_json(g) for g in group]
    filtration = {
        str(i): [_galois_json(g) for g in ext.ramification_group(i)]
        for i in (-1, 0, 1)
    }
    if args.json:
        out(json.dumps({
            "descriptor": ext.descriptor(),
            "order": len(group),
            "structure": list(ext.structure()),
            "elements": rows,
            "ramification": filtration,
        }, indent=2))
    else:
        out(f"galois group of order {len(group)}, "
            f"structure {list(ext.structure())}")
        for row in rows:
            out(f"  (a={row['a']}, c={row['c']})")
        for i in (-1, 0, 1):
            out(f"  |G_{i}| = {len(filtration[str(i)])}")
    return EXIT_OK


def cmd_recip(ext, raw, args, out):
    pres = rc.norm_group(ext)
    t = ext.base_uniformizer()
    table = []
    agree = True
    for b in pres.coset_representatives:
        closed = rc.reciprocity_map(ext, b)
        u = LaurentSeries.constant(ext.tower, "t", b.unit, ext.precision)
        searched = rc.reciprocity_search(ext, t, u, b.valuation)
        same = closed == searched
        agree = agree and same
        table.append({
            "valuation": b.valuation,
            "unit": str(b.unit),
            "galois": _galois_json(closed),
            "search_agrees": same,
        })
    payload = {
        "descriptor": ext.descriptor(),
        "norm_group_invariants": list(pres.invariant_factors),
        "table": table,
    }
    if args.json:
        out(json.dumps(payload, indent=2))
    else:
        out(f"reciprocity table over {len(table)} classes "
            f"(norm group {list(pres.invariant_factors)}):")
        for row in table:
            mark = "" if row["search_agrees"] else "   <- MISMATCH"
            out(f"  u={row['unit']} t^{row['valuation']} -> "
                f"(a={row['galois']['a']}, c={row['galois']['c']}){mark}")
    return EXIT_OK if agree else EXIT_PROPERTY


def cmd_norm_group(ext, raw, args, out):
    pres = rc.norm_group(ext)
    payload = {
        "descriptor": ext.descriptor(),
        "subfield_generator": str(pres.subfield_generator),
        "generator_rows": [list(r) for r in pres.generator_rows],
        "relation_matrix": [list(r) for r in pres.relation_matrix],
        "invariant_factors": list(pres.invariant_factors),
        "quotient_order": pres.quotient_order,
        "coset_representatives": [
            {"valuation": b.valuation, "unit": str(b.unit)}
            for b in pres.coset_representatives],
    }
    if args.json:
        out(json.dumps(payload, indent=2))
    else:
        out(f"norm image generators (valuation, unit dlog): "
            f"{payload['generator_rows']}")
        out(f"K*/N invariant factors: {payload['invariant_factors']} "
            f"(order {pres.quotient_order})")
    return EXIT_OK


def cmd_hasse(ext, raw, args, out):
    chars = brauer.character_group(ext)
    index = int(raw.get("character", -1))
    if index < 0:
        # default: a character of maximal order (faithful when cyclic)
        index = max(range(len(chars)), key=lambda i: chars[i].order())
    if index >= len(chars):
        raise ValueError(f"character index {index} out of range "
                         f"(only {len(chars)} characters)")
    chi = chars[index]
    pres = rc.norm_group(ext)
    sigma = ext.residue_frobenius_lift()
    table = [{
        "b": {"valuation": b.valuation, "unit": str(b.unit)},
        "invariant_numerator": brauer.hasse_invariant(chi, b).numerator,
        "invariant_denominator": brauer.hasse_invariant(chi, b).denominator,
    } for b in pres.coset_representatives]
    payload = {
        "descriptor": ext.descriptor(),
        "character_index": index,
        "character_order": chi.order(),
        "chi_generator_value": str(chi(sigma)),
        "table": table,
    }
    if args.json:
        out(json.dumps(payload, indent=2))
    else:
        out(f"hasse invariants for character #{index} "
            f"(order {chi.order()}):")
        for row in table:
            out(f"  (v={row['b']['valuation']}, u={row['b']['unit']}) -> "
                f"{row['invariant_numerator']}/"
                f"{row['invariant_denominator']}")
    return EXIT_OK


def cmd_check(ext, raw, args, out):
    seed = args.seed if args.seed is not None else int(raw.get("seed", 0))
    samples = args.samples if args.samples is not None else int(
        raw.get("samples", 100))
    results = checks.run_checks(ext, samples=samples, seed=seed)
    passed = all(r.passed for r in results)
    if args.json:
        out(json.dumps({
            "descriptor": ext.descriptor(),
            "seed": seed,
            "samples": samples,
            "passed": passed,
            "results": [{"name": r.name, "passed": r.passed,
                         "detail": r.detail} for r in results],
        }, indent=2))
    else:
        out(f"property suite (seed={seed}, samples={samples}):")
        for r in sorted(results, key=lambda r: r.name):
            out("  " + r.line())
        out("ALL CHECKS PASSED" if passed else "SUITE FAILED")
    return EXIT_OK if passed else EXIT_PROPERTY


HANDLERS = {
    "validate": cmd_validate,
    "galois": cmd_galois,
    "recip": cmd_recip,
    "norm-group": cmd_norm_group,
    "hasse": cmd_hasse,
    "check": cmd_check,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lcft",
        description="tame local reciprocity maps over Laurent series fields")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("config", help="key=value descriptor file")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--precision", type=int, default=None)
    args = parser.parse_args(argv)

    def out(line):
        print(line)

    try:
        raw = parse_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        ext = build_extension(raw, args.precision)
    except (ValueError, KeyError) as exc:
        print(f"invalid extension: {exc}", file=sys.stderr)
        return EXIT_INVALID

    try:
        return HANDLERS[args.command](ext, raw, args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
