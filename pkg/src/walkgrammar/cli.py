"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (single-line diagnostic on
stderr), 2 on usage errors.  Data output is deterministic: identical
arguments produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

import numpy as np

from . import coalgebra, graphs, language, orbits, quantize, verify, walk


def _coin_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("coin")
    group.add_argument("--coin", choices=("hadamard", "custom"), default="hadamard")
    group.add_argument("--theta", type=float, help="rotation angle for --coin custom")
    group.add_argument("--phi1", type=float, default=0.0)
    group.add_argument("--phi2", type=float, default=0.0)
    group.add_argument("--coin-file", help="JSON file {re: [[..]], im: [[..]]}")


def _output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="write output to this path instead of stdout")
    parser.add_argument("--quiet", action="store_true", help="suppress non-data messages")


def _resolve_coin(args) -> quantize.CoinPair:
    if args.coin_file:
        with open(args.coin_file, encoding="utf-8") as fh:
            u = quantize.coin_from_json(json.load(fh))
        return quantize.CoinPair.from_unitary(u)
    if args.coin == "custom":
        if args.theta is None:
            raise ValueError("--coin custom needs --theta (and optionally --phi1/--phi2)")
        return quantize.CoinPair.from_unitary(
            quantize.coin_from_angles(args.theta, args.phi1, args.phi2)
        )
    return quantize.hadamard_coin()


def _parse_psi(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("--psi expects four comma-separated numbers: re,im,re,im")
    values = [float(p) for p in parts]
    return np.array([values[0] + 1j * values[1], values[2] + 1j * values[3]])


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        if not args.quiet:
            print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _walk_rows(args) -> tuple[int, list[dict]]:
    coin = _resolve_coin(args)
    psi = _parse_psi(args.psi)
    rows = []
    if args.symbolic:
        sym = walk.run_symbolic(args.steps, symbolic_max=args.symbolic_max)
        dist = walk.distribution(walk.evaluate(sym, coin), psi)
        for k in sorted(dist):
            rows.append({"k": k, "probability": dist[k], "words": sorted(sym.cell(k))})
    else:
        dist = walk.distribution(walk.run_numeric(coin, args.steps), psi)
        for k in sorted(dist):
            rows.append({"k": k, "probability": dist[k]})
    return args.steps, rows


def cmd_walk_run(args) -> int:
    steps, rows = _walk_rows(args)
    if args.format == "json":
        payload = {"time": steps, "cells": rows}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        header = "k,probability,words" if args.symbolic else "k,probability"
        lines = [header]
        for row in rows:
            line = f"{row['k']},{row['probability']!r}"
            if args.symbolic:
                line += "," + "+".join(row["words"])
            lines.append(line)
        text = "\n".join(lines) + "\n"
    _emit(text, args)
    return 0


def _distribution_svg(dist: dict[int, float], title: str) -> str:
    width, height, margin = 800, 420, 45
    ks = sorted(dist)
    peak = max(dist.values()) or 1.0
    plot_w = width - 2 * margin
    plot_h = height - 2 * margin
    bar_w = plot_w / max(len(ks), 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2}" y="20" text-anchor="middle" font-family="monospace" '
        f'font-size="14">{title}</text>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
    ]
    for i, k in enumerate(ks):
        h = dist[k] / peak * plot_h
        x = margin + i * bar_w
        y = height - margin - h
        parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{bar_w * 0.85:.2f}" height="{h:.2f}" '
            'fill="steelblue"/>'
        )
        if len(ks) <= 40 or i % (len(ks) // 20 + 1) == 0:
            parts.append(
                f'<text x="{x + bar_w * 0.42:.2f}" y="{height - margin + 16}" '
                f'text-anchor="middle" font-family="monospace" font-size="9">{k}</text>'
            )
    parts.append(
        f'<text x="{margin - 8}" y="{margin}" text-anchor="end" font-family="monospace" '
        f'font-size="10">{peak:.4f}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_walk_plot(args) -> int:
    coin = _resolve_coin(args)
    psi = _parse_psi(args.psi)
    dist = walk.distribution(walk.run_numeric(coin, args.steps), psi)
    title = f"walk distribution, {args.steps} steps"
    _emit(_distribution_svg(dist, title), args)
    return 0


def _word_rows(words) -> list[dict]:
    return [
        {"word": w, "index": language.word_index(w), "contraction": language.contract(w)}
        for w in sorted(words)
    ]


def _emit_word_rows(rows: list[dict], args) -> None:
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        lines = ["word,index,contraction"]
        lines += [f"{r['word']},{r['index']},{r['contraction']}" for r in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args)


def cmd_lang_generate(args) -> int:
    if args.vertex is None:
        words = language.generate(args.t, args.grammar)
    else:
        words = language.words_at_vertex(args.t, args.vertex)
        if args.grammar != "markov":
            words = frozenset(w for w in language.generate(args.t, args.grammar)) & words
    _emit_word_rows(_word_rows(words), args)
    return 0


def cmd_orbits_enumerate(args) -> int:
    pats = orbits.orbits_at_time(args.t)
    if args.vertex is not None:
        pats = frozenset(p for p in pats if orbits.orbit_index(p) == args.vertex)
    rows = []
    for p in sorted(pats):
        root, mult = orbits.primitive_root(p)
        rows.append(
            {
                "pattern": p.letters,
                "index": orbits.orbit_index(p),
                "root": root.letters,
                "multiplicity": mult,
            }
        )
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        lines = ["pattern,index,root,multiplicity"]
        lines += [f"{r['pattern']},{r['index']},{r['root']},{r['multiplicity']}" for r in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args)
    return 0


def cmd_orbits_read(args) -> int:
    pattern = orbits.canonicalize(args.pattern)
    _emit_word_rows(_word_rows(orbits.read(pattern)), args)
    return 0


def cmd_orbits_decompose(args) -> int:
    pattern = orbits.canonicalize(args.pattern)
    dec = orbits.decompose(pattern)
    pieces = [p.letters for p in dec.fundamentals()]
    conserved = sum(
        (Counter(p) for p in pieces), Counter()
    ) == Counter(pattern.letters)
    reglued = dec.reglue() == pattern
    if args.format == "json":
        payload = {
            "pattern": pattern.letters,
            "pieces": pieces,
            "letters_conserved": conserved,
            "reglue_ok": reglued,
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = "\n".join(["piece"] + pieces) + "\n"
    _emit(text, args)
    return 0


def _print_checks(results, quiet: bool) -> int:
    failed = [r for r in results if not r.ok]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        detail = f"  ({r.detail})" if r.detail and not quiet else ""
        print(f"{status}  {r.name}{detail}")
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_orbits_verify(args) -> int:
    return _print_checks(verify.orbit_checks(args.max_t), args.quiet)


def cmd_graph_export(args) -> int:
    if (args.de_bruijn is None) == (args.bernoulli is None):
        raise ValueError("pick exactly one of --de-bruijn or --bernoulli")
    if args.de_bruijn is not None:
        g = graphs.de_bruijn_graph(args.de_bruijn)
        if args.extension:
            g = graphs.extension(g)
        _emit(g.to_dot(), args)
    else:
        _emit(graphs.bernoulli_matrix(args.bernoulli).to_csv(), args)
    return 0


def cmd_coin_check(args) -> int:
    coin = _resolve_coin(args)
    u = coin.unitary
    channel = quantize.verify_channel(quantize.row_split(u))
    relations = quantize.verify_pq_relations(u)
    print(f"unitary: {'ok' if channel.ok else 'FAIL'} (max deviation {channel.max_deviation:.2e})")
    print(f"trace preserving (both sides): {channel.right_identity and channel.left_identity}")
    print(f"row orthogonality: {channel.orthogonal}")
    print(f"entry relations: {'ok' if relations.ok else 'FAIL'} "
          f"(max deviation {relations.max_deviation:.2e})")
    try:
        _, _, lam = quantize.jones_generators(u)
        print(f"jones parameter: {lam.real!r}{lam.imag:+}j")
    except ValueError:
        print("jones parameter: undefined (zero diagonal entry)")
    return 0 if channel.ok and relations.ok else 1


def cmd_verify_all(args) -> int:
    return _print_checks(verify.run_all(args.max_t), args.quiet)


def cmd_verify_axiom(args) -> int:
    def load_table(path):
        if path is None:
            return None
        with open(path, encoding="utf-8") as fh:
            return coalgebra.CoproductTable.from_json(json.load(fh))

    def load_counit(path):
        if path is None:
            return None
        with open(path, encoding="utf-8") as fh:
            return coalgebra.CounitTable.from_json(json.load(fh))

    delta = load_table(args.delta)
    report = coalgebra.verify_axiom(
        args.axiom,
        delta,
        load_table(args.delta_tilde),
        load_counit(args.counit),
        load_counit(args.left_counit),
    )
    if report.ok:
        print(f"PASS  {args.axiom}")
        return 0
    print(f"FAIL  {args.axiom} on {report.witness}: {report.lhs} != {report.rhs}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walkgrammar",
        description="Coin walk on the integers with its path grammar and periodic orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_walk = sub.add_parser("walk", help="run or plot the walk")
    walk_sub = p_walk.add_subparsers(dest="subcommand", required=True)
    p_run = walk_sub.add_parser("run", help="distribution after N steps")
    _coin_arguments(p_run)
    p_run.add_argument("--steps", type=int, required=True)
    p_run.add_argument("--psi", default="1,0,0,0", help="initial spinor re,im,re,im")
    p_run.add_argument("--symbolic", action="store_true", help="carry the word sets along")
    p_run.add_argument("--symbolic-max", type=int, default=walk.SYMBOLIC_MAX_DEFAULT)
    _output_arguments(p_run)
    p_run.set_defaults(func=cmd_walk_run)

    p_plot = walk_sub.add_parser("plot", help="SVG bar chart of the distribution")
    _coin_arguments(p_plot)
    p_plot.add_argument("--steps", type=int, required=True)
    p_plot.add_argument("--psi", default="1,0,0,0")
    _output_arguments(p_plot)
    p_plot.set_defaults(func=cmd_walk_plot)

    p_lang = sub.add_parser("lang", help="the four-letter language")
    lang_sub = p_lang.add_subparsers(dest="subcommand", required=True)
    p_gen = lang_sub.add_parser("generate", help="words at time t")
    p_gen.add_argument("--t", type=int, required=True)
    p_gen.add_argument("--vertex", type=int)
    p_gen.add_argument("--grammar", choices=("markov", "coassoc"), default="markov")
    _output_arguments(p_gen)
    p_gen.set_defaults(func=cmd_lang_generate)

    p_orbits = sub.add_parser("orbits", help="periodic orbits")
    orbits_sub = p_orbits.add_subparsers(dest="subcommand", required=True)
    p_enum = orbits_sub.add_parser("enumerate", help="orbits at time t")
    p_enum.add_argument("--t", type=int, required=True)
    p_enum.add_argument("--vertex", type=int)
    _output_arguments(p_enum)
    p_enum.set_defaults(func=cmd_orbits_enumerate)
    p_read = orbits_sub.add_parser("read", help="cyclic windows of a pattern")
    p_read.add_argument("--pattern", required=True)
    _output_arguments(p_read)
    p_read.set_defaults(func=cmd_orbits_read)
    p_dec = orbits_sub.add_parser("decompose", help="peel into fundamental orbits")
    p_dec.add_argument("--pattern", required=True)
    _output_arguments(p_dec)
    p_dec.set_defaults(func=cmd_orbits_decompose)
    p_over = orbits_sub.add_parser("verify", help="run the orbit invariant suite")
    p_over.add_argument("--max-t", type=int, default=11)
    p_over.add_argument("--quiet", action="store_true")
    p_over.set_defaults(func=cmd_orbits_verify)

    p_graph = sub.add_parser("graph", help="graph and matrix exports")
    graph_sub = p_graph.add_subparsers(dest="subcommand", required=True)
    p_exp = graph_sub.add_parser("export", help="DOT for graphs, CSV for matrices")
    p_exp.add_argument("--de-bruijn", type=int, help="p-vertex complete graph with loops")
    p_exp.add_argument("--extension", action="store_true", help="take the line graph first")
    p_exp.add_argument("--bernoulli", type=int, help="uniform 1/n matrix as exact CSV")
    _output_arguments(p_exp)
    p_exp.set_defaults(func=cmd_graph_export)

    p_coin = sub.add_parser("coin", help="coin diagnostics")
    coin_sub = p_coin.add_subparsers(dest="subcommand", required=True)
    p_check = coin_sub.add_parser("check", help="channel, entry and Jones relations")
    _coin_arguments(p_check)
    p_check.set_defaults(func=cmd_coin_check)

    p_verify = sub.add_parser("verify", help="verification suites")
    verify_sub = p_verify.add_subparsers(dest="subcommand", required=True)
    p_all = verify_sub.add_parser("all", help="every lemma, theorem and invariant check")
    p_all.add_argument("--max-t", type=int, default=8)
    p_all.add_argument("--quiet", action="store_true")
    p_all.set_defaults(func=cmd_verify_all)
    p_axiom = verify_sub.add_parser("axiom", help="check one axiom on JSON tables")
    p_axiom.add_argument("--axiom", choices=coalgebra.AXIOMS, required=True)
    p_axiom.add_argument("--delta", required=True, help="coproduct table JSON")
    p_axiom.add_argument("--delta-tilde", help="second coproduct table JSON")
    p_axiom.add_argument("--counit", help="right counit JSON")
    p_axiom.add_argument("--left-counit", help="left counit JSON")
    p_axiom.set_defaults(func=cmd_verify_axiom)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
