"""Command line front door.

Exit codes: 0 success, 1 domain violations (failed checks, incomplete
judgments), 2 unusable input (unreadable or unparseable files, bad
flags).
"""

from __future__ import annotations

import json
import sys

import click

from .compose import rank_mode_demo
from .errors import ParseError
from .model_io import HIERARCHY, load_model_file, parse_model
from .priority import DISTRIBUTIVE, IDEAL, random_index
from .session import Session, compute_snapshot

MODES = click.Choice([DISTRIBUTIVE, IDEAL])


def _load(path):
    try:
        return load_model_file(path)
    except ParseError as e:
        click.echo(f"cannot load {path}:", err=True)
        for problem in e.problems:
            click.echo(f"  - {problem}", err=True)
        sys.exit(2)


def _session(model) -> Session:
    session = Session("local", model)
    try:
        session.seed(model.judgments)
    except ParseError as e:
        click.echo("bad seeded judgments:", err=True)
        for problem in e.problems:
            click.echo(f"  - {problem}", err=True)
        sys.exit(2)
    return session


@click.group()
@click.version_option(package_name="eigenrank")
def main():
    """Pairwise-comparison decision engine."""


@main.command()
@click.argument("model_file", type=click.Path())
@click.option("--rho", type=float, default=None, help="Homogeneity bound override.")
def check(model_file, rho):
    """Validate a model: structure, homogeneity, consistency.

    Exits 0 when nothing is violated, 1 on violations, 2 if the file does
    not parse.
    """
    model = _load(model_file)
    session = _session(model)
    snap = compute_snapshot(session, rho=rho)
    violations = 0

    click.echo(f"structure: {model.kind}, mode {snap['mode']}, rho {snap['rho']:g}")
    issues = snap["validation"]["issues"]
    if issues:
        click.echo("validation:")
        for issue in issues:
            tag = issue["severity"]
            click.echo(
                f"  [{tag}] {issue['code']} {issue['subjects']}: {issue['message']}"
            )
            if tag == "error":
                violations += 1
    else:
        click.echo("validation: ok")

    for cid, ctx in snap["contexts"].items():
        lines = []
        for pair in ctx["homogeneity_violations"]:
            lines.append(f"  judgment {pair} falls outside [1/{snap['rho']:g}, {snap['rho']:g}]")
            violations += 1
        if not ctx["complete"]:
            lines.append(
                f"  incomplete: {ctx['provided']}/{ctx['required']} judgments, "
                f"missing {ctx['missing_pairs']}"
            )
        elif ctx["consistency"] is not None:
            c = ctx["consistency"]
            lines.append(
                f"  lambda_max {c['lambda_max']:.6g}, CI {c['ci']:.6g}, CR {c['cr']:.6g}"
            )
            if c["cr_exceeds_threshold"]:
                violations += 1
                s = c["suggestion"]
                lines.append(
                    f"  CR above threshold {snap['cr_threshold']:g}; worst judgment "
                    f"{s['pair']} = {s['current']:.6g}, consistent value {s['consistent_value']:.6g}"
                )
        if lines:
            click.echo(f"context {cid}:")
            for line in lines:
                click.echo(line)

    if violations:
        click.echo(f"{violations} violation(s)")
        sys.exit(1)
    click.echo("all checks passed")


@main.command()
@click.argument("model_file", type=click.Path())
@click.option("--mode", type=MODES, default=None, help="Rank mode override.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "machine-readable"]),
    default="table",
    help="table prints 6 significant digits; machine-readable prints full-precision JSON.",
)
def rank(model_file, mode, fmt):
    """Solve a model and print its priorities.

    Exits 1 when judgments are incomplete, listing every missing pair.
    """
    model = _load(model_file)
    session = _session(model)
    snap = compute_snapshot(session, mode=mode)

    incomplete = {
        cid: ctx["missing_pairs"]
        for cid, ctx in snap["contexts"].items()
        if not ctx["complete"]
    }
    if incomplete:
        click.echo("incomplete judgments:", err=True)
        for cid, missing in incomplete.items():
            click.echo(f"  context {cid}: missing {missing}", err=True)
        sys.exit(1)
    bad = [i for i in snap["validation"]["issues"] if i["severity"] == "error"]
    if bad or snap["errors"]:
        for issue in bad:
            click.echo(f"invalid structure: {issue['message']}", err=True)
        for note in snap["errors"]:
            click.echo(note, err=True)
        sys.exit(1)

    if snap["kind"] == HIERARCHY:
        result = dict(snap["global"])
        result.update(kind=snap["kind"], mode=snap["mode"])
        if fmt == "machine-readable":
            click.echo(json.dumps(result))
            return
        for i, level in enumerate(result["per_level"], start=1):
            click.echo(f"level {i}:")
            for lab, w in zip(level["labels"], level["weights"]):
                click.echo(f"  {lab}  {w:.6g}")
        click.echo("final:")
        for lab in result["ranking"]:
            click.echo(f"  {lab}  {result['final'][lab]:.6g}")
    else:
        result = dict(snap["limit"])
        result.update(kind=snap["kind"], mode=snap["mode"])
        if fmt == "machine-readable":
            click.echo(json.dumps(result))
            return
        click.echo(f"limit method: {result['method']} ({result['steps']} steps)")
        if not result["columns_agree"]:
            click.echo("note: limit columns disagree (reducible network)")
        click.echo("priorities:")
        for lab in result["ranking"]:
            click.echo(f"  {lab}  {result['priorities'][lab]:.6g}")


@main.command()
@click.option("--n", type=click.IntRange(min=1), required=True, help="Matrix order.")
@click.option("--samples", type=click.IntRange(min=1), default=5000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def ri(n, samples, seed):
    """Random consistency index for order N (seeded, reproducible)."""
    click.echo(f"{random_index(n, samples=samples, seed=seed)!r}")


@main.command()
@click.option("--host", default=None, help="Listen address.")
@click.option("--port", type=int, default=None, help="Listen port.")
@click.option("--data-dir", default=None, help="Session log directory.")
@click.option("--ui-dir", default=None, help="Static UI directory to mount at /ui.")
def serve(host, port, data_dir, ui_dir):
    """Start the HTTP session service."""
    from .service import run

    run(host=host, port=port, data_dir=data_dir, ui_dir=ui_dir)


@main.command("demo-rank-reversal")
@click.option(
    "--fixture",
    type=click.Path(),
    default=None,
    help="Alternate demo fixture file (defaults to the bundled one).",
)
def demo_rank_reversal(fixture):
    """Show a judgment set whose ranking flips when a copy is added.

    The bundled fixture was found by exhaustive search over the judgment
    palette (see eigenrank.compose.find_rank_reversal).
    """
    if fixture is None:
        from importlib.resources import files

        text = files("eigenrank").joinpath("data/rank_reversal_demo.json").read_text()
    else:
        with open(fixture, "r", encoding="utf-8") as f:
            text = f.read()
    doc = json.loads(text)
    model = parse_model(doc["model"])
    session = _session(model)
    matrices = {
        ctx.parent: session.context_matrix(ctx) for ctx in session.contexts
    }
    add = doc["add"]
    demo = rank_mode_demo(
        model.structure, matrices, add["id"], add["parents"], add["judgments"]
    )
    click.echo(f"adding alternative {add['id']!r} (copy of the current best)")
    for mode in (DISTRIBUTIVE, IDEAL):
        before = demo.before[mode].final
        after = demo.after[mode].final
        click.echo(f"{mode}:")
        click.echo("  before: " + ", ".join(f"{l} {before.as_dict()[l]:.6g}" for l in before.ranking()))
        click.echo("  after:  " + ", ".join(f"{l} {after.as_dict()[l]:.6g}" for l in after.ranking()))
        flips = demo.reversed_pairs[mode]
        if flips:
            for x, y in flips:
                click.echo(f"  rank reversal: {x} and {y} traded places")
        else:
            click.echo("  no reversal among the original alternatives")
