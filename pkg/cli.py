"""Command-line interface for the shiftforge engine."""

import functools
import sys
from pathlib import Path
from typing import List, Optional

import click
import structlog
from pydantic import ValidationError

from config import APPLY_ORDERS, get_settings
from groups.errors import InvariantViolation, ShiftforgeError
from schreier.dot import domain_colors, to_dot
from schreier.exploration import ball
from surfaces.schreier_surface import classify as classify_surface

from actions.multipush import PushSystem
from actions.support import support_overlay, support_region
from constructions.certificates import nonconjugacy_certificate
from constructions.handles import DiagonalHandle, MultipushHandle, PushHandle, SubgroupHandle
from models.builder import SpecBuilder
from models.document import SpecDocument
from utils import setup_logging
from workers import EvalWorker, ProbeWorker, QueryWorker, certificate_line

logger = structlog.get_logger(__name__)

EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

SPEC_PATH = click.Path(exists=True, dir_okay=False, path_type=Path)


def handle_errors(func):
    """Map engine errors to exit codes: 2 for bad input, 3 for a broken internal invariant."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InvariantViolation as e:
            click.echo(f"Error: internal invariant violated: {e}", err=True)
            sys.exit(EXIT_INTERNAL)
        except (ShiftforgeError, ValidationError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_INPUT)

    return wrapper


def _builder(obj: dict, spec: Path) -> SpecBuilder:
    return SpecBuilder.load(spec, window=obj["window"])


def _push_system(handle: SubgroupHandle) -> PushSystem:
    if isinstance(handle, (MultipushHandle, PushHandle)):
        return handle.system
    if isinstance(handle, DiagonalHandle):
        return handle.system.multipush
    raise ShiftforgeError(f"system {handle.name!r} ({handle.kind}) has no push domains to draw")


def _read_words(words: List[str], word_file: Optional[Path]) -> List[str]:
    collected = list(words)
    if word_file is not None:
        for line in word_file.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                collected.append(line)
    if not collected:
        raise ShiftforgeError("no words given")
    return collected


@click.group()
@click.option('--debug/--no-debug', default=False, help='Enable debug logging')
@click.option('--window', type=click.IntRange(min=1), default=None,
              help='Window radius for windowed checks (default: SHIFTFORGE_WINDOW_RADIUS or 16)')
@click.option('--apply-order', type=click.Choice(APPLY_ORDERS), default=APPLY_ORDERS[0],
              show_default=True, help='Word composition order')
@click.pass_context
def main(ctx: click.Context, debug: bool, window: Optional[int], apply_order: str):
    """Word problems, Schreier surfaces and embedding checks for big mapping class groups."""
    setup_logging("DEBUG" if debug else None)
    settings = get_settings()
    ctx.obj = {"window": window or settings.window_radius, "apply_order": apply_order}


@main.command("eval")
@click.argument('spec', type=SPEC_PATH)
@click.argument('system')
@click.argument('words', nargs=-1)
@click.option('--file', '-f', 'word_file', type=SPEC_PATH, help='File with one word per line')
@click.pass_obj
@handle_errors
def eval_words(obj, spec, system, words, word_file):
    """Evaluate WORDS in SYSTEM: one verdict line per word."""
    builder = _builder(obj, spec)
    handle = builder.system(system)
    verdicts = EvalWorker(builder).evaluate(handle, _read_words(words, word_file))
    for verdict in verdicts:
        click.echo(verdict.line())


@main.command()
@click.argument('spec', type=SPEC_PATH)
@click.argument('system')
@click.argument('claimed')
@click.argument('radius', type=int)
@click.option('--output', '-o', type=click.Path(dir_okay=False, path_type=Path), help='Report file')
@click.option('--report-dir', type=click.Path(file_okay=False, path_type=Path),
              help='Directory for the report (default: SHIFTFORGE_REPORT_DIR)')
@click.option('--table', is_flag=True, help='Also print the divergences as a table')
@click.pass_obj
@handle_errors
def probe(obj, spec, system, claimed, radius, output, report_dir, table):
    """Compare SYSTEM with the CLAIMED group on every word of length <= RADIUS."""
    worker = ProbeWorker(_builder(obj, spec), report_dir=report_dir)
    result = worker.process_task({"system": system, "claimed": claimed, "radius": radius, "output": output})
    report = result["report"]
    click.echo(f"report: {result['path']}")
    click.echo(report.summary())
    if not report.all_pass_gap_condition():
        raise InvariantViolation("a divergence fails the gap condition")
    if table:
        click.echo(report.to_table(), nl=False)


@main.command()
@click.argument('spec', type=SPEC_PATH)
@click.argument('target', type=click.Choice(['graph', 'domains', 'support']))
@click.argument('name')
@click.option('--radius', '-r', type=click.IntRange(min=0), default=2, show_default=True, help='Ball radius')
@click.option('--word', '-w', help='Word whose support is drawn (target support)')
@click.option('--output', '-o', type=click.Path(dir_okay=False, path_type=Path), help='DOT file (default: stdout)')
@click.pass_obj
@handle_errors
def render(obj, spec, target, name, radius, word, output):
    """Write a DOT view of a graph ball, the push domains of a system, or the support of a word."""
    builder = _builder(obj, spec)
    if target == "graph":
        text = to_dot(ball(builder.graph(name), r=radius), name=name)
    else:
        handle = builder.system(name)
        pushes = _push_system(handle)
        view = ball(pushes.graph, r=radius)
        highlight = domain_colors(pushes.letters)
        if target == "domains":
            text = to_dot(view, highlight, name=name)
        else:
            if not word:
                raise ShiftforgeError("render support needs --word")
            w = handle.parse(word)
            if isinstance(handle, DiagonalHandle):
                w = handle.normalize(w).x_word
            marks, edges = support_overlay(support_region(pushes, w, obj["window"]))
            text = to_dot(view, highlight, marks, edges, name=name, skip_loops=True)
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        click.echo(f"wrote {output}")


@main.command()
@click.argument('spec', type=SPEC_PATH)
@click.argument('surface')
@click.pass_obj
@handle_errors
def classify(obj, spec, surface):
    """Print the classification quadruple of SURFACE."""
    click.echo(str(classify_surface(_builder(obj, spec).surface(surface))))


@main.command()
@click.argument('spec', type=SPEC_PATH)
@click.argument('surface')
@click.argument('m', type=click.IntRange(min=0))
@click.argument('n', type=click.IntRange(min=0))
@click.pass_obj
@handle_errors
def certify(obj, spec, surface, m, n):
    """Certify that omitting M and N copies of Π gives non-conjugate embeddings."""
    result = nonconjugacy_certificate(_builder(obj, spec).surface(surface), m, n)
    click.echo(certificate_line(result))


@main.command()
@click.argument('spec', type=SPEC_PATH)
@click.pass_obj
@handle_errors
def check(obj, spec):
    """Validate SPEC, resolve every name and run its queries."""
    builder = _builder(obj, spec).build_all()
    outcomes = QueryWorker(builder).check()
    failed = 0
    for outcome in outcomes:
        status = {None: "-", True: "PASS", False: "FAIL"}[outcome.passed]
        failed += outcome.passed is False
        click.echo(f"{status}\t{outcome.title}")
        for line in outcome.lines:
            click.echo(f"\t{line}")
    click.echo(f"queries: {len(outcomes)} failed: {failed}")
    logger.info("check_finished", spec=str(spec), queries=len(outcomes), failed=failed)
    if failed:
        sys.exit(EXIT_CHECK_FAILED)


@main.command()
@click.argument('spec', type=SPEC_PATH)
@handle_errors
def dump(spec):
    """Print SPEC in canonical form."""
    click.echo(SpecDocument.load(spec).to_json(), nl=False)


if __name__ == "__main__":
    main()
