"""CLI interface for polyadic-semigroups."""

from collections.abc import Callable
from enum import Enum
from pathlib import Path
from typing import Annotated

import typer
from dotenv import load_dotenv
from rich.console import Console
from rich.panel import Panel

# Load .env file early so ALG_* settings reach get_config()
load_dotenv()

from polyadic_semigroups import __version__  # noqa: E402
from polyadic_semigroups.config import AlgebraConfig, get_config  # noqa: E402
from polyadic_semigroups.core import (  # noqa: E402
    AlgDocument,
    FiniteNaryOp,
    MonoidDesc,
    check_associativity,
    dump_alg,
    load_alg,
    nary_extension,
    neutral_elements,
    reduce_via_neutral,
    save_alg,
)
from polyadic_semigroups.core.errors import (  # noqa: E402
    AlgebraError,
    AlgFormatError,
    RouteDisagreementError,
    UndecidedError,
)
from polyadic_semigroups.fixtures import FixtureLibrary  # noqa: E402
from polyadic_semigroups.hooks import SearchHooks, StageHooks  # noqa: E402
from polyadic_semigroups.report import (  # noqa: E402
    CommandReport,
    search_data,
    search_verdict,
)

app = typer.Typer(
    name="alg",
    help="Finite n-ary semigroups: reductions, adjoined neutral elements and W-monoids.",
    no_args_is_help=True,
)
wmonoid_app = typer.Typer(help="Recognise, build and decompose W-monoids.", no_args_is_help=True)
fixtures_app = typer.Typer(help="Browse the shipped example algebras.", no_args_is_help=True)
app.add_typer(wmonoid_app, name="wmonoid")
app.add_typer(fixtures_app, name="fixtures")

console = Console()

FileArg = Annotated[
    str,
    typer.Argument(help="An .alg file, or the name of a shipped fixture (e.g. aff3.alg)."),
]
TimeoutOpt = Annotated[
    float | None,
    typer.Option("--timeout", "-t", help="Search deadline in seconds (default: config)."),
]
JobsOpt = Annotated[
    int | None,
    typer.Option("--jobs", "-j", help="Worker processes (default: config)."),
]
LimitOpt = Annotated[
    int | None,
    typer.Option("--limit", "-l", min=1, help="Stop after this many solutions."),
]
VerboseOpt = Annotated[
    bool,
    typer.Option("--verbose/--quiet", "-V/-q", help="Show search progress on stderr."),
]
OutOpt = Annotated[
    Path | None,
    typer.Option("--out", "-o", help="Also write the result to this file."),
]


class EnumerationKind(str, Enum):
    semigroup = "semigroup"
    monoid = "monoid"
    wmonoid = "wmonoid"
    survey = "survey"


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"polyadic-semigroups v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Annotated[
        bool | None,
        typer.Option(
            "--version",
            "-v",
            help="Show version and exit.",
            callback=version_callback,
            is_eager=True,
        ),
    ] = None,
) -> None:
    """alg - decision procedures for finite polyadic semigroups."""
    pass


def _load(file: str) -> AlgDocument:
    """Load FILE from disk, falling back to a shipped fixture of the same name."""
    path = Path(file)
    if path.exists() or path.parent != Path("."):
        return load_alg(path)
    library = FixtureLibrary()
    if path.stem in library.names():
        return library.get(path.stem)
    raise AlgFormatError(f"no such file or fixture: {file}")


def _timeout(timeout: float | None) -> float:
    return timeout if timeout is not None else get_config().timeout_secs


def _emit(report: CommandReport) -> None:
    """Print the report, then the JSON block, then exit with its code."""
    style = {"pass": "green", "fail": "red", "undecided": "yellow", "error": "red"}
    console.print(f"[bold {style[report.verdict]}]{report.verdict.upper()}[/] {report.command}")
    for line in report.detail:
        console.print(line, markup=False, highlight=False)
    typer.echo("---")
    typer.echo(report.json_block())
    raise typer.Exit(report.exit_code)


def _run(command: str, build: Callable[[], CommandReport]) -> None:
    """Build a report, mapping library exceptions onto the exit-code contract."""
    try:
        report = build()
    except UndecidedError as e:
        report = CommandReport(command=command, verdict="undecided", detail=[str(e)])
    except RouteDisagreementError as e:
        report = CommandReport(command=command, verdict="fail", detail=[str(e)])
    except (AlgebraError, ValueError, FileNotFoundError) as e:
        report = CommandReport(
            command=command,
            verdict="error",
            detail=[f"Error: {e}"],
            data={"error": type(e).__name__, "message": str(e)},
        )
    _emit(report)


def _result_report(
    command: str, obj: FiniteNaryOp | MonoidDesc, out: Path | None, comment: str
) -> CommandReport:
    """A pass report carrying a constructed table, optionally saved to `out`."""
    text = dump_alg(obj, comment=comment)
    if out is not None:
        save_alg(out, obj, comment=comment)
    op = obj.op if isinstance(obj, MonoidDesc) else obj
    data: dict[str, object] = {"order": op.order, "arity": op.arity, "table": op.tolist()}
    if isinstance(obj, MonoidDesc):
        data["neutral"] = obj.neutral
    if out is not None:
        data["out"] = str(out)
    return CommandReport(command=command, verdict="pass", detail=text.splitlines(), data=data)


@app.command("check-assoc")
def check_assoc(file: FileArg) -> None:
    """Check every n-ary associativity identity."""

    def build() -> CommandReport:
        op = _load(file).op
        counterexample = check_associativity(op)
        if counterexample is None:
            return CommandReport(
                command="check-assoc",
                verdict="pass",
                detail=[f"{op.arity}-ary operation on {op.order} elements is associative"],
                data={"associative": True, "order": op.order, "arity": op.arity},
            )
        c = counterexample
        return CommandReport(
            command="check-assoc",
            verdict="fail",
            detail=[
                f"identity {c.position} fails at {c.arguments}: {c.lhs} != {c.rhs}",
            ],
            data={
                "associative": False,
                "position": c.position,
                "arguments": list(c.arguments),
                "lhs": c.lhs,
                "rhs": c.rhs,
            },
        )

    _run("check-assoc", build)


@app.command()
def neutrals(file: FileArg) -> None:
    """List the neutral elements."""

    def build() -> CommandReport:
        found = sorted(neutral_elements(_load(file).op))
        return CommandReport(
            command="neutrals",
            verdict="pass",
            detail=[f"neutral elements: {found}" if found else "no neutral element"],
            data={"neutrals": found},
        )

    _run("neutrals", build)


@app.command()
def extend(
    file: FileArg,
    arity: Annotated[int, typer.Option("--arity", "-n", help="Arity of the extension.")],
    out: OutOpt = None,
) -> None:
    """Build the n-ary extension of a binary operation."""

    def build() -> CommandReport:
        doc = _load(file)
        op = nary_extension(doc.binary(), arity)
        return _result_report("extend", op, out, f"{arity}-ary extension of {file}")

    _run("extend", build)


@app.command()
def reduce(
    file: FileArg,
    neutral: Annotated[int, typer.Option("--neutral", "-e", help="A neutral element.")],
    out: OutOpt = None,
) -> None:
    """The reduction of an n-ary semigroup that has a given neutral element."""

    def build() -> CommandReport:
        monoid = reduce_via_neutral(_load(file).op, neutral)
        return _result_report("reduce", monoid, out, f"reduction of {file} at {neutral}")

    _run("reduce", build)


@app.command()
def reductions(
    file: FileArg,
    limit: LimitOpt = None,
    timeout: TimeoutOpt = None,
    jobs: JobsOpt = None,
    verbose: VerboseOpt = False,
) -> None:
    """Find every binary operation whose n-ary extension is the given one."""
    from polyadic_semigroups.search import find_reductions

    def build() -> CommandReport:
        outcome = find_reductions(
            _load(file).op,
            limit,
            timeout_secs=_timeout(timeout),
            jobs=jobs,
            hooks=SearchHooks(verbose=verbose),
        )
        status = "exhausted" if outcome.exhausted else "timed out"
        return CommandReport(
            command="reductions",
            verdict=search_verdict(outcome),
            detail=[f"{len(outcome.solutions)} reductions ({status})"]
            + [" ".join(map(str, t)) for t in outcome.tables],
            data=search_data(outcome),
        )

    _run("reductions", build)


@app.command()
def adjoin(
    file: FileArg,
    limit: LimitOpt = None,
    timeout: TimeoutOpt = None,
    jobs: JobsOpt = None,
    verbose: VerboseOpt = False,
) -> None:
    """Find every monoid on X + {e} restricting to the given operation."""
    from polyadic_semigroups.search import find_adjunctions

    def build() -> CommandReport:
        outcome = find_adjunctions(
            _load(file).op,
            limit,
            timeout_secs=_timeout(timeout),
            jobs=jobs,
            hooks=SearchHooks(verbose=verbose),
        )
        status = "exhausted" if outcome.exhausted else "timed out"
        return CommandReport(
            command="adjoin",
            verdict=search_verdict(outcome),
            detail=[f"{len(outcome.solutions)} adjunctions ({status})"]
            + [" ".join(map(str, t)) for t in outcome.tables],
            data=search_data(outcome),
        )

    _run("adjoin", build)


@app.command("in-check")
def in_check(
    file: FileArg,
    timeout: TimeoutOpt = None,
    jobs: JobsOpt = None,
    verbose: VerboseOpt = False,
) -> None:
    """Decide whether an n-ary semigroup is an IN-semigroup."""
    from polyadic_semigroups.search import is_in_semigroup

    def build() -> CommandReport:
        result = is_in_semigroup(
            _load(file).op,
            timeout_secs=_timeout(timeout),
            jobs=jobs,
            hooks=SearchHooks(verbose=verbose),
        )
        data: dict[str, object] = {"status": result.status, "reason": result.reason}
        reason = f" ({result.reason})" if result.reason else ""
        detail = [f"IN-semigroup: {result.status}{reason}"]
        if result.witness is not None:
            data["witness"] = result.witness.op.tolist()
            data["witness_neutral"] = result.witness.neutral
            detail.append("adjunction: " + " ".join(map(str, result.witness.op.tolist())))
        if result.status == "yes":
            return CommandReport(command="in-check", verdict="pass", detail=detail, data=data)
        if result.status == "no":
            return CommandReport(command="in-check", verdict="fail", detail=detail, data=data)
        return CommandReport(command="in-check", verdict="undecided", detail=detail, data=data)

    _run("in-check", build)


@wmonoid_app.command("check")
def wmonoid_check(file: FileArg) -> None:
    """Check W1, W2 and W3 and report the special element a."""
    from polyadic_semigroups.wmonoid import WMonoidWitness, check_w_monoid

    def build() -> CommandReport:
        result = check_w_monoid(_load(file).monoid())
        if isinstance(result, WMonoidWitness):
            return CommandReport(
                command="wmonoid check",
                verdict="pass",
                detail=[f"W-monoid with a = {result.a}, e = {result.e}"],
                data={"a": result.a, "e": result.e},
            )
        return CommandReport(
            command="wmonoid check",
            verdict="fail",
            detail=[f"{result.condition} fails: {result.reason}"],
            data={
                "condition": result.condition,
                "reason": result.reason,
                "witness": list(result.witness) if result.witness else None,
            },
        )

    _run("wmonoid check", build)


@wmonoid_app.command("from-involution")
def wmonoid_from_involution(
    file: FileArg,
    involution: Annotated[
        int, typer.Option("--involution", "-a", help="An element A with A o A = neutral.")
    ],
    out: OutOpt = None,
) -> None:
    """Adjoin a and e to a monoid S using an involution of S."""
    from polyadic_semigroups.wmonoid import from_involution

    def build() -> CommandReport:
        monoid = from_involution(_load(file).monoid(), involution)
        return _result_report(
            "wmonoid from-involution", monoid, out, f"{file} with involution {involution}"
        )

    _run("wmonoid from-involution", build)


@wmonoid_app.command("from-bitranslation")
def wmonoid_from_bitranslation(file: FileArg, out: OutOpt = None) -> None:
    """Build the W-monoid of a semigroup file carrying a bt= stanza."""
    from polyadic_semigroups.wmonoid import Bitranslation, from_bitranslation

    def build() -> CommandReport:
        doc = _load(file)
        if doc.left is None or doc.right is None:
            raise AlgFormatError(f"{file} has no bt= stanza")
        monoid = from_bitranslation(Bitranslation(doc.binary(), doc.left, doc.right))
        return _result_report(
            "wmonoid from-bitranslation", monoid, out, f"W-monoid built from {file}"
        )

    _run("wmonoid from-bitranslation", build)


@wmonoid_app.command("decompose")
def wmonoid_decompose(file: FileArg, out: OutOpt = None) -> None:
    """Recover the semigroup S and bitranslation (L, R) of a W-monoid."""
    from polyadic_semigroups.wmonoid import WMonoidWitness, check_w_monoid, decompose

    def build() -> CommandReport:
        result = check_w_monoid(_load(file).monoid())
        if not isinstance(result, WMonoidWitness):
            return CommandReport(
                command="wmonoid decompose",
                verdict="fail",
                detail=[f"not a W-monoid: {result.condition} fails: {result.reason}"],
                data={"condition": result.condition},
            )
        bt = decompose(result)
        comment = f"S and (L, R) of {file}"
        text = dump_alg(bt.carrier, comment=comment, left=bt.left, right=bt.right)
        if out is not None:
            save_alg(out, bt.carrier, comment=comment, left=bt.left, right=bt.right)
        return CommandReport(
            command="wmonoid decompose",
            verdict="pass",
            detail=text.splitlines(),
            data={
                "a": result.a,
                "e": result.e,
                "carrier": bt.carrier.tolist(),
                "left": list(bt.left),
                "right": list(bt.right),
            },
        )

    _run("wmonoid decompose", build)


@app.command("in-build")
def in_build(
    file: FileArg,
    arity: Annotated[int, typer.Option("--arity", "-n", help="An odd arity n >= 3.")],
    out: OutOpt = None,
) -> None:
    """Build the n-ary IN-semigroup M - {e} of a W-monoid."""
    from polyadic_semigroups.wmonoid import (
        WMonoidWitness,
        check_w_monoid,
        in_semigroup_from_w_monoid,
    )

    def build() -> CommandReport:
        result = check_w_monoid(_load(file).monoid())
        if not isinstance(result, WMonoidWitness):
            return CommandReport(
                command="in-build",
                verdict="fail",
                detail=[f"not a W-monoid: {result.condition} fails: {result.reason}"],
                data={"condition": result.condition},
            )
        op = in_semigroup_from_w_monoid(result, arity)
        return _result_report("in-build", op, out, f"{arity}-ary IN-semigroup from {file}")

    _run("in-build", build)


def _catalog_path(out: Path) -> Path:
    """Bare file names go to the configured catalog directory."""
    if out.parent == Path("."):
        return get_config().resolved_catalog_dir() / out
    return out


@app.command("enumerate")
def enumerate_command(
    kind: Annotated[EnumerationKind, typer.Option("--kind", "-k", help="What to enumerate.")],
    order: Annotated[int, typer.Option("--order", help="Carrier size.")],
    arity: Annotated[int, typer.Option("--arity", "-n", help="Arity for --kind survey.")] = 3,
    out: Annotated[
        Path | None,
        typer.Option("--out", "-o", help="Write a JSON-lines catalog here."),
    ] = None,
    jobs: JobsOpt = None,
) -> None:
    """Enumerate small algebras up to isomorphism, or survey n-ary tables."""
    from polyadic_semigroups import enumerate as en

    workers = jobs if jobs is not None else get_config().jobs

    def build() -> CommandReport:
        records: list[en.CatalogRecord]
        data: dict[str, object] = {"kind": kind.value, "order": order}
        consistent = True
        if kind is EnumerationKind.semigroup:
            records = [en.semigroup_record(b) for b in en.enumerate_semigroups(order, jobs=workers)]
        elif kind is EnumerationKind.monoid:
            records = [en.monoid_record(m) for m in en.enumerate_monoids(order, jobs=workers)]
        elif kind is EnumerationKind.wmonoid:
            records = [en.w_monoid_record(w) for w in en.enumerate_w_monoids(order, jobs=workers)]
        else:
            report = en.survey_nary(order, arity)
            if report.undecided_classes:
                raise UndecidedError(f"{report.undecided_classes} classes left undecided")
            consistent = report.consistent
            records = [
                en.nary_record(FiniteNaryOp(order, arity, t), kind="in_semigroup")
                for t in report.exemplars
            ]
            data["survey"] = report.model_dump()
        data["count"] = len(records)
        detail = [f"{len(records)} {kind.value} record(s) of order {order}"]
        if out is not None:
            path = _catalog_path(out)
            en.emit_catalog(records, path)
            data["out"] = str(path)
            detail.append(f"catalog written to {path}")
        else:
            data["tables"] = [r.table for r in records]
        return CommandReport(
            command="enumerate",
            verdict="pass" if consistent else "fail",
            detail=detail,
            data=data,
        )

    _run("enumerate", build)


@app.command("minimal-in")
def minimal_in(
    arity: Annotated[int, typer.Option("--arity", "-n", help="An odd arity n >= 3.")] = 3,
) -> None:
    """Compute the least order of an n-ary IN-semigroup."""
    from polyadic_semigroups.enumerate import minimal_in_semigroup

    def build() -> CommandReport:
        order, record = minimal_in_semigroup(arity)
        return CommandReport(
            command="minimal-in",
            verdict="pass",
            detail=[f"least order of a {arity}-ary IN-semigroup: {order}"],
            data={"order": order, "record": record.model_dump()},
        )

    _run("minimal-in", build)


@app.command("verify-paper")
def verify_paper(
    fast: Annotated[
        bool, typer.Option("--fast", help="Oracles at order <= 2, no order-6 enumeration.")
    ] = False,
    stage: Annotated[
        list[str] | None,
        typer.Option("--stage", "-s", help="Run only these stages (repeatable)."),
    ] = None,
    timeout: TimeoutOpt = None,
    jobs: JobsOpt = None,
    verbose: VerboseOpt = False,
) -> None:
    """Re-derive every claim that is checkable at desk scale."""
    from polyadic_semigroups.runner import STAGES, VerificationSettings, run_verification

    def build() -> CommandReport:
        known = [name for name, _ in STAGES]
        unknown = [s for s in stage or [] if s not in known]
        if unknown:
            raise ValueError(f"unknown stage(s) {unknown}; choose from {known}")
        settings = VerificationSettings(
            fast=fast,
            timeout_secs=_timeout(timeout),
            jobs=jobs,
            search_hooks=SearchHooks(verbose=verbose),
        )
        return run_verification(settings, only=stage, hooks=StageHooks(verbose=verbose))

    _run("verify-paper", build)


@app.command()
def config(
    show: Annotated[
        bool,
        typer.Option("--show", help="Show current configuration."),
    ] = False,
    set_timeout: Annotated[
        float | None,
        typer.Option("--set-timeout", help="Set the default search timeout in seconds."),
    ] = None,
    set_jobs: Annotated[
        int | None,
        typer.Option("--set-jobs", help="Set the default number of worker processes."),
    ] = None,
) -> None:
    """Manage alg configuration."""
    from polyadic_semigroups.config import CONFIG_FILE

    cfg = AlgebraConfig.load()

    if set_timeout is not None:
        if set_timeout <= 0:
            console.print("[red]Timeout must be positive.[/red]")
            raise typer.Exit(2)
        cfg.timeout_secs = set_timeout
        cfg.save()
        console.print(f"[green]Timeout set to: {set_timeout}s[/green]")
        return

    if set_jobs is not None:
        if set_jobs < 1:
            console.print("[red]Jobs must be at least 1.[/red]")
            raise typer.Exit(2)
        cfg.jobs = set_jobs
        cfg.save()
        console.print(f"[green]Jobs set to: {set_jobs}[/green]")
        return

    if show or (set_timeout is None and set_jobs is None):
        config_status = (
            f"[green]{CONFIG_FILE}[/green]" if CONFIG_FILE.exists() else "[dim]Not created[/dim]"
        )
        console.print(
            Panel(
                f"[bold]Timeout:[/bold] {cfg.timeout_secs}s\n"
                f"[bold]Jobs:[/bold] {cfg.jobs}\n"
                f"[bold]First-fail branching:[/bold] {cfg.first_fail}\n"
                f"[bold]Cell cap:[/bold] {cfg.cell_cap}\n"
                f"[bold]Identity cap:[/bold] {cfg.identity_cap}\n"
                f"[bold]Oracle max order:[/bold] {cfg.oracle_max_order}\n"
                f"[bold]Semigroup / monoid / W-monoid max order:[/bold] "
                f"{cfg.semigroup_max_order} / {cfg.monoid_max_order} / {cfg.w_monoid_max_order}\n"
                f"[bold]Catalog dir:[/bold] {cfg.resolved_catalog_dir()}\n"
                f"[bold]Config file:[/bold] {config_status}",
                title="Configuration",
                border_style="cyan",
            )
        )


@fixtures_app.command("list")
def fixtures_list() -> None:
    """List the shipped fixtures."""
    library = FixtureLibrary()
    for name in library.names():
        doc = library.get(name)
        extra = " +bt" if doc.has_bitranslation else ""
        console.print(
            f"  [cyan]{name}[/cyan]  [dim]{doc.kind}, order {doc.op.order}, "
            f"arity {doc.op.arity}{extra}[/dim]"
        )


@fixtures_app.command("show")
def fixtures_show(
    name: Annotated[str, typer.Argument(help="Fixture name, e.g. aff3.")],
) -> None:
    """Print the .alg text of a fixture."""
    try:
        text = FixtureLibrary().text(name.removesuffix(".alg"))
    except (ValueError, FileNotFoundError) as e:
        console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(2) from e
    typer.echo(text, nl=False)


if __name__ == "__main__":
    app()
