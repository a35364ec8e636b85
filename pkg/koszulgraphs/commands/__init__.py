import functools
import json

import click
from flask import Blueprint, current_app

from koszulgraphs.errors import KoszulGraphsError
from koszulgraphs.limits import MIN_DEGREE_BOUND

# cli_group=None puts every command at the top level of the flask CLI
koszul_bp = Blueprint("koszul", __name__, cli_group=None)


class UsageFailure(click.ClickException):
    """Bad input or arguments; exits with status 2 like click's own usage errors."""

    exit_code = 2


def reports_errors(f):
    """Turn library, JSON and file errors into UsageFailure."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except KoszulGraphsError as exc:
            raise UsageFailure(str(exc)) from exc
        except json.JSONDecodeError as exc:
            raise UsageFailure(f"Malformed JSON: {exc}") from exc
        except OSError as exc:
            raise UsageFailure(f"Cannot read input: {exc}") from exc

    return wrapper


def _as_int(value, what: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise UsageFailure(f"{what} must be an integer, got {value!r}.")


def resolve_degree_bound(option, what: str = "Degree bound") -> int:
    """The --degree-bound option, else KOSZUL_DEGREE_BOUND, checked against KOSZUL_MAX_DEGREE."""
    value = option if option is not None else current_app.config["KOSZUL_DEGREE_BOUND"]
    bound = _as_int(value, what)
    top = _as_int(current_app.config["KOSZUL_MAX_DEGREE"], "KOSZUL_MAX_DEGREE")
    if not MIN_DEGREE_BOUND <= bound <= top:
        raise UsageFailure(f"{what} must lie in {MIN_DEGREE_BOUND}..{top}, got {bound}.")
    return bound


def resolve_workers(option) -> int:
    value = option if option is not None else current_app.config["KOSZUL_WORKERS"]
    workers = _as_int(value, "Worker count")
    if workers < 1:
        raise UsageFailure(f"Worker count must be at least 1, got {workers}.")
    return workers


def emit(fmt: str, payload: dict, text: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(text)


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Report format.",
)
degree_bound_option = click.option(
    "--degree-bound",
    type=int,
    default=None,
    help="Oracle degree bound D (default: KOSZUL_DEGREE_BOUND).",
)
workers_option = click.option(
    "--workers",
    type=int,
    default=None,
    help="Worker processes (default: KOSZUL_WORKERS).",
)
progress_option = click.option(
    "--progress/--no-progress",
    default=False,
    help="Show progress bars on stderr.",
)

# Import commands so they register on blueprint
from . import classify, enumeration, koszul, table, verify  # noqa: E402,F401
