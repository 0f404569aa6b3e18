"""Command-line interface for the superunitary library."""

import json
import logging
from fractions import Fraction
from typing import Any

import typer

from . import __version__
from .algebra_core import (
    PositiveSystem,
    Signature,
    Weight,
    build_positive_system,
    normalize_system,
)
from .composition import is_typical
from .dirac import classify, margin_table, oracle_agreement, sweep, thresholds
from .exceptions import SuperUnitaryException
from .notation import (
    format_rational,
    format_weight,
    parse_int_list,
    parse_rational,
    parse_root,
    parse_signature,
    parse_sweep,
    parse_weight,
)
from .shapovalov import (
    DEFAULT_DEPTH,
    MAX_DEPTH,
    NORMALIZATION_COROOT,
    default_variant,
    gram,
    gram_determinant,
    gram_rank,
    is_psd,
    ks_determinant,
    normalize_normalization,
    normalize_variant,
)
from .weights import FDFamily, IFDFamily, family_weight

EXIT_VALIDATION = 2
EXIT_USAGE = 64

# Base of every flag error typer raises: BadParameter, MissingParameter, NoSuchOption.
UsageError = typer.BadParameter.__base__

app = typer.Typer(help="Classify unitarizable highest weight supermodules of su(p,q|n)")


@app.callback()
def _configure(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug output to stderr"),
) -> None:
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)


@app.command()
def rho(
    sig: str = typer.Option(..., "--sig", help="Signature p,q,n of su(p,q|n)"),
    system: str | None = typer.Option(None, "--system", help="Positive system: standard, antistandard, nonstandard"),
    as_json: bool = typer.Option(False, "--json/--table", help="Output JSON instead of a table"),
    pretty: bool = typer.Option(False, "--pretty", help="Pretty-print JSON output (requires --json)"),
) -> None:
    """Print the Weyl vector ρ = ρ0 - ρ1 of a positive system."""
    try:
        _check_pretty(pretty, as_json)
        signature = _signature(sig)
        ps = _positive_system(signature, system)
        if as_json:
            payload = {
                "signature": signature.label,
                "system": ps.kind,
                "rho0": str(ps.rho0),
                "rho1": str(ps.rho1),
                "rho": str(ps.rho),
            }
            _emit_json(payload, pretty)
            return
        typer.echo(str(ps.rho))
    except SuperUnitaryException as e:
        typer.echo(f"Validation error: {e}", err=True)
        raise typer.Exit(EXIT_VALIDATION)
    except (typer.Exit, typer.BadParameter):
        raise
    except Exception as e:
        typer.echo(f"Unexpected error: {e}", err=True)
        raise typer.Exit(1)


@app.command(name="classify")
def classify_weight(
    sig: str = typer.Option(..., "--sig", help="Signature p,q,n of su(p,q|n)"),
    weight: str = typer.Option(..., "--weight", help='Highest weight "l1,...,lm|u1,...,un"'),
    psl: bool = typer.Option(False, "--psl", help="Require the psl(n|n) condition Σλ - Σμ = 0"),
    as_json: bool = typer.Option(False, "--json/--table", help="Output JSON instead of a table"),
    pretty: bool = typer.Option(False, "--pretty", help="Pretty-print JSON output (requires --json)"),
) -> None:
    """Decide whether a highest weight gives a unitarizable supermodule."""
    try:
        _check_pretty(pretty, as_json)
        signature = _signature(sig)
        Lambda = _weight(weight, signature)
        verdict = classify(Lambda, signature, psl=psl)
        if as_json:
            payload = {"signature": signature.label, "weight": str(Lambda), **verdict.to_dict(signature.m)}
            _emit_json(payload, pretty)
            return
        status = "unitarizable" if verdict.unitarizable else "not unitarizable"
        typer.echo(f"{signature.label} {Lambda}: {status}")
        for reason in verdict.reasons:
            typer.echo(f"  {_reason_line(reason.to_dict(signature.m))}")
    except SuperUnitaryException as e:
        typer.echo(f"Validation error: {e}", err=True)
        raise typer.Exit(EXIT_VALIDATION)
    except (typer.Exit, typer.BadParameter):
        raise
    except Exception as e:
        typer.echo(f"Unexpected error: {e}", err=True)
        raise typer.Exit(1)


@app.command()
def margins(
    sig: str = typer.Option(..., "--sig", help="Signature p,q,n of su(p,q|n)"),
    weight: str = typer.Option(..., "--weight", help='Highest weight "l1,...,lm|u1,...,un"'),
    system: str | None = typer.Option(None, "--system", help="Positive system: standard, antistandard, nonstandard"),
    as_json: bool = typer.Option(False, "--json/--table", help="Output JSON instead of a table"),
    pretty: bool = typer.Option(False, "--pretty", help="Pretty-print JSON output (requires --json)"),
) -> None:
    """List (Λ+ρ, α) for every odd positive root α."""
    try:
        _check_pretty(pretty, as_json)
        signature = _signature(sig)
        Lambda = _weight(weight, signature)
        ps = _positive_system(signature, system)
        rows = [(root.label(signature.m), value) for root, value in margin_table(Lambda, ps)]
        typical = is_typical(Lambda, ps)
        if as_json:
            payload = {
                "signature": signature.label,
                "system": ps.kind,
                "weight": str(Lambda),
                "typical": typical,
                "margins": [{"root": root, "margin": format_rational(value)} for root, value in rows],
            }
            _emit_json(payload, pretty)
            return
        width = max(len(root) for root, _ in rows)
        for root, value in rows:
            typer.echo(f"{root.ljust(width)}  {format_rational(value)}")
        typer.echo(f"Typical: {'yes' if typical else 'no'}")
    except SuperUnitaryException as e:
        typer.echo(f"Validation error: {e}", err=True)
        raise typer.Exit(EXIT_VALIDATION)
    except (typer.Exit, typer.BadParameter):
        raise
    except Exception as e:
        typer.echo(f"Unexpected error: {e}", err=True)
        raise typer.Exit(1)


@app.command()
def family(
    sig: str = typer.Option(..., "--sig", help="Signature p,q,n of su(p,q|n)"),
    a: str | None = typer.Option(None, "--a", help="Integers a_1,...,a_m (a_1 = 0)"),
    b: str | None = typer.Option(None, "--b", help="Integers b_1,...,b_n (b_n = 0)"),
    lam: str | None = typer.Option(None, "--lambda", help="Continuous su(p,q) parameter λ (p, q ≥ 1)"),
    x: str | None = typer.Option(None, "--x", help="Family parameter x"),
    sweep_range: str | None = typer.Option(None, "--sweep", help="Grid from:to:step of x values"),
    as_json: bool = typer.Option(False, "--json/--table", help="Output JSON instead of a table"),
    pretty: bool = typer.Option(False, "--pretty", help="Pretty-print JSON output (requires --json)"),
) -> None:
    """Classify a one-parameter family Λ(x) at one x or over a grid."""
    try:
        _check_pretty(pretty, as_json)
        signature = _signature(sig)
        fam = _family(signature, a, b, lam)
        xs = _grid(x, sweep_range)
        results = sweep(fam, xs)
        limits = {key: format_rational(value) for key, value in thresholds(fam).items()}
        if as_json:
            verdicts = [
                {"x": format_rational(value), "weight": str(family_weight(fam.at(value))), **verdict.to_dict(signature.m)}
                for value, verdict in results
            ]
            _emit_json({"signature": signature.label, "thresholds": limits, "verdicts": verdicts}, pretty)
            return
        typer.echo("Thresholds: " + ", ".join(f"{key}={value}" for key, value in limits.items()))
        for value, verdict in results:
            status = "unitarizable" if verdict.unitarizable else "not unitarizable"
            typer.echo(f"x={format_rational(value)}  {family_weight(fam.at(value))}  {status}")
    except SuperUnitaryException as e:
        typer.echo(f"Validation error: {e}", err=True)
        raise typer.Exit(EXIT_VALIDATION)
    except (typer.Exit, typer.BadParameter):
        raise
    except Exception as e:
        typer.echo(f"Unexpected error: {e}", err=True)
        raise typer.Exit(1)


@app.command(name="gram")
def gram_matrix(
    sig: str = typer.Option(..., "--sig", help="Signature p,q,n of su(p,q|n)"),
    weight: str = typer.Option(..., "--weight", help='Highest weight "l1,...,lm|u1,...,un"'),
    eta: str = typer.Option(..., "--eta", help='Depth η as roots ("e2-d1") or a tuple ("0,1|-1")'),
    system: str | None = typer.Option(None, "--system", help="Positive system: standard, antistandard, nonstandard"),
    variant: str | None = typer.Option(None, "--variant", help="Anti-involution: plus, minus, minus_plus, plus_minus"),
    as_json: bool = typer.Option(False, "--json/--table", help="Output JSON instead of a table"),
    pretty: bool = typer.Option(False, "--pretty", help="Pretty-print JSON output (requires --json)"),
) -> None:
    """Print the Shapovalov Gram matrix at weight Λ - η."""
    try:
        _check_pretty(pretty, as_json)
        signature = _signature(sig)
        Lambda = _weight(weight, signature)
        ps = _positive_system(signature, system)
        depth = _eta(eta, signature)
        omega_variant = _variant(variant, signature)
        matrix = gram(Lambda, depth, signature, ps, omega_variant)
        basis = [" ".join(str(letter) for letter in word) or "1" for word in matrix.basis]
        entries = [[format_rational(value) for value in row] for row in matrix.entries]
        psd = is_psd(matrix)
        if as_json:
            payload = {
                "signature": signature.label,
                "system": ps.kind,
                "variant": omega_variant,
                "weight": str(Lambda),
                "eta": format_weight(matrix.eta, signature.m),
                "basis": basis,
                "entries": entries,
                "psd": psd,
                "rank": gram_rank(matrix),
                "determinant": format_rational(gram_determinant(matrix)),
            }
            _emit_json(payload, pretty)
            return
        typer.echo(f"Basis ({matrix.size}): {', '.join(basis)}")
        for row in entries:
            typer.echo("  " + "  ".join(value.rjust(6) for value in row))
        typer.echo(f"PSD: {'yes' if psd else 'no'}")
        typer.echo(f"Rank: {gram_rank(matrix)}")
        typer.echo(f"Determinant: {format_rational(gram_determinant(matrix))}")
    except SuperUnitaryException as e:
        typer.echo(f"Validation error: {e}", err=True)
        raise typer.Exit(EXIT_VALIDATION)
    except (typer.Exit, typer.BadParameter):
        raise
    except Exception as e:
        typer.echo(f"Unexpected error: {e}", err=True)
        raise typer.Exit(1)


@app.command()
def ksdet(
    sig: str = typer.Option(..., "--sig", help="Signature p,q,n of su(p,q|n)"),
    weight: str = typer.Option(..., "--weight", help='Highest weight "l1,...,lm|u1,...,un"'),
    eta: str = typer.Option(..., "--eta", help='Depth η as roots ("e2-d1") or a tuple ("0,1|-1")'),
    system: str | None = typer.Option(None, "--system", help="Positive system: standard, antistandard, nonstandard"),
    normalization: str = typer.Option(
        NORMALIZATION_COROOT, "--normalization", help="Even-root factors: coroot or printed"
    ),
    as_json: bool = typer.Option(False, "--json/--table", help="Output JSON instead of a table"),
    pretty: bool = typer.Option(False, "--pretty", help="Pretty-print JSON output (requires --json)"),
) -> None:
    """Evaluate the Kac-Shapovalov determinant formula at weight Λ - η."""
    try:
        _check_pretty(pretty, as_json)
        signature = _signature(sig)
        Lambda = _weight(weight, signature)
        ps = _positive_system(signature, system)
        depth = _eta(eta, signature)
        try:
            normalization = normalize_normalization(normalization)
        except ValueError as e:
            raise typer.BadParameter(str(e), param_hint="--normalization")
        result = ks_determinant(Lambda, depth, ps, normalization)
        factors = [{"base": format_rational(base), "exponent": exponent} for base, exponent in result.factors]
        if as_json:
            payload = {
                "signature": signature.label,
                "system": ps.kind,
                "normalization": normalization,
                "weight": str(Lambda),
                "eta": format_weight(depth, signature.m),
                "factors": factors,
                "value": format_rational(result.value),
            }
            _emit_json(payload, pretty)
            return
        product = " · ".join(f"({item['base']})^{item['exponent']}" for item in factors) or "1"
        typer.echo(f"{product} = {format_rational(result.value)}")
    except SuperUnitaryException as e:
        typer.echo(f"Validation error: {e}", err=True)
        raise typer.Exit(EXIT_VALIDATION)
    except (typer.Exit, typer.BadParameter):
        raise
    except Exception as e:
        typer.echo(f"Unexpected error: {e}", err=True)
        raise typer.Exit(1)


@app.command()
def oracle(
    sig: str = typer.Option(..., "--sig", help="Signature p,q,n of su(p,q|n)"),
    weight: str | None = typer.Option(None, "--weight", help='Highest weight "l1,...,lm|u1,...,un"'),
    a: str | None = typer.Option(None, "--a", help="Integers a_1,...,a_m (a_1 = 0)"),
    b: str | None = typer.Option(None, "--b", help="Integers b_1,...,b_n (b_n = 0)"),
    lam: str | None = typer.Option(None, "--lambda", help="Continuous su(p,q) parameter λ (p, q ≥ 1)"),
    x: str | None = typer.Option(None, "--x", help="Family parameter x"),
    sweep_range: str | None = typer.Option(None, "--sweep", help="Grid from:to:step of x values"),
    depth: int = typer.Option(DEFAULT_DEPTH, "--depth", help=f"Largest height of η to check (at most {MAX_DEPTH})"),
    as_json: bool = typer.Option(False, "--json/--table", help="Output JSON instead of a table"),
    pretty: bool = typer.Option(False, "--pretty", help="Pretty-print JSON output (requires --json)"),
) -> None:
    """Check verdicts against the Gram matrices of the Shapovalov form."""
    try:
        _check_pretty(pretty, as_json)
        if not 1 <= depth <= MAX_DEPTH:
            raise typer.BadParameter(f"Depth must lie between 1 and {MAX_DEPTH}.", param_hint="--depth")
        signature = _signature(sig)
        if weight is not None:
            if any(value is not None for value in (a, b, lam, x, sweep_range)):
                raise typer.BadParameter("Use either --weight or family options, not both.", param_hint="--weight")
            weights = [_weight(weight, signature)]
        else:
            fam = _family(signature, a, b, lam)
            weights = [family_weight(fam.at(value)) for value in _grid(x, sweep_range)]
        reports = [(Lambda, oracle_agreement(Lambda, signature, depth)) for Lambda in weights]
        disagreements = sum(1 for _, report in reports if not report.agrees)
        if as_json:
            rows = [
                {
                    "weight": str(Lambda),
                    "unitarizable": report.verdict.unitarizable,
                    "unitarity_conditions": report.unitarity_holds,
                    "agrees": report.agrees,
                    "checked": report.checked,
                    "witness_eta": format_weight(report.witness_eta, signature.m) if report.witness_eta else None,
                }
                for Lambda, report in reports
            ]
            _emit_json({"signature": signature.label, "depth": depth, "results": rows}, pretty)
        else:
            for Lambda, report in reports:
                status = "agrees" if report.agrees else "DISAGREES"
                verdict = "unitarizable" if report.verdict.unitarizable else "not unitarizable"
                typer.echo(f"{Lambda}  {verdict}  {report.checked} Gram matrices  {status}")
            typer.echo(f"{len(reports) - disagreements} of {len(reports)} weights agree.")
        if disagreements:
            raise typer.Exit(1)
    except SuperUnitaryException as e:
        typer.echo(f"Validation error: {e}", err=True)
        raise typer.Exit(EXIT_VALIDATION)
    except (typer.Exit, typer.BadParameter):
        raise
    except Exception as e:
        typer.echo(f"Unexpected error: {e}", err=True)
        raise typer.Exit(1)


def main() -> None:
    """Entry point for the CLI; malformed flags exit with status 64."""
    try:
        code = app(standalone_mode=False)
    except UsageError as e:
        e.show()
        raise SystemExit(EXIT_USAGE)
    except typer.Abort:
        typer.echo("Aborted!", err=True)
        raise SystemExit(1)
    raise SystemExit(code or 0)


def _check_pretty(pretty: bool, as_json: bool) -> None:
    if pretty and not as_json:
        typer.echo("Use --pretty with --json.", err=True)
        raise typer.Exit(1)


def _signature(text: str) -> Signature:
    """Parse --sig; malformed text is a usage error, impossible values a validation error."""
    try:
        p, q, n = parse_signature(text)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--sig")
    return Signature.from_pqn(p, q, n)


def _weight(text: str, sig: Signature) -> Weight:
    try:
        lambdas, mus = parse_weight(text)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--weight")
    if len(lambdas) != sig.m or len(mus) != sig.n:
        raise typer.BadParameter(
            f"{sig.label} needs {sig.m} even and {sig.n} odd coordinates, got {len(lambdas)} and {len(mus)}.",
            param_hint="--weight",
        )
    return Weight(lambdas + mus, sig.m)


def _positive_system(sig: Signature, system: str | None) -> PositiveSystem:
    try:
        kind = normalize_system(system) if system else sig.default_system
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--system")
    return build_positive_system(sig, kind)


def _variant(variant: str | None, sig: Signature) -> str:
    if variant is None:
        return default_variant(sig)
    try:
        return normalize_variant(variant)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--variant")


def _eta(text: str, sig: Signature) -> tuple[int, ...]:
    """Parse --eta as a weight tuple or as a sum of signed basis vectors."""
    try:
        if "|" in text:
            lambdas, mus = parse_weight(text)
            values = lambdas + mus
            if len(values) != sig.size or any(value.denominator != 1 for value in values):
                raise ValueError(f'"{text}" is not an integral tuple of length {sig.size}.')
            return tuple(int(value) for value in values)
        return parse_root(text, sig.m, sig.n)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--eta")


def _rational(text: str, hint: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint=hint)


def _int_list(text: str | None, length: int, hint: str) -> tuple[int, ...]:
    if text is None:
        return (0,) * length
    try:
        return parse_int_list(text)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint=hint)


def _family(sig: Signature, a: str | None, b: str | None, lam: str | None) -> FDFamily | IFDFamily:
    a_values = _int_list(a, sig.m, "--a")
    b_values = _int_list(b, sig.n, "--b")
    if sig.is_compact:
        if lam is not None:
            raise typer.BadParameter(f"{sig.label} has no continuous parameter λ.", param_hint="--lambda")
        return FDFamily.create(sig, a_values, b_values, 0)
    if lam is None:
        raise typer.BadParameter(f"{sig.label} needs the continuous parameter λ.", param_hint="--lambda")
    return IFDFamily.create(sig, a_values, b_values, _rational(lam, "--lambda"), 0)


def _grid(x: str | None, sweep_range: str | None) -> tuple[Fraction, ...]:
    if (x is None) == (sweep_range is None):
        raise typer.BadParameter("Use exactly one of --x and --sweep.", param_hint="--x/--sweep")
    if x is not None:
        return (_rational(x, "--x"),)
    try:
        return parse_sweep(sweep_range)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--sweep")


def _reason_line(reason: dict[str, Any]) -> str:
    parts = [reason["condition"]]
    if reason["root"] is not None:
        parts.append(reason["root"])
    if reason["margin"] is not None:
        parts.append(f"margin {reason['margin']}")
    return "  ".join(parts)


def _emit_json(payload: dict[str, Any], pretty: bool) -> None:
    typer.echo(json.dumps(_with_meta(payload), default=str, indent=2 if pretty else None))


def _with_meta(payload: dict[str, Any]) -> dict[str, Any]:
    """Attach generator metadata to a JSON payload."""
    meta = {
        "generator": {
            "name": "superunitary",
            "version": __version__,
        }
    }
    combined = dict(payload)
    combined["_meta"] = meta
    return combined


if __name__ == "__main__":
    main()
