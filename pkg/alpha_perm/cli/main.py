"""
Herramienta CLI para calcular, estimar y verificar α-permanentes.
"""
import time
from typing import Any, Callable, Dict, Optional

import click
import numpy as np

from alpha_perm import initialize
from alpha_perm.cli import checks, matrix_io, tables, x1_report
from alpha_perm.config import settings
from alpha_perm.exact.engines import compute_alpha_permanent
from alpha_perm.sampler.importance import is_estimate_partitions, is_estimate_permutations_uniform
from alpha_perm.schemas.params import PitmanEwensParams, parse_complex
from alpha_perm.schemas.results import Method, RunResult
from alpha_perm.utils.error_handling import (
    InadmissibleParamsError,
    ToleranceBreachError,
    ValidationError,
    handle_exceptions
)
from alpha_perm.utils.logging import get_logger

logger = get_logger(__name__)


def format_scalar(value: complex) -> str:
    """Escalar con 10 cifras significativas; la parte imaginaria se omite si es despreciable."""
    value = complex(value)
    if abs(value.imag) <= 1e-12 * max(1.0, abs(value.real)):
        return f"{value.real:.10g}"
    sign = '+' if value.imag >= 0 else '-'
    return f"{value.real:.10g}{sign}{abs(value.imag):.10g}j"


def output_options(func: Callable) -> Callable:
    """Añade --json, --verbose y --timing a un comando."""
    func = click.option(
        '--json', 'as_json', is_flag=True, help='Emite el resultado como JSON con claves ordenadas'
    )(func)
    func = click.option('--verbose', '-v', is_flag=True, help='Modo verboso (logging DEBUG)')(func)
    func = click.option('--timing', is_flag=True, help='Incluye el tiempo de ejecución en la salida')(func)
    return func


def matrix_options(func: Callable) -> Callable:
    """Añade --matrix, --format y --x1 a un comando."""
    func = click.option('--x1', 'use_x1', is_flag=True, help='Usa la matriz X1 incluida')(func)
    func = click.option(
        '--format', 'fmt', type=click.Choice(matrix_io.FORMAT_CHOICES), default='csv-dense', show_default=True,
        help='Formato del archivo de matriz',
    )(func)
    func = click.option(
        '--matrix', 'matrix_path', type=str, default=None, help='Archivo CSV de la matriz'
    )(func)
    return func


def _load_matrix(matrix_path: Optional[str], fmt: str, use_x1: bool) -> np.ndarray:
    if use_x1 == bool(matrix_path):
        raise ValidationError("Indique exactamente una fuente de matriz: --matrix o --x1")
    if use_x1:
        return matrix_io.load_x1()
    return matrix_io.read_matrix(matrix_path, fmt)


def _emit(result: RunResult, as_json: bool, lines: Callable[[], None], started: float, timing: bool) -> None:
    if timing:
        result.wall_time = round(time.perf_counter() - started, 6)
    if as_json:
        click.echo(result.to_json())
        return
    lines()
    if timing:
        click.echo(f"tiempo: {result.wall_time:.3f} s")


def _start(verbose: bool) -> float:
    initialize(verbose=verbose)
    return time.perf_counter()


@click.group()
@click.version_option(package_name='alpha_perm')
def cli() -> None:
    """Cálculo exacto y por Monte Carlo del α-permanente de matrices complejas."""


@cli.command('exact')
@matrix_options
@click.option('--alpha', required=True, help='α como "re" o "re,im"')
@click.option(
    '--engine', type=click.Choice([m.value for m in Method]), default=Method.DEFINITION.value,
    show_default=True, help='Motor exacto',
)
@output_options
@handle_exceptions()
def cmd_exact(matrix_path, fmt, use_x1, alpha, engine, as_json, verbose, timing) -> None:
    """Calcula per_α M de forma exacta."""
    start = _start(verbose)
    matrix = _load_matrix(matrix_path, fmt, use_x1)
    result = compute_alpha_permanent(matrix, parse_complex(alpha), engine)

    run = RunResult(
        command='exact',
        inputs={'matrix': 'X1' if use_x1 else matrix_path, 'format': fmt, 'alpha': alpha, 'engine': engine},
        outputs={
            'value': result.value,
            'method': result.method.value,
            'terms_evaluated': result.terms_evaluated,
        },
    )

    def lines() -> None:
        click.echo(f"valor: {format_scalar(result.value)}")
        click.echo(f"motor: {result.method.value}")
        click.echo(f"términos: {result.terms_evaluated}")

    _emit(run, as_json, lines, start, timing)


@cli.command('estimate')
@matrix_options
@click.option('--alpha', required=True, type=float, help='α real')
@click.option('--a', 'discount', type=float, default=None, help='Descuento a de Pitman-Ewens')
@click.option('--theta', type=float, default=None, help='Concentración θ de Pitman-Ewens')
@click.option('--samples', '-N', type=int, default=None, help='Número de muestras')
@click.option('--seed', type=int, default=None, help='Semilla (por defecto DEFAULT_SEED)')
@click.option('--baseline', is_flag=True, help='Usa la línea base de permutaciones uniformes')
@output_options
@handle_exceptions()
def cmd_estimate(
    matrix_path, fmt, use_x1, alpha, discount, theta, samples, seed, baseline, as_json, verbose, timing
) -> None:
    """Estima per_α M por muestreo de importancia."""
    start = _start(verbose)
    matrix = _load_matrix(matrix_path, fmt, use_x1)
    if (discount is None) != (theta is None):
        raise InadmissibleParamsError("Indique a la vez --a y --theta, o ninguno de los dos")

    if baseline:
        report = is_estimate_permutations_uniform(matrix, alpha, n_samples=samples, seed=seed)
    else:
        params = None if discount is None else PitmanEwensParams(a=discount, theta=theta)
        report = is_estimate_partitions(matrix, alpha, params=params, n_samples=samples, seed=seed)

    high_variance = report.relative_stderr > settings.HIGH_VARIANCE_THRESHOLD
    if high_variance:
        logger.warning("Régimen de alta varianza", relative_stderr=report.relative_stderr)

    run = RunResult(
        command='estimate',
        inputs={
            'matrix': 'X1' if use_x1 else matrix_path, 'format': fmt, 'alpha': alpha,
            'a': discount, 'theta': theta, 'samples': report.n_samples, 'seed': report.seed,
            'baseline': baseline,
        },
        outputs={'report': report, 'high_variance': high_variance},
    )

    def lines() -> None:
        click.echo(f"estimación: {report.estimate:.10g}")
        click.echo(f"error estándar: {report.stderr:.10g}")
        click.echo(f"error estándar relativo: {report.relative_stderr:.2%}")
        click.echo(f"muestras: {report.n_samples}")
        click.echo(f"semilla: {report.seed}")
        if report.params is not None:
            click.echo(f"propuesta: {report.proposal} (a={report.params.a:g}, theta={report.params.theta:g})")
        else:
            click.echo(f"propuesta: {report.proposal}")
        if high_variance:
            click.echo("advertencia: régimen de alta varianza (high-variance regime)", err=True)

    _emit(run, as_json, lines, start, timing)


@cli.command('check')
@click.argument('suite', type=click.Choice(list(checks.SUITES)))
@click.option('--n', 'n', type=int, default=4, show_default=True, help='Dimensión de las matrices')
@click.option('--trials', type=int, default=10, show_default=True, help='Número de intentos aleatorios')
@click.option('--seed', type=int, default=None, help='Semilla (por defecto DEFAULT_SEED)')
@output_options
@handle_exceptions()
def cmd_check(suite, n, trials, seed, as_json, verbose, timing) -> None:
    """Verifica numéricamente una identidad sobre matrices aleatorias."""
    start = _start(verbose)
    seed = settings.DEFAULT_SEED if seed is None else seed
    report = checks.run_suite(suite, n, trials, seed)

    run = RunResult(
        command='check',
        inputs={'suite': suite, 'n': n, 'trials': trials, 'seed': seed},
        outputs={'report': report, 'passed': report.passed},
        errors=report.failures,
    )

    def lines() -> None:
        click.echo(f"batería: {suite} (n={n}, intentos={trials}, comparaciones={report.checks})")
        click.echo(f"error relativo máximo: {report.max_relative_error:.3g} (tolerancia {report.tolerance:g})")
        if report.worst_case:
            click.echo(f"peor caso: {report.worst_case}")
        for failure in report.failures:
            click.echo(f"FALLO {failure}")
        click.echo("resultado: OK" if report.passed else "resultado: FALLO")

    _emit(run, as_json, lines, start, timing)
    if not report.passed:
        raise ToleranceBreachError(f"{len(report.failures)} comparaciones fuera de tolerancia en {suite}")


@cli.command('tables')
@click.argument('kind', type=click.Choice(tables.KINDS))
@click.option('--n', 'n', type=int, required=True, help='Tamaño máximo')
@click.option('--verify-appendix', is_flag=True, help='Compara con las tablas de rencontres impresas')
@output_options
@handle_exceptions()
def cmd_tables(kind, n, verify_appendix, as_json, verbose, timing) -> None:
    """Emite tablas de rencontres, Stirling o Bell."""
    start = _start(verbose)
    rows = tables.build_table(kind, n)
    verification: Dict[str, Any] = {}
    if verify_appendix:
        if kind != 'rencontres':
            raise ValidationError("--verify-appendix solo se aplica a las tablas de rencontres")
        verification = tables.verify_printed_tables(n)

    run = RunResult(
        command='tables',
        inputs={'kind': kind, 'n': n, 'verify_appendix': verify_appendix},
        outputs={'rows': rows, **verification},
    )

    def lines() -> None:
        if kind == 'rencontres':
            click.echo(f"c({n},k,l): filas k=1..{n}, columnas l=0..{n}")
            for k, row in enumerate(rows, start=1):
                click.echo(f"k={k}: " + ','.join(str(v) for v in row))
        else:
            for m, row in enumerate(rows, start=1):
                click.echo(f"n={m}: " + ','.join(str(v) for v in row))
        for erratum in verification.get('errata', []):
            click.echo(
                f"errata: c({erratum['n']},{erratum['k']},{erratum['l']}) impreso {erratum['printed']}, "
                f"correcto {erratum['value']}"
            )
        for cell in verification.get('mismatches', []):
            click.echo(
                f"DIFERENCIA c({cell['n']},{cell['k']},{cell['l']}): "
                f"tabla {cell['expected']}, calculado {cell['computed']}"
            )
        if verify_appendix:
            click.echo("verificación: OK" if not verification['mismatches'] else "verificación: FALLO")

    _emit(run, as_json, lines, start, timing)
    if verification.get('mismatches'):
        first = verification['mismatches'][0]
        raise ToleranceBreachError(
            f"La tabla impresa difiere en c({first['n']},{first['k']},{first['l']})"
        )


@cli.command('reproduce-table1')
@click.option('--seed', type=int, default=None, help='Semilla (por defecto DEFAULT_SEED)')
@click.option('--samples', '-N', type=int, default=None, help='Muestras por fila (por defecto DEFAULT_SAMPLES)')
@output_options
@handle_exceptions()
def cmd_reproduce_table1(seed, samples, as_json, verbose, timing) -> None:
    """Reproduce la tabla de estimaciones sobre X1."""
    start = _start(verbose)
    rows = x1_report.x1_report(seed=seed, n_samples=samples)
    mismatches = x1_report.published_mismatches(rows)

    run = RunResult(
        command='reproduce-table1',
        inputs={'seed': seed, 'samples': samples},
        outputs={'rows': rows},
        errors=mismatches,
    )

    def lines() -> None:
        click.echo(
            f"{'alpha':>6}  {'exacto':>14}  {'publicado':>12}  "
            f"{'estimación':>14}  {'error est.':>12}  {'relativo':>9}"
        )
        for row in rows:
            click.echo(
                f"{row['alpha']:>6g}  {row['exact']:>14.6g}  {row['published']:>12.6g}  "
                f"{row['estimate']:>14.6g}  {row['stderr']:>12.4g}  {row['relative_stderr']:>9.2%}"
            )
        for mismatch in mismatches:
            click.echo(f"FALLO {mismatch}")

    _emit(run, as_json, lines, start, timing)
    if mismatches:
        raise ToleranceBreachError("La columna exacta no coincide con los valores publicados")


def main() -> None:
    """
    Función principal.
    """
    cli(prog_name='alpha-perm')


if __name__ == '__main__':
    main()
