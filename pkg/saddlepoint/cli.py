"""
Saddlepoint CLI - Command line interface for the Saddlepoint toolkit.

Commands:
- ssp: Decide whether a matrix has a strict saddlepoint
- psp: Compute a pseudo-saddlepoint
- sp-value: Saddlepoint value, assuming one exists
- sp-locate: Saddlepoints of a known value
- test-value: Four-way feasibility test of one value
- oracle: Brute-force report
- gen: Generate a matrix file
- bench: Query-count benchmark with a CSV report

Results are JSON on stdout; logs and errors go to stderr.
Exit codes: 0 ok, 2 input error, 3 internal invariant failure.
"""

import json
import logging
import math
import sys
from pathlib import Path
from typing import Optional

import click

from saddlepoint import __version__
from saddlepoint.config import config
from saddlepoint.engine.oracle import oracle_scan
from saddlepoint.engine.solver import SaddlepointSolver
from saddlepoint.engine.staircase import both_succeed_values, test_value
from saddlepoint.engine.view import BaseMatrix
from saddlepoint.errors import ContractError, InvariantError, SaddlepointError
from saddlepoint.models.result import Algorithm, InstanceFamily
from saddlepoint.services.bench import BenchRunner
from saddlepoint.services.generator import generate
from saddlepoint.store.bench_report import BenchReport
from saddlepoint.store.matrix_file import format_matrix, read_matrix

ALGORITHMS = {
    "auto": Algorithm.AUTO,
    "baseline": Algorithm.BASELINE,
    "simple": Algorithm.SIMPLE,
    "fast": Algorithm.FAST,
    "alt": Algorithm.ALTERNATIVE,
    "alternative": Algorithm.ALTERNATIVE,
}

algo_option = click.option(
    '--algo', type=click.Choice(list(ALGORITHMS)), default='auto', show_default=True,
    help='PSP 算法',
)
cutoff_option = click.option('--cutoff', type=click.IntRange(min=1), default=None, help='递归基例的边长')
depth_option = click.option('--max-depth', type=click.IntRange(min=0), default=None, help='提前停止的递归深度')


def emit(payload) -> None:
    """以 JSON 输出结果。"""
    click.echo(json.dumps(payload, ensure_ascii=False, default=str))


def fail(error: Exception) -> None:
    """在 stderr 报告错误并以对应退出码退出。"""
    click.echo(f"✗ 错误: {error}", err=True)
    if isinstance(error, InvariantError):
        sys.exit(3)
    sys.exit(2)


def finite(value: float) -> float:
    if not math.isfinite(value):
        raise ContractError(f"取值必须是有限数，实际为 {value}")
    return value


def entry_fields(entry) -> dict:
    if entry is None:
        return {"row": None, "col": None, "value": None}
    return {"row": entry.row, "col": entry.col, "value": entry.value}


@click.group()
@click.version_option(version=__version__)
@click.option('--log-level', default=None, help='日志级别（默认取 SADDLEPOINT_LOG_LEVEL）')
def cli(log_level: Optional[str]):
    """Saddlepoint - 比较模型下的鞍点查找工具"""
    logging.basicConfig(
        level=(log_level or config.log_level).upper(),
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )


@cli.command()
@click.argument('matrix_file', type=click.Path(dir_okay=False))
@algo_option
@cutoff_option
@depth_option
@click.option('--verify', is_flag=True, help='用暴力 oracle 交叉验证结果')
def ssp(matrix_file: str, algo: str, cutoff: Optional[int], max_depth: Optional[int], verify: bool):
    """
    判定 MATRIX_FILE 是否存在严格鞍点（SSP）。
    """
    try:
        data = read_matrix(matrix_file)
        solver = SaddlepointSolver(cutoff=cutoff, max_depth=max_depth)
        outcome, stats = solver.find_ssp(BaseMatrix(data), ALGORITHMS[algo])

        result = {"result": outcome.status.value, **entry_fields(outcome.entry)}
        result.update(queries=stats.queries, comparisons=stats.comparisons, elapsed_ms=stats.elapsed_ms)
        if verify:
            if data.size <= config.verify_max_cells:
                solver.cross_check(BaseMatrix(data), outcome)
                result["verified"] = True
            else:
                click.echo(f"警告: {data.shape[0]}x{data.shape[1]} 超过 verify_max_cells，未做验证", err=True)
                result["verified"] = False
        emit(result)
    except SaddlepointError as e:
        fail(e)


@cli.command()
@click.argument('matrix_file', type=click.Path(dir_okay=False))
@algo_option
@cutoff_option
@depth_option
@click.option('--verify', is_flag=True, help='在整个矩阵上检验 PSP 值')
def psp(matrix_file: str, algo: str, cutoff: Optional[int], max_depth: Optional[int], verify: bool):
    """
    计算 MATRIX_FILE 的一个伪鞍点（PSP）。
    """
    try:
        data = read_matrix(matrix_file)
        solver = SaddlepointSolver(cutoff=cutoff, max_depth=max_depth)
        view = BaseMatrix(data)
        entry = solver.psp(view, ALGORITHMS[algo])

        result = {**entry_fields(entry), "queries": view.counters.queries, "comparisons": view.counters.comparisons}
        result["verified"] = None
        if verify:
            result["verified"] = solver.check_psp(BaseMatrix(data), entry)
            if not result["verified"]:
                emit(result)
                raise InvariantError(f"值 {entry.value!r} 不是 PSP 值")
        emit(result)
    except SaddlepointError as e:
        fail(e)


@cli.command('sp-value')
@click.argument('matrix_file', type=click.Path(dir_okay=False))
@algo_option
def sp_value(matrix_file: str, algo: str):
    """
    假设存在鞍点时，返回 MATRIX_FILE 的鞍点值。

    不检查该假设。
    """
    try:
        data = read_matrix(matrix_file)
        value = SaddlepointSolver().sp_value_assuming_exists(BaseMatrix(data), ALGORITHMS[algo])
        emit({
            "value": value.value,
            "row": value.entry.row,
            "col": value.entry.col,
            "assumes_sp_exists": value.assumes_sp_exists,
            "verified": value.verified,
        })
    except SaddlepointError as e:
        fail(e)


@cli.command('sp-locate')
@click.argument('matrix_file', type=click.Path(dir_okay=False))
@click.option('--value', 'value', type=float, required=True, help='鞍点值 s')
def sp_locate(matrix_file: str, value: float):
    """
    列出 MATRIX_FILE 中值为 s 的鞍点。
    """
    try:
        data = read_matrix(matrix_file)
        entries = SaddlepointSolver().locate_sp(BaseMatrix(data), finite(value))
        emit([entry.model_dump(mode="json") for entry in entries])
    except SaddlepointError as e:
        fail(e)


@cli.command('test-value')
@click.argument('matrix_file', type=click.Path(dir_okay=False))
@click.option('--value', 'value', type=float, required=True, help='候选值 s')
def test_value_cmd(matrix_file: str, value: float):
    """
    在 MATRIX_FILE 上检验候选值 s：found | absent | greater | less。
    """
    try:
        data = read_matrix(matrix_file)
        verdict = test_value(BaseMatrix(data), finite(value))
        emit(verdict.to_summary())
    except SaddlepointError as e:
        fail(e)


@cli.command()
@click.argument('matrix_file', type=click.Path(dir_okay=False))
@click.option('--fixpoints', is_flag=True, help='同时列出两次阶梯搜索都成功的取值')
@click.option('--summary', is_flag=True, help='只输出计数，不列出每个元素')
def oracle(matrix_file: str, fixpoints: bool, summary: bool):
    """
    MATRIX_FILE 的暴力报告（O(mn)）。
    """
    try:
        data = read_matrix(matrix_file)
        report = oracle_scan(BaseMatrix(data))
        payload = report.to_summary() if summary else report.model_dump(mode="json")
        if fixpoints:
            payload["both_succeed_values"] = both_succeed_values(BaseMatrix(data))
        emit(payload)
    except SaddlepointError as e:
        fail(e)


@cli.command()
@click.option('--family', type=click.Choice([f.value for f in InstanceFamily]), required=True, help='实例族')
@click.option('--m', 'm', type=int, required=True, help='行数')
@click.option('--n', 'n', type=int, required=True, help='列数')
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True, help='随机种子')
@click.option('--multiplicity', type=int, default=1, show_default=True, help='植入的鞍点个数（planted-sp）')
@click.option('--out', '-o', type=click.Path(dir_okay=False), default=None, help='写入文件而不是标准输出')
def gen(family: str, m: int, n: int, seed: int, multiplicity: int, out: Optional[str]):
    """
    生成矩阵文件。
    """
    try:
        text = format_matrix(generate(InstanceFamily(family), m, n, seed, multiplicity))
        if out:
            Path(out).write_text(text, encoding="utf-8")
            click.echo(f"✓ {m}x{n} {family} 矩阵已写入: {out}", err=True)
        else:
            click.echo(text, nl=False)
    except SaddlepointError as e:
        fail(e)


def _split(value: str) -> list:
    return [item.strip() for item in value.split(',') if item.strip()]


@cli.command()
@click.option('--sizes', default='256,1024,4096', show_default=True, help='逗号分隔的方阵边长')
@click.option('--families', default='planted-ssp,random', show_default=True, help='逗号分隔的实例族')
@click.option('--algos', default='auto,baseline,simple,fast,alt', show_default=True, help='逗号分隔的算法')
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True, help='基础种子')
@click.option('--repeats', type=click.IntRange(min=1), default=1, show_default=True, help='每个 (规模, 实例族) 的实例数')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='进程池大小')
@click.option('--cutoff', type=click.IntRange(min=1), default=None, help='递归基例的边长')
@click.option('--multiplicity', type=click.IntRange(min=1), default=1, show_default=True, help='每个 planted-sp 实例的鞍点数')
@click.option('--out', '-o', type=click.Path(dir_okay=False), default=None, help='CSV 报告路径')
def bench(sizes: str, families: str, algos: str, seed: int, repeats: int, workers: Optional[int],
          cutoff: Optional[int], multiplicity: int, out: Optional[str]):
    """
    基准测试 query 计数并写出 CSV 报告。

    任一算法超出 query 预算时以退出码 3 退出。
    """
    try:
        try:
            size_list = [int(s) for s in _split(sizes)]
            family_list = [InstanceFamily(f) for f in _split(families)]
            algo_list = [ALGORITHMS[a] for a in _split(algos)]
        except (ValueError, KeyError) as e:
            raise ContractError(f"bench 参数无效: {e}")
        if not size_list or any(s < 1 for s in size_list):
            raise ContractError(f"sizes 必须是正整数，实际为 {sizes!r}")

        runner = BenchRunner(size_list, family_list, algo_list, seed=seed, repeats=repeats,
                             workers=workers, cutoff=cutoff, multiplicity=multiplicity)
        records = runner.run()
        report = BenchReport(Path(out) if out else None)
        report.extend(records)
        path = report.save()

        summary = BenchRunner.summarize(records)
        summary["report"] = str(path)
        emit(summary)
        if not summary["within_budget"]:
            raise InvariantError("超出 query 预算")
    except SaddlepointError as e:
        fail(e)


def main():
    """Main entry point."""
    cli()


if __name__ == '__main__':
    main()
