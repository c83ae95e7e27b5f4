"""
scarfdz CLI
Scarf 复形、staircase 划分与 d_σφ 的计算和验证
"""

import logging
import sys
from functools import wraps
from pathlib import Path
from typing import List, Optional, Tuple

import click
from pydantic import ValidationError

from . import __version__
from .config import LOG_LEVEL, SCARF_SEED

logger = logging.getLogger(__name__)

# 退出码
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2

FORMATS = click.Choice(["text", "json"])


def parse_sigma_option(text: Optional[str]) -> Optional[List[Tuple[int, ...]]]:
    """'1,2,3' / '1,2,3;3,1,2' / 'all' -> σ 列表, 'all' 或空为 None"""
    if text is None or text.strip().lower() == "all":
        return None
    sigmas = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            sigmas.append(tuple(int(part) for part in chunk.split(",")))
        except ValueError:
            raise click.BadParameter(f"cannot read sigma '{chunk}'", param_hint="--sigma")
    return sigmas or None


def handle_errors(func):
    """ScarfError / ValidationError -> stderr + 退出码 2"""
    from .core.errors import ScarfError

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ScarfError, ValidationError) as exc:
            click.echo(f"Error: {exc}", err=True)
            sys.exit(EXIT_INPUT_ERROR)

    return wrapper


def emit(text: str, output: Optional[str]) -> None:
    """写入文件或标准输出"""
    if output:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        click.echo(f"Wrote {output}", err=True)
    else:
        click.echo(text)


def table(rows: List[dict]) -> str:
    import pandas as pd

    if not rows:
        return "(empty)"
    return pd.DataFrame(rows).to_string(index=False)


def _fmt_vec(vec) -> str:
    return "(" + ",".join(str(x) for x in vec) + ")"


def _load(config):
    from .io.fixtures import load_source

    return load_source(config.source)


def _as_ideal(source):
    from .core.cellular import LabeledComplex, complex_ideal

    if isinstance(source, LabeledComplex):
        return complex_ideal(source)
    return source


def _as_complex(source):
    """理想 -> Scarf 复形 (要求 generic); 复形原样返回"""
    from .core.cellular import LabeledComplex, scarf_to_complex
    from .core.errors import NotGenericError
    from .core.monomial import is_generic
    from .core.scarf import build_scarf

    if isinstance(source, LabeledComplex):
        return source
    generic, witness = is_generic(source)
    if not generic:
        raise NotGenericError(
            f"ideal is not generic (witness {tuple(witness)}), its Scarf complex is not a "
            "resolution; pass a labeled complex file instead"
        )
    return scarf_to_complex(build_scarf(source))


@click.group()
@click.version_option(version=__version__)
@click.option("--log-level", default=LOG_LEVEL, help="日志级别 (DEBUG/INFO/WARNING)")
def cli(log_level: str):
    """scarfdz - Scarf 复形、staircase 划分与 d_σφ"""
    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


@cli.command()
@click.argument("source")
@click.option("--format", "fmt", type=FORMATS, default="text", help="输出格式")
@click.option("--output", "-o", help="输出文件 (默认标准输出)")
@handle_errors
def info(source: str, fmt: str, output: Optional[str]):
    """显示理想的维数、生成元、Artinian/generic 判定、外角和 colength"""
    from .core.monomial import is_artinian, is_generic
    from .core.staircase import colength, outer_corners
    from .io.parser import format_ideal
    from .io.schemas import InfoReport, RunConfig

    config = RunConfig(source=source, command="info", format=fmt, seed=SCARF_SEED, output=output)
    M = _as_ideal(_load(config))
    artinian = is_artinian(M)
    generic, witness = is_generic(M)
    report = InfoReport(
        n=M.n,
        gens=[list(g) for g in M.gens],
        ideal=format_ideal(M),
        artinian=artinian,
        generic=generic,
        witness=list(witness) if witness else None,
        outer_corners=[list(c) for c in outer_corners(M)] if artinian else [],
        colength=colength(M) if artinian else None,
    )

    if fmt == "json":
        emit(report.model_dump_json(indent=2), output)
        return
    lines = [
        f"Ideal: {report.ideal}",
        f"Dimension: {report.n}",
        f"Generators: {len(report.gens)}",
        f"Artinian: {report.artinian}",
        f"Generic: {report.generic}",
    ]
    if witness:
        lines.append(
            f"  witness: generators {witness.i} and {witness.j} share degree in x{witness.variable}"
        )
    if artinian:
        lines.append(f"Outer corners: {', '.join(_fmt_vec(c) for c in report.outer_corners)}")
        lines.append(f"Colength: {report.colength}")
    emit("\n".join(lines), output)


@cli.command()
@click.argument("source")
@click.option("--format", "fmt", type=FORMATS, default="json", help="输出格式")
@click.option("--output", "-o", help="输出文件")
@handle_errors
def scarf(source: str, fmt: str, output: Optional[str]):
    """输出 Scarf 复形"""
    from .core.scarf import build_scarf, euler_characteristic
    from .io.schemas import RunConfig, ScarfReport

    config = RunConfig(source=source, command="scarf", format=fmt, seed=SCARF_SEED, output=output)
    delta = build_scarf(_as_ideal(_load(config)))
    data = delta.to_dict()
    report = ScarfReport(
        n=data["n"],
        gens=data["gens"],
        f_vector=list(delta.f_vector),
        euler_characteristic=euler_characteristic(delta),
        faces=data["faces"],
    )

    if fmt == "json":
        emit(report.model_dump_json(indent=2), output)
        return
    rows = [
        {"dim": face.dim, "vertices": _fmt_vec(face.vertices), "label": _fmt_vec(face.label)}
        for level in delta.faces
        for face in level
    ]
    emit(f"f-vector: {_fmt_vec(report.f_vector)}\n" + table(rows), output)


@cli.command()
@click.argument("source")
@click.option("--format", "fmt", type=FORMATS, default="text", help="输出格式")
@click.option("--seed", default=SCARF_SEED, type=int, help="正合性检验的随机种子")
@click.option("--output", "-o", help="输出文件")
@handle_errors
def resolve(source: str, fmt: str, seed: int, output: Optional[str]):
    """计算分解微分并检验 φφ=0、极小性与正合性"""
    from .core.cellular import (
        check_complex,
        check_generic_exactness,
        check_minimal,
        differentials,
        matrix_to_triplets,
        ranks,
    )
    from .io.schemas import ResolveReport, RunConfig

    config = RunConfig(source=source, command="resolve", format=fmt, seed=seed, output=output)
    X = _as_complex(_load(config))
    mats = differentials(X)
    report = ResolveReport(
        n=X.n,
        name=X.name,
        ranks=list(ranks(X)),
        matrices=[matrix_to_triplets(phi) for phi in mats],
        is_complex=check_complex(mats),
        is_minimal=check_minimal(mats),
        is_exact=check_generic_exactness(mats, seed),
    )

    if fmt == "json":
        emit(report.model_dump_json(indent=2), output)
    else:
        rows = [
            {"matrix": f"phi_{k}", "shape": f"{phi.rows}x{phi.cols}", "entries": len(phi.entries)}
            for k, phi in enumerate(mats, start=1)
        ]
        lines = [
            f"Ranks: {_fmt_vec(report.ranks)}",
            table(rows),
            f"Complex (phi*phi = 0): {report.is_complex}",
            f"Minimal: {report.is_minimal}",
            f"Exact: {report.is_exact}",
        ]
        emit("\n".join(lines), output)
    if not (report.is_complex and report.is_exact):
        sys.exit(EXIT_VERIFY_FAILED)


@cli.command()
@click.argument("source")
@click.option("--sigma", "sigma_text", default="all", help="σ, 例如 1,2,3 或 1,2,3;3,1,2 或 all")
@click.option("--format", "fmt", type=FORMATS, default="text", help="输出格式")
@click.option("--output", "-o", help="输出文件")
@handle_errors
def partition(source: str, sigma_text: str, fmt: str, output: Optional[str]):
    """按 ≥_σ 划分 staircase (暴力划分 + generic 时的长方体公式)"""
    from .core.monomial import is_generic
    from .core.staircase import all_sigmas, colength, is_cuboid, partition_bruteforce, partition_cuboids
    from .io.schemas import PartitionPart, PartitionReport, RunConfig

    config = RunConfig(
        source=source, command="partition", sigmas=parse_sigma_option(sigma_text),
        format=fmt, seed=SCARF_SEED, output=output,
    )
    M = _as_ideal(_load(config))
    sigmas = config.sigmas_for(M.n) or all_sigmas(M.n)
    generic, _ = is_generic(M)
    length = colength(M)

    reports = []
    for sigma in sigmas:
        parts = partition_bruteforce(M, sigma)
        cuboids = partition_cuboids(M, sigma) if generic else {}
        items = []
        for corner, cells in parts.items():
            cuboid = cuboids.get(corner)
            items.append(
                PartitionPart(
                    corner=list(corner),
                    cells=[list(c) for c in sorted(cells)],
                    volume=len(cells),
                    cuboid=[list(iv) for iv in cuboid.intervals] if cuboid else None,
                    cuboid_matches=(cuboid.cells() == cells) if cuboid else None,
                    is_cuboid=is_cuboid(cells),
                )
            )
        reports.append(
            PartitionReport(
                sigma=list(sigma),
                parts=items,
                total_volume=sum(p.volume for p in items),
                colength=length,
            )
        )

    if fmt == "json":
        if len(reports) == 1:
            emit(reports[0].model_dump_json(indent=2), output)
        else:
            emit("[\n" + ",\n".join(r.model_dump_json(indent=2) for r in reports) + "\n]", output)
        return
    blocks = []
    for report in reports:
        rows = [
            {
                "corner": _fmt_vec(p.corner),
                "volume": p.volume,
                "cuboid": "x".join(f"]{lo},{hi}]" for lo, hi in p.cuboid) if p.cuboid else "-",
                "is_cuboid": p.is_cuboid,
            }
            for p in report.parts
        ]
        blocks.append(
            f"sigma={_fmt_vec(report.sigma)}  total={report.total_volume}  colength={report.colength}\n"
            + table(rows)
        )
    emit("\n\n".join(blocks), output)


@cli.command()
@click.argument("source")
@click.option("--sigma", "sigma_text", default="all", help="σ 列表或 all")
@click.option("--format", "fmt", type=FORMATS, default="text", help="输出格式")
@click.option("--strict", is_flag=True, help="体积比较不一致时以退出码 1 结束")
@click.option("--output", "-o", help="输出文件")
@handle_errors
def dphi(source: str, sigma_text: str, fmt: str, strict: bool, output: Optional[str]):
    """计算 d_σφ, 与有符号体积比较, 并计算基本类配对"""
    from .core.cellular import LabeledComplex
    from .core.derivative import kivas_survivor_check, sweep, verify_theorem_main
    from .io.schemas import DphiReport, RunConfig

    config = RunConfig(
        source=source, command="dphi", sigmas=parse_sigma_option(sigma_text),
        format=fmt, seed=SCARF_SEED, output=output,
    )
    loaded = _load(config)
    X = _as_complex(loaded)
    sigmas = config.sigmas_for(X.n)
    result = sweep(X, sigmas)

    theorem, survivors = [], []
    generic_scarf = not isinstance(loaded, LabeledComplex)
    if generic_scarf:
        for run in result["runs"]:
            theorem.append(verify_theorem_main(loaded, run["sigma"]))
            for i in range(len(X.top_cells)):
                survivors.append(kivas_survivor_check(X, run["sigma"], i))

    all_match = all(run["comparison"]["match"] for run in result["runs"])
    all_match = all_match and all(t["match"] for t in theorem)
    pairing_ok = all(run["pairing"]["pairing"] == result["colength"] for run in result["runs"])
    pairing_ok = pairing_ok and result["factorization"]["ok"]
    pairing_ok = pairing_ok and all(s["ok"] for s in survivors)

    report = DphiReport(
        n=X.n,
        source=source,
        generic_scarf=generic_scarf,
        colength=result["colength"],
        runs=result["runs"],
        theorem=theorem,
        survivors=survivors,
        factorization=result["factorization"],
        all_match=all_match,
    )

    if fmt == "json":
        emit(report.model_dump_json(indent=2), output)
    else:
        rows = []
        for run in result["runs"]:
            contributions = {tuple(c["label"]): c["contribution"] for c in run["pairing"]["cells"]}
            for face in run["comparison"]["faces"]:
                rows.append(
                    {
                        "sigma": _fmt_vec(run["sigma"]),
                        "label": _fmt_vec(face["label"]),
                        "sign": face["sign"],
                        "computed": face["computed"],
                        "predicted": face["predicted"],
                        "match": face["match"],
                        "pairing": contributions[tuple(face["label"])],
                    }
                )
        lines = [table(rows), ""]
        for run in result["runs"]:
            lines.append(f"pairing sigma={_fmt_vec(run['sigma'])}: {run['pairing']['pairing']}")
        fact = result["factorization"]
        lines.append(f"colength: {result['colength']}")
        lines.append(f"factorization: {fact['total']} (expected {fact['expected']})")
        lines.append(f"all match: {all_match}")
        emit("\n".join(lines), output)

    if not pairing_ok or (strict and not all_match):
        sys.exit(EXIT_VERIFY_FAILED)


@cli.command()
@click.argument("source")
@click.option("--sigma", "sigma_text", default="all", help="σ 列表或 all (每个 σ 一个面板)")
@click.option("--output", "-o", help="SVG 输出文件 (默认标准输出)")
@handle_errors
def render(source: str, sigma_text: str, output: Optional[str]):
    """绘制二维 staircase 的划分 (SVG)"""
    from .core.staircase import all_sigmas
    from .io.schemas import RunConfig
    from .render.svg import render_partition_svg

    config = RunConfig(
        source=source, command="render", sigmas=parse_sigma_option(sigma_text),
        format="svg", seed=SCARF_SEED, output=output,
    )
    M = _as_ideal(_load(config))
    if M.n != 2:
        from .core.errors import ScarfError

        raise ScarfError(f"render supports n = 2 only, got n = {M.n}")
    sigmas = config.sigmas_for(M.n) or all_sigmas(M.n)
    emit(render_partition_svg(M, sigmas), output)


@cli.command()
@click.argument("source", required=False)
@click.option("--random", "random_count", default=0, type=int, help="额外检验 N 个随机 generic 理想")
@click.option("--mutations", default=0, type=int, help="复形输入: 随机翻转 N 个关联符号")
@click.option("--seed", default=SCARF_SEED, type=int, help="随机种子")
@click.option("--format", "fmt", type=FORMATS, default="text", help="输出格式")
@click.option("--output", "-o", help="输出文件")
@handle_errors
def verify(
    source: Optional[str],
    random_count: int,
    mutations: int,
    seed: int,
    fmt: str,
    output: Optional[str],
):
    """运行全部不变量检验, 任一失败时退出码为 1"""
    from tqdm import tqdm
    from .core.cellular import LabeledComplex
    from .core.suite import mutation_sensitivity, run_random_suite, run_suite
    from .io.schemas import CheckResult, RunConfig, VerifyReport

    if source is None and random_count <= 0:
        raise click.UsageError("give a SOURCE or --random N")

    checks: List[dict] = []
    if source is not None:
        config = RunConfig(source=source, command="verify", format=fmt, seed=seed, output=output)
        loaded = _load(config)
        checks = run_suite(loaded, seed)
        if mutations > 0 and isinstance(loaded, LabeledComplex):
            for m in mutation_sensitivity(loaded, mutations, seed):
                checks.append(
                    {
                        "name": f"mutation_{m['dim']}_{m['cell']}_{m['entry']}",
                        "ok": m["detected"],
                        "required": True,
                        "detail": m["by"] or "undetected",
                    }
                )

    random_results = []
    if random_count > 0:
        with tqdm(total=random_count, unit="ideals", desc="Verifying", file=sys.stderr) as bar:
            random_results = run_random_suite(random_count, seed, progress=bar.update)

    passed = all(c["ok"] for c in checks if c["required"]) and all(r["passed"] for r in random_results)
    report = VerifyReport(
        source=source or "random",
        checks=[CheckResult(**c) for c in checks],
        random=random_results,
        passed=passed,
    )

    if fmt == "json":
        emit(report.model_dump_json(indent=2), output)
    else:
        lines = []
        if checks:
            lines.append(table([{**c, "detail": c["detail"] or ""} for c in checks]))
        if random_results:
            failures = [r for r in random_results if not r["passed"]]
            lines.append(f"Random ideals: {len(random_results) - len(failures)}/{len(random_results)} passed")
            for r in failures[:5]:
                lines.append(f"  - {r['gens']}: {', '.join(r['failed'])}")
        lines.append("PASSED" if passed else "FAILED")
        emit("\n".join(lines), output)

    if not passed:
        sys.exit(EXIT_VERIFY_FAILED)


if __name__ == "__main__":
    cli()
