"""
Algebra Toolkit CLI

Command-line interface for checking algebra documents, running constructions,
generating random valid instances and exploring compatibility residuals.

Exit statuses: 0 when everything passed, 1 on an axiom violation or guard
failure, 2 on usage, syntax or semantic errors.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

# Add project root to path
sys.path.append(str(Path(__file__).parent))

from documents import (
    FAMILIES, OPERATIONS, AlgebraDocument, DocumentSemanticError, DocumentSyntaxError, InapplicableOperationError,
    ReportDocument, UnknownFamilyError, parse_document, run_check, run_construct, run_explore_compat, run_generate,
    serialize,
)
from exact_linalg import RationalParseError
from process_monitoring import ResourceMonitor
from settings import REPORT_FORMATS, ToolkitConfig, get_toolkit_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (DocumentSyntaxError, DocumentSemanticError, InapplicableOperationError, UnknownFamilyError,
                RationalParseError, ValidationError, OSError)


class AlgebraToolkitCLI:
    """Command-line interface for the algebra toolkit."""

    def __init__(self, config: ToolkitConfig, show_stats: bool = False):
        self.config = config
        self.show_stats = show_stats
        self.monitor = ResourceMonitor()

    def load(self, path: str) -> AlgebraDocument:
        """Read and parse a document file."""
        text = Path(path).read_text(encoding="utf-8")
        return parse_document(text)

    # --- commands -----------------------------------------------------

    def check(self, path: str) -> int:
        """Check every axiom of a document."""
        report = run_check(self.load(path), self.config)
        return self.emit(report)

    def construct(self, path: str, op: str, out: Optional[str], levels: Optional[int]) -> int:
        """Run one construction, optionally writing its documents to a file."""
        options = {"levels": levels} if levels is not None else {}
        report = run_construct(self.load(path), op, options, self.config)
        if out:
            self.write_outputs(report, Path(out))
        return self.emit(report)

    def generate(self, family: str, dim: int, seed: int, count: int, out_dir: Optional[str]) -> int:
        """Generate seeded documents into a directory, or onto stdout."""
        if dim > self.config.max_dim:
            raise DocumentSemanticError("dim", f"{dim} exceeds max_dim {self.config.max_dim}")
        docs = run_generate(family, dim, seed, count, self.config)

        if out_dir:
            directory = Path(out_dir)
            directory.mkdir(parents=True, exist_ok=True)
            for doc in docs:
                (directory / f"{doc.name}.json").write_text(serialize(doc), encoding="utf-8")
            logger.info(f"Wrote {len(docs)} document(s) to {directory}")
            self.print_generated(docs, directory)
        elif self.config.report_format == "json":
            print(json.dumps([doc.model_dump(mode="json", exclude_none=True) for doc in docs],
                             indent=2, sort_keys=True))
        else:
            for doc in docs:
                sys.stdout.write(serialize(doc))
        return EXIT_OK

    def explore_compat(self, path: str) -> int:
        """Print the compatibility residual report."""
        report = run_explore_compat(self.load(path), self.config)
        return self.emit(report)

    # --- output -------------------------------------------------------

    def write_outputs(self, report: ReportDocument, out: Path) -> None:
        """Write construction documents; several documents get a role suffix."""
        documents = [o for o in report.outputs if o.document is not None]
        for output in documents:
            target = out if len(documents) == 1 else out.with_name(f"{out.stem}-{output.role}{out.suffix}")
            target.write_text(serialize(output.document), encoding="utf-8")
            logger.info(f"Wrote {output.role} document to {target}")

    def emit(self, report: ReportDocument) -> int:
        """Print a report in the configured format and return its exit status."""
        if self.show_stats:
            report.run_stats = self.monitor.stop().as_dict()

        if self.config.report_format == "json":
            print(json.dumps(report.model_dump(mode="json", exclude_none=True), indent=2, sort_keys=True))
        else:
            self.print_report(report)
        return report.exit_status

    def print_report(self, report: ReportDocument) -> None:
        """Human-readable report."""
        print(f"\nCommand: {report.command}")
        print(f"Tool Version: {report.tool_version}")
        if report.input_digest:
            print(f"Input Digest: {report.input_digest}")

        if report.checks:
            print("\nAxiom Checks:")
            print("-" * 80)
            print(f"{'Kind':<28} {'Axiom':<36} {'Status':<8} {'Count':<6}")
            print("-" * 80)
            for check in report.checks:
                for axiom in check.axioms:
                    status = "PASS" if axiom.passed else "FAIL"
                    print(f"{check.kind:<28} {axiom.axiom:<36} {status:<8} {axiom.violation_count:<6}")
                    for v in axiom.violations:
                        print(f"    at {v.indices}: lhs={v.lhs} rhs={v.rhs}"
                              + (f" ({v.detail})" if v.detail else ""))
            print("-" * 80)

        if report.subspaces:
            print("\nSubspaces: " + ", ".join(f"dim {k} = {v}" for k, v in sorted(report.subspaces.items())))

        for output in report.outputs:
            if output.document is not None:
                doc = output.document
                print(f"Output ({output.role}): {doc.name} [{doc.kind}]")
            elif output.matrix is not None:
                m = output.matrix
                print(f"Output ({output.role}): {m.rows}x{m.cols} matrix, entries {m.entries}")

        for guard in report.guard_failures:
            print(f"\nGuard Failed: {guard.guard}")
            if guard.detail:
                print(f"  {guard.detail}")

        if report.exploration is not None:
            self.print_exploration(report.exploration)

        if report.run_stats:
            stats = report.run_stats
            print(f"\nRun Stats: wall {stats['wall_seconds']:.3f}s, cpu {stats['cpu_seconds']:.3f}s, "
                  f"rss {stats['rss_mib']:.1f} MiB, threads {stats['threads']}")

        print(f"\nResult: {'PASSED' if report.exit_status == EXIT_OK else 'FAILED'}")

    def print_exploration(self, exploration: dict) -> None:
        print(f"\nCompatibility Residuals (dim {exploration['dim']}, dim J = {exploration['j_dim']}):")
        print("-" * 80)
        print(f"{'Candidate':<32} {'Evaluated':<10} {'Nonzero':<8} Formula")
        print("-" * 80)
        for r in exploration["residuals"]:
            print(f"{r['name']:<32} {r['evaluated']:<10} {r['nonzero']:<8} {r['formula']}")
        print("-" * 80)

    def print_generated(self, docs: List[AlgebraDocument], directory: Path) -> None:
        print(f"\nGenerated Documents ({len(docs)}):")
        print("-" * 80)
        print(f"{'Name':<40} {'Kind':<24} {'Dim':<6}")
        print("-" * 80)
        for doc in docs:
            print(f"{doc.name:<40} {doc.kind:<24} {doc.dimension if doc.dimension is not None else '-':<6}")
        print("-" * 80)
        print(f"Directory: {directory}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Dialgebra and Poisson dialgebra toolkit")
    parser.add_argument('--report', choices=REPORT_FORMATS, help='Report format (default from DIALG_REPORT_FORMAT)')
    parser.add_argument('--max-dim', type=int, help='Largest accepted dimension (default from DIALG_MAX_DIM)')
    parser.add_argument('--stats', action='store_true', help='Add run statistics to the report')
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    # Check command
    check_parser = subparsers.add_parser('check', help='Check every axiom of a document')
    check_parser.add_argument('file', help='Algebra document (JSON)')

    # Construct command
    construct_parser = subparsers.add_parser('construct', help='Run a construction on a document')
    construct_parser.add_argument('file', help='Algebra document (JSON)')
    construct_parser.add_argument('--op', required=True, choices=sorted(OPERATIONS), help='Construction name')
    construct_parser.add_argument('--out', help='Write the constructed document(s) here')
    construct_parser.add_argument('--levels', type=int, help='Number of power-filtration levels')

    # Generate command
    generate_parser = subparsers.add_parser('generate', help='Generate random valid documents')
    generate_parser.add_argument('--family', required=True, help=f'One of {", ".join(FAMILIES)}')
    generate_parser.add_argument('--dim', type=int, required=True, help='Dimension bound')
    generate_parser.add_argument('--seed', type=int, required=True, help='Random seed')
    generate_parser.add_argument('--count', type=int, default=1, help='Number of documents')
    generate_parser.add_argument('--out-dir', help='Directory for generated documents')

    # Explore command
    explore_parser = subparsers.add_parser('explore-compat', help='Report compatibility residuals on P ⊕ J')
    explore_parser.add_argument('file', help='Algebra document (JSON)')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        base = get_toolkit_config()
        overrides = {k: v for k, v in (("report_format", args.report), ("max_dim", args.max_dim)) if v is not None}
        config = ToolkitConfig(**{**base.model_dump(), **overrides}) if overrides else base
    except ValidationError as e:
        print(f"Error: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, config.log_level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    cli = AlgebraToolkitCLI(config, show_stats=args.stats)

    # Execute command
    try:
        if args.command == 'check':
            return cli.check(args.file)
        elif args.command == 'construct':
            return cli.construct(args.file, args.op, args.out, args.levels)
        elif args.command == 'generate':
            return cli.generate(args.family, args.dim, args.seed, args.count, args.out_dir)
        elif args.command == 'explore-compat':
            return cli.explore_compat(args.file)
    except USAGE_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
