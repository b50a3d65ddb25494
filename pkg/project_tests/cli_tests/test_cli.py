"""
Documents and CLI Tests

This module tests the document layer and the command-line surface including:
- Parsing fixtures, syntax and semantic errors with field paths
- Canonical serialization and digests
- check, construct, generate and explore-compat runners
- Exit statuses of the CLI entry point
- Settings validation and run statistics
"""

import contextlib
import io
import json
import os
import sys
import tempfile
from pathlib import Path

# Fix Unicode encoding for Windows terminal
if sys.platform == "win32":
    sys.stdout.reconfigure(encoding='utf-8')
    sys.stderr.reconfigure(encoding='utf-8')

# Add the project root to the path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from pydantic import ValidationError

from algebra_cli import main as cli_main
from documents import (
    DocumentSemanticError, DocumentSyntaxError, InapplicableOperationError, UnknownFamilyError, document_digest,
    parse_document, run_check, run_construct, run_explore_compat, run_generate, serialize,
)
from process_monitoring import ResourceMonitor
from settings import ToolkitConfig, reset_toolkit_config

FIXTURES = Path(__file__).parent.parent.parent / "fixtures"


def load(name: str):
    return parse_document((FIXTURES / name).read_text(encoding="utf-8"))


def run_cli(*argv) -> int:
    """Run the CLI with stdout and stderr captured."""
    reset_toolkit_config()
    with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
        return cli_main(list(argv))


def test_parsing():
    """Test document parsing and validation."""
    print("🔍 TESTING DOCUMENT PARSING")
    print("-" * 50)

    for name in ("n2.json", "n2_bad.json", "t3.json", "zero_dialgebra.json", "truncated_derivation.json",
                 "averaging_k2.json", "sl2_poisson.json", "heisenberg_leibniz.json"):
        doc = load(name)
        assert parse_document(serialize(doc)) == doc
    print("✅ All fixtures parse and survive canonical serialization")

    n2 = load("n2.json")
    assert n2.kind == "dialgebra" and n2.dimension == 2
    assert document_digest(n2) == document_digest(load("n2.json"))
    assert document_digest(n2) != document_digest(load("n2_bad.json"))
    print("✅ Digests are stable and distinguish documents")

    try:
        load("bad_index.json")
        assert False, "Expected DocumentSemanticError"
    except DocumentSemanticError as e:
        assert e.field_path == "tensors.left[0][2]"
    try:
        load("bad_rational.json")
        assert False, "Expected DocumentSemanticError"
    except DocumentSemanticError as e:
        assert e.field_path.startswith("tensors.left")
    print("✅ Out-of-range index and zero denominator reported with field paths")

    try:
        parse_document('{"kind": "dialgebra",\n  "dimension": }')
        assert False, "Expected DocumentSyntaxError"
    except DocumentSyntaxError as e:
        assert e.line == 2
    try:
        parse_document('{"kind": "dialgebra", "dimension": 2, "tensors": {"left": []}}')
        assert False, "Expected a missing tensor"
    except DocumentSemanticError as e:
        assert e.field_path == "tensors.right"
    print("✅ Syntax errors carry positions, missing tensors are named")


def test_check_runner():
    """Test run_check on fixtures."""
    print("🔍 TESTING CHECK RUNNER")
    print("-" * 50)

    config = ToolkitConfig()
    for name in ("n2.json", "t3.json", "zero_dialgebra.json", "truncated_derivation.json", "averaging_k2.json",
                 "sl2_poisson.json", "heisenberg_leibniz.json"):
        report = run_check(load(name), config)
        assert report.exit_status == 0, name
    print("✅ Valid fixtures pass")

    report = run_check(load("n2_bad.json"), config)
    assert report.exit_status == 1
    record = next(a for a in report.checks[0].axioms if a.axiom == "left-absorbs-right")
    assert not record.passed
    assert record.violations[0].indices == [0, 0, 1]
    assert record.violations[0].lhs == ["0", "0"] and record.violations[0].rhs == ["0", "1"]
    print("✅ Pinned violation appears in the report")

    assert len(run_check(load("truncated_derivation.json"), config).checks) == 2
    print("✅ Operators in Poisson documents are checked too")

    try:
        run_check(load("t3.json"), ToolkitConfig(max_dim=2))
        assert False, "Expected DocumentSemanticError"
    except DocumentSemanticError as e:
        assert e.field_path == "dimension"
    print("✅ max_dim enforced")


def test_construct_runner():
    """Test run_construct on fixtures."""
    print("🔍 TESTING CONSTRUCT RUNNER")
    print("-" * 50)

    config = ToolkitConfig()
    report = run_construct(load("n2.json"), "associativization", config=config)
    assert report.exit_status == 0
    assert [o.role for o in report.outputs] == ["result", "projection"]
    assert report.outputs[0].document.name == "n2-associativization"
    assert report.outputs[0].document.dimension == 1
    assert report.outputs[1].matrix.entries == [(0, 0, "1")]
    assert report.subspaces == {"kernel": 1, "quotient": 1}
    print("✅ Associativization of N2 reported with its projection")

    report = run_construct(load("n2.json"), "homotopy-pair", config=config)
    assert report.exit_status == 0
    assert [o.role for o in report.outputs] == ["associative", "lie"]
    assert report.subspaces["J"] == 1
    for output in report.outputs:
        assert run_check(output.document, config).exit_status == 0
    print("✅ Homotopy pair documents re-check cleanly")

    report = run_construct(load("n2.json"), "homotopy-poisson", config=config)
    assert report.exit_status == 1
    assert report.guard_failures[0].guard == "reduced"
    print("✅ Guard failures reported with exit status 1")

    report = run_construct(load("n2_bad.json"), "associativization", config=config)
    assert report.exit_status == 1
    assert not report.checks[0].passed
    print("✅ Invalid input reported as a failed check")

    assert run_construct(load("truncated_derivation.json"), "differential", config=config).exit_status == 0
    assert run_construct(load("averaging_k2.json"), "averaging", config=config).exit_status == 0
    report = run_construct(load("zero_dialgebra.json"), "power-filtration", {"levels": 2}, config)
    assert report.exit_status == 0
    graded = run_construct(report.outputs[0].document, "associated-graded", config=config)
    assert graded.exit_status == 0
    print("✅ Operator and filtration constructions succeed")

    for doc, op in ((load("t3.json"), "associativization"), (load("n2.json"), "frobnicate"),
                    (load("sl2_poisson.json"), "differential")):
        try:
            run_construct(doc, op, config=config)
            assert False, f"Expected InapplicableOperationError for {op}"
        except InapplicableOperationError:
            pass
    print("✅ Inapplicable constructions rejected")


def test_generate_and_explore():
    """Test generation and the exploration report."""
    print("🔍 TESTING GENERATE AND EXPLORE")
    print("-" * 50)

    config = ToolkitConfig()
    for family in ("assoc-as-dialgebra", "bimodule-map", "differential", "averaging", "filtered"):
        docs = run_generate(family, 3, 7, 2, config)
        assert [d.name for d in docs] == [f"{family}-7-0", f"{family}-7-1"]
        assert [serialize(d) for d in docs] == [serialize(d) for d in run_generate(family, 3, 7, 2, config)]
        for doc in docs:
            assert run_check(doc, config).exit_status == 0, f"{family}: {doc.name}"
    assert run_generate("differential", 3, 7, 0, config) == []
    print("✅ Every family is deterministic and yields valid documents")

    try:
        run_generate("nope", 3, 1, 1, config)
        assert False, "Expected UnknownFamilyError"
    except UnknownFamilyError:
        pass
    print("✅ Unknown family rejected")

    report = run_explore_compat(load("n2.json"), config)
    assert report.exit_status == 0
    assert report.subspaces["J"] == 1
    assert len(report.exploration["residuals"]) == 5
    try:
        run_explore_compat(load("t3.json"), config)
        assert False, "Expected InapplicableOperationError"
    except InapplicableOperationError:
        pass
    print("✅ Exploration reports residuals without failing")


def test_generated_documents_always_check():
    """Test that 1000 seeded generations all pass check."""
    print("🔍 TESTING 1000 GENERATED DOCUMENTS")
    print("-" * 50)

    config = ToolkitConfig()
    rejected = []
    for family in ("assoc-as-dialgebra", "bimodule-map", "differential", "averaging", "filtered"):
        for doc in run_generate(family, 3, 2024, 200, config):
            if run_check(doc, config).exit_status != 0:
                rejected.append(doc.name)
    assert rejected == [], f"Rejected: {rejected[:10]}"
    print("✅ 1000 generated documents, 0 rejections")


def test_cli_exit_statuses():
    """Test the CLI entry point."""
    print("🔍 TESTING CLI EXIT STATUSES")
    print("-" * 50)

    n2, n2_bad = str(FIXTURES / "n2.json"), str(FIXTURES / "n2_bad.json")
    assert run_cli("check", n2) == 0
    assert run_cli("check", n2_bad) == 1
    assert run_cli("check", str(FIXTURES / "bad_index.json")) == 2
    assert run_cli("check", str(FIXTURES / "missing.json")) == 2
    assert run_cli("--max-dim", "1", "check", n2) == 2
    assert run_cli("--max-dim", "0", "check", n2) == 2
    assert run_cli() == 2
    print("✅ check exits 0, 1 and 2 as expected")

    assert run_cli("construct", n2, "--op", "associativization") == 0
    assert run_cli("construct", n2, "--op", "homotopy-poisson") == 1
    assert run_cli("construct", str(FIXTURES / "t3.json"), "--op", "associativization") == 2
    assert run_cli("explore-compat", n2) == 0
    assert run_cli("generate", "--family", "nope", "--dim", "3", "--seed", "1") == 2
    print("✅ construct, explore-compat and generate exit statuses")

    reset_toolkit_config()
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer), contextlib.redirect_stderr(io.StringIO()):
        status = cli_main(["--report", "json", "--stats", "check", n2])
    payload = json.loads(buffer.getvalue())
    assert status == 0 and payload["exit_status"] == 0
    assert payload["command"] == "check"
    assert set(payload["run_stats"]) >= {"wall_seconds", "cpu_seconds", "rss_mib", "threads"}
    print("✅ JSON reports parse and carry run statistics on request")

    with tempfile.TemporaryDirectory() as tmp:
        assert run_cli("generate", "--family", "differential", "--dim", "3", "--seed", "5", "--count", "2",
                       "--out-dir", tmp) == 0
        assert sorted(os.listdir(tmp)) == ["differential-5-0.json", "differential-5-1.json"]
        assert run_cli("check", str(Path(tmp) / "differential-5-0.json")) == 0

        out = str(Path(tmp) / "pair.json")
        assert run_cli("construct", n2, "--op", "homotopy-pair", "--out", out) == 0
        assert (Path(tmp) / "pair-associative.json").exists()
        assert (Path(tmp) / "pair-lie.json").exists()
    print("✅ Generated and constructed documents written to disk")


def test_settings_and_monitor():
    """Test configuration validation and run statistics."""
    print("🔍 TESTING SETTINGS AND MONITOR")
    print("-" * 50)

    config = ToolkitConfig(report_format="JSON", log_level="debug")
    assert config.report_format == "json" and config.log_level == "DEBUG"
    for bad in ({"max_dim": 0}, {"report_format": "xml"}, {"violation_prefix": -1}, {"log_level": "LOUD"}):
        try:
            ToolkitConfig(**bad)
            assert False, f"Expected ValidationError for {bad}"
        except ValidationError:
            pass
    print("✅ Settings normalize and validate")

    stats = ResourceMonitor().stop().as_dict()
    assert stats["wall_seconds"] >= 0 and stats["threads"] >= 1
    print("✅ Resource monitor reports run statistics")


def main():
    """Run all documents and CLI tests."""
    print("🧪 DOCUMENTS AND CLI TESTS")
    print("=" * 70)

    try:
        test_parsing()
        test_check_runner()
        test_construct_runner()
        test_generate_and_explore()
        test_generated_documents_always_check()
        test_cli_exit_statuses()
        test_settings_and_monitor()

        print("\n🎉 ALL DOCUMENTS AND CLI TESTS PASSED!")
    except Exception as e:
        print(f"\n❌ Test failed: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
