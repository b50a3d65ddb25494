"""
Algebra documents, run reports and the command runners behind the CLI.

Basic usage:
    ```python
    from documents import parse_document, run_check, run_construct, serialize

    doc = parse_document(Path("fixtures/n2.json").read_text())
    report = run_check(doc)
    print(report.exit_status)

    result = run_construct(doc, "associativization")
    print(serialize(result.outputs[0].document))
    ```
"""

from .errors import DocumentSemanticError, DocumentSyntaxError, InapplicableOperationError, UnknownFamilyError
from .models import (
    AlgebraDocument, AxiomRecord, CheckRecord, ConstructionOutput, DocumentKind, GuardRecord, MatrixSpec,
    ReportDocument, ViolationRecord,
)
from .codec import (
    LM_KINDS, SQUARE_KINDS, TWO_TERM_KINDS, Layout, document_digest, from_structure, layout, matrix_from_spec,
    matrix_spec, operator, parse_document, serialize, to_structure, validate_semantics,
)
from .runner import (
    FAMILIES, OPERATIONS, TOOL_VERSION, check_record, check_reports, enforce_max_dim, run_check, run_construct,
    run_explore_compat, run_generate,
)

__all__ = [
    # Errors
    'DocumentSyntaxError',
    'DocumentSemanticError',
    'InapplicableOperationError',
    'UnknownFamilyError',
    # Models
    'AlgebraDocument',
    'DocumentKind',
    'MatrixSpec',
    'ReportDocument',
    'CheckRecord',
    'AxiomRecord',
    'ViolationRecord',
    'GuardRecord',
    'ConstructionOutput',
    # Codec
    'SQUARE_KINDS',
    'LM_KINDS',
    'TWO_TERM_KINDS',
    'Layout',
    'layout',
    'validate_semantics',
    'parse_document',
    'serialize',
    'document_digest',
    'matrix_from_spec',
    'matrix_spec',
    'operator',
    'to_structure',
    'from_structure',
    # Runners
    'TOOL_VERSION',
    'FAMILIES',
    'OPERATIONS',
    'check_record',
    'check_reports',
    'enforce_max_dim',
    'run_check',
    'run_construct',
    'run_generate',
    'run_explore_compat',
]

__version__ = "1.0.0"
__author__ = "Matthew Sheldon"
__description__ = "JSON algebra documents, deterministic reports and CLI runners"
