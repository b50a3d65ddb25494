"""
Document models for algebra descriptions and run reports.

Documents are JSON objects. Structure constants are sparse lists of
[i, j, k, "p/q"] entries (0-based indices, rationals as strings), matrices are
[row, col, "p/q"] entry lists and filtration steps are lists of dense
rational vectors. Rational literals are canonicalized on validation so that
parse(serialize(doc)) == doc.
"""

from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple

from pydantic import AfterValidator, BaseModel, ConfigDict, Field

from exact_linalg import format_rational, parse_rational


def _canonical_rational(text: str) -> str:
    return format_rational(parse_rational(text))


Rational = Annotated[str, AfterValidator(_canonical_rational)]
BilinearEntry = Tuple[int, int, int, Rational]
TrilinearEntry = Tuple[int, int, int, int, Rational]
MatrixEntry = Tuple[int, int, Rational]

DocumentKind = Literal[
    "associative",
    "dialgebra",
    "leibniz",
    "poisson",
    "poisson_dialgebra",
    "lm_object",
    "poisson_lm_object",
    "filtered_dialgebra",
    "graded_dialgebra",
    "two_term_associative",
    "two_term_lie",
    "two_term_homotopy_poisson",
]


class MatrixSpec(BaseModel):
    """A sparse rational matrix."""
    model_config = ConfigDict(extra="forbid")

    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    entries: List[MatrixEntry] = Field(default_factory=list)


class AlgebraDocument(BaseModel):
    """
    One algebraic structure, described by its kind, dimensions and tensors.

    Which dimension fields and which tensor names are required depends on the
    kind; the codec checks them and reports the offending field path.

    Attributes:
        name: Free-form identifier
        kind: Structure kind
        dimension: Main dimension (D, P, A, g or the degree-0 part)
        module_dim: dim M for LM objects
        degree_one_dim: Degree-1 dimension for two-term kinds
        component_dims: dim Gr_0, …, dim Gr_N for graded kinds
        degree: Bracket degree n for graded kinds
        basis: Optional basis labels
        tensors: Bilinear tensors by name
        trilinear: Trilinear tensors by name
        operators: Matrices by name (d, alpha, f, phi_prime, mu1, l1)
        filtration: Spanning vectors of D_0, …, D_N
        has_unit: Unit diagnostic for two-term homotopy Poisson documents
    """
    model_config = ConfigDict(extra="forbid")

    name: str = "unnamed"
    kind: DocumentKind
    dimension: Optional[int] = Field(None, ge=0)
    module_dim: Optional[int] = Field(None, ge=0)
    degree_one_dim: Optional[int] = Field(None, ge=0)
    component_dims: Optional[List[int]] = None
    degree: Optional[int] = None
    basis: Optional[List[str]] = None
    tensors: Dict[str, List[BilinearEntry]] = Field(default_factory=dict)
    trilinear: Dict[str, List[TrilinearEntry]] = Field(default_factory=dict)
    operators: Dict[str, MatrixSpec] = Field(default_factory=dict)
    filtration: Optional[List[List[List[Rational]]]] = None
    has_unit: Optional[bool] = None


class ViolationRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    indices: List[int]
    lhs: List[str]
    rhs: List[str]
    detail: str = ""


class AxiomRecord(BaseModel):
    """Pass/fail for one axiom with a bounded prefix of its violations."""
    model_config = ConfigDict(extra="forbid")

    axiom: str
    passed: bool
    violation_count: int
    violations: List[ViolationRecord] = Field(default_factory=list)


class CheckRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: str
    passed: bool
    axioms: List[AxiomRecord] = Field(default_factory=list)


class GuardRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    guard: str
    detail: str = ""


class ConstructionOutput(BaseModel):
    """A named output of a construction: a document or a bare matrix."""
    model_config = ConfigDict(extra="forbid")

    role: str
    document: Optional[AlgebraDocument] = None
    matrix: Optional[MatrixSpec] = None


class ReportDocument(BaseModel):
    """
    The result of one CLI command.

    run_stats is excluded from the comparable payload; everything else is
    deterministic for a given input and seed.
    """
    model_config = ConfigDict(extra="forbid")

    tool_version: str
    command: str
    input_digest: Optional[str] = None
    checks: List[CheckRecord] = Field(default_factory=list)
    outputs: List[ConstructionOutput] = Field(default_factory=list)
    subspaces: Dict[str, int] = Field(default_factory=dict)
    guard_failures: List[GuardRecord] = Field(default_factory=list)
    exploration: Optional[Dict[str, Any]] = None
    exit_status: int = 0
    run_stats: Optional[Dict[str, float]] = None

    def comparable(self) -> Dict[str, Any]:
        """The payload without run statistics."""
        return self.model_dump(mode="json", exclude={"run_stats"})
