"""revlin: exact classification of reversible linear maps over R, C and H.

Classifies a matrix (or its Jordan spec) as reversible / strongly
reversible in the general linear group and as adjoint-real / strongly
adjoint-real at the Lie-algebra level, and synthesizes certified involution
witnesses.  All arithmetic is exact rational; every witness is checked by
the exact identities g^2 = I and g A g^{-1} = -A or A^{-1}.
"""

from ._backend import backend_name
from .canonical import (
    Decomposition,
    JordanBlock,
    JordanSpec,
    PolynomialQi,
    RootReport,
    assemble,
    build_block,
    char_poly,
    gaussian_roots,
    invariant_factors,
    jordan_decompose,
    similarity_conjugator,
)
from .classify import (
    Answer,
    PairingPlan,
    PlanEntry,
    Question,
    QuestionLevel,
    QuestionStrength,
    Verdict,
    classify,
)
from .corpus import generate, random_invertible, random_spec
from .errors import (
    CertificationFailedError,
    DomainMismatchError,
    NonSplittingSpectrumError,
    NotApplicableError,
    NotSimilarError,
    ParseError,
    PlanMismatchError,
    RepresentativeOutsideQiError,
    RevlinError,
    ShapeMismatchError,
    SingularMatrixError,
    SingularSpecError,
)
from .matrices import (
    Matrix,
    Permutation,
    block_compose,
    block_permutation,
    cayley,
    complex_adjoint,
    exp_nilpotent,
    mat_inverse,
    mat_mul,
    permute_conjugate,
    realify,
)
from .oracle import OracleReport, decide_1x1, involution_search, similarity_oracle
from .scalars import (
    EigenvalueClass,
    Quaternion,
    Rational,
    ScalarDomain,
    class_invert,
    class_negate,
    class_representative,
    format_scalar,
    parse_scalar,
    rational_sqrt,
    representative_with_witness,
)
from .witness import (
    Certificate,
    Witness,
    assemble_witness,
    certify,
    group_pair_reverser,
    group_singleton_reverser,
    lie_pair_reverser,
    lie_singleton_reverser,
)

__version__ = "0.1.0"

__all__ = [
    "Answer", "Certificate", "CertificationFailedError", "Decomposition",
    "DomainMismatchError", "EigenvalueClass", "JordanBlock", "JordanSpec",
    "Matrix", "NonSplittingSpectrumError", "NotApplicableError",
    "NotSimilarError", "OracleReport", "PairingPlan", "ParseError",
    "Permutation", "PlanEntry", "PlanMismatchError", "PolynomialQi",
    "Quaternion", "Question", "QuestionLevel", "QuestionStrength", "Rational",
    "RepresentativeOutsideQiError", "RevlinError", "RootReport",
    "ScalarDomain", "ShapeMismatchError", "SingularMatrixError",
    "SingularSpecError", "Verdict", "Witness", "assemble",
    "assemble_witness", "backend_name", "block_compose",
    "block_permutation", "build_block", "cayley", "certify", "char_poly",
    "class_invert", "class_negate", "class_representative",
    "classify", "complex_adjoint", "decide_1x1", "exp_nilpotent",
    "format_scalar", "gaussian_roots", "generate", "group_pair_reverser",
    "group_singleton_reverser", "invariant_factors", "involution_search",
    "jordan_decompose", "lie_pair_reverser", "lie_singleton_reverser",
    "mat_inverse", "mat_mul", "parse_scalar", "permute_conjugate",
    "random_invertible", "random_spec", "rational_sqrt", "realify",
    "representative_with_witness", "similarity_conjugator",
    "similarity_oracle",
]
