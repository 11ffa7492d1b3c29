"""Finite multialgebras: operations return non-empty sets of values.

The package decides the structural properties that make such a structure
weakly free (disconnectedness paired with ground generation, strong bases,
or chainlessness), builds the choice-driven extension of any ground
assignment, embeds weakly free structures into truncated term
multialgebras, and evaluates formulas over non-deterministic matrices.
Every verdict comes with a machine-checkable witness.
"""

from .chains import (
    ChainWitness,
    DeconstructionGraph,
    FreenessVerdict,
    Justification,
    deconstruction_graph,
    find_chain,
    is_weakly_free,
    verify_chain_witness,
)
from .core import (
    Application,
    Check,
    ElementMap,
    ExpandedSignature,
    HomWitness,
    MultiAlgebra,
    Signature,
    SubWitness,
    ValidationReport,
    Violation,
    identity_map,
    is_full_homomorphism,
    is_homomorphism,
    is_isomorphism,
    is_submultialgebra,
    validate,
)
from .errors import (
    ArityMismatch,
    DocumentError,
    ElementOutsideClosure,
    EmptySignature,
    EmptyUniverse,
    EquivalenceViolation,
    InjectiveChoiceUnavailable,
    MultialgError,
    NoDefinedApplications,
    NotGenerating,
    NotHomomorphism,
    NotTotal,
    NotWeaklyFree,
    OracleRangeViolation,
    SeedOutsideUniverse,
    SignatureMismatch,
    SuperscriptOutOfRange,
    TermSyntaxError,
    UndefinedTargetApplication,
    UnknownConnective,
    UnknownSymbol,
)
from .hom import (
    CdfExtension,
    ChoiceOracle,
    TermEmbedding,
    UmpDemo,
    UmpReport,
    corestrict,
    direct_image,
    embed_into_terms,
    extend_cdf,
    injective_greedy,
    lexicographic_first,
    m_of,
    oracle_from_table,
    seeded_random,
    ump_refutation_demo,
)
from .io import (
    GraphDocument,
    MultiAlgebraDocument,
    application_from_json,
    application_json,
    basis_certificate_json,
    chain_witness_from_json,
    chain_witness_json,
    document_dict,
    generation_trace_json,
    graph_dict,
    graph_to_dot,
    graph_to_multialgebra,
    hom_witness_json,
    load_document,
    load_graph,
    multialgebra_to_graph,
    overlap_witness_from_json,
    overlap_witness_json,
    save_document,
    sub_witness_json,
)
from .nmatrix import (
    Formula,
    NMatrix,
    entails,
    is_tautology,
    legal_valuations,
    parse_formula,
    print_formula,
    subformulas,
)
from .structure import (
    BasisCertificate,
    GenerationTrace,
    GroundGeneration,
    OverlapWitness,
    Producer,
    b_order,
    build,
    closure,
    generate,
    ground,
    is_disconnected,
    is_generated_by_ground,
    strong_basis,
    verify_overlap_witness,
)
from .terms import (
    Node,
    Term,
    Variable,
    enumerate_terms,
    mt_apply,
    parse_term,
    print_term,
    term_order,
    term_universe,
    truncate_mt,
)

__version__ = "0.1.0"
