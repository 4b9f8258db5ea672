"""Words, relations, and word graphs for twisted Coxeter systems."""

from .system import (
    INF,
    ClosureBoundExceeded,
    CoxeterError,
    CoxeterSystem,
    InfiniteParabolic,
    InvalidMatrix,
    InvalidStar,
    InvalidWindow,
    NotInvolution,
    NotInvolutionWord,
    NotStarInvariant,
    TypeLabel,
    UnknownSuite,
    UnknownType,
    classify_twisted_type,
    load_system,
    make_system,
    registry_names,
    registry_system,
    resolve_system,
    restrict_system,
    save_system,
)
from .elements import (
    demazure,
    enumerate_group,
    from_window,
    from_word,
    identity,
    inversion_length,
    longest_element,
    m_twisted,
    multiply,
)
from .involutions import (
    TwistedInvolution,
    commutation_count,
    commutations,
    fold_word,
    hecke_atoms,
    hecke_words,
    identity_involution,
    involution_words,
    m_twisted_ad,
    min_atom,
    primed_words,
    reduced_hecke_words,
    rho,
    twisted_involutions,
    underline_act,
)
from .rewriting import (
    equivalence_class,
    graph_stats,
    is_simply_braided,
    relation_set,
    to_dot,
    word_graph,
)
from .harness import VerificationReport, run_suite, suite_names
from .wordio import (
    format_involution,
    format_window,
    format_word,
    parse_involution,
    parse_window,
    parse_word,
)

__version__ = "0.1.0"
