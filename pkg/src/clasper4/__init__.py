"""Link-homotopy classification of 4-component links in clasper standard form."""
from .core import (
    INFINITE, ClasperForm, ConstraintError, LevineForm, PreconditionError,
    Residue, UsageError, gcd_star, gcd_sub,
)
from .decide import (
    CanonicalForm, CertificateError, Stage, Verdict, build_move_matrix,
    canonical_form, decide_equiv, stabilizer_t_basis,
)
from .intlin import hermite_normal_form, smith_normal_form, solve_diophantine
from .invariants import (
    FAMILIES, applicability, case_invariants, milnor_profile, sublink3,
)
from .moves import (
    GENERATORS, Generator, MoveWord, apply_generator, apply_word,
    clasper_to_levine, commutator_word, levine_to_clasper, phi_move, psi,
)
from .oracle import SearchConfig, bounded_bfs, verify_certificate

__version__ = "0.1.0"
