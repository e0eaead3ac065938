"""Finite quandle workbench: Cayley tables, axiom checking, order-3n phase
products, inner automorphism structure, and isomorphism classification."""

from .classify import (
    InvariantProfile,
    IsoClass,
    IsoResult,
    all_quandle_tables,
    are_isomorphic,
    census,
    classify_family,
    format_spectrum,
    invariant_profile,
)
from .construct import (
    PhaseRule,
    PropertyTransfer,
    TransferReport,
    audit_transfer,
    decompose3,
    dihedral_rule,
    enumerate_phase_rules,
    index_to_pair,
    is_valid_rule,
    literal_rule_A,
    literal_rule_B,
    named_rules,
    pair_to_index,
    product3,
    rule_from_table,
    swap_rule,
    trivial_rule,
    validate_rule,
)
from .core import (
    AbelianGroupSpec,
    AxiomReport,
    AxiomVerdict,
    BudgetExceededError,
    GroupTable,
    NotAQuandleError,
    Permutation,
    Quandle,
    affine,
    apply,
    automorphism_from_images,
    check_axioms,
    conjugation,
    cyclic_group,
    dihedral,
    dihedral_group,
    direct_product,
    dual_apply,
    from_table,
    identity_automorphism,
    negation_automorphism,
    right_translation,
    scalar_automorphism,
    symmetric_group,
    translations,
    trivial,
    validate_automorphism,
)
from .datasets import BASE_B, BUILTIN_QUANDLES, Q1, Q2, TABLE1, builtin
from .formats import (
    TableFormatError,
    emit_phase,
    emit_table,
    emit_table_json,
    parse_phase_text,
    parse_table,
    parse_table_json,
    parse_table_text,
)
from .inner import InnerStructure, PermGroup, inn_group, inner_structure, orbits
from .properties import (
    AffineWitness,
    abelian_group_specs,
    alexander_recognize,
    centralizer,
    conjugate_identities,
    ensure_quandle,
    enumerate_automorphisms,
    is_abelian,
    is_connected,
    is_cyclic_type,
    is_involutory,
    is_left_distributive,
    lemma_sum_check,
)

__version__ = "0.1.0"
