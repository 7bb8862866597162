__version__ = "0.1.0"

from xmodcat.group_core import (
    FiniteGroup,
    GroupHom,
    GroupAction,
    CharacterTable,
    group_from_table,
    group_hom,
    group_action,
    conjugacy_classes,
    kernel,
    image,
    quotient,
    subgroup,
    character_table,
    dual_group,
    semidirect_product,
    orbits,
    stabilizer,
    cyclic_group,
    symmetric_group,
    direct_product,
    trivial_group,
    trivial_action,
    is_isomorphic_by_statistics,
)
from xmodcat.crossed_module import (
    CrossedModule,
    Subquotients,
    crossed_module,
    drinfeld_double,
    trivial_crossed_module,
    coker_action_on_K,
    group_GX,
    quotient_xbar,
    restricted_xprime,
    transport_to_double,
)
from xmodcat.rep_theory import (
    RepObject,
    SimpleTable,
    ModularData,
    VacuumAlgebra,
    FrobeniusReport,
    simple_objects,
    char_forms,
    tensor_character,
    fusion,
    s_matrix,
    transparent_simples,
    vacuum_object,
    braiding,
    dual_object,
    decompose,
    functor_F_from_GX,
    check_frobenius,
)
from xmodcat.modularization import (
    VacModule,
    MatchReport,
    ModularizationReport,
    induce,
    functor_F_restrict,
    functor_Fprime_coinv,
    modularize_object,
    match_modular_data,
    verify_modularization,
    tensor_over_A,
)
from xmodcat.document import parse, to_crossed_module, dump_document, load
from xmodcat.settings import set_flag, unset_flag, with_flag
